#pragma once

#include <utility>
#include <vector>

#include "cylproj/discrete.hpp"
#include "cylproj/findim.hpp"

namespace cylproj {

/// An exact measure; the decimal rendering is presentation only.
struct MeasureValue {
    Rat exact;
    std::string decimal() const { return rat_decimal(exact); }
};

MeasureValue lebesgue_measure(const FinDimSet& a);
MeasureValue discrete_measure(const DiscreteSet& a, const DiscreteBase& base);

/// One cell of a fiber profile: a piece of the parameter space on which the
/// projection-dimension fiber is constant. `cell` holds per-parameter-dim
/// cell/class ids for reassembling sets; it is empty for raw profiles.
struct ProfileCell {
    std::vector<int> cell;
    Rat volume;
    Rat q;  // fiber measure on this cell
};

/// Partition of the parameter space of a set (all free dimensions except
/// the projection dimension) into cells of constant fiber measure. All
/// n-fold union/intersection stage measures and both strong projections are
/// functions of this profile.
class FiberProfile {
public:
    enum class Kind { continuous, discrete, raw };

    Kind kind = Kind::raw;
    DimVar projection_dim = 0;
    bool degenerate = false;  // projection dim not free in the set
    std::vector<DimVar> zdims;
    std::vector<std::vector<Rat>> zbreaks;                 // continuous cells
    std::vector<std::vector<std::uint32_t>> zmentioned;    // discrete classes
    std::vector<ProfileCell> cells;

    /// Aggregated (q, total volume) pairs; the closed-form inputs.
    const std::vector<std::pair<Rat, Rat>>& q_dist() const { return qdist_; }

    void finish();  // validates and aggregates; called by builders

private:
    std::vector<std::pair<Rat, Rat>> qdist_;
};

FiberProfile fiber_profile(const FinDimSet& a, DimVar y);
FiberProfile fiber_profile(const DiscreteSet& a, DimVar y, const DiscreteBase& base);

/// Profile from explicit (volume, q) cells, e.g. for sets that live outside
/// the product algebra. Volumes must sum to 1 and q must lie in [0,1].
FiberProfile raw_profile(const std::vector<std::pair<Rat, Rat>>& vol_q);

/// Exact measure of the n-fold intersection of fresh-variable copies:
/// sum over cells of vol * q^n.
MeasureValue n_fold_intersection_measure(const FiberProfile& p, unsigned long n);

/// Exact measure of the n-fold union: 1 - sum of vol * (1-q)^n.
MeasureValue n_fold_union_measure(const FiberProfile& p, unsigned long n);

struct ProfileLimits {
    MeasureValue sup_limit;  // limit of the union sequence: volume where q > 0
    MeasureValue inf_limit;  // limit of the intersection sequence: volume where q = 1
};

ProfileLimits profile_limits(const FiberProfile& p);

/// Bound on both sequence gaps at stage n: sum over 0 < q < 1 of
/// vol * max(q, 1-q)^n.
Rat gap_bound_at(const FiberProfile& p, unsigned long n);

}  // namespace cylproj
