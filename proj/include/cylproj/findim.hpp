#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "cylproj/onedim.hpp"

namespace cylproj {

/// A dimension variable, named by its index. Only finitely many dimensions
/// are ever non-full, so the ambient power never needs materializing.
using DimVar = std::uint32_t;

/// One product term: a finite map from dimensions to one-dimensional
/// components. Absent dimensions are implicitly full. Stored terms never
/// carry full or empty components.
class ProductTerm {
public:
    ProductTerm() = default;  // the unit term

    const std::map<DimVar, OneDimSet>& components() const { return comps_; }

    /// Inserts/overwrites a component, dropping it when full. Returns false
    /// (term became empty) when the component is empty.
    bool set_component(DimVar d, OneDimSet s);

    const OneDimSet* component(DimVar d) const;

private:
    std::map<DimVar, OneDimSet> comps_;
};

namespace detail {
struct FdsImpl;
struct ContEngine;
struct CanonForm;
}  // namespace detail

/// A finite union of product terms: a finite-dimensional subset of the
/// infinite power of [0,1). Values are immutable; all operations build new
/// sets. Zero terms denote the empty set.
class FinDimSet {
public:
    FinDimSet();
    explicit FinDimSet(std::vector<ProductTerm> terms);
    ~FinDimSet();
    FinDimSet(const FinDimSet&);
    FinDimSet(FinDimSet&&) noexcept;
    FinDimSet& operator=(const FinDimSet&);
    FinDimSet& operator=(FinDimSet&&) noexcept;

    static FinDimSet empty_set();
    static FinDimSet unit();  // the whole power space
    /// Single-term set from dimension -> component; empty components yield
    /// the empty set, full components are dropped.
    static FinDimSet box(const std::map<DimVar, OneDimSet>& components);

    const std::vector<ProductTerm>& terms() const;

    /// Pointwise membership: a point is in the set iff some term contains
    /// it in every restricted coordinate. A coordinate missing from `point`
    /// fails any term restricting it, so pass a value for every dimension
    /// of interest.
    bool contains(const std::map<DimVar, Rat>& point) const;

    const detail::ContEngine& engine() const;    // internal, built lazily
    const detail::CanonForm& canonical() const;  // internal, built lazily

private:
    std::shared_ptr<const detail::FdsImpl> impl_;
};

FinDimSet unite(const FinDimSet& a, const FinDimSet& b);
FinDimSet intersect(const FinDimSet& a, const FinDimSet& b);
FinDimSet complement(const FinDimSet& a);

bool is_empty(const FinDimSet& a);
bool is_unit(const FinDimSet& a);
bool subset(const FinDimSet& a, const FinDimSet& b);
bool set_equal(const FinDimSet& a, const FinDimSet& b);

/// The dimension set: dimensions whose cylindrification changes the set.
std::set<DimVar> dim_set(const FinDimSet& a);

/// Existential cylinder along y: per term, the y-component is dropped.
FinDimSet cylindrify(const FinDimSet& a, DimVar y);

/// Universal dual: -C_y(-a).
FinDimSet co_cylindrify(const FinDimSet& a, DimVar y);

/// Renames dimension `from` to `to`. `to` must not be in dim_set(a)
/// (TargetDimensionOccupied otherwise); from == to is the identity.
FinDimSet substitute(const FinDimSet& a, DimVar from, DimVar to);

/// Equal set whose terms are pairwise disjoint products of atomic cells of
/// the per-dimension breakpoint refinement. Idempotent.
FinDimSet disjointify(const FinDimSet& a);

/// Equal set rebuilt from the reduced canonical form with runs of adjacent
/// cells merged; the tidy form used for printing and projection results.
FinDimSet compacted(const FinDimSet& a);

}  // namespace cylproj
