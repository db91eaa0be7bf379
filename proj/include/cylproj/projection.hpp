#pragma once

#include <optional>
#include <string>

#include "cylproj/measure.hpp"

namespace cylproj {

/// Strong projection: the parameter cells whose fiber has positive measure,
/// reassembled as a set (a cylinder over every other dimension).
FinDimSet strong_project(const FinDimSet& a, DimVar y);
/// Strong co-projection: cells whose fiber has measure 1.
FinDimSet strong_co_project(const FinDimSet& a, DimVar y);
DiscreteSet strong_project(const DiscreteSet& a, DimVar y, const DiscreteBase& base);
DiscreteSet strong_co_project(const DiscreteSet& a, DimVar y, const DiscreteBase& base);

struct ConvergenceRow {
    unsigned long n;
    Rat union_value;
    Rat intersection_value;
};

/// Exact stage values of the union/intersection sequences together with
/// their limits, the ordinary projection measure when the input is a set,
/// and the continuity verdict (ordinary equals the union limit).
struct ConvergenceReport {
    std::optional<DimVar> dim;
    std::vector<ConvergenceRow> rows;
    Rat sup_limit;
    Rat inf_limit;
    std::optional<Rat> ordinary;          // measure of the ordinary cylinder
    std::optional<bool> continuity_holds;
    FiberProfile profile;

    Rat gap_bound_at(unsigned long n) const { return cylproj::gap_bound_at(profile, n); }
};

ConvergenceReport convergence_table(const FinDimSet& a, DimVar y, unsigned long n_max);
ConvergenceReport convergence_table(const DiscreteSet& a, DimVar y, const DiscreteBase& base,
                                    unsigned long n_max);
ConvergenceReport convergence_table(const FiberProfile& p, unsigned long n_max);

enum class Verdict { holds, fails, hypothesis_not_met };

struct AuditValue {
    enum class Kind { rational, boolean, text };
    std::string name;
    Kind kind;
    Rat rat;
    bool flag = false;
    std::string text;

    static AuditValue of(std::string name, Rat v) {
        return {std::move(name), Kind::rational, std::move(v), false, {}};
    }
    static AuditValue of(std::string name, bool v) {
        return {std::move(name), Kind::boolean, Rat(0), v, {}};
    }
    static AuditValue of(std::string name, std::string v) {
        return {std::move(name), Kind::text, Rat(0), false, std::move(v)};
    }
};

struct AuditReport {
    std::string subject;
    std::vector<AuditValue> hypotheses;
    std::vector<AuditValue> conclusions;
    Verdict verdict = Verdict::holds;
    // reproducible witness carried on failing verdicts
    std::optional<FinDimSet> witness_set;
    std::optional<DiscreteSet> witness_dset;
};

/// Continuity of the measure w.r.t. the cylindric supremum along y: the
/// ordinary projection measure equals the union-sequence limit.
AuditReport continuity_check(const FinDimSet& a, DimVar y);
AuditReport continuity_check(const DiscreteSet& a, DimVar y, const DiscreteBase& base);

/// Checks the equivalence "intersection limit of b = a - dual-cylinder(a)
/// vanishes iff the dual continuity equation holds for a", with both sides
/// computed by independent paths.
AuditReport lemma1_audit(const FinDimSet& a, DimVar y);
AuditReport lemma1_audit(const DiscreteSet& a, DimVar y, const DiscreteBase& base);

/// Evaluates the majorant-cylinder sufficient condition: when the measure of
/// the iterated cylinder over all parameter dimensions is below 1, reports
/// both the intersection-limit conclusion and the literal union-limit
/// reading, plus the complement-side hypothesis, as separate evidence.
AuditReport theorem4_audit(const FinDimSet& a, DimVar y);
AuditReport theorem4_audit(const DiscreteSet& a, DimVar y, const DiscreteBase& base);

struct InfiniteUnionReport {
    MeasureValue infinite_union;     // sup of the union stages (sigma-additivity)
    MeasureValue ordinary_cylinder;  // measure of the ordinary cylinder
    bool equal;
};

/// Measure of the set-theoretic infinite union of fresh-variable copies,
/// which sigma-additivity pins to the union-sequence supremum; reports it
/// against the ordinary cylinder's measure.
InfiniteUnionReport infinite_union_measure_discrete(const DiscreteSet& a, DimVar y,
                                                    const DiscreteBase& base);

}  // namespace cylproj
