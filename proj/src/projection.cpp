#include "cylproj/projection.hpp"

#include "cylproj/error.hpp"
#include "engine.hpp"

namespace cylproj {

namespace {

std::vector<std::vector<int>> cells_where(const FiberProfile& p, bool want_one) {
    std::vector<std::vector<int>> tuples;
    for (const auto& c : p.cells) {
        bool pick = want_one ? (c.q == 1) : (c.q > 0);
        if (pick) tuples.push_back(c.cell);
    }
    return tuples;
}

}  // namespace

FinDimSet strong_project(const FinDimSet& a, DimVar y) {
    FiberProfile p = fiber_profile(a, y);
    auto tuples = cells_where(p, false);
    return compacted(FinDimSet(detail::emit_terms(p.zdims, p.zbreaks, tuples, /*runs=*/true)));
}

FinDimSet strong_co_project(const FinDimSet& a, DimVar y) {
    FiberProfile p = fiber_profile(a, y);
    auto tuples = cells_where(p, true);
    return compacted(FinDimSet(detail::emit_terms(p.zdims, p.zbreaks, tuples, /*runs=*/true)));
}

DiscreteSet strong_project(const DiscreteSet& a, DimVar y, const DiscreteBase& base) {
    FiberProfile p = fiber_profile(a, y, base);
    auto tuples = cells_where(p, false);
    return compacted(DiscreteSet(detail::emit_terms(p.zdims, p.zmentioned, tuples)));
}

DiscreteSet strong_co_project(const DiscreteSet& a, DimVar y, const DiscreteBase& base) {
    FiberProfile p = fiber_profile(a, y, base);
    auto tuples = cells_where(p, true);
    return compacted(DiscreteSet(detail::emit_terms(p.zdims, p.zmentioned, tuples)));
}

namespace {

ConvergenceReport table_from_profile(FiberProfile p, std::optional<DimVar> dim,
                                     std::optional<Rat> ordinary, unsigned long n_max) {
    if (n_max < 1) throw Error(Errc::bound_exceeded, "max-n must be at least 1");
    ConvergenceReport r;
    r.dim = dim;
    for (unsigned long n = 1; n <= n_max; ++n)
        r.rows.push_back({n, n_fold_union_measure(p, n).exact,
                          n_fold_intersection_measure(p, n).exact});
    ProfileLimits lim = profile_limits(p);
    r.sup_limit = lim.sup_limit.exact;
    r.inf_limit = lim.inf_limit.exact;
    r.ordinary = std::move(ordinary);
    if (r.ordinary) r.continuity_holds = (*r.ordinary == r.sup_limit);
    r.profile = std::move(p);
    return r;
}

}  // namespace

ConvergenceReport convergence_table(const FinDimSet& a, DimVar y, unsigned long n_max) {
    return table_from_profile(fiber_profile(a, y), y, lebesgue_measure(cylindrify(a, y)).exact,
                              n_max);
}

ConvergenceReport convergence_table(const DiscreteSet& a, DimVar y, const DiscreteBase& base,
                                    unsigned long n_max) {
    return table_from_profile(fiber_profile(a, y, base), y,
                              discrete_measure(cylindrify(a, y), base).exact, n_max);
}

ConvergenceReport convergence_table(const FiberProfile& p, unsigned long n_max) {
    return table_from_profile(p, std::nullopt, std::nullopt, n_max);
}

namespace {

template <typename SetT, typename Measure, typename Cyl>
AuditReport continuity_check_impl(const SetT& a, DimVar y, Measure&& mu, Cyl&& cyl,
                                  const FiberProfile& profile) {
    AuditReport r;
    r.subject = "continuity";
    Rat mu_a = mu(a);
    Rat mu_proj = mu(cyl(a, y));
    Rat sup = profile_limits(profile).sup_limit.exact;
    r.hypotheses.push_back(AuditValue::of("mu_set", mu_a));
    r.hypotheses.push_back(AuditValue::of("mu_ordinary_projection", mu_proj));
    r.conclusions.push_back(AuditValue::of("sup_limit", sup));
    bool holds = (mu_proj == sup);
    r.conclusions.push_back(AuditValue::of("continuity_holds", holds));
    // sufficient-condition shortcuts, reported when applicable
    if (mu_a == 1) r.conclusions.push_back(AuditValue::of("sufficient_full_measure", true));
    if (mu_proj == 0) r.conclusions.push_back(AuditValue::of("sufficient_null_projection", true));
    r.verdict = holds ? Verdict::holds : Verdict::fails;
    return r;
}

}  // namespace

AuditReport continuity_check(const FinDimSet& a, DimVar y) {
    auto r = continuity_check_impl(
        a, y, [](const FinDimSet& s) { return lebesgue_measure(s).exact; },
        [](const FinDimSet& s, DimVar d) { return cylindrify(s, d); }, fiber_profile(a, y));
    if (r.verdict == Verdict::fails) r.witness_set = a;
    return r;
}

AuditReport continuity_check(const DiscreteSet& a, DimVar y, const DiscreteBase& base) {
    auto r = continuity_check_impl(
        a, y, [&](const DiscreteSet& s) { return discrete_measure(s, base).exact; },
        [](const DiscreteSet& s, DimVar d) { return cylindrify(s, d); },
        fiber_profile(a, y, base));
    if (r.verdict == Verdict::fails) r.witness_dset = a;
    return r;
}

namespace {

template <typename SetT, typename Measure, typename Profile>
AuditReport lemma1_impl(const SetT& a, DimVar y, Measure&& mu, Profile&& profile) {
    AuditReport r;
    r.subject = "lemma1";
    SetT dual = co_cylindrify(a, y);
    SetT b = intersect(a, complement(dual));
    Rat left = mu(dual);                                      // dual-cylinder measure
    Rat right = profile_limits(profile(a)).inf_limit.exact;   // intersection limit of a
    bool dual_eq = (left == right);
    Rat b_inf = profile_limits(profile(b)).inf_limit.exact;   // independent path on b
    bool b_inf_zero = (b_inf == 0);
    r.hypotheses.push_back(AuditValue::of("mu_dual_cylinder", left));
    r.hypotheses.push_back(AuditValue::of("intersection_limit", right));
    r.conclusions.push_back(AuditValue::of("dual_equation_holds", dual_eq));
    r.conclusions.push_back(AuditValue::of("b_intersection_limit", b_inf));
    r.conclusions.push_back(AuditValue::of("b_limit_vanishes", b_inf_zero));
    if (is_empty(dual)) r.conclusions.push_back(AuditValue::of("b_equals_set", set_equal(b, a)));
    bool equivalent = (dual_eq == b_inf_zero);
    r.conclusions.push_back(AuditValue::of("equivalence_holds", equivalent));
    r.verdict = equivalent ? Verdict::holds : Verdict::fails;
    return r;
}

}  // namespace

AuditReport lemma1_audit(const FinDimSet& a, DimVar y) {
    auto r = lemma1_impl(
        a, y, [](const FinDimSet& s) { return lebesgue_measure(s).exact; },
        [&](const FinDimSet& s) { return fiber_profile(s, y); });
    if (r.verdict == Verdict::fails) r.witness_set = a;
    return r;
}

AuditReport lemma1_audit(const DiscreteSet& a, DimVar y, const DiscreteBase& base) {
    auto r = lemma1_impl(
        a, y, [&](const DiscreteSet& s) { return discrete_measure(s, base).exact; },
        [&](const DiscreteSet& s) { return fiber_profile(s, y, base); });
    if (r.verdict == Verdict::fails) r.witness_dset = a;
    return r;
}

namespace {

template <typename SetT, typename Measure, typename Profile>
AuditReport theorem4_impl(const SetT& a, DimVar y, Measure&& mu, Profile&& profile) {
    AuditReport r;
    r.subject = "theorem4";
    auto dims = dim_set(a);
    dims.erase(y);
    SetT majorant = a;
    for (DimVar z : dims) majorant = cylindrify(majorant, z);
    Rat hyp_value = mu(majorant);
    bool hyp = (hyp_value < 1);
    r.hypotheses.push_back(AuditValue::of("mu_majorant_cylinder", hyp_value));
    r.hypotheses.push_back(AuditValue::of("hypothesis_met", hyp));

    ProfileLimits lim = profile_limits(profile(a));
    Rat inf_left = mu(co_cylindrify(a, y));
    bool inf_holds = (inf_left == lim.inf_limit.exact);
    Rat sup_left = mu(cylindrify(a, y));
    bool sup_holds = (sup_left == lim.sup_limit.exact);
    r.conclusions.push_back(AuditValue::of("mu_dual_cylinder", inf_left));
    r.conclusions.push_back(AuditValue::of("intersection_limit", lim.inf_limit.exact));
    r.conclusions.push_back(AuditValue::of("inf_property_holds", inf_holds));
    r.conclusions.push_back(AuditValue::of("mu_ordinary_projection", sup_left));
    r.conclusions.push_back(AuditValue::of("union_limit", lim.sup_limit.exact));
    r.conclusions.push_back(AuditValue::of("sup_property_holds", sup_holds));

    SetT comp_majorant = complement(a);
    for (DimVar z : dims) comp_majorant = cylindrify(comp_majorant, z);
    Rat comp_value = mu(comp_majorant);
    bool comp_hyp = (comp_value < 1);
    r.conclusions.push_back(AuditValue::of("mu_complement_majorant", comp_value));
    r.conclusions.push_back(AuditValue::of("complement_hypothesis_met", comp_hyp));
    if (comp_hyp)
        r.conclusions.push_back(AuditValue::of("complement_implies_sup_property", sup_holds));

    if (!hyp)
        r.verdict = Verdict::hypothesis_not_met;
    else
        r.verdict = inf_holds ? Verdict::holds : Verdict::fails;
    return r;
}

}  // namespace

AuditReport theorem4_audit(const FinDimSet& a, DimVar y) {
    auto r = theorem4_impl(
        a, y, [](const FinDimSet& s) { return lebesgue_measure(s).exact; },
        [&](const FinDimSet& s) { return fiber_profile(s, y); });
    if (r.verdict == Verdict::fails) r.witness_set = a;
    return r;
}

AuditReport theorem4_audit(const DiscreteSet& a, DimVar y, const DiscreteBase& base) {
    auto r = theorem4_impl(
        a, y, [&](const DiscreteSet& s) { return discrete_measure(s, base).exact; },
        [&](const DiscreteSet& s) { return fiber_profile(s, y, base); });
    if (r.verdict == Verdict::fails) r.witness_dset = a;
    return r;
}

InfiniteUnionReport infinite_union_measure_discrete(const DiscreteSet& a, DimVar y,
                                                    const DiscreteBase& base) {
    Rat sup = profile_limits(fiber_profile(a, y, base)).sup_limit.exact;
    Rat ordinary = discrete_measure(cylindrify(a, y), base).exact;
    return {{sup}, {ordinary}, sup == ordinary};
}

}  // namespace cylproj
