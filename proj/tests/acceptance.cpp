// Acceptance suite: exact-value and property-based checks of the library's
// headline guarantees. Prints one line per criterion and exits with the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

#include "cylproj/format.hpp"
#include "cylproj/oracle.hpp"
#include "cylproj/projection.hpp"
#include "gen.hpp"

using namespace cylproj;
using gentest::Gen;

namespace {

constexpr DimVar Y = 0;

void req(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

const Rat kTolerance = make_rat(1, 1 << 20);

// smallest n with gap_bound_at(n) <= kTolerance
unsigned long predicted_stage(const FiberProfile& p) {
    if (gap_bound_at(p, 1) <= kTolerance) return 1;
    unsigned long hi = 2;
    while (gap_bound_at(p, hi) > kTolerance) hi *= 2;
    unsigned long lo = hi / 2;  // gap(lo) > tol, gap(hi) <= tol
    while (lo + 1 < hi) {
        unsigned long mid = lo + (hi - lo) / 2;
        (gap_bound_at(p, mid) > kTolerance ? lo : hi) = mid;
    }
    return hi;
}

void criterion_counterexample() {
    FinDimSet a = gentest::e1();
    req(lebesgue_measure(cylindrify(a, Y)).exact == 1, "ordinary projection measure");
    req(lebesgue_measure(a).exact == 0, "set measure");
    FiberProfile p = fiber_profile(a, Y);
    for (unsigned long n = 1; n <= 16; ++n)
        req(n_fold_union_measure(p, n).exact == 0, "union stage " + std::to_string(n));
    req(profile_limits(p).sup_limit.exact == 0, "union limit");
    req(is_empty(strong_project(a, Y)), "strong projection");
    req(continuity_check(a, Y).verdict == Verdict::fails, "continuity verdict");
}

void criterion_interval_union_continuity() {
    Gen gen(20260809);
    for (int iter = 0; iter < 220; ++iter) {
        FinDimSet a = gen.rect_union(4, 6, 5);
        AuditReport check = continuity_check(a, Y);
        req(check.verdict == Verdict::holds, "continuity on interval unions");
        ConvergenceReport r = convergence_table(a, Y, 1);
        unsigned long n = predicted_stage(r.profile);
        Rat u = n_fold_union_measure(r.profile, n).exact;
        req(*r.ordinary >= u, "stage value below the limit");
        req(*r.ordinary - u <= kTolerance, "stage within tolerance at predicted n");
    }
}

void criterion_discrete_continuity() {
    Gen gen(30111);
    for (int iter = 0; iter < 220; ++iter) {
        bool with_tail = iter % 10 != 9;
        DiscreteBase base = gen.base(8, with_tail);
        int limit = static_cast<int>(base.named_count());
        if (!with_tail && limit > 1) limit -= 1;  // keep every reachable fiber positive
        DiscreteSet a = gen.dset(3, 4, limit);
        AuditReport check = continuity_check(a, Y, base);
        req(check.verdict == Verdict::holds, "discrete continuity");
        ConvergenceReport r = convergence_table(a, Y, base, 1);
        unsigned long n = predicted_stage(r.profile);
        Rat u = n_fold_union_measure(r.profile, n).exact;
        req(*r.ordinary - u >= 0 && *r.ordinary - u <= kTolerance, "discrete stage tolerance");
        InfiniteUnionReport inf = infinite_union_measure_discrete(a, Y, base);
        req(inf.equal, "infinite union equals the ordinary cylinder measure");
    }
}

void criterion_stage_oracle() {
    Gen gen(40999);
    for (int iter = 0; iter < 60; ++iter) {
        FinDimSet a = (iter % 2 == 0) ? gen.flagged_set(2, 3) : gen.flagged_set(3, 2);
        FiberProfile p = fiber_profile(a, Y);
        for (unsigned long n = 1; n <= 4; ++n) {
            Rat cu = n_fold_union_measure(p, n).exact;
            Rat ci = n_fold_intersection_measure(p, n).exact;
            req(cu == lebesgue_measure(materialize_n_fold(a, Y, n, FoldMode::unions)).exact,
                "continuous union stage vs materialization");
            req(ci == lebesgue_measure(materialize_n_fold(a, Y, n, FoldMode::intersections)).exact,
                "continuous intersection stage vs materialization");
        }
    }
    for (int iter = 0; iter < 60; ++iter) {
        DiscreteBase base = gen.base(5);
        DiscreteSet a = gen.dset(2, 3, static_cast<int>(base.named_count()));
        FiberProfile p = fiber_profile(a, Y, base);
        for (unsigned long n = 1; n <= 4; ++n) {
            Rat cu = n_fold_union_measure(p, n).exact;
            Rat ci = n_fold_intersection_measure(p, n).exact;
            req(cu == discrete_measure(materialize_n_fold(a, Y, n, FoldMode::unions), base).exact,
                "discrete union stage vs materialization");
            req(ci == discrete_measure(materialize_n_fold(a, Y, n, FoldMode::intersections),
                                       base).exact,
                "discrete intersection stage vs materialization");
            req(ci == truncation_measure_discrete(a, base, Y, n, FoldMode::intersections).exact,
                "discrete stage vs class enumeration");
        }
    }
}

void criterion_strong_projection_measures() {
    Gen gen(50777);
    for (int iter = 0; iter < 120; ++iter) {
        FinDimSet a = gen.flagged_set(3, 3);
        DimVar y = static_cast<DimVar>(gen.uniform(0, 2));
        ProfileLimits lim = profile_limits(fiber_profile(a, y));
        req(lebesgue_measure(strong_project(a, y)).exact == lim.sup_limit.exact,
            "strong projection measure equals the union limit");
        req(lebesgue_measure(strong_co_project(a, y)).exact == lim.inf_limit.exact,
            "strong co-projection measure equals the intersection limit");
        req(set_equal(strong_project(a, y), complement(strong_co_project(complement(a), y))),
            "projection duality");
    }
}

void criterion_dual_equation_equivalence() {
    Gen gen(60333);
    for (int iter = 0; iter < 120; ++iter) {
        FinDimSet a = (iter % 2 == 0) ? gen.flagged_set(2, 3) : gen.flagged_set(3, 2);
        DimVar y = static_cast<DimVar>(gen.uniform(0, 1));
        // left side by complement-of-cylinder-of-complement, right by profile
        Rat left = lebesgue_measure(co_cylindrify(a, y)).exact;
        Rat right = profile_limits(fiber_profile(a, y)).inf_limit.exact;
        bool dual_eq = (left == right);
        FinDimSet b = intersect(a, complement(co_cylindrify(a, y)));
        bool b_vanishes = (profile_limits(fiber_profile(b, y)).inf_limit.exact == 0);
        req(dual_eq == b_vanishes, "dual equation iff the b-limit vanishes");
        req(lemma1_audit(a, y).verdict == Verdict::holds, "audit verdict");
    }
}

void criterion_majorant_condition() {
    Gen gen(70555);
    int hypothesis_met = 0;
    for (int iter = 0; iter < 200; ++iter) {
        FinDimSet a = gen.flagged_set(2, 3);
        AuditReport r = theorem4_audit(a, Y);
        if (r.verdict == Verdict::hypothesis_not_met) continue;
        ++hypothesis_met;
        req(r.verdict == Verdict::holds, "intersection-limit property under the hypothesis");
    }
    req(hypothesis_met >= 50, "enough sets satisfy the hypothesis");

    AuditReport r = theorem4_audit(gentest::pointfiber(), Y);
    auto value = [&](const char* name) -> const AuditValue& {
        for (const auto& v : r.hypotheses)
            if (v.name == name) return v;
        for (const auto& v : r.conclusions)
            if (v.name == name) return v;
        throw std::runtime_error(std::string("missing audit value ") + name);
    };
    req(value("hypothesis_met").flag, "point-fiber evidence: hypothesis");
    req(value("inf_property_holds").flag, "point-fiber evidence: intersection-limit reading");
    req(!value("sup_property_holds").flag, "point-fiber evidence: literal union reading");
    req(value("mu_ordinary_projection").rat == make_rat(1, 2),
        "point-fiber evidence: ordinary projection measure");
    req(value("union_limit").rat == 0, "point-fiber evidence: union limit");
}

void criterion_algebra_laws() {
    Gen gen(80111);
    for (int iter = 0; iter < 520; ++iter) {
        FinDimSet a = gen.flagged_set(2, 3);
        FinDimSet b = gen.flagged_set(2, 3);
        FinDimSet c = gen.flagged_set(2, 2);
        req(set_equal(unite(a, b), unite(b, a)), "commutativity");
        req(set_equal(intersect(a, unite(b, c)), unite(intersect(a, b), intersect(a, c))),
            "distributivity");
        req(set_equal(complement(unite(a, b)), intersect(complement(a), complement(b))),
            "De Morgan");
        req(set_equal(complement(complement(a)), a), "double complement");

        Rat ma = lebesgue_measure(a).exact;
        req(ma >= 0 && ma <= 1, "measure range");
        req(lebesgue_measure(intersect(a, b)).exact +
                    lebesgue_measure(intersect(a, complement(b))).exact == ma,
            "additivity over a disjoint split");

        FinDimSet moved = b;
        for (DimVar d : {DimVar(0), DimVar(1)})
            if (dim_set(moved).count(d)) moved = substitute(moved, d, d + 6);
        req(lebesgue_measure(intersect(a, moved)).exact ==
                lebesgue_measure(a).exact * lebesgue_measure(moved).exact,
            "product property");
        if (dim_set(a).count(Y))
            req(lebesgue_measure(substitute(a, Y, 9)).exact == ma, "symmetry");

        req(grid_measure(a).exact == ma, "grid measure agreement (a)");
        req(grid_measure(b).exact == lebesgue_measure(b).exact, "grid measure agreement (b)");
    }
    req(lebesgue_measure(FinDimSet::empty_set()).exact == 0, "null empty set");
    req(lebesgue_measure(FinDimSet::unit()).exact == 1, "unit mass");
}

void criterion_upper_bound_mechanism() {
    Gen gen(90777);
    for (int iter = 0; iter < 220; ++iter) {
        FinDimSet a = gen.flagged_set(2, 3);
        DimVar y = static_cast<DimVar>(gen.uniform(0, 1));
        DimVar yk = 8;
        FinDimSet moved = substitute(a, y, yk);
        FinDimSet b = cylindrify(unite(moved, gen.flagged_set(2, 2)), yk);
        req(!dim_set(b).count(yk), "bound avoids the fresh dimension");
        req(subset(moved, b), "bound dominates the renamed copy");
        req(set_equal(cylindrify(moved, yk), cylindrify(a, y)), "cylinder via the fresh rename");
        req(subset(cylindrify(a, y), b), "cylinder is the least upper bound");
    }
}

struct Criterion {
    const char* name;
    std::function<void()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"degenerate counterexample: null stages under a full projection", criterion_counterexample},
        {"continuity on nondegenerate interval unions", criterion_interval_union_continuity},
        {"continuity of discrete power measures", criterion_discrete_continuity},
        {"closed-form stages equal materialized stage measures", criterion_stage_oracle},
        {"strong projection measures equal the sequence limits", criterion_strong_projection_measures},
        {"dual equation equivalence via independent paths", criterion_dual_equation_equivalence},
        {"majorant-cylinder sufficient condition", criterion_majorant_condition},
        {"Boolean algebra and measure axiom suites", criterion_algebra_laws},
        {"least-upper-bound mechanism of the cylinder", criterion_upper_bound_mechanism},
    };
    const int total = static_cast<int>(std::size(criteria));
    int failures = 0;
    for (int i = 0; i < total; ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = true;
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%d/%d] %s  %s (%.2fs)%s%s\n", i + 1, total, ok ? "PASS" : "FAIL",
                    criteria[i].name, secs, note.empty() ? "" : " — ", note.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %d acceptance criteria passed\n", total);
    else
        std::printf("%d of %d acceptance criteria FAILED\n", failures, total);
    return failures;
}
