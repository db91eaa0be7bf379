#include "cylproj/oracle.hpp"

#include <algorithm>

#include "cylproj/error.hpp"

namespace cylproj {

namespace {

void check_bound(unsigned long n, unsigned long bound) {
    if (n < 1 || n > bound)
        throw Error(Errc::bound_exceeded, "n-fold stage " + std::to_string(n) +
                                              " is outside the configured bound " +
                                              std::to_string(bound));
}

DimVar fresh_base(const FinDimSet& a, DimVar y) {
    DimVar top = y;
    for (const auto& term : a.terms())
        for (const auto& [d, comp] : term.components()) top = std::max(top, d);
    return top + 1;
}

DimVar fresh_base(const DiscreteSet& a, DimVar y) {
    DimVar top = y;
    for (const auto& term : a.terms())
        for (const auto& [d, comp] : term) top = std::max(top, d);
    return top + 1;
}

template <typename SetT>
SetT materialize_impl(const SetT& a, DimVar y, unsigned long n, FoldMode mode,
                      unsigned long bound) {
    check_bound(n, bound);
    DimVar base = fresh_base(a, y);
    SetT acc = substitute(a, y, base);
    for (unsigned long i = 1; i < n; ++i) {
        SetT copy = substitute(a, y, base + static_cast<DimVar>(i));
        acc = (mode == FoldMode::unions) ? unite(acc, copy) : intersect(acc, copy);
    }
    return acc;
}

}  // namespace

FinDimSet materialize_n_fold(const FinDimSet& a, DimVar y, unsigned long n, FoldMode mode,
                             unsigned long bound) {
    return materialize_impl(a, y, n, mode, bound);
}

DiscreteSet materialize_n_fold(const DiscreteSet& a, DimVar y, unsigned long n, FoldMode mode,
                               unsigned long bound) {
    return materialize_impl(a, y, n, mode, bound);
}

MeasureValue grid_measure(const FinDimSet& a) {
    // gather per-dimension breakpoints straight from the terms
    std::map<DimVar, std::set<Rat>> grids;
    for (const auto& term : a.terms())
        for (const auto& [d, comp] : term.components())
            grids[d].insert(comp.breakpoints().begin(), comp.breakpoints().end());
    std::vector<DimVar> dims;
    std::vector<std::vector<Rat>> mids;     // midpoint of each open cell
    std::vector<std::vector<Rat>> lengths;  // its length
    for (const auto& [d, bp] : grids) {
        dims.push_back(d);
        std::vector<Rat> sorted(bp.begin(), bp.end());
        std::vector<Rat> m, l;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            m.push_back((sorted[i] + sorted[i + 1]) / 2);
            l.push_back(sorted[i + 1] - sorted[i]);
        }
        mids.push_back(std::move(m));
        lengths.push_back(std::move(l));
    }
    Rat total(0);
    std::map<DimVar, Rat> point;
    std::size_t budget = 0;
    auto rec = [&](auto&& self, std::size_t di, const Rat& vol) -> void {
        if (di == dims.size()) {
            budget += 1;
            if (budget > max_cells())
                throw Error(Errc::cell_limit_exceeded, "grid enumeration exceeds the cell cap");
            if (a.contains(point)) total += vol;
            return;
        }
        for (std::size_t c = 0; c < mids[di].size(); ++c) {
            point[dims[di]] = mids[di][c];
            self(self, di + 1, vol * lengths[di][c]);
        }
    };
    if (a.terms().empty()) return {Rat(0)};
    rec(rec, 0, Rat(1));
    return {total};
}

MeasureValue truncation_measure_discrete(const DiscreteSet& a, const DiscreteBase& base, DimVar y,
                                         unsigned long n, FoldMode mode, unsigned long bound) {
    DiscreteSet m = materialize_n_fold(a, y, n, mode, bound);
    if (m.terms().empty()) return {Rat(0)};
    std::map<DimVar, std::set<std::uint32_t>> mention;
    for (const auto& term : m.terms())
        for (const auto& [d, comp] : term)
            mention[d].insert(comp.members().begin(), comp.members().end());
    std::vector<DimVar> dims;
    std::vector<std::vector<std::uint32_t>> reps;  // class representatives
    std::vector<std::vector<Rat>> weights;
    for (const auto& [d, atoms] : mention) {
        dims.push_back(d);
        std::vector<std::uint32_t> rp(atoms.begin(), atoms.end());
        std::vector<Rat> w;
        Rat rest(1);
        for (std::uint32_t atom : rp) {
            Rat p = base.atom_prob(atom);
            w.push_back(p);
            rest -= p;
        }
        // any unmentioned atom stands in for the whole rest class
        rp.push_back(rp.empty() ? 0 : rp.back() + 1);
        w.push_back(rest);
        reps.push_back(std::move(rp));
        weights.push_back(std::move(w));
    }
    Rat total(0);
    std::map<DimVar, std::uint32_t> point;
    std::size_t budget = 0;
    auto rec = [&](auto&& self, std::size_t di, const Rat& vol) -> void {
        if (di == dims.size()) {
            budget += 1;
            if (budget > max_cells())
                throw Error(Errc::cell_limit_exceeded, "class enumeration exceeds the cell cap");
            if (m.contains(point)) total += vol;
            return;
        }
        for (std::size_t c = 0; c < reps[di].size(); ++c) {
            point[dims[di]] = reps[di][c];
            self(self, di + 1, vol * weights[di][c]);
        }
    };
    rec(rec, 0, Rat(1));
    return {total};
}

namespace {

template <typename SetT, typename Measure>
OracleDiffReport oracle_diff_impl(const SetT& a, DimVar y, unsigned long max_n,
                                  unsigned long bound, Measure&& mu, const FiberProfile& p,
                                  bool with_literal) {
    OracleDiffReport r;
    r.dim = y;
    for (unsigned long n = 1; n <= max_n; ++n) {
        Rat cu = n_fold_union_measure(p, n).exact;
        Rat mu_u = mu(materialize_n_fold(a, y, n, FoldMode::unions, bound));
        bool mt_u = (cu == mu_u);
        r.union_rows.push_back({n, cu, mu_u, mt_u, std::nullopt});
        Rat ci = n_fold_intersection_measure(p, n).exact;
        Rat mu_i = mu(materialize_n_fold(a, y, n, FoldMode::intersections, bound));
        bool mt_i = (ci == mu_i);
        std::optional<Rat> literal;
        if (with_literal) {
            Rat sum(0);
            for (const auto& c : p.cells) sum += rat_pow(c.volume * c.q, n);
            literal = sum;
        }
        r.intersection_rows.push_back({n, ci, mu_i, mt_i, std::move(literal)});
        r.all_match = r.all_match && mt_u && mt_i;
    }
    return r;
}

}  // namespace

OracleDiffReport oracle_diff(const FinDimSet& a, DimVar y, unsigned long max_n,
                             unsigned long bound) {
    return oracle_diff_impl(
        a, y, max_n, bound, [](const FinDimSet& s) { return lebesgue_measure(s).exact; },
        fiber_profile(a, y), false);
}

OracleDiffReport oracle_diff(const DiscreteSet& a, DimVar y, const DiscreteBase& base,
                             unsigned long max_n, unsigned long bound) {
    return oracle_diff_impl(
        a, y, max_n, bound, [&](const DiscreteSet& s) { return discrete_measure(s, base).exact; },
        fiber_profile(a, y, base), true);
}

}  // namespace cylproj
