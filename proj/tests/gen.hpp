// Shared random generators and pointwise membership probes for the test
// suites. Probes evaluate set membership coordinate-by-coordinate, a path
// independent of the engines under test.
#pragma once

#include <random>
#include <vector>

#include "cylproj/discrete.hpp"
#include "cylproj/findim.hpp"
#include "cylproj/measure.hpp"

namespace gentest {

using namespace cylproj;

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

    Rat dyadic(int k) {  // i/2^k, i in [0, 2^k]
        int denom = 1 << k;
        return make_rat(uniform(0, denom), denom);
    }

    Rat small_rat() {  // denominators up to 8, in [0,1]
        int den = uniform(1, 8);
        return make_rat(uniform(0, den), den);
    }

    OneDimSet interval_comp(int k) {  // nondegenerate dyadic [lo,hi), never full
        while (true) {
            Rat lo = dyadic(k), hi = dyadic(k);
            if (lo > hi) std::swap(lo, hi);
            if (lo == hi) continue;
            if (lo == 0 && hi == 1) continue;
            return OneDimSet::interval(lo, hi);
        }
    }

    // random flagged partition; may include isolated points and punctured
    // intervals; occasionally empty (caller's term dies) but never full
    OneDimSet flagged_comp() {
        while (true) {
            std::set<Rat> bp;
            int extra = uniform(1, 3);
            for (int i = 0; i < extra; ++i) {
                Rat b = small_rat();
                if (b != 0 && b != 1) bp.insert(b);
            }
            std::vector<Rat> breaks{Rat(0)};
            breaks.insert(breaks.end(), bp.begin(), bp.end());
            breaks.push_back(Rat(1));
            std::vector<bool> open(breaks.size() - 1), point(breaks.size() - 1);
            for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
                open[i] = chance(0.5);
                point[i] = chance(0.5);
            }
            OneDimSet s(breaks, open, point);
            if (!s.is_full()) return s;
        }
    }

    FinDimSet rect_union(int max_dims, int max_terms, int k) {
        int nterms = uniform(1, max_terms);
        std::vector<ProductTerm> terms;
        for (int t = 0; t < nterms; ++t) {
            ProductTerm term;
            bool alive = true;
            for (DimVar d = 0; d < static_cast<DimVar>(max_dims); ++d) {
                if (chance(0.3)) continue;  // leave the dimension full
                if (!term.set_component(d, interval_comp(k))) {
                    alive = false;
                    break;
                }
            }
            if (alive) terms.push_back(std::move(term));
        }
        return FinDimSet(std::move(terms));
    }

    FinDimSet flagged_set(int max_dims, int max_terms) {
        int nterms = uniform(1, max_terms);
        std::vector<ProductTerm> terms;
        for (int t = 0; t < nterms; ++t) {
            ProductTerm term;
            bool alive = true;
            for (DimVar d = 0; d < static_cast<DimVar>(max_dims); ++d) {
                if (chance(0.35)) continue;
                if (!term.set_component(d, flagged_comp())) {
                    alive = false;
                    break;
                }
            }
            if (alive) terms.push_back(std::move(term));
        }
        return FinDimSet(std::move(terms));
    }

    DiscreteBase base(int max_named, bool force_tail = false) {
        int n = uniform(1, max_named);
        // positive named probabilities with a common denominator
        int den = uniform(n + 1, 4 * (n + 1));
        std::vector<int> parts(n, 1);
        int used = n;
        while (used < den && (force_tail ? used + 1 < den : true) && chance(0.7)) {
            parts[uniform(0, n - 1)] += 1;
            ++used;
        }
        std::vector<Rat> probs;
        for (int p : parts) probs.push_back(make_rat(p, den));
        Rat tail = make_rat(den - used, den);
        return DiscreteBase(std::move(probs), tail);
    }

    AtomSet atom_set(int named_limit) {
        std::set<std::uint32_t> m;
        int count = uniform(0, 3);
        for (int i = 0; i < count; ++i) m.insert(static_cast<std::uint32_t>(uniform(0, named_limit - 1)));
        return chance(0.5) ? AtomSet::cofinite(std::move(m)) : AtomSet::finite(std::move(m));
    }

    DiscreteSet dset(int max_dims, int max_terms, int named_limit) {
        int nterms = uniform(1, max_terms);
        std::vector<DiscreteTerm> terms;
        for (int t = 0; t < nterms; ++t) {
            DiscreteTerm term;
            for (DimVar d = 0; d < static_cast<DimVar>(max_dims); ++d) {
                if (chance(0.3)) continue;
                AtomSet s = atom_set(named_limit);
                if (s.is_full()) continue;
                term.emplace(d, std::move(s));
            }
            bool alive = true;
            for (const auto& [d, s] : term)
                if (s.is_empty()) alive = false;
            if (alive) terms.push_back(std::move(term));
        }
        return DiscreteSet(std::move(terms));
    }
};

// --- fixed example sets (dims: y = 0, z = 1) ---

inline FinDimSet e1() {
    return unite(FinDimSet::box({{0, OneDimSet::point(make_rat(2, 3))},
                                 {1, OneDimSet::interval(make_rat(1, 2), Rat(1))}}),
                 FinDimSet::box({{0, OneDimSet::point(make_rat(1, 3))},
                                 {1, OneDimSet::interval(Rat(0), make_rat(1, 2))}}));
}

inline FinDimSet checkerboard() {
    return unite(FinDimSet::box({{0, OneDimSet::interval(Rat(0), make_rat(1, 2))},
                                 {1, OneDimSet::interval(Rat(0), make_rat(1, 2))}}),
                 FinDimSet::box({{0, OneDimSet::interval(make_rat(1, 2), Rat(1))},
                                 {1, OneDimSet::interval(make_rat(1, 2), Rat(1))}}));
}

inline FinDimSet lshape() {
    return unite(FinDimSet::box({{1, OneDimSet::interval(Rat(0), make_rat(1, 4))}}),
                 FinDimSet::box({{0, OneDimSet::interval(Rat(0), make_rat(1, 2))},
                                 {1, OneDimSet::interval(make_rat(1, 4), Rat(1))}}));
}

inline FinDimSet pointfiber() {
    return FinDimSet::box({{0, OneDimSet::point(make_rat(1, 3))},
                           {1, OneDimSet::interval(Rat(0), make_rat(1, 2))}});
}

inline DiscreteBase base_half_quarter() {
    return DiscreteBase({make_rat(1, 2), make_rat(1, 4)}, make_rat(1, 4));
}

inline DiscreteSet d1() {
    return unite(DiscreteSet::box({{0, AtomSet::finite({0})}, {1, AtomSet::finite({0})}}),
                 DiscreteSet::box({{0, AtomSet::cofinite({0})}, {1, AtomSet::cofinite({0})}}));
}

// --- pointwise probes ---

// candidate coordinates per dimension: every breakpoint of every component
// plus cell midpoints, which exhausts the membership classes of the sets
inline std::map<DimVar, std::vector<Rat>> probe_grid(std::initializer_list<const FinDimSet*> sets) {
    std::map<DimVar, std::set<Rat>> bp;
    for (const FinDimSet* s : sets)
        for (const auto& term : s->terms())
            for (const auto& [d, comp] : term.components())
                bp[d].insert(comp.breakpoints().begin(), comp.breakpoints().end());
    std::map<DimVar, std::vector<Rat>> out;
    for (auto& [d, pts] : bp) {
        std::vector<Rat> sorted(pts.begin(), pts.end());
        std::vector<Rat> coords;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            coords.push_back(sorted[i]);
            coords.push_back((sorted[i] + sorted[i + 1]) / 2);
        }
        if (coords.empty()) coords.push_back(make_rat(1, 3));
        out[d] = std::move(coords);
    }
    return out;
}

template <typename Pred>
inline bool all_probe_points(const std::map<DimVar, std::vector<Rat>>& grid, Pred&& pred) {
    std::vector<DimVar> dims;
    for (const auto& [d, coords] : grid) dims.push_back(d);
    std::map<DimVar, Rat> point;
    bool ok = true;
    auto rec = [&](auto&& self, std::size_t di) -> void {
        if (!ok) return;
        if (di == dims.size()) {
            if (!pred(point)) ok = false;
            return;
        }
        for (const Rat& c : grid.at(dims[di])) {
            point[dims[di]] = c;
            self(self, di + 1);
        }
    };
    rec(rec, 0);
    return ok;
}

}  // namespace gentest
