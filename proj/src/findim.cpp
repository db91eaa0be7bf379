#include "cylproj/findim.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cylproj/error.hpp"
#include "engine.hpp"

namespace cylproj {

using detail::CanonForm;
using detail::ContEngine;
using detail::kMaxTerms;
using detail::Mask;

bool ProductTerm::set_component(DimVar d, OneDimSet s) {
    if (s.is_full()) {
        comps_.erase(d);
        return true;
    }
    if (s.is_empty()) return false;
    comps_[d] = std::move(s);
    return true;
}

const OneDimSet* ProductTerm::component(DimVar d) const {
    auto it = comps_.find(d);
    return it == comps_.end() ? nullptr : &it->second;
}

FinDimSet::FinDimSet() : FinDimSet(std::vector<ProductTerm>{}) {}

FinDimSet::FinDimSet(std::vector<ProductTerm> terms) {
    auto impl = std::make_shared<detail::FdsImpl>();
    impl->terms = std::move(terms);
    impl_ = std::move(impl);
}

FinDimSet::~FinDimSet() = default;
FinDimSet::FinDimSet(const FinDimSet&) = default;
FinDimSet::FinDimSet(FinDimSet&&) noexcept = default;
FinDimSet& FinDimSet::operator=(const FinDimSet&) = default;
FinDimSet& FinDimSet::operator=(FinDimSet&&) noexcept = default;

FinDimSet FinDimSet::empty_set() { return FinDimSet(); }

FinDimSet FinDimSet::unit() { return FinDimSet({ProductTerm{}}); }

FinDimSet FinDimSet::box(const std::map<DimVar, OneDimSet>& components) {
    ProductTerm t;
    for (const auto& [d, s] : components)
        if (!t.set_component(d, s)) return empty_set();
    return FinDimSet({std::move(t)});
}

const std::vector<ProductTerm>& FinDimSet::terms() const { return impl_->terms; }

bool FinDimSet::contains(const std::map<DimVar, Rat>& point) const {
    for (const auto& term : impl_->terms) {
        bool ok = true;
        for (const auto& [d, comp] : term.components()) {
            auto it = point.find(d);
            if (it == point.end() || !comp.contains(it->second)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

const ContEngine& FinDimSet::engine() const {
    std::call_once(impl_->engine_once,
                   [this] { impl_->engine.emplace(detail::build_engine(impl_->terms)); });
    return *impl_->engine;
}

const CanonForm& FinDimSet::canonical() const {
    std::call_once(impl_->canon_once,
                   [this] { impl_->canon.emplace(detail::build_canonical(engine())); });
    return *impl_->canon;
}

namespace detail {

ContEngine build_engine(const std::vector<ProductTerm>& terms) {
    if (terms.size() > kMaxTerms)
        throw Error(Errc::term_limit_exceeded,
                    "set has " + std::to_string(terms.size()) + " terms; the engine cap is " +
                        std::to_string(kMaxTerms));
    ContEngine e;
    e.terms = &terms;
    std::map<DimVar, std::vector<Rat>> grids;
    for (const auto& t : terms)
        for (const auto& [d, comp] : t.components()) {
            auto& g = grids[d];
            if (g.empty()) g = {Rat(0), Rat(1)};
            for (const Rat& b : comp.breakpoints()) {
                auto it = std::lower_bound(g.begin(), g.end(), b);
                if (it == g.end() || *it != b) g.insert(it, b);
            }
        }
    for (auto& [d, g] : grids) {
        e.dims.push_back(d);
        e.breaks.push_back(std::move(g));
    }
    e.table.nterms = terms.size();
    for (std::size_t i = 0; i < terms.size(); ++i) e.table.all.set(i);
    e.table.cells.resize(e.dims.size());
    for (std::size_t di = 0; di < e.dims.size(); ++di)
        e.table.cells[di].assign(2 * (e.breaks[di].size() - 1), Mask{});
    for (std::size_t ti = 0; ti < terms.size(); ++ti) {
        for (std::size_t di = 0; di < e.dims.size(); ++di) {
            const OneDimSet* comp = terms[ti].component(e.dims[di]);
            if (!comp) {
                for (auto& m : e.table.cells[di]) m.set(ti);
            } else {
                auto flags = cell_flags(*comp, e.breaks[di]);
                for (std::size_t c = 0; c < flags.size(); ++c)
                    if (flags[c]) e.table.cells[di][c].set(ti);
            }
        }
    }
    return e;
}

std::set<std::vector<int>> included_tuples(const ContEngine& e) {
    std::set<std::vector<int>> out;
    std::size_t budget = 0;
    const std::size_t nd = e.dims.size();
    std::vector<std::vector<int>> inc(nd);
    std::vector<int> tup(nd);
    for (std::size_t ti = 0; ti < e.table.nterms; ++ti) {
        for (std::size_t di = 0; di < nd; ++di) {
            inc[di].clear();
            for (std::size_t c = 0; c < e.table.cells[di].size(); ++c)
                if (e.table.cells[di][c].test(ti)) inc[di].push_back(static_cast<int>(c));
        }
        auto rec = [&](auto&& self, std::size_t di) -> void {
            if (di == nd) {
                check_cell_budget(budget, 1);
                out.insert(tup);
                return;
            }
            for (int c : inc[di]) {
                tup[di] = c;
                self(self, di + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

namespace {

// rest-point -> sorted cells present at dimension p
std::map<std::vector<int>, std::vector<int>> rest_map(const std::set<std::vector<int>>& tuples,
                                                      std::size_t p) {
    std::map<std::vector<int>, std::vector<int>> rest;
    std::vector<int> key;
    for (const auto& tup : tuples) {
        key.assign(tup.begin(), tup.end());
        key.erase(key.begin() + static_cast<long>(p));
        rest[key].push_back(tup[p]);
    }
    for (auto& [k, cells] : rest) std::sort(cells.begin(), cells.end());
    return rest;
}

bool has_cell(const std::vector<int>& sorted, int c) {
    return std::binary_search(sorted.begin(), sorted.end(), c);
}

}  // namespace

CanonForm build_canonical(const ContEngine& e) {
    CanonForm f;
    f.dims = e.dims;
    f.breaks = e.breaks;
    std::set<std::vector<int>> tset = included_tuples(e);
    for (std::size_t p = 0; p < f.dims.size();) {
        auto rest = rest_map(tset, p);
        const auto& br = f.breaks[p];
        std::size_t segs = br.size() - 1;
        std::vector<bool> keep(br.size(), true);
        bool any_removed = false;
        for (std::size_t i = 1; i < segs; ++i) {
            bool ok = true;
            for (const auto& [key, cells] : rest) {
                bool l = has_cell(cells, 2 * static_cast<int>(i) - 1);
                bool pt = has_cell(cells, 2 * static_cast<int>(i));
                bool r = has_cell(cells, 2 * static_cast<int>(i) + 1);
                if (l != pt || pt != r) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                keep[i] = false;
                any_removed = true;
            }
        }
        if (any_removed) {
            std::vector<Rat> nb;
            std::vector<int> newidx(br.size(), -1);  // kept breakpoint -> new index
            for (std::size_t i = 0; i < br.size(); ++i)
                if (keep[i]) {
                    newidx[i] = static_cast<int>(nb.size());
                    nb.push_back(br[i]);
                }
            // old cell -> new cell
            std::vector<int> remap(2 * segs);
            int seg = 0;  // new segment index of the current position
            for (std::size_t i = 0; i < segs; ++i) {
                if (keep[i]) seg = newidx[i];
                remap[2 * i] = keep[i] ? 2 * newidx[i] : 2 * seg + 1;
                remap[2 * i + 1] = 2 * seg + 1;
            }
            std::set<std::vector<int>> nt;
            for (auto tup : tset) {
                tup[p] = remap[tup[p]];
                nt.insert(std::move(tup));
            }
            tset = std::move(nt);
            f.breaks[p] = std::move(nb);
        }
        if (f.breaks[p].size() == 2) {
            auto rest2 = rest_map(tset, p);
            bool drop = true;
            for (const auto& [key, cells] : rest2)
                if (cells.size() != 2) {
                    drop = false;
                    break;
                }
            if (drop) {
                f.dims.erase(f.dims.begin() + static_cast<long>(p));
                f.breaks.erase(f.breaks.begin() + static_cast<long>(p));
                std::set<std::vector<int>> nt;
                for (auto tup : tset) {
                    tup.erase(tup.begin() + static_cast<long>(p));
                    nt.insert(std::move(tup));
                }
                tset = std::move(nt);
                continue;
            }
        }
        ++p;
    }
    f.cells.assign(tset.begin(), tset.end());
    return f;
}

std::vector<ProductTerm> emit_terms(const std::vector<DimVar>& dims,
                                    const std::vector<std::vector<Rat>>& breaks,
                                    const std::vector<std::vector<int>>& tuples, bool runs) {
    if (tuples.empty()) return {};
    if (dims.empty()) return {ProductTerm{}};
    using Span = std::pair<int, int>;
    std::vector<std::vector<Span>> work;
    work.reserve(tuples.size());
    for (const auto& tup : tuples) {
        std::vector<Span> w;
        w.reserve(tup.size());
        for (int c : tup) w.emplace_back(c, c);
        work.push_back(std::move(w));
    }
    for (std::size_t d = 0; d < dims.size(); ++d) {
        std::map<std::vector<Span>, std::vector<Span>> groups;
        std::vector<Span> key;
        for (const auto& w : work) {
            key.assign(w.begin(), w.end());
            key.erase(key.begin() + static_cast<long>(d));
            groups[key].push_back(w[d]);
        }
        work.clear();
        for (auto& [k, spans] : groups) {
            std::sort(spans.begin(), spans.end());
            std::vector<Span> merged;
            for (const Span& s : spans) {
                if (!merged.empty()) {
                    Span& cur = merged.back();
                    bool adjacent = (s.first == cur.second + 1);
                    bool allowed = runs || (cur.first == cur.second && cur.first % 2 == 0 &&
                                            s.first == s.second);
                    if (adjacent && allowed) {
                        cur.second = s.second;
                        continue;
                    }
                }
                merged.push_back(s);
            }
            for (const Span& s : merged) {
                std::vector<Span> tup(k);
                tup.insert(tup.begin() + static_cast<long>(d), s);
                work.push_back(std::move(tup));
            }
        }
    }
    std::vector<ProductTerm> out;
    out.reserve(work.size());
    for (const auto& w : work) {
        ProductTerm t;
        bool alive = true;
        for (std::size_t d = 0; d < dims.size(); ++d) {
            int last = 2 * static_cast<int>(breaks[d].size() - 1) - 1;
            if (w[d].first == 0 && w[d].second == last) continue;  // full
            if (!t.set_component(dims[d], cells_to_set(breaks[d], w[d].first, w[d].second))) {
                alive = false;
                break;
            }
        }
        if (alive) out.push_back(std::move(t));
    }
    return out;
}

Rat cont_measure(const ContEngine& e) {
    if (e.table.nterms == 0) return Rat(0);
    std::vector<std::unordered_map<Mask, Rat>> memo(e.dims.size());
    auto rec = [&](auto&& self, std::size_t level, const Mask& m) -> Rat {
        if (!m.any()) return Rat(0);
        if (level == e.dims.size()) return Rat(1);
        auto it = memo[level].find(m);
        if (it != memo[level].end()) return it->second;
        Rat sum(0);
        const auto& br = e.breaks[level];
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            Mask mm = m & e.table.cells[level][2 * i + 1];
            if (mm.any()) sum += (br[i + 1] - br[i]) * self(self, level + 1, mm);
        }
        memo[level].emplace(m, sum);
        return sum;
    };
    return rec(rec, 0, e.table.all);
}

}  // namespace detail

FinDimSet unite(const FinDimSet& a, const FinDimSet& b) {
    std::vector<ProductTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return FinDimSet(std::move(terms));
}

FinDimSet intersect(const FinDimSet& a, const FinDimSet& b) {
    std::vector<ProductTerm> out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            ProductTerm t = ta;
            bool alive = true;
            for (const auto& [d, comp] : tb.components()) {
                const OneDimSet* existing = t.component(d);
                OneDimSet merged = existing ? intersect(*existing, comp) : comp;
                if (!t.set_component(d, std::move(merged))) {
                    alive = false;
                    break;
                }
            }
            if (alive) out.push_back(std::move(t));
        }
    return FinDimSet(std::move(out));
}

FinDimSet complement(const FinDimSet& a) {
    const CanonForm& cf = a.canonical();
    std::size_t budget = 0;
    std::vector<std::vector<int>> missing;
    std::vector<int> tup(cf.dims.size());
    auto rec = [&](auto&& self, std::size_t d) -> void {
        if (d == cf.dims.size()) {
            detail::check_cell_budget(budget, 1);
            if (!std::binary_search(cf.cells.begin(), cf.cells.end(), tup)) missing.push_back(tup);
            return;
        }
        int ncells = 2 * static_cast<int>(cf.breaks[d].size() - 1);
        for (int c = 0; c < ncells; ++c) {
            tup[d] = c;
            self(self, d + 1);
        }
    };
    rec(rec, 0);
    return FinDimSet(detail::emit_terms(cf.dims, cf.breaks, missing, /*runs=*/true));
}

bool is_empty(const FinDimSet& a) { return detail::table_empty(a.engine().table); }

bool is_unit(const FinDimSet& a) { return subset(FinDimSet::unit(), a); }

bool subset(const FinDimSet& a, const FinDimSet& b) {
    if (a.terms().empty()) return true;
    std::vector<ProductTerm> joint = a.terms();
    joint.insert(joint.end(), b.terms().begin(), b.terms().end());
    ContEngine e = detail::build_engine(joint);
    Mask amask, bmask;
    for (std::size_t i = 0; i < a.terms().size(); ++i) amask.set(i);
    for (std::size_t i = a.terms().size(); i < joint.size(); ++i) bmask.set(i);
    for (const Mask& m : detail::reachable_masks(e.table, static_cast<std::size_t>(-1)))
        if ((m & amask).any() && !(m & bmask).any()) return false;
    return true;
}

bool set_equal(const FinDimSet& a, const FinDimSet& b) { return subset(a, b) && subset(b, a); }

std::set<DimVar> dim_set(const FinDimSet& a) {
    const ContEngine& e = a.engine();
    std::set<DimVar> out;
    for (std::size_t di = 0; di < e.dims.size(); ++di) {
        for (const Mask& m : detail::reachable_masks(e.table, di)) {
            OneDimSet fiber = OneDimSet::empty_set();
            bool full = false;
            for (std::size_t t = m._Find_first(); t < kMaxTerms; t = m._Find_next(t)) {
                const OneDimSet* comp = (*e.terms)[t].component(e.dims[di]);
                if (!comp) {
                    full = true;
                    break;
                }
                fiber = unite(fiber, *comp);
                if (fiber.is_full()) {
                    full = true;
                    break;
                }
            }
            if (!full) {
                out.insert(e.dims[di]);
                break;
            }
        }
    }
    return out;
}

FinDimSet cylindrify(const FinDimSet& a, DimVar y) {
    std::vector<ProductTerm> out;
    for (const auto& term : a.terms()) {
        ProductTerm t;
        for (const auto& [d, comp] : term.components())
            if (d != y) t.set_component(d, comp);
        out.push_back(std::move(t));
    }
    return FinDimSet(std::move(out));
}

FinDimSet co_cylindrify(const FinDimSet& a, DimVar y) {
    return complement(cylindrify(complement(a), y));
}

FinDimSet substitute(const FinDimSet& a, DimVar from, DimVar to) {
    if (from == to) return a;
    if (dim_set(a).count(to))
        throw Error(Errc::target_dimension_occupied,
                    "substitution target dimension " + std::to_string(to) + " is free in the set");
    const FinDimSet* src = &a;
    FinDimSet cleaned;
    for (const auto& term : a.terms())
        if (term.component(to)) {
            // stray components at `to` union out to full; C_to removes them
            cleaned = cylindrify(a, to);
            src = &cleaned;
            break;
        }
    std::vector<ProductTerm> out;
    for (const auto& term : src->terms()) {
        ProductTerm t;
        for (const auto& [d, comp] : term.components()) t.set_component(d == from ? to : d, comp);
        out.push_back(std::move(t));
    }
    return FinDimSet(std::move(out));
}

FinDimSet disjointify(const FinDimSet& a) {
    const ContEngine& e = a.engine();
    auto tset = detail::included_tuples(e);
    std::vector<std::vector<int>> tuples(tset.begin(), tset.end());
    return FinDimSet(detail::emit_terms(e.dims, e.breaks, tuples, /*runs=*/false));
}

FinDimSet compacted(const FinDimSet& a) {
    const CanonForm& cf = a.canonical();
    return FinDimSet(detail::emit_terms(cf.dims, cf.breaks, cf.cells, /*runs=*/true));
}

}  // namespace cylproj
