#include "cylproj/discrete.hpp"

#include <algorithm>

#include "cylproj/error.hpp"
#include "engine.hpp"

namespace cylproj {

using detail::DiscCanonForm;
using detail::DiscEngine;
using detail::kMaxTerms;
using detail::Mask;

AtomSet AtomSet::finite(std::set<std::uint32_t> members) {
    AtomSet s;
    s.cofinite_ = false;
    s.members_ = std::move(members);
    return s;
}

AtomSet AtomSet::cofinite(std::set<std::uint32_t> excluded) {
    AtomSet s;
    s.cofinite_ = true;
    s.members_ = std::move(excluded);
    return s;
}

bool AtomSet::contains(std::uint32_t atom) const {
    bool listed = members_.count(atom) != 0;
    return cofinite_ ? !listed : listed;
}

AtomSet unite(const AtomSet& a, const AtomSet& b) {
    std::set<std::uint32_t> m;
    if (!a.is_cofinite() && !b.is_cofinite()) {
        m = a.members();
        m.insert(b.members().begin(), b.members().end());
        return AtomSet::finite(std::move(m));
    }
    if (a.is_cofinite() && b.is_cofinite()) {
        std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                              b.members().end(), std::inserter(m, m.end()));
        return AtomSet::cofinite(std::move(m));
    }
    const AtomSet& cof = a.is_cofinite() ? a : b;
    const AtomSet& fin = a.is_cofinite() ? b : a;
    std::set_difference(cof.members().begin(), cof.members().end(), fin.members().begin(),
                        fin.members().end(), std::inserter(m, m.end()));
    return AtomSet::cofinite(std::move(m));
}

AtomSet intersect(const AtomSet& a, const AtomSet& b) {
    return complement(unite(complement(a), complement(b)));
}

AtomSet complement(const AtomSet& a) {
    return a.is_cofinite() ? AtomSet::finite(a.members()) : AtomSet::cofinite(a.members());
}

DiscreteBase::DiscreteBase(std::vector<Rat> named_probs, Rat tail_mass)
    : probs_(std::move(named_probs)), tail_(std::move(tail_mass)) {
    Rat total = tail_;
    for (const Rat& p : probs_) {
        if (p <= 0)
            throw Error(Errc::invalid_rational, "named atom probabilities must be positive");
        total += p;
    }
    if (tail_ < 0) throw Error(Errc::invalid_rational, "tail mass must be nonnegative");
    if (total != 1)
        throw Error(Errc::invalid_rational,
                    "atom probabilities plus tail mass must sum to 1 (got " + rat_string(total) +
                        ")");
}

Rat DiscreteBase::atom_prob(std::uint32_t atom) const {
    if (atom >= probs_.size())
        throw Error(Errc::unknown_atom, "atom index " + std::to_string(atom) +
                                            " is outside the named range (" +
                                            std::to_string(probs_.size()) + " atoms)");
    return probs_[atom];
}

Rat DiscreteBase::measure1(const AtomSet& s) const {
    Rat sum(0);
    for (std::uint32_t a : s.members()) sum += atom_prob(a);
    return s.is_cofinite() ? Rat(1) - sum : sum;
}

DiscreteSet::DiscreteSet() : DiscreteSet(std::vector<DiscreteTerm>{}) {}

DiscreteSet::DiscreteSet(std::vector<DiscreteTerm> terms) {
    auto impl = std::make_shared<detail::DsetImpl>();
    // normalize: drop full components, drop empty terms
    for (auto& t : terms) {
        bool alive = true;
        DiscreteTerm clean;
        for (auto& [d, s] : t) {
            if (s.is_full()) continue;
            if (s.is_empty()) {
                alive = false;
                break;
            }
            clean.emplace(d, std::move(s));
        }
        if (alive) impl->terms.push_back(std::move(clean));
    }
    impl_ = std::move(impl);
}

DiscreteSet::~DiscreteSet() = default;
DiscreteSet::DiscreteSet(const DiscreteSet&) = default;
DiscreteSet::DiscreteSet(DiscreteSet&&) noexcept = default;
DiscreteSet& DiscreteSet::operator=(const DiscreteSet&) = default;
DiscreteSet& DiscreteSet::operator=(DiscreteSet&&) noexcept = default;

DiscreteSet DiscreteSet::empty_set() { return DiscreteSet(); }

DiscreteSet DiscreteSet::unit() { return DiscreteSet({DiscreteTerm{}}); }

DiscreteSet DiscreteSet::box(const DiscreteTerm& components) {
    return DiscreteSet({components});
}

const std::vector<DiscreteTerm>& DiscreteSet::terms() const { return impl_->terms; }

bool DiscreteSet::contains(const std::map<DimVar, std::uint32_t>& point) const {
    for (const auto& term : impl_->terms) {
        bool ok = true;
        for (const auto& [d, comp] : term) {
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

const DiscEngine& DiscreteSet::engine() const {
    std::call_once(impl_->engine_once,
                   [this] { impl_->engine.emplace(detail::build_engine(impl_->terms)); });
    return *impl_->engine;
}

const DiscCanonForm& DiscreteSet::canonical() const {
    std::call_once(impl_->canon_once,
                   [this] { impl_->canon.emplace(detail::build_canonical(engine())); });
    return *impl_->canon;
}

namespace detail {

DiscEngine build_engine(const std::vector<DiscreteTerm>& terms) {
    if (terms.size() > kMaxTerms)
        throw Error(Errc::term_limit_exceeded,
                    "set has " + std::to_string(terms.size()) + " terms; the engine cap is " +
                        std::to_string(kMaxTerms));
    DiscEngine e;
    e.terms = &terms;
    std::map<DimVar, std::set<std::uint32_t>> mention;
    for (const auto& t : terms)
        for (const auto& [d, comp] : t)
            mention[d].insert(comp.members().begin(), comp.members().end());
    for (auto& [d, atoms] : mention) {
        e.dims.push_back(d);
        e.mentioned.emplace_back(atoms.begin(), atoms.end());
    }
    e.table.nterms = terms.size();
    for (std::size_t i = 0; i < terms.size(); ++i) e.table.all.set(i);
    e.table.cells.resize(e.dims.size());
    for (std::size_t di = 0; di < e.dims.size(); ++di)
        e.table.cells[di].assign(e.mentioned[di].size() + 1, Mask{});
    for (std::size_t ti = 0; ti < terms.size(); ++ti) {
        for (std::size_t di = 0; di < e.dims.size(); ++di) {
            auto it = terms[ti].find(e.dims[di]);
            auto& cells = e.table.cells[di];
            if (it == terms[ti].end()) {
                for (auto& m : cells) m.set(ti);
                continue;
            }
            const AtomSet& comp = it->second;
            for (std::size_t c = 0; c < e.mentioned[di].size(); ++c)
                if (comp.contains(e.mentioned[di][c])) cells[c].set(ti);
            if (comp.is_cofinite()) cells.back().set(ti);  // rest class
        }
    }
    return e;
}

std::set<std::vector<int>> included_tuples(const DiscEngine& e) {
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

DiscCanonForm build_canonical(const DiscEngine& e) {
    DiscCanonForm f;
    f.dims = e.dims;
    f.mentioned = e.mentioned;
    std::set<std::vector<int>> tset = included_tuples(e);
    for (std::size_t p = 0; p < f.dims.size();) {
        // rest-point -> classes present at p
        std::map<std::vector<int>, std::set<int>> rest;
        std::vector<int> key;
        for (const auto& tup : tset) {
            key.assign(tup.begin(), tup.end());
            key.erase(key.begin() + static_cast<long>(p));
            rest[key].insert(tup[p]);
        }
        const int rest_id = static_cast<int>(f.mentioned[p].size());
        std::vector<bool> keep(f.mentioned[p].size(), true);
        bool any_removed = false;
        for (std::size_t j = 0; j < f.mentioned[p].size(); ++j) {
            bool ok = true;
            for (const auto& [k, classes] : rest)
                if (classes.count(static_cast<int>(j)) != classes.count(rest_id)) {
                    ok = false;
                    break;
                }
            if (ok) {
                keep[j] = false;
                any_removed = true;
            }
        }
        if (any_removed) {
            std::vector<std::uint32_t> kept;
            std::vector<int> remap(f.mentioned[p].size() + 1);
            for (std::size_t j = 0; j < f.mentioned[p].size(); ++j)
                if (keep[j]) {
                    remap[j] = static_cast<int>(kept.size());
                    kept.push_back(f.mentioned[p][j]);
                }
            int new_rest = static_cast<int>(kept.size());
            for (std::size_t j = 0; j < f.mentioned[p].size(); ++j)
                if (!keep[j]) remap[j] = new_rest;
            remap[f.mentioned[p].size()] = new_rest;
            std::set<std::vector<int>> nt;
            for (auto tup : tset) {
                tup[p] = remap[tup[p]];
                nt.insert(std::move(tup));
            }
            tset = std::move(nt);
            f.mentioned[p] = std::move(kept);
        }
        if (f.mentioned[p].empty()) {
            f.dims.erase(f.dims.begin() + static_cast<long>(p));
            f.mentioned.erase(f.mentioned.begin() + static_cast<long>(p));
            std::set<std::vector<int>> nt;
            for (auto tup : tset) {
                tup.erase(tup.begin() + static_cast<long>(p));
                nt.insert(std::move(tup));
            }
            tset = std::move(nt);
            continue;
        }
        ++p;
    }
    f.cells.assign(tset.begin(), tset.end());
    return f;
}

std::vector<DiscreteTerm> emit_terms(const std::vector<DimVar>& dims,
                                     const std::vector<std::vector<std::uint32_t>>& mentioned,
                                     const std::vector<std::vector<int>>& tuples) {
    if (tuples.empty()) return {};
    if (dims.empty()) return {DiscreteTerm{}};
    // per dimension, group tuples equal elsewhere and merge their classes
    std::vector<std::vector<std::vector<int>>> work;
    work.reserve(tuples.size());
    for (const auto& tup : tuples) {
        std::vector<std::vector<int>> w;
        w.reserve(tup.size());
        for (int c : tup) w.push_back({c});
        work.push_back(std::move(w));
    }
    for (std::size_t d = 0; d < dims.size(); ++d) {
        std::map<std::vector<std::vector<int>>, std::set<int>> groups;
        std::vector<std::vector<int>> key;
        for (const auto& w : work) {
            key.assign(w.begin(), w.end());
            key.erase(key.begin() + static_cast<long>(d));
            groups[key].insert(w[d].begin(), w[d].end());
        }
        work.clear();
        for (const auto& [k, classes] : groups) {
            std::vector<std::vector<int>> tup(k);
            tup.insert(tup.begin() + static_cast<long>(d),
                       std::vector<int>(classes.begin(), classes.end()));
            work.push_back(std::move(tup));
        }
    }
    std::vector<DiscreteTerm> out;
    for (const auto& w : work) {
        DiscreteTerm t;
        for (std::size_t d = 0; d < dims.size(); ++d) {
            const int rest_id = static_cast<int>(mentioned[d].size());
            if (static_cast<int>(w[d].size()) == rest_id + 1) continue;  // all classes: full
            std::set<std::uint32_t> named;
            bool has_rest = false;
            for (int c : w[d]) {
                if (c == rest_id)
                    has_rest = true;
                else
                    named.insert(mentioned[d][c]);
            }
            AtomSet comp;
            if (has_rest) {
                std::set<std::uint32_t> excluded(mentioned[d].begin(), mentioned[d].end());
                for (std::uint32_t a : named) excluded.erase(a);
                comp = AtomSet::cofinite(std::move(excluded));
            } else {
                comp = AtomSet::finite(std::move(named));
            }
            t.emplace(dims[d], std::move(comp));
        }
        out.push_back(std::move(t));
    }
    return out;
}

Rat disc_measure(const DiscEngine& e, const DiscreteBase& base) {
    if (e.table.nterms == 0) return Rat(0);
    std::vector<std::vector<Rat>> weights(e.dims.size());
    for (std::size_t di = 0; di < e.dims.size(); ++di) {
        Rat rest(1);
        for (std::uint32_t a : e.mentioned[di]) {
            Rat p = base.atom_prob(a);
            weights[di].push_back(p);
            rest -= p;
        }
        weights[di].push_back(rest);
    }
    std::vector<std::unordered_map<Mask, Rat>> memo(e.dims.size());
    auto rec = [&](auto&& self, std::size_t level, const Mask& m) -> Rat {
        if (!m.any()) return Rat(0);
        if (level == e.dims.size()) return Rat(1);
        auto it = memo[level].find(m);
        if (it != memo[level].end()) return it->second;
        Rat sum(0);
        for (std::size_t c = 0; c < weights[level].size(); ++c) {
            if (weights[level][c] == 0) continue;
            Mask mm = m & e.table.cells[level][c];
            if (mm.any()) sum += weights[level][c] * self(self, level + 1, mm);
        }
        memo[level].emplace(m, sum);
        return sum;
    };
    return rec(rec, 0, e.table.all);
}

}  // namespace detail

DiscreteSet unite(const DiscreteSet& a, const DiscreteSet& b) {
    std::vector<DiscreteTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return DiscreteSet(std::move(terms));
}

DiscreteSet intersect(const DiscreteSet& a, const DiscreteSet& b) {
    std::vector<DiscreteTerm> out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            DiscreteTerm t = ta;
            bool alive = true;
            for (const auto& [d, comp] : tb) {
                auto it = t.find(d);
                AtomSet merged = (it != t.end()) ? intersect(it->second, comp) : comp;
                if (merged.is_empty()) {
                    alive = false;
                    break;
                }
                if (merged.is_full())
                    t.erase(d);
                else
                    t[d] = std::move(merged);
            }
            if (alive) out.push_back(std::move(t));
        }
    return DiscreteSet(std::move(out));
}

DiscreteSet complement(const DiscreteSet& a) {
    const DiscCanonForm& cf = a.canonical();
    std::size_t budget = 0;
    std::vector<std::vector<int>> missing;
    std::vector<int> tup(cf.dims.size());
    auto rec = [&](auto&& self, std::size_t d) -> void {
        if (d == cf.dims.size()) {
            detail::check_cell_budget(budget, 1);
            if (!std::binary_search(cf.cells.begin(), cf.cells.end(), tup)) missing.push_back(tup);
            return;
        }
        int ncells = static_cast<int>(cf.mentioned[d].size()) + 1;
        for (int c = 0; c < ncells; ++c) {
            tup[d] = c;
            self(self, d + 1);
        }
    };
    rec(rec, 0);
    return DiscreteSet(detail::emit_terms(cf.dims, cf.mentioned, missing));
}

bool is_empty(const DiscreteSet& a) { return detail::table_empty(a.engine().table); }

bool is_unit(const DiscreteSet& a) { return subset(DiscreteSet::unit(), a); }

bool subset(const DiscreteSet& a, const DiscreteSet& b) {
    if (a.terms().empty()) return true;
    std::vector<DiscreteTerm> joint = a.terms();
    joint.insert(joint.end(), b.terms().begin(), b.terms().end());
    DiscEngine e = detail::build_engine(joint);
    Mask amask, bmask;
    for (std::size_t i = 0; i < a.terms().size(); ++i) amask.set(i);
    for (std::size_t i = a.terms().size(); i < joint.size(); ++i) bmask.set(i);
    for (const Mask& m : detail::reachable_masks(e.table, static_cast<std::size_t>(-1)))
        if ((m & amask).any() && !(m & bmask).any()) return false;
    return true;
}

bool set_equal(const DiscreteSet& a, const DiscreteSet& b) { return subset(a, b) && subset(b, a); }

std::set<DimVar> dim_set(const DiscreteSet& a) {
    const DiscEngine& e = a.engine();
    std::set<DimVar> out;
    for (std::size_t di = 0; di < e.dims.size(); ++di) {
        for (const Mask& m : detail::reachable_masks(e.table, di)) {
            AtomSet fiber;
            bool full = false;
            for (std::size_t t = m._Find_first(); t < kMaxTerms; t = m._Find_next(t)) {
                auto it = (*e.terms)[t].find(e.dims[di]);
                if (it == (*e.terms)[t].end()) {
                    full = true;
                    break;
                }
                fiber = unite(fiber, it->second);
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

DiscreteSet cylindrify(const DiscreteSet& a, DimVar y) {
    std::vector<DiscreteTerm> out;
    for (const auto& term : a.terms()) {
        DiscreteTerm t = term;
        t.erase(y);
        out.push_back(std::move(t));
    }
    return DiscreteSet(std::move(out));
}

DiscreteSet co_cylindrify(const DiscreteSet& a, DimVar y) {
    return complement(cylindrify(complement(a), y));
}

DiscreteSet substitute(const DiscreteSet& a, DimVar from, DimVar to) {
    if (from == to) return a;
    if (dim_set(a).count(to))
        throw Error(Errc::target_dimension_occupied,
                    "substitution target dimension " + std::to_string(to) + " is free in the set");
    const DiscreteSet* src = &a;
    DiscreteSet cleaned;
    for (const auto& term : a.terms())
        if (term.count(to)) {
            cleaned = cylindrify(a, to);
            src = &cleaned;
            break;
        }
    std::vector<DiscreteTerm> out;
    for (const auto& term : src->terms()) {
        DiscreteTerm t;
        for (const auto& [d, comp] : term) t.emplace(d == from ? to : d, comp);
        out.push_back(std::move(t));
    }
    return DiscreteSet(std::move(out));
}

DiscreteSet compacted(const DiscreteSet& a) {
    const DiscCanonForm& cf = a.canonical();
    return DiscreteSet(detail::emit_terms(cf.dims, cf.mentioned, cf.cells));
}

}  // namespace cylproj
