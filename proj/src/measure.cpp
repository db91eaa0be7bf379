#include "cylproj/measure.hpp"

#include <map>

#include "cylproj/error.hpp"
#include "engine.hpp"

namespace cylproj {

using detail::Mask;

MeasureValue lebesgue_measure(const FinDimSet& a) { return {detail::cont_measure(a.engine())}; }

MeasureValue discrete_measure(const DiscreteSet& a, const DiscreteBase& base) {
    return {detail::disc_measure(a.engine(), base)};
}

void FiberProfile::finish() {
    Rat total(0);
    std::map<Rat, Rat> agg;
    for (const auto& c : cells) {
        if (c.q < 0 || c.q > 1)
            throw Error(Errc::invalid_rational, "fiber measure q must lie in [0,1]");
        if (c.volume < 0)
            throw Error(Errc::invalid_rational, "cell volume must be nonnegative");
        total += c.volume;
        if (c.volume != 0) agg[c.q] += c.volume;
    }
    if (total != 1)
        throw Error(Errc::invalid_rational,
                    "profile cell volumes must sum to 1 (got " + rat_string(total) + ")");
    qdist_.assign(agg.begin(), agg.end());
}

namespace {

// Shared cell sweep for both profile builders. Enumerates the parameter
// grid, threading term masks and volumes; fiber measures are memoized per
// final mask.
template <typename Engine, typename FiberMeasure>
void build_profile_cells(const Engine& e, std::size_t ypos, bool have_y,
                         const std::vector<std::vector<Rat>>& cell_volumes,
                         FiberMeasure&& fiber_q, FiberProfile& out) {
    std::vector<std::size_t> levels;
    for (std::size_t d = 0; d < e.dims.size(); ++d)
        if (!have_y || d != ypos) levels.push_back(d);
    std::unordered_map<Mask, Rat> qmemo;
    auto q_of = [&](const Mask& m) -> const Rat& {
        auto it = qmemo.find(m);
        if (it == qmemo.end()) it = qmemo.emplace(m, fiber_q(m)).first;
        return it->second;
    };
    std::size_t budget = 0;
    std::vector<int> tup(levels.size());
    auto rec = [&](auto&& self, std::size_t li, const Mask& m, const Rat& vol) -> void {
        if (li == levels.size()) {
            detail::check_cell_budget(budget, 1);
            out.cells.push_back({tup, vol, q_of(m)});
            return;
        }
        std::size_t d = levels[li];
        for (std::size_t c = 0; c < e.table.cells[d].size(); ++c) {
            tup[li] = static_cast<int>(c);
            self(self, li + 1, m & e.table.cells[d][c], vol * cell_volumes[d][c]);
        }
    };
    rec(rec, 0, e.table.all, Rat(1));
}

}  // namespace

FiberProfile fiber_profile(const FinDimSet& a, DimVar y) {
    const auto& e = a.engine();
    FiberProfile p;
    p.kind = FiberProfile::Kind::continuous;
    p.projection_dim = y;
    p.degenerate = dim_set(a).count(y) == 0;
    std::size_t ypos = 0;
    bool have_y = false;
    for (std::size_t d = 0; d < e.dims.size(); ++d)
        if (e.dims[d] == y) {
            ypos = d;
            have_y = true;
        } else {
            p.zdims.push_back(e.dims[d]);
            p.zbreaks.push_back(e.breaks[d]);
        }
    std::vector<std::vector<Rat>> vols(e.dims.size());
    for (std::size_t d = 0; d < e.dims.size(); ++d) {
        const auto& br = e.breaks[d];
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            vols[d].push_back(Rat(0));  // point cell
            vols[d].push_back(br[i + 1] - br[i]);
        }
    }
    auto fiber_q = [&](const Mask& m) -> Rat {
        if (!m.any()) return Rat(0);
        if (!have_y) return Rat(1);  // nonempty cell of a cylinder over y
        OneDimSet fiber = OneDimSet::empty_set();
        for (std::size_t t = m._Find_first(); t < detail::kMaxTerms; t = m._Find_next(t)) {
            const OneDimSet* comp = (*e.terms)[t].component(y);
            if (!comp) return Rat(1);
            fiber = unite(fiber, *comp);
            if (fiber.is_full()) return Rat(1);
        }
        return fiber.length();
    };
    build_profile_cells(e, ypos, have_y, vols, fiber_q, p);
    p.finish();
    return p;
}

FiberProfile fiber_profile(const DiscreteSet& a, DimVar y, const DiscreteBase& base) {
    const auto& e = a.engine();
    FiberProfile p;
    p.kind = FiberProfile::Kind::discrete;
    p.projection_dim = y;
    p.degenerate = dim_set(a).count(y) == 0;
    std::size_t ypos = 0;
    bool have_y = false;
    for (std::size_t d = 0; d < e.dims.size(); ++d)
        if (e.dims[d] == y) {
            ypos = d;
            have_y = true;
        } else {
            p.zdims.push_back(e.dims[d]);
            p.zmentioned.push_back(e.mentioned[d]);
        }
    std::vector<std::vector<Rat>> vols(e.dims.size());
    for (std::size_t d = 0; d < e.dims.size(); ++d) {
        Rat rest(1);
        for (std::uint32_t atom : e.mentioned[d]) {
            Rat pr = base.atom_prob(atom);
            vols[d].push_back(pr);
            rest -= pr;
        }
        vols[d].push_back(rest);
    }
    auto fiber_q = [&](const Mask& m) -> Rat {
        if (!m.any()) return Rat(0);
        if (!have_y) return Rat(1);
        AtomSet fiber;
        for (std::size_t t = m._Find_first(); t < detail::kMaxTerms; t = m._Find_next(t)) {
            auto it = (*e.terms)[t].find(y);
            if (it == (*e.terms)[t].end()) return Rat(1);
            fiber = unite(fiber, it->second);
            if (fiber.is_full()) return Rat(1);
        }
        return base.measure1(fiber);
    };
    build_profile_cells(e, ypos, have_y, vols, fiber_q, p);
    p.finish();
    return p;
}

FiberProfile raw_profile(const std::vector<std::pair<Rat, Rat>>& vol_q) {
    FiberProfile p;
    p.kind = FiberProfile::Kind::raw;
    for (const auto& [vol, q] : vol_q) p.cells.push_back({{}, vol, q});
    p.finish();
    return p;
}

MeasureValue n_fold_intersection_measure(const FiberProfile& p, unsigned long n) {
    if (n < 1) throw Error(Errc::bound_exceeded, "n must be at least 1");
    Rat sum(0);
    for (const auto& [q, vol] : p.q_dist()) sum += vol * rat_pow(q, n);
    return {sum};
}

MeasureValue n_fold_union_measure(const FiberProfile& p, unsigned long n) {
    if (n < 1) throw Error(Errc::bound_exceeded, "n must be at least 1");
    Rat sum(0);
    for (const auto& [q, vol] : p.q_dist()) sum += vol * rat_pow(Rat(1) - q, n);
    return {Rat(1) - sum};
}

ProfileLimits profile_limits(const FiberProfile& p) {
    Rat sup(0), inf(0);
    for (const auto& [q, vol] : p.q_dist()) {
        if (q > 0) sup += vol;
        if (q == 1) inf += vol;
    }
    return {{sup}, {inf}};
}

Rat gap_bound_at(const FiberProfile& p, unsigned long n) {
    Rat sum(0);
    for (const auto& [q, vol] : p.q_dist()) {
        if (q == 0 || q == 1) continue;
        Rat other = Rat(1) - q;
        sum += vol * rat_pow(q > other ? q : other, n);
    }
    return sum;
}

}  // namespace cylproj
