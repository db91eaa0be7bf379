#include "engine.hpp"

#include "cylproj/error.hpp"

namespace cylproj::detail {

std::vector<Mask> reachable_masks(const MaskTable& t, std::size_t skip) {
    std::vector<std::size_t> levels;
    for (std::size_t d = 0; d < t.cells.size(); ++d)
        if (d != skip) levels.push_back(d);
    std::vector<std::unordered_set<Mask>> seen(levels.size() + 1);
    std::vector<Mask> out;
    auto rec = [&](auto&& self, std::size_t li, const Mask& m) -> void {
        if (!m.any()) return;
        if (!seen[li].insert(m).second) return;
        if (li == levels.size()) {
            out.push_back(m);
            return;
        }
        for (const Mask& cm : t.cells[levels[li]]) self(self, li + 1, m & cm);
    };
    rec(rec, 0, t.all);
    return out;
}

bool table_empty(const MaskTable& t) {
    return reachable_masks(t, static_cast<std::size_t>(-1)).empty();
}

void check_cell_budget(std::size_t& counter, std::size_t add) {
    counter += add;
    if (counter > max_cells())
        throw Error(Errc::cell_limit_exceeded,
                    "grid refinement exceeds the cell cap (" + std::to_string(max_cells()) +
                        "); raise CYLPROJ_MAX_CELLS or simplify the sets");
}

}  // namespace cylproj::detail
