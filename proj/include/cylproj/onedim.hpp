#pragma once

#include <vector>

#include "cylproj/rational.hpp"

namespace cylproj {

/// A subset of [0,1) in canonical flagged-partition form: strictly
/// increasing rational breakpoints 0 = b0 < b1 < ... < bm = 1, one
/// membership flag per open interval (b_i, b_{i+1}) and one per breakpoint
/// b_i with b_i < 1. Canonical means no breakpoint is removable, so two
/// OneDimSets denote the same set iff they compare equal.
class OneDimSet {
public:
    OneDimSet();  // empty set

    /// From raw partition data; canonicalizes. Throws std::invalid_argument
    /// on malformed partitions.
    OneDimSet(std::vector<Rat> breakpoints, std::vector<bool> open_flags,
              std::vector<bool> point_flags);

    static OneDimSet empty_set();
    static OneDimSet full_set();                          // [0,1)
    static OneDimSet interval(const Rat& lo, const Rat& hi);  // [lo,hi), lo < hi
    static OneDimSet open_interval(const Rat& lo, const Rat& hi);  // (lo,hi)
    static OneDimSet point(const Rat& p);                 // {p}, 0 <= p < 1

    const std::vector<Rat>& breakpoints() const { return breaks_; }
    const std::vector<bool>& open_flags() const { return open_; }
    const std::vector<bool>& point_flags() const { return point_; }

    bool is_empty() const;
    bool is_full() const;
    bool contains(const Rat& x) const;  // pointwise membership, 0 <= x < 1
    Rat length() const;                 // sum of included open interval lengths

    bool operator==(const OneDimSet& other) const;
    bool operator!=(const OneDimSet& other) const { return !(*this == other); }

private:
    std::vector<Rat> breaks_;
    std::vector<bool> open_;   // size breaks_.size()-1
    std::vector<bool> point_;  // size breaks_.size()-1
    void canonicalize();
};

OneDimSet unite(const OneDimSet& a, const OneDimSet& b);
OneDimSet intersect(const OneDimSet& a, const OneDimSet& b);
OneDimSet complement(const OneDimSet& a);

/// Membership flags of `a` over the atomic cells of a refined breakpoint
/// grid (which must contain all breakpoints of `a`). Cell 2i is the point
/// grid[i]; cell 2i+1 is the open interval (grid[i], grid[i+1]).
std::vector<bool> cell_flags(const OneDimSet& a, const std::vector<Rat>& grid);

/// The set covered by cells [c_first, c_last] of a grid, as a OneDimSet.
OneDimSet cells_to_set(const std::vector<Rat>& grid, int c_first, int c_last);

}  // namespace cylproj
