// Internal sweep machinery shared by the set/measure/projection code.
// Each set gets a lazily built "engine": per dimension, the refined list of
// atomic cells (points and open intervals, or atom classes) together with a
// bitmask of the terms containing each cell. Emptiness, measure, dimension
// sets and fiber data are all computed by memoized sweeps over these masks,
// which keeps costs proportional to the distinct term combinations instead
// of the full product grid.
#pragma once

#include <bitset>
#include <cstddef>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cylproj/discrete.hpp"
#include "cylproj/findim.hpp"

namespace cylproj::detail {

inline constexpr std::size_t kMaxTerms = 2048;
using Mask = std::bitset<kMaxTerms>;

struct MaskTable {
    // cells[d][c] has bit t set iff term t contains cell c of dimension d
    std::vector<std::vector<Mask>> cells;
    std::size_t nterms = 0;
    Mask all;  // bits [0, nterms)
};

/// Distinct nonzero term masks realized by some cell tuple, optionally
/// skipping one dimension (skip == npos for none).
std::vector<Mask> reachable_masks(const MaskTable& t, std::size_t skip);

bool table_empty(const MaskTable& t);

// --- continuous ---

struct ContEngine {
    const std::vector<ProductTerm>* terms = nullptr;
    std::vector<DimVar> dims;              // sorted; dims appearing in any term
    std::vector<std::vector<Rat>> breaks;  // per dim, refined 0..1
    MaskTable table;
};

ContEngine build_engine(const std::vector<ProductTerm>& terms);

struct CanonForm {
    std::vector<DimVar> dims;
    std::vector<std::vector<Rat>> breaks;
    std::vector<std::vector<int>> cells;  // sorted tuples of cell ids
    bool operator==(const CanonForm& o) const {
        return dims == o.dims && breaks == o.breaks && cells == o.cells;
    }
};

CanonForm build_canonical(const ContEngine& e);

/// All cell tuples covered by some term, over the engine's refined grids.
std::set<std::vector<int>> included_tuples(const ContEngine& e);

/// Rebuilds product terms from cell tuples. With `runs` set, maximal runs of
/// adjacent cells merge per dimension; otherwise only point/open pairs of
/// the same slot merge (atomic half-open cells).
std::vector<ProductTerm> emit_terms(const std::vector<DimVar>& dims,
                                    const std::vector<std::vector<Rat>>& breaks,
                                    const std::vector<std::vector<int>>& tuples, bool runs);

struct FdsImpl {
    std::vector<ProductTerm> terms;
    mutable std::once_flag engine_once, canon_once;
    mutable std::optional<ContEngine> engine;
    mutable std::optional<CanonForm> canon;
};

Rat cont_measure(const ContEngine& e);

// --- discrete ---

struct DiscEngine {
    const std::vector<DiscreteTerm>* terms = nullptr;
    std::vector<DimVar> dims;
    std::vector<std::vector<std::uint32_t>> mentioned;  // per dim, sorted atoms;
                                                        // class k = |mentioned| is the rest class
    MaskTable table;
};

DiscEngine build_engine(const std::vector<DiscreteTerm>& terms);

struct DiscCanonForm {
    std::vector<DimVar> dims;
    std::vector<std::vector<std::uint32_t>> mentioned;
    std::vector<std::vector<int>> cells;
};

DiscCanonForm build_canonical(const DiscEngine& e);

std::set<std::vector<int>> included_tuples(const DiscEngine& e);

std::vector<DiscreteTerm> emit_terms(const std::vector<DimVar>& dims,
                                     const std::vector<std::vector<std::uint32_t>>& mentioned,
                                     const std::vector<std::vector<int>>& tuples);

struct DsetImpl {
    std::vector<DiscreteTerm> terms;
    mutable std::once_flag engine_once, canon_once;
    mutable std::optional<DiscEngine> engine;
    mutable std::optional<DiscCanonForm> canon;
};

Rat disc_measure(const DiscEngine& e, const DiscreteBase& base);

// shared guard
void check_cell_budget(std::size_t& counter, std::size_t add);

}  // namespace cylproj::detail
