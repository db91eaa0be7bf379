#pragma once

#include <optional>

#include "cylproj/measure.hpp"

namespace cylproj {

enum class FoldMode { unions, intersections };

/// The literal n-fold union/intersection of fresh-variable copies of `a`
/// along y, built purely from substitution and Boolean combination. Fresh
/// dimensions are chosen above every dimension the terms touch.
/// Throws BoundExceeded when n exceeds `bound`.
FinDimSet materialize_n_fold(const FinDimSet& a, DimVar y, unsigned long n, FoldMode mode,
                             unsigned long bound = 5);
DiscreteSet materialize_n_fold(const DiscreteSet& a, DimVar y, unsigned long n, FoldMode mode,
                               unsigned long bound = 5);

/// Measure by enumerating the open cells of the full per-dimension
/// breakpoint refinement and testing a midpoint of each; a code path
/// independent of the additive measure sweep.
MeasureValue grid_measure(const FinDimSet& a);

/// Discrete analogue: materializes the n-fold set and enumerates its atom
/// classes directly (named classes plus one lumped rest class per
/// dimension), summing weight products of contained class tuples.
MeasureValue truncation_measure_discrete(const DiscreteSet& a, const DiscreteBase& base, DimVar y,
                                         unsigned long n, FoldMode mode, unsigned long bound = 5);

struct OracleDiffRow {
    unsigned long n;
    Rat closed_form;
    Rat materialized;
    bool match;
    // discrete intersections: the sum of whole weighted fiber measures each
    // raised to n, the other reading of the discrete stage formula
    std::optional<Rat> literal_power_sum;
};

struct OracleDiffReport {
    DimVar dim = 0;
    std::vector<OracleDiffRow> union_rows;
    std::vector<OracleDiffRow> intersection_rows;
    bool all_match = true;
};

OracleDiffReport oracle_diff(const FinDimSet& a, DimVar y, unsigned long max_n,
                             unsigned long bound = 5);
OracleDiffReport oracle_diff(const DiscreteSet& a, DimVar y, const DiscreteBase& base,
                             unsigned long max_n, unsigned long bound = 5);

}  // namespace cylproj
