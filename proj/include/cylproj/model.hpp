#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cylproj/measure.hpp"

namespace cylproj {

/// A parsed set-definition file: named continuous sets, an optional
/// discrete base with named discrete sets, and raw fiber profiles. Names
/// share one namespace; dimension names map to indices in first-use order.
struct ModelFile {
    std::optional<DiscreteBase> base;
    std::string base_name;
    std::map<std::string, FinDimSet> sets;
    std::map<std::string, DiscreteSet> dsets;
    std::map<std::string, FiberProfile> profiles;
    std::map<std::string, DimVar> dim_ids;
    std::vector<std::string> dim_names;  // index -> name

    std::string dim_name(DimVar d) const {
        return d < dim_names.size() ? dim_names[d] : "d" + std::to_string(d);
    }
    /// Dimension id for a declared name; UnknownName otherwise.
    DimVar dim(const std::string& name) const;
};

/// Parses model text. Grammar (one statement per line, # comments):
///
///   base NAME probs=[p/q, ...] tail=p/q
///   set NAME = EXPR        EXPR: atoms rect{ dim:COMP, ... } or set names,
///                          operators ! & | and parentheses
///   COMP: [lo,hi) | (lo,hi) | {p, ...} joined with |
///   dset NAME = DEXPR      DEXPR: atoms prod(dim:{i,...}|co{i,...}) or names
///   profile NAME = cells[(vol=p/q, q=p/q), ...]
///
/// Throws Error with 1-based line/column on diagnostics.
ModelFile parse_model(std::string_view text);

}  // namespace cylproj
