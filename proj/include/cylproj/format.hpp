#pragma once

#include <functional>
#include <string>

#include "cylproj/oracle.hpp"
#include "cylproj/projection.hpp"

namespace cylproj {

enum class Format { table, csv, json };

/// Maps dimension ids to display names (model files provide symbolic names).
using DimNamer = std::function<std::string(DimVar)>;

DimNamer default_namer();  // d0, d1, ...

/// "1/2 (0.5)" style display value.
std::string rat_display(const Rat& r);

std::string render_measure(const MeasureValue& m, Format fmt);

/// Component syntax of the model grammar: "[0,1/2)|{2/3}".
std::string component_expr(const OneDimSet& s);
std::string component_expr(const AtomSet& s);

/// Re-parseable model expression for a set (its compacted form).
std::string set_expr(const FinDimSet& a, const DimNamer& namer);
std::string set_expr(const DiscreteSet& a, const DimNamer& namer);

std::string render_set(const FinDimSet& a, Format fmt, const DimNamer& namer);
std::string render_set(const DiscreteSet& a, Format fmt, const DimNamer& namer);

std::string render_convergence(const ConvergenceReport& r, Format fmt, const DimNamer& namer,
                               bool discrete);
std::string render_audit(const AuditReport& r, Format fmt, const DimNamer& namer);
std::string render_oracle_diff(const OracleDiffReport& r, Format fmt);

}  // namespace cylproj
