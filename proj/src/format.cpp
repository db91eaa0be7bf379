#include "cylproj/format.hpp"

#include <sstream>

#include <json.hpp>

namespace cylproj {

using nlohmann::json;

namespace {

json rational_json(const Rat& r) {
    return json{{"num", r.get_num().get_str()},
                {"den", r.get_den().get_str()},
                {"decimal", rat_decimal(r)}};
}

json verdict_json(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "unknown";
}

json audit_value_json(const AuditValue& v) {
    switch (v.kind) {
        case AuditValue::Kind::rational: return rational_json(v.rat);
        case AuditValue::Kind::boolean: return v.flag;
        case AuditValue::Kind::text: return v.text;
    }
    return nullptr;
}

std::string audit_value_text(const AuditValue& v) {
    switch (v.kind) {
        case AuditValue::Kind::rational: return rat_string(v.rat);
        case AuditValue::Kind::boolean: return v.flag ? "true" : "false";
        case AuditValue::Kind::text: return v.text;
    }
    return "";
}

const char* verdict_text(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "unknown";
}

}  // namespace

DimNamer default_namer() {
    return [](DimVar d) { return "d" + std::to_string(d); };
}

std::string rat_display(const Rat& r) { return rat_string(r) + " (" + rat_decimal(r) + ")"; }

std::string render_measure(const MeasureValue& m, Format fmt) {
    switch (fmt) {
        case Format::table: return rat_display(m.exact) + "\n";
        case Format::csv: return rat_string(m.exact) + "\n";
        case Format::json: {
            json j{{"measure", rational_json(m.exact)}};
            return j.dump(2) + "\n";
        }
    }
    return "";
}

std::string component_expr(const OneDimSet& s) {
    const auto& br = s.breakpoints();
    std::size_t segs = br.size() - 1;
    // cell c: even 2i = point br[i], odd 2i+1 = open (br[i], br[i+1])
    auto included = [&](std::size_t c) {
        return c % 2 == 0 ? s.point_flags()[c / 2] : s.open_flags()[c / 2];
    };
    std::string out;
    std::size_t c = 0;
    const std::size_t ncells = 2 * segs;
    while (c < ncells) {
        if (!included(c)) {
            ++c;
            continue;
        }
        std::size_t last = c;
        while (last + 1 < ncells && included(last + 1)) ++last;
        if (!out.empty()) out += "|";
        if (c == last && c % 2 == 0) {
            out += "{" + rat_string(br[c / 2]) + "}";
        } else {
            // interval part up to the breakpoint after the last open cell
            std::size_t end_open = (last % 2 == 1) ? last : last - 1;
            out += (c % 2 == 0 ? "[" : "(");
            out += rat_string(br[c / 2]) + "," + rat_string(br[end_open / 2 + 1]) + ")";
            if (last % 2 == 0) out += "|{" + rat_string(br[last / 2]) + "}";
        }
        c = last + 1;
    }
    return out;
}

std::string component_expr(const AtomSet& s) {
    std::string out = s.is_cofinite() ? "co{" : "{";
    bool first = true;
    for (std::uint32_t a : s.members()) {
        if (!first) out += ",";
        out += std::to_string(a);
        first = false;
    }
    return out + "}";
}

std::string set_expr(const FinDimSet& a, const DimNamer& namer) {
    FinDimSet c = compacted(a);
    if (c.terms().empty()) return "!rect{}";
    std::string out;
    for (const auto& term : c.terms()) {
        if (!out.empty()) out += " | ";
        out += "rect{";
        bool first = true;
        for (const auto& [d, comp] : term.components()) {
            out += first ? " " : ", ";
            out += namer(d) + ":" + component_expr(comp);
            first = false;
        }
        out += first ? "}" : " }";
    }
    return out;
}

std::string set_expr(const DiscreteSet& a, const DimNamer& namer) {
    DiscreteSet c = compacted(a);
    if (c.terms().empty()) return "!prod()";
    std::string out;
    for (const auto& term : c.terms()) {
        if (!out.empty()) out += " | ";
        out += "prod(";
        bool first = true;
        for (const auto& [d, comp] : term) {
            if (!first) out += ", ";
            out += namer(d) + ":" + component_expr(comp);
            first = false;
        }
        out += ")";
    }
    return out;
}

namespace {

template <typename SetT>
std::string render_set_impl(const SetT& a, Format fmt, const DimNamer& namer) {
    bool empty = is_empty(a);
    std::string expr = set_expr(a, namer);
    switch (fmt) {
        case Format::table: return (empty ? std::string("∅") : expr) + "\n";
        case Format::csv: {
            std::string quoted = "\"";
            for (char ch : expr) {
                if (ch == '"') quoted += '"';
                quoted += ch;
            }
            return "expr\n" + quoted + "\"\n";
        }
        case Format::json: {
            json j{{"empty", empty}, {"expr", expr}};
            return j.dump(2) + "\n";
        }
    }
    return "";
}

}  // namespace

std::string render_set(const FinDimSet& a, Format fmt, const DimNamer& namer) {
    return render_set_impl(a, fmt, namer);
}

std::string render_set(const DiscreteSet& a, Format fmt, const DimNamer& namer) {
    return render_set_impl(a, fmt, namer);
}

std::string render_convergence(const ConvergenceReport& r, Format fmt, const DimNamer& namer,
                               bool discrete) {
    const char* ordinary_key = discrete ? "nu_C_y" : "lambda_C_y";
    switch (fmt) {
        case Format::table: {
            std::ostringstream out;
            out << "  n  union  intersection\n";
            for (const auto& row : r.rows)
                out << "  " << row.n << "  " << rat_display(row.union_value) << "  "
                    << rat_display(row.intersection_value) << "\n";
            out << "sup_limit = " << rat_display(r.sup_limit) << "\n";
            out << "inf_limit = " << rat_display(r.inf_limit) << "\n";
            out << ordinary_key << " = "
                << (r.ordinary ? rat_display(*r.ordinary) : "unavailable") << "\n";
            out << "continuity = "
                << (r.continuity_holds ? (*r.continuity_holds ? "true" : "false") : "unavailable")
                << "\n";
            return out.str();
        }
        case Format::csv: {
            std::ostringstream out;
            out << "n,union,intersection\n";
            for (const auto& row : r.rows)
                out << row.n << "," << rat_string(row.union_value) << ","
                    << rat_string(row.intersection_value) << "\n";
            out << "sup_limit=" << rat_string(r.sup_limit)
                << ", inf_limit=" << rat_string(r.inf_limit) << ", " << ordinary_key << "="
                << (r.ordinary ? rat_string(*r.ordinary) : "unavailable") << ", continuity="
                << (r.continuity_holds ? (*r.continuity_holds ? "true" : "false") : "unavailable")
                << "\n";
            return out.str();
        }
        case Format::json: {
            json rows = json::array();
            for (const auto& row : r.rows)
                rows.push_back(json{{"n", row.n},
                                    {"union", rational_json(row.union_value)},
                                    {"intersection", rational_json(row.intersection_value)}});
            json j{{"rows", rows},
                   {"sup_limit", rational_json(r.sup_limit)},
                   {"inf_limit", rational_json(r.inf_limit)}};
            j["dim"] = r.dim ? json(namer(*r.dim)) : json(nullptr);
            j["ordinary_projection"] = r.ordinary ? rational_json(*r.ordinary) : json(nullptr);
            j["continuity"] = r.continuity_holds ? json(*r.continuity_holds) : json(nullptr);
            return j.dump(2) + "\n";
        }
    }
    return "";
}

std::string render_audit(const AuditReport& r, Format fmt, const DimNamer& namer) {
    std::string witness;
    if (r.witness_set) witness = set_expr(*r.witness_set, namer);
    if (r.witness_dset) witness = set_expr(*r.witness_dset, namer);
    switch (fmt) {
        case Format::table: {
            std::ostringstream out;
            out << "audit: " << r.subject << "\n";
            for (const auto& v : r.hypotheses)
                out << "  hypothesis " << v.name << " = " << audit_value_text(v) << "\n";
            for (const auto& v : r.conclusions)
                out << "  conclusion " << v.name << " = " << audit_value_text(v) << "\n";
            out << "verdict: " << verdict_text(r.verdict) << "\n";
            if (!witness.empty()) out << "witness: " << witness << "\n";
            return out.str();
        }
        case Format::csv: {
            std::ostringstream out;
            out << "section,name,value\n";
            out << "audit,subject," << r.subject << "\n";
            for (const auto& v : r.hypotheses)
                out << "hypothesis," << v.name << "," << audit_value_text(v) << "\n";
            for (const auto& v : r.conclusions)
                out << "conclusion," << v.name << "," << audit_value_text(v) << "\n";
            out << "audit,verdict," << verdict_text(r.verdict) << "\n";
            if (!witness.empty()) out << "audit,witness,\"" << witness << "\"\n";
            return out.str();
        }
        case Format::json: {
            json hyp = json::object(), con = json::object();
            for (const auto& v : r.hypotheses) hyp[v.name] = audit_value_json(v);
            for (const auto& v : r.conclusions) con[v.name] = audit_value_json(v);
            json j{{"subject", r.subject},
                   {"hypotheses", hyp},
                   {"conclusions", con},
                   {"verdict", verdict_json(r.verdict)}};
            j["witness"] = witness.empty() ? json(nullptr) : json(witness);
            return j.dump(2) + "\n";
        }
    }
    return "";
}

std::string render_oracle_diff(const OracleDiffReport& r, Format fmt) {
    auto row_fields = [](const OracleDiffRow& row) {
        return std::make_tuple(rat_string(row.closed_form), rat_string(row.materialized),
                               row.match);
    };
    switch (fmt) {
        case Format::table: {
            std::ostringstream out;
            out << "  mode  n  closed_form  materialized  match\n";
            for (const auto& row : r.union_rows) {
                auto [cf, mt, ok] = row_fields(row);
                out << "  union  " << row.n << "  " << cf << "  " << mt << "  "
                    << (ok ? "yes" : "NO") << "\n";
            }
            for (const auto& row : r.intersection_rows) {
                auto [cf, mt, ok] = row_fields(row);
                out << "  intersection  " << row.n << "  " << cf << "  " << mt << "  "
                    << (ok ? "yes" : "NO");
                if (row.literal_power_sum)
                    out << "  (literal power-sum reading: " << rat_string(*row.literal_power_sum)
                        << ")";
                out << "\n";
            }
            out << "all_match = " << (r.all_match ? "true" : "false") << "\n";
            return out.str();
        }
        case Format::csv: {
            std::ostringstream out;
            out << "mode,n,closed_form,materialized,match,literal_power_sum\n";
            for (const auto& row : r.union_rows) {
                auto [cf, mt, ok] = row_fields(row);
                out << "union," << row.n << "," << cf << "," << mt << ","
                    << (ok ? "true" : "false") << ",\n";
            }
            for (const auto& row : r.intersection_rows) {
                auto [cf, mt, ok] = row_fields(row);
                out << "intersection," << row.n << "," << cf << "," << mt << ","
                    << (ok ? "true" : "false") << ","
                    << (row.literal_power_sum ? rat_string(*row.literal_power_sum) : "") << "\n";
            }
            out << "all_match=" << (r.all_match ? "true" : "false") << "\n";
            return out.str();
        }
        case Format::json: {
            auto rows_json = [&](const std::vector<OracleDiffRow>& rows) {
                json arr = json::array();
                for (const auto& row : rows) {
                    json j{{"n", row.n},
                           {"closed_form", rational_json(row.closed_form)},
                           {"materialized", rational_json(row.materialized)},
                           {"match", row.match}};
                    j["literal_power_sum"] =
                        row.literal_power_sum ? rational_json(*row.literal_power_sum) : json(nullptr);
                    arr.push_back(std::move(j));
                }
                return arr;
            };
            json j{{"unions", rows_json(r.union_rows)},
                   {"intersections", rows_json(r.intersection_rows)},
                   {"all_match", r.all_match}};
            return j.dump(2) + "\n";
        }
    }
    return "";
}

}  // namespace cylproj
