#include "cylproj/cylproj.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "cylproj/error.hpp"
#include "cylproj/format.hpp"
#include "cylproj/model.hpp"

using namespace cylproj;

struct cylproj_model {
    ModelFile file;
};

namespace {

thread_local std::string g_last_error;

cylproj_status status_of(const Error& e) {
    switch (e.code) {
        case Errc::syntax_error:
        case Errc::invalid_rational:
        case Errc::duplicate_name: return CYLPROJ_PARSE_ERROR;
        case Errc::unknown_name: return CYLPROJ_UNKNOWN_NAME;
        case Errc::target_dimension_occupied:
        case Errc::unknown_atom: return CYLPROJ_BAD_ARGUMENT;
        case Errc::unsupported: return CYLPROJ_UNSUPPORTED;
        case Errc::bound_exceeded:
        case Errc::cell_limit_exceeded:
        case Errc::term_limit_exceeded: return CYLPROJ_LIMIT_EXCEEDED;
    }
    return CYLPROJ_INTERNAL_ERROR;
}

template <typename Fn>
cylproj_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = std::string(errc_name(e.code)) + ": " + e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CYLPROJ_INTERNAL_ERROR;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Format to_format(cylproj_format fmt) {
    switch (fmt) {
        case CYLPROJ_FORMAT_CSV: return Format::csv;
        case CYLPROJ_FORMAT_JSON: return Format::json;
        default: return Format::table;
    }
}

DimNamer namer_of(const ModelFile& m) {
    return [&m](DimVar d) { return m.dim_name(d); };
}

const DiscreteBase& require_base(const ModelFile& m) {
    if (!m.base)
        throw Error(Errc::unsupported, "the model defines no discrete base");
    return *m.base;
}

enum class EntryKind { set, dset, profile };

EntryKind find_entry(const ModelFile& m, const char* name) {
    if (!name) throw Error(Errc::unknown_name, "missing name");
    if (m.sets.count(name)) return EntryKind::set;
    if (m.dsets.count(name)) return EntryKind::dset;
    if (m.profiles.count(name)) return EntryKind::profile;
    throw Error(Errc::unknown_name, "no set, dset or profile named '" + std::string(name) + "'");
}

DimVar require_dim(const ModelFile& m, const char* dim) {
    if (!dim) throw Error(Errc::unknown_name, "a --dim value is required for this input");
    return m.dim(dim);
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::holds: return CYLPROJ_VERDICT_HOLDS;
        case Verdict::fails: return CYLPROJ_VERDICT_FAILS;
        case Verdict::hypothesis_not_met: return CYLPROJ_VERDICT_HYPOTHESIS_NOT_MET;
    }
    return CYLPROJ_VERDICT_NOT_APPLICABLE;
}

}  // namespace

extern "C" {

const char* cylproj_version(void) { return "1.0.0"; }

const char* cylproj_last_error(void) { return g_last_error.c_str(); }

cylproj_status cylproj_model_parse(const char* text, cylproj_model** out) {
    return guarded([&]() -> cylproj_status {
        if (!text || !out) throw Error(Errc::unsupported, "null argument");
        auto model = std::make_unique<cylproj_model>();
        model->file = parse_model(text);
        *out = model.release();
        return CYLPROJ_OK;
    });
}

cylproj_status cylproj_model_parse_file(const char* path, cylproj_model** out) {
    return guarded([&]() -> cylproj_status {
        if (!path || !out) throw Error(Errc::unsupported, "null argument");
        std::ifstream in(path);
        if (!in) throw Error(Errc::unsupported, "cannot open model file '" + std::string(path) + "'");
        std::ostringstream text;
        text << in.rdbuf();
        auto model = std::make_unique<cylproj_model>();
        model->file = parse_model(text.str());
        *out = model.release();
        return CYLPROJ_OK;
    });
}

void cylproj_model_free(cylproj_model* model) { delete model; }

void cylproj_string_free(char* s) { std::free(s); }

cylproj_status cylproj_measure(const cylproj_model* model, const char* name, cylproj_format fmt,
                               char** out) {
    return guarded([&]() -> cylproj_status {
        const ModelFile& m = model->file;
        MeasureValue v;
        switch (find_entry(m, name)) {
            case EntryKind::set: v = lebesgue_measure(m.sets.at(name)); break;
            case EntryKind::dset: v = discrete_measure(m.dsets.at(name), require_base(m)); break;
            case EntryKind::profile:
                throw Error(Errc::unsupported,
                            "profiles support converge only (limit and strong-measure queries)");
        }
        *out = dup_string(render_measure(v, to_format(fmt)));
        return CYLPROJ_OK;
    });
}

cylproj_status cylproj_project(const cylproj_model* model, const char* name, const char* dim,
                               int strong, int dual, cylproj_format fmt, char** out) {
    return guarded([&]() -> cylproj_status {
        const ModelFile& m = model->file;
        DimVar y = require_dim(m, dim);
        std::string rendered;
        switch (find_entry(m, name)) {
            case EntryKind::set: {
                const FinDimSet& a = m.sets.at(name);
                FinDimSet r = strong ? (dual ? strong_co_project(a, y) : strong_project(a, y))
                                     : (dual ? co_cylindrify(a, y) : cylindrify(a, y));
                rendered = render_set(compacted(r), to_format(fmt), namer_of(m));
                break;
            }
            case EntryKind::dset: {
                const DiscreteSet& a = m.dsets.at(name);
                DiscreteSet r =
                    strong ? (dual ? strong_co_project(a, y, require_base(m))
                                   : strong_project(a, y, require_base(m)))
                           : (dual ? co_cylindrify(a, y) : cylindrify(a, y));
                rendered = render_set(compacted(r), to_format(fmt), namer_of(m));
                break;
            }
            case EntryKind::profile:
                throw Error(Errc::unsupported,
                            "ordinary and strong projections need a set; profiles carry no "
                            "reassembly data");
        }
        *out = dup_string(rendered);
        return CYLPROJ_OK;
    });
}

cylproj_status cylproj_converge(const cylproj_model* model, const char* name, const char* dim,
                                unsigned long max_n, cylproj_format fmt, char** out,
                                int* verdict) {
    return guarded([&]() -> cylproj_status {
        const ModelFile& m = model->file;
        ConvergenceReport r;
        bool discrete = false;
        switch (find_entry(m, name)) {
            case EntryKind::set:
                r = convergence_table(m.sets.at(name), require_dim(m, dim), max_n);
                break;
            case EntryKind::dset:
                r = convergence_table(m.dsets.at(name), require_dim(m, dim), require_base(m),
                                      max_n);
                discrete = true;
                break;
            case EntryKind::profile:
                r = convergence_table(m.profiles.at(name), max_n);
                break;
        }
        if (verdict)
            *verdict = r.continuity_holds
                           ? (*r.continuity_holds ? CYLPROJ_VERDICT_HOLDS : CYLPROJ_VERDICT_FAILS)
                           : CYLPROJ_VERDICT_NOT_APPLICABLE;
        *out = dup_string(render_convergence(r, to_format(fmt), namer_of(m), discrete));
        return CYLPROJ_OK;
    });
}

cylproj_status cylproj_check_continuity(const cylproj_model* model, const char* name,
                                        const char* dim, cylproj_format fmt, char** out,
                                        int* verdict) {
    return guarded([&]() -> cylproj_status {
        const ModelFile& m = model->file;
        AuditReport r;
        switch (find_entry(m, name)) {
            case EntryKind::set:
                r = continuity_check(m.sets.at(name), require_dim(m, dim));
                break;
            case EntryKind::dset:
                r = continuity_check(m.dsets.at(name), require_dim(m, dim), require_base(m));
                break;
            case EntryKind::profile:
                throw Error(Errc::unsupported,
                            "continuity verdicts need the ordinary projection, which profiles "
                            "do not carry");
        }
        if (verdict) *verdict = verdict_code(r.verdict);
        *out = dup_string(render_audit(r, to_format(fmt), namer_of(m)));
        return CYLPROJ_OK;
    });
}

cylproj_status cylproj_audit(const cylproj_model* model, const char* name, const char* kind,
                             const char* dim, cylproj_format fmt, char** out, int* verdict) {
    return guarded([&]() -> cylproj_status {
        const ModelFile& m = model->file;
        std::string k = kind ? kind : "";
        if (k != "lemma1" && k != "thm4")
            throw Error(Errc::unsupported, "audit kind must be lemma1 or thm4");
        AuditReport r;
        switch (find_entry(m, name)) {
            case EntryKind::set: {
                DimVar y = require_dim(m, dim);
                r = (k == "lemma1") ? lemma1_audit(m.sets.at(name), y)
                                    : theorem4_audit(m.sets.at(name), y);
                break;
            }
            case EntryKind::dset: {
                DimVar y = require_dim(m, dim);
                r = (k == "lemma1") ? lemma1_audit(m.dsets.at(name), y, require_base(m))
                                    : theorem4_audit(m.dsets.at(name), y, require_base(m));
                break;
            }
            case EntryKind::profile:
                throw Error(Errc::unsupported, "audits need a set or dset");
        }
        if (verdict) *verdict = verdict_code(r.verdict);
        *out = dup_string(render_audit(r, to_format(fmt), namer_of(m)));
        return CYLPROJ_OK;
    });
}

cylproj_status cylproj_oracle_diff(const cylproj_model* model, const char* name, const char* dim,
                                   unsigned long max_n, unsigned long bound, cylproj_format fmt,
                                   char** out, int* verdict) {
    return guarded([&]() -> cylproj_status {
        const ModelFile& m = model->file;
        OracleDiffReport r;
        switch (find_entry(m, name)) {
            case EntryKind::set:
                r = oracle_diff(m.sets.at(name), require_dim(m, dim), max_n, bound);
                break;
            case EntryKind::dset:
                r = oracle_diff(m.dsets.at(name), require_dim(m, dim), require_base(m), max_n,
                                bound);
                break;
            case EntryKind::profile:
                throw Error(Errc::unsupported, "oracle-diff needs a set or dset");
        }
        if (verdict) *verdict = r.all_match ? 1 : 0;
        *out = dup_string(render_oracle_diff(r, to_format(fmt)));
        return CYLPROJ_OK;
    });
}

}  // extern "C"
