/* C API for the cylproj library: parse a set-definition model, then run
 * measurements, projections, convergence tables and theorem audits against
 * it. Handles are opaque; results come back as freshly allocated strings in
 * the requested format. Every function returns a status code; on failure
 * cylproj_last_error() describes the problem (thread-local). */
#ifndef CYLPROJ_H
#define CYLPROJ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cylproj_model cylproj_model;

typedef enum {
    CYLPROJ_OK = 0,
    CYLPROJ_PARSE_ERROR = 1,
    CYLPROJ_UNKNOWN_NAME = 2,
    CYLPROJ_BAD_ARGUMENT = 3,
    CYLPROJ_UNSUPPORTED = 4,
    CYLPROJ_LIMIT_EXCEEDED = 5,
    CYLPROJ_INTERNAL_ERROR = 6
} cylproj_status;

typedef enum {
    CYLPROJ_FORMAT_TABLE = 0,
    CYLPROJ_FORMAT_CSV = 1,
    CYLPROJ_FORMAT_JSON = 2
} cylproj_format;

/* Verdict values reported by converge/check-continuity/audit calls. */
#define CYLPROJ_VERDICT_FAILS 0
#define CYLPROJ_VERDICT_HOLDS 1
#define CYLPROJ_VERDICT_HYPOTHESIS_NOT_MET 2
#define CYLPROJ_VERDICT_NOT_APPLICABLE (-1)

const char* cylproj_version(void);

/* Message for the most recent failure on this thread. */
const char* cylproj_last_error(void);

cylproj_status cylproj_model_parse(const char* text, cylproj_model** out);
cylproj_status cylproj_model_parse_file(const char* path, cylproj_model** out);
void cylproj_model_free(cylproj_model* model);

/* Frees strings returned through the char** out-parameters below. */
void cylproj_string_free(char* s);

/* Exact measure of a named set or dset. */
cylproj_status cylproj_measure(const cylproj_model* model, const char* name, cylproj_format fmt,
                               char** out);

/* Projection of a named set along a dimension: ordinary cylinder by
 * default, strong/dual variants by flag. */
cylproj_status cylproj_project(const cylproj_model* model, const char* name, const char* dim,
                               int strong, int dual, cylproj_format fmt, char** out);

/* Stage table of union/intersection measures with limits and the continuity
 * verdict. Works on sets, dsets and (with dim == NULL) raw profiles, where
 * the ordinary projection is unavailable and *verdict is
 * CYLPROJ_VERDICT_NOT_APPLICABLE. */
cylproj_status cylproj_converge(const cylproj_model* model, const char* name, const char* dim,
                                unsigned long max_n, cylproj_format fmt, char** out,
                                int* verdict);

cylproj_status cylproj_check_continuity(const cylproj_model* model, const char* name,
                                        const char* dim, cylproj_format fmt, char** out,
                                        int* verdict);

/* kind: "lemma1" or "thm4". */
cylproj_status cylproj_audit(const cylproj_model* model, const char* name, const char* kind,
                             const char* dim, cylproj_format fmt, char** out, int* verdict);

/* Closed-form stage measures vs. measures of explicitly materialized
 * stages, for n = 1..max_n (bounded by the oracle stage cap). *verdict is
 * 1 when every row matches. */
cylproj_status cylproj_oracle_diff(const cylproj_model* model, const char* name, const char* dim,
                                   unsigned long max_n, unsigned long bound, cylproj_format fmt,
                                   char** out, int* verdict);

#ifdef __cplusplus
}
#endif

#endif /* CYLPROJ_H */
