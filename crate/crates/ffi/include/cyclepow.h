#ifndef CYCLEPOW_H
#define CYCLEPOW_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CpStatus {
  CP_STATUS_OK = 0,
  CP_STATUS_NULL_POINTER = 1,
  CP_STATUS_INVALID_ARGUMENT = 2,
  CP_STATUS_OUT_OF_DOMAIN = 3,
  CP_STATUS_OUT_OF_REGIME = 4,
  CP_STATUS_UNDEFINED = 5,
  CP_STATUS_BUDGET_EXCEEDED = 6,
  CP_STATUS_VERIFICATION_SCOPE = 7,
  CP_STATUS_BUFFER_TOO_SMALL = 8,
  CP_STATUS_INTERNAL = 9,
} CpStatus;

typedef enum CpMethod {
  CP_METHOD_CLOSED_FORM = 0,
  CP_METHOD_INTERVAL_COUNT = 1,
  CP_METHOD_COMPLETE_GRAPH = 2,
} CpMethod;

/**
 * Opaque `C_n^s`.
 */
typedef struct CpGraph CpGraph;

/**
 * Opaque search outcome.
 */
typedef struct CpSearchResult CpSearchResult;

/**
 * Opaque vertex subset.
 */
typedef struct CpSubset CpSubset;

/**
 * One row of the comparison table. `turan` is meaningful only when
 * `has_turan` is true.
 */
typedef struct CpBoundReport {
  size_t n;
  size_t k;
  size_t s;
  uint64_t exact;
  bool has_turan;
  uint64_t turan;
  double spectral_raw;
  int64_t spectral_int;
  double lambda2;
} CpBoundReport;

typedef struct CpSearchOptions {
  bool reduce_symmetry;
  bool count_maximizers;
  bool prune;
  /**
   * 0 uses the global worker pool.
   */
  size_t jobs;
  /**
   * 0 uses the default budget (or `CYCLEPOW_BUDGET`).
   */
  uint64_t budget;
} CpSearchOptions;

typedef struct CpGridSummary {
  uint64_t cases;
  uint64_t closed_form_cases;
  uint64_t turan_cases;
  uint64_t violations;
} CpGridSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *cp_last_error_message(void);

/**
 * Static, human readable name of a status code.
 */
const char *cp_status_str(enum CpStatus status);

enum CpStatus cp_graph_new(size_t n, size_t s, struct CpGraph **out);

void cp_graph_free(struct CpGraph *graph);

enum CpStatus cp_graph_is_complete(const struct CpGraph *graph, bool *out);

enum CpStatus cp_clique_number(const struct CpGraph *graph, size_t *out);

enum CpStatus cp_exact_max(const struct CpGraph *graph,
                           size_t k,
                           uint64_t *out_value,
                           enum CpMethod *out_method);

enum CpStatus cp_closed_form(const struct CpGraph *graph, size_t k, uint64_t *out);

enum CpStatus cp_turan_bound(const struct CpGraph *graph, size_t k, uint64_t *out);

enum CpStatus cp_circulant_eigenvalue(const struct CpGraph *graph, size_t j, double *out);

enum CpStatus cp_lambda2(const struct CpGraph *graph, double *out);

enum CpStatus cp_bound_report(const struct CpGraph *graph, size_t k, struct CpBoundReport *out);

/**
 * New empty subset of `Z/nZ`.
 */
enum CpStatus cp_subset_new(size_t n, struct CpSubset **out);

void cp_subset_free(struct CpSubset *subset);

/**
 * Inserts `v mod n`.
 */
enum CpStatus cp_subset_insert(struct CpSubset *subset, size_t v);

enum CpStatus cp_subset_contains(const struct CpSubset *subset, size_t v, bool *out);

enum CpStatus cp_subset_len(const struct CpSubset *subset, size_t *out);

/**
 * Writes the members in increasing order into `buf` (capacity `cap`) and the
 * member count into `out_len`. Returns `CP_STATUS_BUFFER_TOO_SMALL`, with
 * `out_len` set, when `cap` is insufficient; `buf` may be NULL to query the
 * size.
 */
enum CpStatus cp_subset_members(const struct CpSubset *subset,
                                size_t *buf,
                                size_t cap,
                                size_t *out_len);

enum CpStatus cp_interval(const struct CpGraph *graph,
                          size_t start,
                          size_t k,
                          struct CpSubset **out);

enum CpStatus cp_edge_count(const struct CpGraph *graph,
                            const struct CpSubset *subset,
                            uint64_t *out);

enum CpStatus cp_quadratic_form_edges(const struct CpGraph *graph,
                                      const struct CpSubset *subset,
                                      uint64_t *out);

enum CpStatus cp_spectral_identity_check(const struct CpGraph *graph,
                                         const struct CpSubset *subset,
                                         bool *out);

/**
 * Default search options: symmetry reduction on, everything else off.
 */
struct CpSearchOptions cp_search_options_default(void);

/**
 * Exhaustive search. `options` may be NULL for the defaults.
 */
enum CpStatus cp_search(const struct CpGraph *graph,
                        size_t k,
                        const struct CpSearchOptions *options,
                        struct CpSearchResult **out);

void cp_search_result_free(struct CpSearchResult *result);

enum CpStatus cp_search_result_max_edges(const struct CpSearchResult *result, uint64_t *out);

enum CpStatus cp_search_result_subsets_examined(const struct CpSearchResult *result, uint64_t *out);

/**
 * `CP_STATUS_UNDEFINED` when the count was not requested.
 */
enum CpStatus cp_search_result_maximizer_count(const struct CpSearchResult *result, uint64_t *out);

/**
 * Copy of the witness as a new subset handle.
 */
enum CpStatus cp_search_result_witness(const struct CpSearchResult *result, struct CpSubset **out);

enum CpStatus cp_count_maximizers(const struct CpGraph *graph, size_t k, uint64_t *out);

/**
 * Runs the full `(n, s, k)` grid up to `max_n`. A grid with violations still
 * returns `CP_STATUS_OK`; inspect `violations`.
 */
enum CpStatus cp_verify_grid(size_t max_n, struct CpGridSummary *out);

/**
 * Renders a comparison table. `spec_csv` holds the table spec text (`n`,
 * then `k,s` lines) or is NULL for the built-in table; `format` is one of
 * `plain`, `markdown`, `csv`, `json`. The result must be released with
 * [`cp_string_free`].
 */
enum CpStatus cp_table_render(const char *spec_csv, const char *format, char **out);

void cp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLEPOW_H */
