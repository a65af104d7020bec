#ifndef GRUNDY_H
#define GRUNDY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GrundyAnswer {
  GRUNDY_ANSWER_YES = 0,
  GRUNDY_ANSWER_NO = 1,
  GRUNDY_ANSWER_NO_WITNESS_FOUND = 2,
} GrundyAnswer;

typedef enum GrundyFormat {
  GRUNDY_FORMAT_DIMACS = 0,
  GRUNDY_FORMAT_EDGELIST = 1,
} GrundyFormat;

typedef enum GrundyMode {
  GRUNDY_MODE_RANDOMIZED = 0,
  GRUNDY_MODE_DETERMINISTIC = 1,
} GrundyMode;

typedef enum GrundyStatus {
  GRUNDY_STATUS_OK = 0,
  GRUNDY_STATUS_NULL_POINTER = 1,
  GRUNDY_STATUS_INVALID_ARGUMENT = 2,
  GRUNDY_STATUS_PARSE = 3,
  GRUNDY_STATUS_BUDGET_EXCEEDED = 4,
  GRUNDY_STATUS_SIZE_GUARD = 5,
  GRUNDY_STATUS_NOT_KIJ_FREE = 6,
  GRUNDY_STATUS_PRECONDITION = 7,
  GRUNDY_STATUS_INVALID_UTF8 = 8,
  GRUNDY_STATUS_BUFFER_TOO_SMALL = 9,
  GRUNDY_STATUS_PANIC = 10,
} GrundyStatus;

/**
 * Opaque graph handle.
 */
typedef struct GrundyGraph GrundyGraph;

/**
 * Opaque solver result handle.
 */
typedef struct GrundyResult GrundyResult;

/**
 * Solver settings. `trials` and `seed` apply to randomized mode, `budget`
 * to deterministic mode.
 */
typedef struct GrundyOptions {
  enum GrundyMode mode;
  size_t trials;
  uint64_t seed;
  uint64_t budget;
} GrundyOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *grundy_last_error_message(void);

/**
 * Builds a graph on `n` vertices from `m` edges stored as 2m 0-based ids.
 *
 * # Safety
 * `edges` must point to 2m readable values (or be null when m = 0) and
 * `out` must be writable.
 */
enum GrundyStatus grundy_graph_new(size_t n,
                                   const size_t *edges,
                                   size_t m,
                                   struct GrundyGraph **out);

/**
 * Parses DIMACS or edge-list text. `n` overrides the vertex count of an
 * edge list; pass a negative value to infer it.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum GrundyStatus grundy_graph_parse(const char *text,
                                     enum GrundyFormat format,
                                     int64_t n,
                                     struct GrundyGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards. Null is a no-op.
 */
void grundy_graph_free(struct GrundyGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t grundy_graph_vertex_count(const struct GrundyGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t grundy_graph_edge_count(const struct GrundyGraph *g);

/**
 * Decides whether the partial Grundy number is at least k. With
 * `degenerate` non-zero, degree reduction is skipped.
 *
 * # Safety
 * `g` must be a live handle, `opts` readable and `out` writable.
 */
enum GrundyStatus grundy_solve_pgc(const struct GrundyGraph *g,
                                   size_t k,
                                   const struct GrundyOptions *opts,
                                   bool degenerate,
                                   struct GrundyResult **out);

/**
 * Decides whether the Grundy number of a K_{i,j}-free graph is at least k.
 *
 * # Safety
 * `g` must be a live handle, `opts` readable and `out` writable.
 */
enum GrundyStatus grundy_solve_grundy(const struct GrundyGraph *g,
                                      size_t k,
                                      size_t i,
                                      size_t j,
                                      const struct GrundyOptions *opts,
                                      struct GrundyResult **out);

/**
 * # Safety
 * `r` must be a live result handle; null yields `NoWitnessFound`.
 */
enum GrundyAnswer grundy_result_answer(const struct GrundyResult *r);

/**
 * Copies the 1-based coloring into `buf`. `*len` is always set to the
 * coloring length (0 when there is none). Returns `BufferTooSmall` if
 * `cap` is less than that length.
 *
 * # Safety
 * `r` must be live, `len` writable and `buf` writable for `cap` values.
 */
enum GrundyStatus grundy_result_coloring(const struct GrundyResult *r,
                                         size_t *buf,
                                         size_t cap,
                                         size_t *len);

/**
 * The result as JSON (same schema as the CLI, without timing).
 *
 * # Safety
 * `r` must be live and `out` writable. Free the string with
 * [`grundy_string_free`].
 */
enum GrundyStatus grundy_result_json(const struct GrundyResult *r, char **out);

/**
 * # Safety
 * `r` must come from this library and not be used afterwards. Null is a no-op.
 */
void grundy_result_free(struct GrundyResult *r);

/**
 * # Safety
 * `s` must be a string returned by this library, or null.
 */
void grundy_string_free(char *s);

/**
 * Brute-force Grundy and partial Grundy numbers (at most 10 vertices).
 *
 * # Safety
 * `g` must be live; `gamma` and `partial_gamma` writable.
 */
enum GrundyStatus grundy_oracle(const struct GrundyGraph *g, size_t *gamma, size_t *partial_gamma);

/**
 * Checks a certificate JSON (or a solver output holding one) against `g`.
 * Malformed certificates are reported as invalid, not as errors.
 *
 * # Safety
 * `g` must be live, `json` NUL-terminated and `valid` writable.
 */
enum GrundyStatus grundy_verify_certificate(const struct GrundyGraph *g,
                                            const char *json,
                                            bool *valid);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRUNDY_H */
