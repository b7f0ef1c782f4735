#ifndef UNCLUTTERED_H
#define UNCLUTTERED_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum UncErrorCode {
  UNC_ERROR_CODE_OK = 0,
  UNC_ERROR_CODE_NULL_POINTER = 1,
  UNC_ERROR_CODE_INVALID_UTF8 = 2,
  UNC_ERROR_CODE_INVALID_INPUT = 3,
  UNC_ERROR_CODE_TOO_LARGE = 4,
  UNC_ERROR_CODE_NOT_UNCLUTTERED = 5,
  UNC_ERROR_CODE_DEPTH_EXCEEDED = 6,
  // No case of the structure theorem applied; always a library bug.
  UNC_ERROR_CODE_THEOREM_VIOLATION = 7,
  UNC_ERROR_CODE_BUFFER_TOO_SMALL = 8,
  UNC_ERROR_CODE_PANIC = 9,
} UncErrorCode;

// Opaque graph handle.
typedef struct UncGraph UncGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates an edgeless graph on `n` vertices (at most 64).
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum UncErrorCode unc_graph_new(size_t n, struct UncGraph **out);

// Parses a nul-terminated graph6 string.
//
// # Safety
// `graph6` must be a valid C string; `out` must be writable.
enum UncErrorCode unc_graph_from_graph6(const char *graph6, struct UncGraph **out);

// Builds a graph from `m` edges stored as `2 * m` consecutive endpoints.
//
// # Safety
// `edges` must point to `2 * m` readable values (it may be null when `m` is 0).
enum UncErrorCode unc_graph_from_edges(size_t n,
                                       const size_t *edges,
                                       size_t m,
                                       struct UncGraph **out);

// Adds the edge `uv`. Adding an existing edge is a no-op.
//
// # Safety
// `g` must be a live handle.
enum UncErrorCode unc_graph_add_edge(struct UncGraph *g, size_t u, size_t v);

// # Safety
// `g` must be null or a handle from this library that was not freed yet.
void unc_graph_free(struct UncGraph *g);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t unc_graph_order(const struct UncGraph *g);

// Number of edges, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t unc_graph_edge_count(const struct UncGraph *g);

// Writes a newly allocated graph6 string to `out`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum UncErrorCode unc_graph_to_graph6(const struct UncGraph *g, char **out);

// Sets `*out` to whether `g` has no induced fork and no induced antifork.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum UncErrorCode unc_is_uncluttered(const struct UncGraph *g, bool *out);

// Certificate as JSON (`{"case": ..., "payload": ...}`).
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum UncErrorCode unc_classify_json(const struct UncGraph *g, char **out);

// Decomposition tree as JSON. A `depth_limit` of 0 means twice the order.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum UncErrorCode unc_decompose_json(const struct UncGraph *g, size_t depth_limit, char **out);

// Colours an uncluttered graph with at most twice its clique number.
//
// `colors` receives one entry per vertex and must hold `capacity` values;
// `num_colors` and `omega` may be null.
//
// # Safety
// `g` must be a live handle; `colors` must be writable for `capacity` values.
enum UncErrorCode unc_color(const struct UncGraph *g,
                            size_t *colors,
                            size_t capacity,
                            size_t *num_colors,
                            size_t *omega);

// Colouring as JSON (`{"colors", "num_colors", "omega"}`).
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum UncErrorCode unc_color_json(const struct UncGraph *g, char **out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum UncErrorCode unc_clique_number(const struct UncGraph *g, size_t *out);

// Exact chromatic number; refuses graphs above 16 vertices with `TOO_LARGE`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum UncErrorCode unc_chromatic_number(const struct UncGraph *g, size_t *out);

// Message for the last failed call on this thread, or null after a success.
// The pointer stays valid until the next call into this library on the same thread.
const char *unc_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library that was not freed yet.
void unc_string_free(char *s);

// Library version as a static C string.
const char *unc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNCLUTTERED_H */
