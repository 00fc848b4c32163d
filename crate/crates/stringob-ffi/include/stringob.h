/* stringob C ABI — see so_* function docs for ownership rules. */

#ifndef STRINGOB_H
#define STRINGOB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Coefficient domain of the decision.
typedef enum SoMode {
  SO_MODE_MOD2 = 0,
  SO_MODE_INTEGER = 1,
} SoMode;

// Pair-set selector: all disjoint pairs, the string pairs, or the
// subdivided pairs.
typedef enum SoPairKind {
  SO_PAIRS_DELTA = 0,
  SO_PAIRS_S = 1,
  SO_PAIRS_SD = 2,
} SoPairKind;

// Result codes for every fallible call.
typedef enum SoStatus {
  SO_OK = 0,
  SO_NULL_ARGUMENT = 1,
  SO_INVALID_ARGUMENT = 2,
  SO_PARSE_ERROR = 3,
  SO_GRAPH_ERROR = 4,
  SO_COMPUTE_ERROR = 5,
  SO_PANIC = 6,
} SoStatus;

// Opaque graph handle.
typedef struct SoGraph SoGraph;

// Opaque obstruction-report handle.
typedef struct SoReport SoReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a graph from a flat edge array `[u0, v0, u1, v1, …]`.
//
// # Safety
// `edges` must point to `2 * edge_count` readable elements and `out` must
// be a valid pointer.
enum SoStatus so_graph_new(size_t n, const size_t *edges, size_t edge_count, struct SoGraph **out);

// Parses the `{"n": …, "edges": …}` JSON format.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid.
enum SoStatus so_graph_from_json(const char *json, struct SoGraph **out);

// Generates a named graph. Families: `"heawood"`, `"gp"` (no
// parameters), `"c_cbar"` and `"complete"` (parameter `a`),
// `"complete_bipartite"` (parameters `a`, `b`).
//
// # Safety
// `family` must be NUL-terminated; `out` must be valid.
enum SoStatus so_graph_generate(const char *family, size_t a, size_t b, struct SoGraph **out);

// Serializes the graph to its JSON format.
//
// # Safety
// `g` must be a live handle; `out` must be valid.
enum SoStatus so_graph_to_json(const struct SoGraph *g, char **out);

// # Safety
// `g` must be a live handle (or null, which yields 0).
size_t so_graph_vertex_count(const struct SoGraph *g);

// # Safety
// `g` must be a live handle (or null, which yields 0).
size_t so_graph_edge_count(const struct SoGraph *g);

// Releases a graph handle. Null is a no-op.
//
// # Safety
// `g` must have come from this library and not been freed before.
void so_graph_free(struct SoGraph *g);

// Decides the obstruction of `g` for the selected pair set and mode.
//
// # Safety
// `g` must be a live handle; `out` must be valid.
enum SoStatus so_obstruction(const struct SoGraph *g,
                             enum SoPairKind pairs,
                             enum SoMode mode,
                             struct SoReport **out);

// 1 when the obstruction vanishes, 0 otherwise (or on null).
//
// # Safety
// `r` must be a live handle or null.
int32_t so_report_vanishes(const struct SoReport *r);

// GF(2) rank of the finger-move system.
//
// # Safety
// `r` must be a live handle or null.
size_t so_report_rank(const struct SoReport *r);

// Serializes the report to its JSON schema.
//
// # Safety
// `r` must be a live handle; `out` must be valid.
enum SoStatus so_report_to_json(const struct SoReport *r, char **out);

// Releases a report handle. Null is a no-op.
//
// # Safety
// `r` must have come from this library and not been freed before.
void so_report_free(struct SoReport *r);

// Verifies a string representation (`{"n": …, "curves": …}`) against a
// graph. Writes 1/0 to `valid` and a JSON array of human-readable
// violations to `violations_json`.
//
// # Safety
// Both strings must be NUL-terminated; `valid` and `violations_json`
// must be valid pointers.
enum SoStatus so_strings_verify(const char *graph_json,
                                const char *rep_json,
                                int32_t *valid,
                                char **violations_json);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must have come from this library and not been freed before.
void so_string_free(char *s);

// Library version as a static string; do not free.
const char *so_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRINGOB_H */
