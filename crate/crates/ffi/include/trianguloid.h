#ifndef TRIANGULOID_H
#define TRIANGULOID_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which search to run.
 */
typedef enum TgMethod {
  TG_METHOD_TREES = 0,
  TG_METHOD_AXIOMS = 1,
} TgMethod;

/**
 * Which polytope to count lattice points of.
 */
typedef enum TgPolytope {
  TG_POLYTOPE_PG = 0,
  TG_POLYTOPE_PG_MINUS = 1,
  TG_POLYTOPE_PG_PM = 2,
} TgPolytope;

/**
 * Result codes.
 */
typedef enum TgStatus {
  TG_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TG_STATUS_NULL_POINTER = 1,
  /**
   * Input text was not valid UTF-8.
   */
  TG_STATUS_INVALID_UTF8 = 2,
  /**
   * Input JSON was malformed or described an invalid object.
   */
  TG_STATUS_PARSE_ERROR = 3,
  /**
   * An argument was outside its allowed range.
   */
  TG_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The object failed a mathematical validity check.
   */
  TG_STATUS_INVALID = 5,
  /**
   * An enumeration produced more results than the limit.
   */
  TG_STATUS_LIMIT_EXCEEDED = 6,
  /**
   * An internal panic was caught.
   */
  TG_STATUS_PANIC = 7,
} TgStatus;

/**
 * Opaque bipartite graph.
 */
typedef struct TgGraph TgGraph;

/**
 * Opaque validated triangulation.
 */
typedef struct TgTriangulation TgTriangulation;

/**
 * Opaque trianguloid (or any map satisfying the entry format).
 */
typedef struct TgTrianguloid TgTrianguloid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a
 * successful call. Valid until the next call on the same thread.
 */
const char *tg_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void tg_string_free(char *s);

/**
 * Parses a graph from JSON.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TgStatus tg_graph_from_json(const char *json, struct TgGraph **out);

/**
 * # Safety
 * `g` must be null or a live handle from [`tg_graph_from_json`].
 */
void tg_graph_free(struct TgGraph *g);

/**
 * Number of lattice points of the chosen polytope.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum TgStatus tg_graph_lattice_point_count(const struct TgGraph *g,
                                           enum TgPolytope polytope,
                                           uintptr_t *out);

/**
 * Tests two forests of `g`, each given as `{"edges": [[i, j], ...]}`.
 *
 * # Safety
 * `g` must be a live handle; strings nul-terminated; `out` writable.
 */
enum TgStatus tg_forests_compatible(const struct TgGraph *g,
                                    const char *forest_a,
                                    const char *forest_b,
                                    bool *out);

/**
 * Counts triangulations or trianguloids of `g`. A `limit` of zero means
 * no limit; otherwise more than `limit` results fail with
 * `LimitExceeded`. `jobs` of zero is treated as one.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum TgStatus tg_enumerate_count(const struct TgGraph *g,
                                 enum TgMethod method,
                                 uintptr_t limit,
                                 uintptr_t jobs,
                                 uintptr_t *out);

/**
 * Parses and validates a triangulation. Malformed JSON gives
 * `ParseError`; a well-formed but invalid family gives `Invalid`.
 *
 * # Safety
 * `json` must be nul-terminated; `out` writable.
 */
enum TgStatus tg_triangulation_from_json(const char *json, struct TgTriangulation **out);

/**
 * # Safety
 * `t` must be null or a live triangulation handle.
 */
void tg_triangulation_free(struct TgTriangulation *t);

/**
 * Number of trees in the triangulation.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum TgStatus tg_triangulation_len(const struct TgTriangulation *t, uintptr_t *out);

/**
 * Canonical JSON of the triangulation.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum TgStatus tg_triangulation_to_json(const struct TgTriangulation *t, char **out);

/**
 * Parses a trianguloid map without checking the axioms.
 *
 * # Safety
 * `json` must be nul-terminated; `out` writable.
 */
enum TgStatus tg_trianguloid_from_json(const char *json, struct TgTrianguloid **out);

/**
 * # Safety
 * `t` must be null or a live trianguloid handle.
 */
void tg_trianguloid_free(struct TgTrianguloid *t);

/**
 * The trianguloid of a triangulation.
 *
 * # Safety
 * `tau` must be a live handle; `out` writable.
 */
enum TgStatus tg_trianguloid_from_triangulation(const struct TgTriangulation *tau,
                                                struct TgTrianguloid **out);

/**
 * The triangulation of a trianguloid; `Invalid` when the map is not one.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum TgStatus tg_trianguloid_to_triangulation(const struct TgTrianguloid *t,
                                              struct TgTriangulation **out);

/**
 * Checks the axioms. Writes whether the map is a trianguloid and, if
 * `report` is non-null, the JSON axiom report.
 *
 * # Safety
 * `t` must be a live handle; `is_trianguloid` writable; `report` null or
 * writable.
 */
enum TgStatus tg_trianguloid_check(const struct TgTrianguloid *t,
                                   bool *is_trianguloid,
                                   char **report);

/**
 * Canonical JSON of the trianguloid.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum TgStatus tg_trianguloid_to_json(const struct TgTrianguloid *t, char **out);

/**
 * SVG drawing with default style; `Invalid` unless the map is a
 * trianguloid with three left vertices.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum TgStatus tg_trianguloid_render_svg(const struct TgTrianguloid *t, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIANGULOID_H */
