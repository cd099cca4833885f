#ifndef TITS_H
#define TITS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TitsStatus {
  TITS_STATUS_OK = 0,
  TITS_STATUS_NULL_POINTER = 1,
  TITS_STATUS_INVALID_UTF8 = 2,
  TITS_STATUS_INVALID_INPUT = 3,
  TITS_STATUS_NOT_FOUND = 4,
  TITS_STATUS_BUDGET_EXCEEDED = 5,
  TITS_STATUS_INFINITE_GROUP = 6,
  TITS_STATUS_DISCONNECTED = 7,
  TITS_STATUS_IO = 8,
  TITS_STATUS_PANIC = 9,
} TitsStatus;

/**
 * Opaque chamber system.
 */
typedef struct TitsChamberSystem TitsChamberSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *tits_last_error(void);

/**
 * Library version, a static string.
 */
const char *tits_version(void);

/**
 * Builds a catalog entry by name.
 *
 * # Safety
 * `name` must be a valid C string and `out` a valid pointer.
 */
enum TitsStatus tits_catalog_build(const char *name, struct TitsChamberSystem **out);

/**
 * Parses a chamber system from its JSON form.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum TitsStatus tits_system_from_json(const char *json, struct TitsChamberSystem **out);

/**
 * Serializes a chamber system; free the string with [`tits_string_free`].
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
enum TitsStatus tits_system_to_json(const struct TitsChamberSystem *sys, char **out);

/**
 * Number of chambers, 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t tits_system_chamber_count(const struct TitsChamberSystem *sys);

/**
 * Rank, 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t tits_system_rank(const struct TitsChamberSystem *sys);

/**
 * Building check against the inferred type. `report` may be null.
 *
 * # Safety
 * `sys` must be a live handle, `holds` a valid pointer, `report` null or
 * valid.
 */
enum TitsStatus tits_is_building(const struct TitsChamberSystem *sys, bool *holds, char **report);

/**
 * Axiom (LL) for the point/line roles of a rank-3 linear diagram.
 *
 * # Safety
 * As for [`tits_is_building`].
 */
enum TitsStatus tits_check_ll(const struct TitsChamberSystem *sys, bool *holds, char **report);

/**
 * C3-geometry check.
 *
 * # Safety
 * As for [`tits_is_building`].
 */
enum TitsStatus tits_is_c3(const struct TitsChamberSystem *sys, bool *holds, char **report);

/**
 * Universal 2-cover glued from `base_chamber`. `cover` receives the cover
 * system and may be null; `report` receives the chamber count, fiber size,
 * deck order, regularity, truncation flag and covering map.
 *
 * # Safety
 * `sys` must be a live handle; `cover` and `report` null or valid.
 */
enum TitsStatus tits_universal_cover(const struct TitsChamberSystem *sys,
                                     size_t base_chamber,
                                     size_t max_chambers,
                                     struct TitsChamberSystem **cover,
                                     char **report);

/**
 * Order of the Coxeter group of a row-major `rank × rank` matrix, `0`
 * encoding an infinite bond. Orders beyond `u64` report `BudgetExceeded`.
 *
 * # Safety
 * `matrix` must point to `rank * rank` entries and `order` be valid.
 */
enum TitsStatus tits_coxeter_order(const uint32_t *matrix, size_t rank, uint64_t *order);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `sys` must be null or a handle not yet freed.
 */
void tits_system_free(struct TitsChamberSystem *sys);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void tits_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TITS_H */
