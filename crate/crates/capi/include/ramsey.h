#ifndef RAMSEY_H
#define RAMSEY_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every ABI call.
 */
typedef enum RwStatus {
  /**
   * success
   */
  RW_STATUS_OK = 0,
  /**
   * a required pointer argument was null
   */
  RW_STATUS_NULL_ARG = 1,
  /**
   * a string argument was not valid UTF-8
   */
  RW_STATUS_BAD_UTF8 = 2,
  /**
   * the instance text failed to parse or validate
   */
  RW_STATUS_PARSE = 3,
  /**
   * the generator rejected its arguments
   */
  RW_STATUS_CONSTRUCT = 4,
  /**
   * an argument was out of range for the operation
   */
  RW_STATUS_BAD_ARG = 5,
  /**
   * the operation exceeded a search or enumeration cap
   */
  RW_STATUS_CAP_EXCEEDED = 6,
  /**
   * unexpected internal failure
   */
  RW_STATUS_INTERNAL = 7,
} RwStatus;

/**
 * What to search for in each color class.
 */
typedef enum RwTarget {
  /**
   * path on `size` vertices
   */
  RW_TARGET_PATH = 0,
  /**
   * cycle on exactly `size` vertices
   */
  RW_TARGET_CYCLE = 1,
  /**
   * cycle on at least `size` vertices
   */
  RW_TARGET_CYCLE_AT_LEAST = 2,
  /**
   * `size` disjoint edges in one component
   */
  RW_TARGET_CONNECTED_MATCHING = 3,
} RwTarget;

/**
 * Opaque handle to a loaded instance.
 */
typedef struct RwInstance RwInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an instance from JSON text. On success `*out` owns the handle;
 * release it with `rw_instance_free`.
 */
enum RwStatus rw_instance_parse(const char *json, struct RwInstance **out);

/**
 * Builds extremal coloring `example` (1 through 7) at half-length `n`.
 * `parts` may be null with `parts_len` 0 for generators that take none.
 */
enum RwStatus rw_instance_generate(uintptr_t example,
                                   uintptr_t n,
                                   const uintptr_t *parts,
                                   uintptr_t parts_len,
                                   struct RwInstance **out);

/**
 * Releases a handle. Null is a no-op.
 */
void rw_instance_free(struct RwInstance *inst);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void rw_string_free(char *s);

/**
 * Serializes the instance to canonical JSON.
 */
enum RwStatus rw_instance_to_json(const struct RwInstance *inst, char **out);

/**
 * Renders the instance as DOT.
 */
enum RwStatus rw_instance_to_dot(const struct RwInstance *inst, char **out);

/**
 * Searches both color classes for a monochromatic target. `*found` is
 * 1 when either color contains it, else 0.
 */
enum RwStatus rw_instance_check(const struct RwInstance *inst,
                                enum RwTarget target,
                                uintptr_t size,
                                int *found);

/**
 * Validates embedded certificates. Writes how many there are and how
 * many failed validation.
 */
enum RwStatus rw_instance_certify(const struct RwInstance *inst,
                                  uintptr_t *total,
                                  uintptr_t *invalid);

/**
 * Evaluates the seven threshold conditions for `n` and the part sizes.
 * `flags` must point at seven bytes; each is set to 1 (holds) or 0.
 */
enum RwStatus rw_conditions(uintptr_t n,
                            const uintptr_t *parts,
                            uintptr_t parts_len,
                            uint8_t *flags);

/**
 * Exhaustively scans every coloring of the host for a monochromatic
 * target, with `threads` workers (0 means 1). Writes the number of
 * colorings covered and how many lacked the target.
 */
enum RwStatus rw_verify(const uintptr_t *parts,
                        uintptr_t parts_len,
                        enum RwTarget target,
                        uintptr_t size,
                        uint32_t threads,
                        uint64_t *colorings,
                        uint64_t *failures);

/**
 * Searches one already-validated instance's host graph directly; used
 * by callers that build plain graphs on the host without a coloring.
 */
enum RwStatus rw_instance_host_check(const struct RwInstance *inst,
                                     enum RwTarget target,
                                     uintptr_t size,
                                     int *found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RAMSEY_H */
