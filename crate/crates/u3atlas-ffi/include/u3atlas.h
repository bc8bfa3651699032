/* C ABI for the u3atlas exact U(3) finite subgroup engine. */

#ifndef U3ATLAS_H
#define U3ATLAS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Default element cap used by the constructors in this API.
 */
#define U3ATLAS_DEFAULT_ELEMENT_CAP 100000

/**
 * Status code returned by every fallible function in this API.
 */
typedef enum U3Status {
  /**
   * The call succeeded.
   */
  U3_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  U3_STATUS_NULL_POINTER = 1,
  /**
   * The series spec or generator JSON could not be parsed.
   */
  U3_STATUS_INVALID_INPUT = 2,
  /**
   * Group closure failed (e.g. the element cap was exceeded).
   */
  U3_STATUS_BUILD_FAILED = 3,
  /**
   * A post-build computation failed.
   */
  U3_STATUS_COMPUTE_FAILED = 4,
  /**
   * The spec parsed but names no entry of the built-in catalog.
   */
  U3_STATUS_NOT_IN_CATALOG = 5,
  /**
   * An internal invariant was violated (a bug; please report it).
   */
  U3_STATUS_INTERNAL = 6,
} U3Status;

/**
 * Opaque handle to a closed matrix group.
 */
typedef struct U3Group U3Group;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the catalog group named by `spec` (e.g. `"T(r=7,k=2,m=2)"`) and
 * stores a new handle in `*out`.  The handle must be freed with
 * `u3atlas_group_free`.
 */
enum U3Status u3atlas_group_build(const char *spec, struct U3Group **out);

/**
 * Builds the closure of explicit generators and stores a new handle in
 * `*out`.  `json` is an array of 3x3 matrices whose entries are cyclotomic
 * literals, e.g. `[[["1","0","0"],["0","E(3)","0"],["0","0","E(3)^2"]]]`.
 * `element_cap` bounds the closure size; pass 0 for the default.
 */
enum U3Status u3atlas_group_from_generators_json(const char *json,
                                                 uint64_t element_cap,
                                                 struct U3Group **out);

/**
 * Releases a group handle.  Passing null is a no-op.
 */
void u3atlas_group_free(struct U3Group *group);

/**
 * Stores the group order in `*out`.
 */
enum U3Status u3atlas_group_order(const struct U3Group *group, uint64_t *out);

/**
 * Stores 1 in `*out` if every generator has determinant 1, else 0.
 */
enum U3Status u3atlas_group_is_su3(const struct U3Group *group, uint8_t *out);

/**
 * Stores the number of conjugacy classes in `*out`.
 */
enum U3Status u3atlas_group_class_count(const struct U3Group *group, uint64_t *out);

/**
 * Stores the order of the determinant image (a cyclic group) in `*out`.
 */
enum U3Status u3atlas_group_det_image_order(const struct U3Group *group, uint64_t *out);

/**
 * Stores the group exponent (lcm of element orders) in `*out`.
 */
enum U3Status u3atlas_group_exponent(const struct U3Group *group, uint64_t *out);

/**
 * Computes the irreducible character degrees and stores them in `*out` as a
 * JSON object mapping degree to multiplicity, e.g. `{"1":9,"3":6}`.  The
 * string must be freed with `u3atlas_string_free`.
 */
enum U3Status u3atlas_group_degrees_json(const struct U3Group *group, char **out);

/**
 * Runs the full verification for the catalog entry named by `spec` and
 * stores the report in `*out` as JSON.  `seed` feeds the randomized degree
 * computation; any seed yields the same certified profile.  The string must
 * be freed with `u3atlas_string_free`.
 */
enum U3Status u3atlas_verify_spec(const char *spec, uint64_t seed, char **out);

/**
 * Releases a string returned by this API.  Passing null is a no-op.
 */
void u3atlas_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* U3ATLAS_H */
