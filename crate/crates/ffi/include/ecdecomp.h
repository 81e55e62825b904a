#ifndef ECDECOMP_H
#define ECDECOMP_H

/* Generated by cbindgen from ecdecomp-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of an ecdecomp call.
 */
enum EcdStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  /**
   * Success (SAT for searches).
   */
  ECD_STATUS_OK = 0,
  /**
   * A complete search proved no decomposition exists.
   */
  ECD_STATUS_UNSAT = 1,
  /**
   * Bad parameters, malformed input, or a failed verification.
   */
  ECD_STATUS_INVALID = 2,
  /**
   * Time limit hit, or an invariant did not resolve.
   */
  ECD_STATUS_TIMEOUT = 3,
  /**
   * A required pointer was null.
   */
  ECD_STATUS_NULL_POINTER = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  ECD_STATUS_UTF8 = 5,
  /**
   * A panic was caught at the boundary.
   */
  ECD_STATUS_INTERNAL = 6,
};
#ifndef __cplusplus
typedef int32_t EcdStatus;
#endif // __cplusplus

/**
 * Opaque decomposition handle.
 */
typedef struct EcdDecomposition EcdDecomposition;

/**
 * Opaque digraph family handle.
 */
typedef struct EcdFamily EcdFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message for this thread, or null when the previous call
 * succeeded. Free with [`ecd_string_free`].
 */
char *ecd_last_error_message(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be a pointer previously returned by an ecdecomp function and not
 * yet freed.
 */
void ecd_string_free(char *s);

/**
 * Build the constant-composition family of `G(w)` with its single-edge
 * companions. `parts` is the composition `[w_1, ..., w_{q-1}]`.
 *
 * # Safety
 * `parts` must point to `len` readable `uint32_t`s.
 */
struct EcdFamily *ecd_family_g(const uint32_t *parts, uintptr_t len);

/**
 * Build the pair-colored family of `G*(w)`.
 *
 * # Safety
 * `parts` must point to `len` readable `uint32_t`s.
 */
struct EcdFamily *ecd_family_gstar(const uint32_t *parts, uintptr_t len);

/**
 * Build the weight-`w` constant-weight family over alphabet size `q`.
 */
struct EcdFamily *ecd_family_g_cwc(uint32_t q, uint32_t w);

/**
 * Build the pair-colored weight-`w` constant-weight family.
 */
struct EcdFamily *ecd_family_gstar_cwc(uint32_t q, uint32_t w);

/**
 * Build the multiply-constant-weight family `H*(m, w)` with its diagonal
 * single edges.
 */
struct EcdFamily *ecd_family_hstar(uint32_t m, uint32_t w);

/**
 * Parse a family from its JSON file representation.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string.
 */
struct EcdFamily *ecd_family_from_json(const char *json);

/**
 * Serialize a family to its JSON file representation.
 *
 * # Safety
 * `family` must be a live handle from this library.
 */
char *ecd_family_to_json(const struct EcdFamily *family);

/**
 * Release a family handle. Null is ignored.
 *
 * # Safety
 * `family` must be a handle from this library, not yet freed.
 */
void ecd_family_free(struct EcdFamily *family);

/**
 * Johnson-type bound for constant-composition codes. `d` selects the form:
 * `2w-2`, `2w-3` or `2w` for the composition's weight `w`.
 *
 * # Safety
 * `parts` must point to `len` readable `uint32_t`s and `out` must be
 * writable.
 */
EcdStatus ecd_bound_ccc(uint64_t n,
                        uint32_t d,
                        const uint32_t *parts,
                        uintptr_t len,
                        uint64_t *out);

/**
 * Johnson-type bound for constant-weight codes (`d` is `2w-2`, `2w-3` or
 * `2w`).
 *
 * # Safety
 * `out` must be writable.
 */
EcdStatus ecd_bound_cwc(uint32_t q, uint64_t n, uint32_t d, uint32_t w, uint64_t *out);

/**
 * Johnson-type bound for multiply constant-weight codes at distance
 * `2mw-2`.
 *
 * # Safety
 * `out` must be writable.
 */
EcdStatus ecd_bound_mcwc(uint32_t m, uint64_t n, uint32_t w, uint64_t *out);

/**
 * Invariant report for a family as a JSON object with fields `alpha`,
 * `beta` (strings, `"unresolved"` when undecided), `admissible`, and, when
 * `n >= 0`, `congruence_alpha`/`congruence_beta`. Free with
 * [`ecd_string_free`].
 *
 * # Safety
 * `family` must be a live handle from this library.
 */
char *ecd_invariants_json(const struct EcdFamily *family, int64_t n);

/**
 * Search for a decomposition of `K_n^(r)`. On `Ok` a decomposition handle
 * is stored in `*out`; on `Unsat`/`Timeout` `*out` is null.
 * `time_limit_ms = 0` means no limit; `threads = 0` means 1.
 *
 * # Safety
 * `family` must be a live handle and `out` writable.
 */
EcdStatus ecd_search(const struct EcdFamily *family,
                     uint32_t n,
                     bool superpure,
                     uint64_t seed,
                     uint64_t time_limit_ms,
                     uint32_t threads,
                     struct EcdDecomposition **out);

/**
 * Serialize a decomposition to its JSON file representation.
 *
 * # Safety
 * `dec` must be a live handle from this library.
 */
char *ecd_decomposition_to_json(const struct EcdDecomposition *dec);

/**
 * Parse a decomposition from its JSON file representation.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string.
 */
struct EcdDecomposition *ecd_decomposition_from_json(const char *json);

/**
 * Release a decomposition handle. Null is ignored.
 *
 * # Safety
 * `dec` must be a handle from this library, not yet freed.
 */
void ecd_decomposition_free(struct EcdDecomposition *dec);

/**
 * Re-check a decomposition against its family: exact cover and, if flagged,
 * the superpure bound. Returns `Ok` or `Invalid` (message lists the first
 * violations).
 *
 * # Safety
 * Both handles must be live handles from this library.
 */
EcdStatus ecd_verify_decomposition(const struct EcdFamily *family,
                                   const struct EcdDecomposition *dec);

/**
 * Convert a decomposition into a code under the named construction kind
 * (`"ccc2w2"`, `"ccc2w3"`, `"cwc2w2"`, `"cwc2w3"` or `"mcwc"`), returned as
 * code-file text. Free with [`ecd_string_free`].
 *
 * # Safety
 * `dec` must be a live handle and `kind` a valid NUL-terminated string.
 */
char *ecd_code_from_decomposition(const struct EcdDecomposition *dec, const char *kind);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ECDECOMP_H */
