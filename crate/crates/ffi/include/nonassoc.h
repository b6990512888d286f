/* C ABI for the nonassociative algebra toolkit. */

#ifndef NONASSOC_H
#define NONASSOC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every entry point.
typedef enum NaStatus {
  NA_STATUS_OK = 0,
  NA_STATUS_INVALID_ARGUMENT = 1,
  NA_STATUS_COMPUTATION_FAILED = 2,
  NA_STATUS_INTERNAL_ERROR = 3,
} NaStatus;

// Opaque algebra handle.
typedef struct NaAlgebra NaAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread; do not free it.
const char *na_last_error_message(void);

// Parses the JSON algebra file format into a new handle.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be writable.
enum NaStatus na_algebra_from_json(const char *json, struct NaAlgebra **out);

// Builds a named algebra: reals, complexes, quaternions, octonions,
// sedenions; `scalar` is "rational" or "real".
//
// # Safety
// `name` and `scalar` must be valid NUL-terminated strings; `out` writable.
enum NaStatus na_algebra_builtin(const char *name, const char *scalar, struct NaAlgebra **out);

// Iterated Cayley-Dickson doubling from comma-separated parameters, e.g.
// "-1,-1,-1" for the octonions.
//
// # Safety
// `levels` and `scalar` must be valid NUL-terminated strings; `out`
// writable.
enum NaStatus na_algebra_cayley_dickson(const char *levels,
                                        const char *scalar,
                                        struct NaAlgebra **out);

// Dimension of the algebra behind the handle; 0 for NULL.
//
// # Safety
// `handle` must be a live handle or NULL.
uint32_t na_algebra_dim(const struct NaAlgebra *handle);

// Serializes the algebra back to canonical file-format JSON.
//
// # Safety
// `handle` must be live, `name` a valid string, `out` writable. The result
// must be freed with [`na_string_free`].
enum NaStatus na_algebra_to_json(const struct NaAlgebra *handle, const char *name, char **out);

// Product of two elements given as comma-separated coordinates; the result
// is a JSON array of coordinate strings.
//
// # Safety
// Pointer arguments as in [`na_algebra_to_json`].
enum NaStatus na_multiply_json(const struct NaAlgebra *handle,
                               const char *x,
                               const char *y,
                               char **out);

// Runs the identity taxonomy; the result is the JSON identity report.
//
// # Safety
// Pointer arguments as in [`na_algebra_to_json`].
enum NaStatus na_check_identities_json(const struct NaAlgebra *handle,
                                       uint32_t max_degree,
                                       uint64_t seed,
                                       char **out);

// Classifies the algebra; the result is the JSON classification outcome
// (verdict, isomorphism matrix, certificate).
//
// # Safety
// Pointer arguments as in [`na_algebra_to_json`].
enum NaStatus na_classify_json(const struct NaAlgebra *handle, char **out);

// Extracts the quadratic structure; the result reports the trace vector,
// Gram matrix and property flags, or the non-quadratic witness.
//
// # Safety
// Pointer arguments as in [`na_algebra_to_json`].
enum NaStatus na_qform_json(const struct NaAlgebra *handle, char **out);

// Spectrum of an element: side 0 = two-sided, 1 = left, 2 = right.
//
// # Safety
// Pointer arguments as in [`na_algebra_to_json`].
enum NaStatus na_spectrum_json(const struct NaAlgebra *handle,
                               const char *element,
                               int side,
                               char **out);

// Left, right and joint zero-divisor kernels of a nonzero element.
//
// # Safety
// Pointer arguments as in [`na_algebra_to_json`].
enum NaStatus na_zero_divisor_kernels_json(const struct NaAlgebra *handle,
                                           const char *element,
                                           char **out);

// Frees a string allocated by this library. NULL is a no-op.
//
// # Safety
// `s` must originate from this library and not have been freed already.
void na_string_free(char *s);

// Frees an algebra handle. NULL is a no-op.
//
// # Safety
// `handle` must originate from this library and not have been freed
// already.
void na_algebra_free(struct NaAlgebra *handle);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NONASSOC_H */
