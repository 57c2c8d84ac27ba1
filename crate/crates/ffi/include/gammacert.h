#ifndef GAMMACERT_H
#define GAMMACERT_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GammacertHFunction {
  GAMMACERT_H_FUNCTION_H = 0,
  GAMMACERT_H_FUNCTION_H1 = 1,
  GAMMACERT_H_FUNCTION_H2 = 2,
  GAMMACERT_H_FUNCTION_H2P = 3,
  GAMMACERT_H_FUNCTION_H2PP = 4,
  GAMMACERT_H_FUNCTION_H2PPP = 5,
} GammacertHFunction;

typedef enum GammacertStatus {
  GAMMACERT_STATUS_OK = 0,
  GAMMACERT_STATUS_DOMAIN = 1,
  GAMMACERT_STATUS_INCONCLUSIVE = 2,
  GAMMACERT_STATUS_OVERFLOW = 3,
  GAMMACERT_STATUS_PARSE = 4,
  GAMMACERT_STATUS_NULL_POINTER = 5,
  GAMMACERT_STATUS_PANIC = 6,
} GammacertStatus;

/**
 * Report verdict. Values match the CLI exit codes.
 */
typedef enum GammacertVerdict {
  GAMMACERT_VERDICT_PASS = 0,
  GAMMACERT_VERDICT_FAIL = 1,
  GAMMACERT_VERDICT_INCONCLUSIVE = 3,
} GammacertVerdict;

/**
 * Opaque exact rational polynomial.
 */
typedef struct GammacertPolynomial GammacertPolynomial;

/**
 * Opaque verification report.
 */
typedef struct GammacertReport GammacertReport;

/**
 * Closed interval `[lo, hi]` guaranteed to contain the exact value.
 */
typedef struct GammacertEnclosure {
  double lo;
  double hi;
} GammacertEnclosure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last non-OK status on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *gammacert_last_error_message(void);

/**
 * ln Γ(x) for x > 0.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_ln_gamma(double x, struct GammacertEnclosure *out);

/**
 * ψ⁽ᵏ⁾(x) for k in 0..=2 and x > 0.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_polygamma(uint32_t k, double x, struct GammacertEnclosure *out);

/**
 * F(x) for x >= 0.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_f(double x, struct GammacertEnclosure *out);

/**
 * G(x) for x > 1; overflows close to 1.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_g(double x, struct GammacertEnclosure *out);

/**
 * ln G(x) for x > 1.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_ln_g(double x, struct GammacertEnclosure *out);

/**
 * Volume of the n-dimensional unit ball, n >= 1.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_unit_ball_volume(uint64_t n, struct GammacertEnclosure *out);

/**
 * Unit-ball sequence term G(n/2), n >= 3.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_omega_sequence_term(uint64_t n, struct GammacertEnclosure *out);

/**
 * Member of the h family at x >= 1.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_h_family(enum GammacertHFunction which,
                                        double x,
                                        struct GammacertEnclosure *out);

/**
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_verify_lemma2(struct GammacertReport **out);

/**
 * Runs with the default F grid [0, 50], step 0.01.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_verify_theorem1(struct GammacertReport **out);

/**
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_verify_theorem2(uint64_t n_max, struct GammacertReport **out);

/**
 * # Safety
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_verify_remark1(uint64_t n_max, struct GammacertReport **out);

/**
 * # Safety
 * `report` must be a live handle or null; `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_report_overall(const struct GammacertReport *report,
                                              enum GammacertVerdict *out);

/**
 * # Safety
 * `report` must be a live handle or null; `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_report_step_count(const struct GammacertReport *report, size_t *out);

/**
 * JSON rendering of the report, to be released with `gammacert_string_free`.
 *
 * # Safety
 * `report` must be a live handle or null; `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_report_to_json(const struct GammacertReport *report, char **out);

/**
 * # Safety
 * `report` must come from a `gammacert_verify_*` call and not be freed twice.
 */
void gammacert_report_free(struct GammacertReport *report);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void gammacert_string_free(char *s);

/**
 * Polynomial from `len` integer coefficients, lowest degree first.
 *
 * # Safety
 * `coeffs` must point to `len` readable values (or be null when `len` is 0);
 * `out` must be null or valid for writes.
 */
enum GammacertStatus gammacert_polynomial_from_ints(const int64_t *coeffs,
                                                    size_t len,
                                                    struct GammacertPolynomial **out);

/**
 * Polynomial from `len` rational coefficient strings such as `"-3/4"`,
 * lowest degree first.
 *
 * # Safety
 * `coeffs` must point to `len` NUL-terminated strings; `out` must be null or
 * valid for writes.
 */
enum GammacertStatus gammacert_polynomial_from_fractions(const char *const *coeffs,
                                                         size_t len,
                                                         struct GammacertPolynomial **out);

/**
 * Decides positivity on `[a, inf)` with `a` given as a rational string.
 * `out_positive` receives 1 when certified and 0 otherwise.
 *
 * # Safety
 * `poly` must be a live handle; `a` a NUL-terminated string; `out_positive`
 * null or valid for writes.
 */
enum GammacertStatus gammacert_polynomial_certify_positive(const struct GammacertPolynomial *poly,
                                                           const char *a,
                                                           int32_t *out_positive);

/**
 * Exact value at a rational point, as a `"num/den"` string to be released
 * with `gammacert_string_free`.
 *
 * # Safety
 * `poly` must be a live handle; `x` a NUL-terminated string; `out` null or
 * valid for writes.
 */
enum GammacertStatus gammacert_polynomial_eval(const struct GammacertPolynomial *poly,
                                               const char *x,
                                               char **out);

/**
 * # Safety
 * `poly` must come from a `gammacert_polynomial_*` constructor and not be
 * freed twice.
 */
void gammacert_polynomial_free(struct GammacertPolynomial *poly);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAMMACERT_H */
