#ifndef DIOPH_H
#define DIOPH_H

/* Generated by cbindgen from dioph-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum DiophStatus {
  /**
   * Success; out parameters are valid.
   */
  DIOPH_STATUS_OK = 0,
  /**
   * Input violated a mathematical precondition.
   */
  DIOPH_STATUS_DOMAIN = 1,
  /**
   * A configured work or memory bound was exceeded.
   */
  DIOPH_STATUS_CAPACITY = 2,
  /**
   * Malformed expression or number.
   */
  DIOPH_STATUS_SYNTAX = 3,
  /**
   * A required pointer argument was null.
   */
  DIOPH_STATUS_NULL_POINTER = 4,
  /**
   * An input string was not valid UTF-8.
   */
  DIOPH_STATUS_INVALID_UTF8 = 5,
  /**
   * Internal error; the library caught a panic at the boundary.
   */
  DIOPH_STATUS_PANIC = 6,
} DiophStatus;

/**
 * Opaque handle to an exact integer polynomial.
 */
typedef struct DiophPoly DiophPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static version string of the underlying library; never freed.
 */
const char *dioph_version(void);

/**
 * Fetch the thread-local message from the most recent failure. Writes null
 * when no failure has occurred on this thread. The caller frees the string.
 */
enum DiophStatus dioph_last_error_message(char **out);

/**
 * Release a string returned by this library. Null is a no-op.
 */
void dioph_string_free(char *s);

/**
 * Parse a polynomial expression in the named variable (e.g. "x^2+1", "x").
 */
enum DiophStatus dioph_poly_parse(const char *text, const char *var, struct DiophPoly **out);

/**
 * Release a polynomial handle. Null is a no-op.
 */
void dioph_poly_free(struct DiophPoly *p);

/**
 * Degree of the polynomial; the zero polynomial reports -1.
 */
enum DiophStatus dioph_poly_degree(const struct DiophPoly *p, long long *out_degree);

/**
 * Render the polynomial in the named variable. The caller frees the string.
 */
enum DiophStatus dioph_poly_to_string(const struct DiophPoly *p, const char *var, char **out);

/**
 * Evaluate at an integer given as a decimal string; the value comes back
 * as a decimal string the caller frees.
 */
enum DiophStatus dioph_poly_eval(const struct DiophPoly *p, const char *x_decimal, char **out);

/**
 * New handle holding `p(x + c)` for integer `c` given as a decimal string.
 */
enum DiophStatus dioph_poly_taylor_shift(const struct DiophPoly *p,
                                         const char *c_decimal,
                                         struct DiophPoly **out);

/**
 * Classify `(y+q_1)...(y+q_m) = f(x)`. `shifts` uses the CLI syntax
 * ("0,1" or "(y)(y+2)"); `f` is an expression in x. The JSON object has
 * fields verdict, theorem, witness, diagnostics.
 */
enum DiophStatus dioph_classify_product_json(const char *shifts, const char *f, char **out_json);

/**
 * Classify `f(x) = g(y)` for expressions in x and y respectively. Same
 * JSON shape as [`dioph_classify_product_json`].
 */
enum DiophStatus dioph_classify_general_json(const char *f, const char *g, char **out_json);

/**
 * All solutions of `f(x) = g(y)` with `|x|, |y| <= bound`, as JSON
 * `{"bound", "count", "solutions": [[x, y], ...]}`.
 */
enum DiophStatus dioph_enumerate_json(const char *f,
                                      const char *g,
                                      unsigned long long bound,
                                      char **out_json);

/**
 * Look for an integer c with `g(x + c) = f(x)` identically. On success
 * `*out_found` says whether one exists and `*out_c` holds its decimal
 * string (null when not found).
 */
enum DiophStatus dioph_shift_witness(const char *f, const char *g, bool *out_found, char **out_c);

/**
 * Product of the distinct primes dividing n, as a decimal string.
 */
enum DiophStatus dioph_radical(const char *n_decimal, char **out);

/**
 * Whether every prime dividing n divides it at least twice.
 */
enum DiophStatus dioph_is_powerful(const char *n_decimal, bool *out);

/**
 * abc quality `log(a+b) / log rad(ab(a+b))` for coprime positive a, b,
 * rendered with 50 fractional digits.
 */
enum DiophStatus dioph_abc_quality(const char *a_decimal, const char *b_decimal, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIOPH_H */
