/*
 * quartic: exact analysis of the dyadic coefficient family d_l(m) of the
 * polynomials P_m(a) attached to the quartic integral
 *
 *     N(a;m) = integral_0^inf dx / (x^4 + 2ax^2 + 1)^{m+1},
 *     P_m(a) = (2^{m+3/2}/pi) (a+1)^{m+1/2} N(a;m) = sum_l d_l(m) a^l.
 *
 * The library computes the d_l(m) by several independent exact routes,
 * machine-checks the 2-adic and 3-adic valuation theorems about them,
 * decides exactly whether the associated alpha_l/beta_l polynomials have
 * all roots on Re(m) = -1/2, and scans nu_3(d_1(m)) over large ranges.
 *
 * All handles are opaque; functions returning quartic_status never throw.
 * Strings returned as `const char*` are owned by their handle and remain
 * valid until the handle is freed. Strings returned through `char**` are
 * heap-allocated and must be released with quartic_string_free.
 */

#ifndef QUARTIC_QUARTIC_H
#define QUARTIC_QUARTIC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum quartic_status {
    QUARTIC_OK = 0,
    QUARTIC_ERR_INVALID_ARGUMENT = 1,
    QUARTIC_ERR_RANGE = 2,
    QUARTIC_ERR_NO_CONVERGENCE = 3,
    QUARTIC_ERR_IO = 4,
    QUARTIC_ERR_INTERNAL = 5
} quartic_status;

typedef enum quartic_method {
    QUARTIC_METHOD_SINGLE = 0,
    QUARTIC_METHOD_TRIPLE = 1,
    QUARTIC_METHOD_ALPHABETA = 2,
    QUARTIC_METHOD_F21 = 3,
    QUARTIC_METHOD_LEIBNIZ = 4
} quartic_method;

typedef enum quartic_family {
    QUARTIC_FAMILY_ALPHA = 0,
    QUARTIC_FAMILY_BETA = 1
} quartic_family;

typedef enum quartic_format {
    QUARTIC_FORMAT_JSON = 0,
    QUARTIC_FORMAT_CSV = 1
} quartic_format;

typedef struct quartic_coeff quartic_coeff;
typedef struct quartic_report quartic_report;
typedef struct quartic_verdict quartic_verdict;
typedef struct quartic_numeric_roots quartic_numeric_roots;
typedef struct quartic_scan quartic_scan;

const char* quartic_version(void);
const char* quartic_status_str(quartic_status status);
void quartic_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Coefficients d_l(m)                                                 */
/* ------------------------------------------------------------------ */

/* Computes d_l(m) by the chosen route. Requires l <= m. */
quartic_status quartic_coeff_compute(uint32_t m, uint32_t l, quartic_method method,
                                     quartic_coeff** out);
void quartic_coeff_free(quartic_coeff* coeff);

/* d_l(m) = odd_part * 2^pow2_exponent, odd_part a decimal string. */
const char* quartic_coeff_odd_part(const quartic_coeff* coeff);
int64_t quartic_coeff_pow2_exponent(const quartic_coeff* coeff);
int64_t quartic_coeff_nu2(const quartic_coeff* coeff);
int64_t quartic_coeff_nu3(const quartic_coeff* coeff);
/* Reduced fraction "p/q" (or "p" when integral). */
const char* quartic_coeff_fraction(const quartic_coeff* coeff);
uint64_t quartic_coeff_numerator_digits(const quartic_coeff* coeff);
const char* quartic_coeff_json(const quartic_coeff* coeff);
const char* quartic_coeff_text(const quartic_coeff* coeff);

/* Exact P_m(a) for rational a given as "p/q" (or an integer string);
 * the value is written as a reduced fraction string. */
quartic_status quartic_eval_p(uint32_t m, const char* a, char** out_value);

/* ------------------------------------------------------------------ */
/* Verification suites                                                 */
/* ------------------------------------------------------------------ */

/* Suite names: thm2, cor2, cor3, floorsum, thm4, lemma-ab, nu2-bound,
 * stirling, crossformula, taylor, quad, all. max_m < 0 selects each
 * suite's default range. */
quartic_status quartic_verify_run(const char* suite, int64_t max_m, quartic_report** out);
void quartic_report_free(quartic_report* report);
int quartic_report_passed(const quartic_report* report);
size_t quartic_report_suite_count(const quartic_report* report);
const char* quartic_report_json(const quartic_report* report);
const char* quartic_report_text(const quartic_report* report);

/* ------------------------------------------------------------------ */
/* Critical-line decisions for alpha_l / beta_l                        */
/* ------------------------------------------------------------------ */

/* Exact decision (shift + parity + Sturm); requires l >= 1. */
quartic_status quartic_roots_decide(quartic_family family, uint32_t l, quartic_verdict** out);
void quartic_verdict_free(quartic_verdict* verdict);
int quartic_verdict_all_on_line(const quartic_verdict* verdict);
const char* quartic_verdict_json(const quartic_verdict* verdict);
const char* quartic_verdict_text(const quartic_verdict* verdict);

/* Ehrlich-Aberth root approximations at the given precision (>= 64 bits);
 * requires l >= 1. */
quartic_status quartic_roots_numeric(quartic_family family, uint32_t l, uint32_t precision_bits,
                                     quartic_numeric_roots** out);
void quartic_numeric_roots_free(quartic_numeric_roots* roots);
/* max over roots of |Re + 1/2| */
double quartic_numeric_roots_max_offset(const quartic_numeric_roots* roots);
const char* quartic_numeric_roots_json(const quartic_numeric_roots* roots);
const char* quartic_numeric_roots_text(const quartic_numeric_roots* roots);

/* ------------------------------------------------------------------ */
/* 3-adic scan of nu_3(d_1(m))                                         */
/* ------------------------------------------------------------------ */

/* Requires max_m >= 2. */
quartic_status quartic_threeadic_scan(uint64_t max_m, quartic_scan** out);
void quartic_scan_free(quartic_scan* scan);
int64_t quartic_scan_max_valuation(const quartic_scan* scan);
uint64_t quartic_scan_max_valuation_at(const quartic_scan* scan);
size_t quartic_scan_zero_count(const quartic_scan* scan);
uint64_t quartic_scan_zero(const quartic_scan* scan, size_t index);
size_t quartic_scan_gap_count(const quartic_scan* scan);
uint64_t quartic_scan_gap(const quartic_scan* scan, size_t index);
int quartic_scan_gap_in_q_set(const quartic_scan* scan, size_t index);
int quartic_scan_all_gaps_in_q_set(const quartic_scan* scan);
const char* quartic_scan_json(const quartic_scan* scan);
const char* quartic_scan_text(const quartic_scan* scan);

/* First `count` terms of q_1 = 2, q_{j+1} = 3 q_j + (-1)^{j+1}. */
quartic_status quartic_q_sequence(uint32_t count, uint64_t* out_terms);

/* ------------------------------------------------------------------ */
/* Coefficient table                                                   */
/* ------------------------------------------------------------------ */

/* One row per (m, l), 0 <= l <= m <= m_max, lexicographic. JSON rows carry
 * {"m","l","odd_part","pow2_exponent","nu2","nu3"}; CSV has the same
 * columns with a header row and LF line endings. */
quartic_status quartic_table_render(uint32_t m_max, quartic_format format, char** out);
quartic_status quartic_table_write(uint32_t m_max, quartic_format format, const char* path);

/* ------------------------------------------------------------------ */
/* Quadrature cross-check                                              */
/* ------------------------------------------------------------------ */

/* Relative error of (2^{m+3/2}/pi)(a+1)^{m+1/2} N(a;m) against the exact
 * P_m(a); requires a > -1 and tol > 0. */
quartic_status quartic_quad_identity(double a, uint32_t m, double tol, double* out_rel_error);

#ifdef __cplusplus
}
#endif

#endif /* QUARTIC_QUARTIC_H */
