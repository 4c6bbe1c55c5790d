/* C interface to the sum-intersecting family toolkit.
 *
 * Every operation fills an opaque report handle on success. A report owns a
 * JSON rendering (always) and a CSV rendering (scans only), plus a pass/fail
 * outcome. Rationals appear in both renderings as exact "num/den" strings.
 *
 * Functions return SUMINT_OK or an error code; the message for the most
 * recent failure on the calling thread is available from sumint_last_error().
 * Reports must be released with sumint_report_free().
 */
#ifndef SUMINT_SUMINT_H
#define SUMINT_SUMINT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SUMINT_API __declspec(dllexport)
#else
#  define SUMINT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sumint_status {
  SUMINT_OK = 0,
  SUMINT_ERR_INVALID_ARGUMENT = 1,
  SUMINT_ERR_UNBOUNDED = 2,
  SUMINT_ERR_NOT_SUM_INTERSECTING = 3,
  SUMINT_ERR_COMPLEMENT_NOT_SUM_FREE = 4,
  SUMINT_ERR_CAP_EXCEEDED = 5,
  SUMINT_ERR_DIMENSION_MISMATCH = 6,
  SUMINT_ERR_PRECONDITION = 7,
  SUMINT_ERR_INTERNAL = 8
} sumint_status;

typedef struct sumint_report sumint_report;

SUMINT_API const char* sumint_version(void);
SUMINT_API const char* sumint_status_name(sumint_status status);
/* Message of the last failed call on this thread ("" if none). */
SUMINT_API const char* sumint_last_error(void);
/* Caps worker threads used by scans; 0 restores the hardware default. */
SUMINT_API void sumint_set_threads(unsigned threads);

/* Rationals are passed in as "num/den" strings; certificates as arrays of them. */

SUMINT_API sumint_status sumint_dist(const uint64_t* set, size_t len, sumint_report** out);
SUMINT_API sumint_status sumint_joint(const uint64_t* set, size_t len, sumint_report** out);
SUMINT_API sumint_status sumint_slice(const uint64_t* set, size_t len, const char* alpha, sumint_report** out);

SUMINT_API sumint_status sumint_two_point_check(uint64_t max, sumint_report** out);
SUMINT_API sumint_status sumint_obs_check(uint64_t max, sumint_report** out);
SUMINT_API sumint_status sumint_triple_scan(uint64_t max, sumint_report** out);
SUMINT_API sumint_status sumint_pzero_scan(uint64_t max, uint64_t size, sumint_report** out);
SUMINT_API sumint_status sumint_bohr_scan(uint64_t max, uint64_t size, sumint_report** out);

SUMINT_API sumint_status sumint_mu(const uint64_t* set, size_t len, const char* const* cert, size_t ncoeffs,
                                   sumint_report** out);
SUMINT_API sumint_status sumint_verify_cert(const char* const* cert, size_t ncoeffs, uint64_t pool_max,
                                            uint64_t pool_size, sumint_report** out);
SUMINT_API sumint_status sumint_tail_verify(const char* const* cert, size_t ncoeffs, sumint_report** out);
SUMINT_API sumint_status sumint_lp_search(uint64_t pool_max, uint64_t pool_size, unsigned m, sumint_report** out);

/* Families use the textual forms "superset:1,2", "explicit:1,2;1,2,3" and "all". */
SUMINT_API sumint_status sumint_build_nu(unsigned n, const char* const* cert, size_t ncoeffs, sumint_report** out);
SUMINT_API sumint_status sumint_fourier_check(unsigned n, const char* family, const char* const* cert,
                                              size_t ncoeffs, sumint_report** out);
SUMINT_API sumint_status sumint_pointmass_check(unsigned n, const uint64_t* subset, size_t len, const char* family,
                                                sumint_report** out);

/* predicate: "sum", "distinct-sum" or "ksum:K"; cap 0 selects the default cap. */
SUMINT_API sumint_status sumint_extremal(unsigned n, const char* predicate, unsigned cap, sumint_report** out);

SUMINT_API const char* sumint_report_json(const sumint_report* report);
/* NULL for reports without a tabular form. */
SUMINT_API const char* sumint_report_csv(const sumint_report* report);
/* 1 when the check passed (VALID, no violations, no counterexample), else 0. */
SUMINT_API int sumint_report_passed(const sumint_report* report);
SUMINT_API void sumint_report_free(sumint_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SUMINT_SUMINT_H */
