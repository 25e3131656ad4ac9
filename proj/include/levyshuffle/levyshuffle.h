/* levyshuffle C API: exact and Monte Carlo moments of planar Brownian
 * Levy area behind a shared-library boundary.
 *
 * Conventions:
 *   - Every fallible call returns a levy_status; out-parameters are written
 *     only on LEVY_OK.
 *   - Objects returned through levy_*_compute / levy_*_run are opaque and
 *     must be released with the matching *_free.
 *   - char** out_json receives a heap string owned by the caller; release
 *     it with levy_string_free.
 *   - levy_last_error() describes the most recent failure on this thread.
 */
#ifndef LEVYSHUFFLE_H
#define LEVYSHUFFLE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum levy_status {
  LEVY_OK = 0,
  LEVY_ERR_INVALID_ARGUMENT = 1,
  LEVY_ERR_LIMIT_EXCEEDED = 2,
  LEVY_ERR_IDENTITY_FAILURE = 3,
  LEVY_ERR_NOMEM = 4,
  LEVY_ERR_INTERNAL = 5
} levy_status;

const char* levy_version(void);
const char* levy_status_name(levy_status status);
const char* levy_last_error(void);
void levy_string_free(char* text);

/* ----- exact moment table ------------------------------------------------ */

typedef struct levy_moment_table levy_moment_table;

/* Moments E[A_T^n] for n = 0..n_max, every route. scale is the horizon T as
 * "1", "3/2", "pi", "2pi", ... (NULL means "1"). n_limit caps the expensive
 * contraction route; pass 0 for the default (8). */
levy_status levy_moment_table_compute(int n_max, const char* scale, int n_limit,
                                      levy_moment_table** out_table);
void levy_moment_table_free(levy_moment_table* table);
int levy_moment_table_rows(const levy_moment_table* table);
/* 1 when every row's routes agree exactly. */
int levy_moment_table_agreement(const levy_moment_table* table);
levy_status levy_moment_table_json(const levy_moment_table* table, char** out_json);

/* ----- identity verification suites -------------------------------------- */

typedef struct levy_verify_report levy_verify_report;

/* suite: "shuffle", "matchings", "numbers" or "all". */
levy_status levy_verify_run(const char* suite, int m_max, levy_verify_report** out_report);
void levy_verify_report_free(levy_verify_report* report);
int levy_verify_report_passed(const levy_verify_report* report);
int levy_verify_report_check_count(const levy_verify_report* report);
levy_status levy_verify_report_json(const levy_verify_report* report, char** out_json);

/* ----- integer sequences and matchings ----------------------------------- */

/* which: "euler" (E_0..E_count), "tangent" (T_1..T_count) or
 * "eulerian" (triangle rows 1..count). Values are decimal strings. */
levy_status levy_numbers_json(const char* which, int count, char** out_json);

/* Letter matchings of a word over {x,y}; negativity < 0 means no filter.
 * count_only != 0 returns counts instead of the full enumeration. */
levy_status levy_matchings_json(const char* word, int negativity, int count_only,
                                char** out_json);

/* Expansions of the s-fold xy / t-fold yx shuffle producing the word. */
levy_status levy_expansions_json(const char* word, int s, int t, int count_only,
                                 char** out_json);

/* ----- characteristic function ------------------------------------------- */

levy_status levy_charfn_partial_sum(double z, int n_terms, double* out_value);
levy_status levy_charfn_reference(double z, double* out_value);

/* ----- Monte Carlo -------------------------------------------------------- */

typedef struct levy_mc_config {
  long long samples;
  int steps;
  double horizon;   /* ignored by charfn, which fixes T = 2*pi */
  uint64_t seed;
  int workers;
  int antithetic;   /* 0/1; pairs samples with negated increments */
} levy_mc_config;

typedef struct levy_mc_result levy_mc_result;

levy_status levy_mc_moments(const int* orders, int order_count, const levy_mc_config* config,
                            levy_mc_result** out_result);
levy_status levy_mc_charfn(const double* z_values, int z_count, const levy_mc_config* config,
                           levy_mc_result** out_result);
levy_status levy_mc_signature(int level, const levy_mc_config* config,
                              levy_mc_result** out_result);
void levy_mc_result_free(levy_mc_result* result);
int levy_mc_result_count(const levy_mc_result* result);
levy_status levy_mc_result_row(const levy_mc_result* result, int index, double* out_estimate,
                               double* out_std_error, double* out_reference);
levy_status levy_mc_result_json(const levy_mc_result* result, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LEVYSHUFFLE_H */
