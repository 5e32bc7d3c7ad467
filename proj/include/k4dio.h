/*
 * k4dio - exhaustive desk-scale solvers for the Diophantine equation
 * families attached to simple K4-group orders, plus prime-pair sieving
 * and Bateman-Horn constant estimation.
 *
 * C interface over the C++ core. All big integers cross the boundary as
 * decimal strings. Collection results are opaque handles; string values
 * returned through `const char*` accessors stay owned by their handle and
 * remain valid until the handle is freed. Every function that can fail
 * returns a k4dio_status; k4dio_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef K4DIO_H
#define K4DIO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k4dio_status {
    K4DIO_OK = 0,
    K4DIO_ERR_INVALID_ARGUMENT = 1,
    K4DIO_ERR_UNKNOWN_FAMILY = 2,
    K4DIO_ERR_UNSUPPORTED = 3,
    K4DIO_ERR_UNCERTAIN_FACTORIZATION = 4,
    K4DIO_ERR_BUFFER_TOO_SMALL = 5,
    K4DIO_ERR_BAD_INDEX = 6,
    K4DIO_ERR_INTERNAL = 7
} k4dio_status;

const char* k4dio_status_name(k4dio_status status);
const char* k4dio_version(void);
/* thread-local; valid until the next failing call on this thread */
const char* k4dio_last_error(void);

/* ------------------------------------------------------------------ */
/* search bounds                                                       */

typedef struct k4dio_bounds {
    uint64_t max_p;
    uint64_t max_q;
    uint32_t max_m;
    uint32_t max_exp;
    uint64_t max_base;
    uint64_t trial_division_bound;
    uint32_t mr_rounds;
    uint32_t threads;
} k4dio_bounds;

void k4dio_bounds_init(k4dio_bounds* bounds);

/* ------------------------------------------------------------------ */
/* integer primitives                                                  */

k4dio_status k4dio_is_prime(const char* n_dec, uint32_t mr_rounds, int* out_is_prime);

/* n = 2^a * 3^b * rest; rest_buf receives the decimal rest */
k4dio_status k4dio_factor_out_2_3(const char* n_dec, uint32_t* out_a, uint32_t* out_b,
                                  char* rest_buf, size_t rest_cap);

/* found=1 and base/exp filled when n is a perfect power (maximal exponent) */
k4dio_status k4dio_perfect_power(const char* n_dec, char* base_buf, size_t base_cap,
                                 uint32_t* out_exp, int* out_found);

k4dio_status k4dio_integer_nth_root(const char* n_dec, uint32_t k, char* root_buf,
                                    size_t root_cap, int* out_exact);

/* ascending residues r in [0, 2^a) with r^2 = 1 (mod 2^a), space-separated */
k4dio_status k4dio_sqrt_one_residues_mod_pow2(uint32_t a, char* buf, size_t cap);

typedef struct k4dio_factorization k4dio_factorization;
k4dio_status k4dio_factorize(const char* n_dec, const k4dio_bounds* bounds,
                             k4dio_factorization** out);
size_t k4dio_factorization_size(const k4dio_factorization* fz);
k4dio_status k4dio_factorization_entry(const k4dio_factorization* fz, size_t index,
                                       const char** out_prime, uint32_t* out_exp);
/* "1" when fully factored */
const char* k4dio_factorization_cofactor(const k4dio_factorization* fz);
const char* k4dio_factorization_str(const k4dio_factorization* fz);
void k4dio_factorization_free(k4dio_factorization* fz);

/* ------------------------------------------------------------------ */
/* primitive prime divisors of a^n +- b^n                              */

typedef enum k4dio_zsig_exception {
    K4DIO_ZSIG_NONE = 0,
    K4DIO_ZSIG_CUBE_PLUS = 1,
    K4DIO_ZSIG_MERSENNE_SIX = 2,
    K4DIO_ZSIG_POWER_OF_TWO_SQUARE = 3
} k4dio_zsig_exception;

/* classification only; no big powers are computed */
k4dio_status k4dio_zsigmondy_exception(uint64_t a, uint64_t b, uint32_t n, int sign_plus,
                                       k4dio_zsig_exception* out_tag);

/* divisor_buf receives the smallest primitive divisor when out_tag is NONE */
k4dio_status k4dio_primitive_prime_divisor(uint64_t a, uint64_t b, uint32_t n, int sign_plus,
                                           const k4dio_bounds* bounds, char* divisor_buf,
                                           size_t divisor_cap, k4dio_zsig_exception* out_tag);

/* ------------------------------------------------------------------ */
/* equation families                                                   */

typedef struct k4dio_solutions k4dio_solutions;

/* family: "F1".."F25", "L2".."L6", "L10even". min_exp is the lower bound on
 * c (F1) or n (F2..F4); pass 1 when not constraining. */
k4dio_status k4dio_solve_family(const char* family, const k4dio_bounds* bounds,
                                uint32_t min_exp, k4dio_solutions** out);
/* the p-scan route for F1 with c >= 2, with case-system tags */
k4dio_status k4dio_solve_family1_structured(const k4dio_bounds* bounds, k4dio_solutions** out);

size_t k4dio_solutions_size(const k4dio_solutions* sols);
/* values in family display order, space-separated */
const char* k4dio_solution_line(const k4dio_solutions* sols, size_t index);
/* field in {"p","q","a","b","c","m","n","x","y"}; NULL when absent */
const char* k4dio_solution_field(const k4dio_solutions* sols, size_t index, const char* field);
/* "(8)/(12)" etc. for structured-route solutions; NULL when untagged */
const char* k4dio_solution_case_system(const k4dio_solutions* sols, size_t index);
void k4dio_solutions_free(k4dio_solutions* sols);

/* space-separated display fields of a family, e.g. "p q m n" */
k4dio_status k4dio_family_fields(const char* family, char* buf, size_t cap);
k4dio_status k4dio_family_equation(const char* family, char* buf, size_t cap);
/* newline-separated list of all family tags */
k4dio_status k4dio_family_list(char* buf, size_t cap);

/* branch: +1 or -1; k_buf receives the offset count; system_buf the case
 * tag ("(8)/(12)", "(16)", ...) or "" when 2k+1 fits no pattern */
k4dio_status k4dio_classify_case_system(const char* p_dec, uint32_t a, int* out_branch,
                                        char* k_buf, size_t k_cap, char* system_buf,
                                        size_t system_cap);

/* ------------------------------------------------------------------ */
/* verification reports                                                */

typedef struct k4dio_report k4dio_report;

k4dio_status k4dio_verify_theorem1(const k4dio_bounds* bounds, k4dio_report** out);
/* inject_fault != 0 corrupts one result set; the run must then fail */
k4dio_status k4dio_verify_paper(const k4dio_bounds* bounds, int inject_fault,
                                k4dio_report** out);

int k4dio_report_pass(const k4dio_report* report);
size_t k4dio_report_size(const k4dio_report* report);
/* status: 0 pass, 1 fail, 2 warn */
k4dio_status k4dio_report_entry(const k4dio_report* report, size_t index,
                                const char** out_name, int* out_status,
                                const char** out_detail);
size_t k4dio_report_warning_count(const k4dio_report* report);
const char* k4dio_report_warning(const k4dio_report* report, size_t index);
void k4dio_report_free(k4dio_report* report);

/* ------------------------------------------------------------------ */
/* K4 candidate orders                                                 */

typedef struct k4dio_k4_list k4dio_k4_list;

k4dio_status k4dio_k4_check(uint64_t q, const k4dio_bounds* bounds, k4dio_k4_list** out);
k4dio_status k4dio_k4_enumerate(uint64_t max_q, const k4dio_bounds* bounds,
                                int include_rejected, k4dio_k4_list** out);
size_t k4dio_k4_size(const k4dio_k4_list* list);
/* field in {"q","base","exp","order","verdict","primes","factorization",
 * "families"}; NULL on unknown field */
const char* k4dio_k4_field(const k4dio_k4_list* list, size_t index, const char* field);
void k4dio_k4_free(k4dio_k4_list* list);

/* ------------------------------------------------------------------ */
/* linear systems, sieving, Bateman-Horn                               */

/* spec grammar: "(26)".."(32)", "(30a)", "(30b)", "twin", "sophie", or
 * semicolon-separated forms "c1,...,cn,const". canon_buf receives the
 * canonical spec string; pretty_buf the rendered "{x, 3x-2}". */
k4dio_status k4dio_parse_system(const char* spec, char* canon_buf, size_t canon_cap,
                                char* pretty_buf, size_t pretty_cap);
/* newline-separated "name spec pretty" rows */
k4dio_status k4dio_builtin_systems(char* buf, size_t cap);

k4dio_status k4dio_admissible(const char* spec, uint64_t prime_bound, int* out_admissible,
                              uint64_t* out_blocking_prime /* 0 when none */,
                              uint64_t* out_tested_bound,
                              char* witness_buf /* "r:x;..." rows */, size_t witness_cap,
                              char* positivity_buf, size_t positivity_cap);

k4dio_status k4dio_count_simultaneous_primes(const char* spec, uint64_t h, uint32_t threads,
                                             uint64_t* out_count);

k4dio_status k4dio_bateman_horn(const char* spec, uint64_t euler_prime_bound,
                                int* out_admissible, double* out_cf, double* out_last_delta);

/* out_primary: 1 when the integral refinement is the primary estimate */
k4dio_status k4dio_predicted_count(const char* spec, uint64_t h, double cf,
                                   double* out_closed, double* out_integral,
                                   int* out_integral_available);

k4dio_status k4dio_count_prime_aps(uint32_t length_m, uint64_t h, uint64_t* out_count);

typedef struct k4dio_gap_table k4dio_gap_table;
k4dio_status k4dio_gap_pair_counts(uint64_t max_gap, uint64_t n, k4dio_gap_table** out);
size_t k4dio_gap_table_size(const k4dio_gap_table* table);
k4dio_status k4dio_gap_table_entry(const k4dio_gap_table* table, size_t index,
                                   uint64_t* out_gap, uint64_t* out_count);
void k4dio_gap_table_free(k4dio_gap_table* table);

/* one-call empirical vs predicted summary for a system */
typedef struct k4dio_sieve_summary {
    uint64_t empirical_count;
    int admissible;
    uint64_t blocking_prime; /* 0 when none */
    double cf;
    double predicted_closed;
    double predicted_integral;
    int integral_available;
    double ratio; /* empirical / primary prediction; 0 when unavailable */
} k4dio_sieve_summary;

k4dio_status k4dio_sieve_report(const char* spec, uint64_t h, uint64_t euler_prime_bound,
                                uint32_t threads, k4dio_sieve_summary* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* K4DIO_H */
