/*
 * polignac.h - C interface to the polignac congruence library.
 *
 * All objects are opaque handles created by a pg_*_create / pg_* call that
 * returns PG_OK and released with the matching pg_*_destroy. Functions report
 * failure through pg_status; the message of the most recent failure on the
 * calling thread is available from pg_last_error().
 *
 * Arbitrary-precision operands (theorem arguments, scheme coefficients,
 * residuals) cross the boundary as NUL-terminated decimal strings. Strings
 * returned through `char**` out-parameters are owned by the caller and must be
 * released with pg_string_free. Strings returned directly (const char*) are
 * owned by the handle they were read from.
 */
#ifndef POLIGNAC_H
#define POLIGNAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(PG_BUILDING_LIBRARY)
#define PG_API __attribute__((visibility("default")))
#else
#define PG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_DOMAIN = 1,           /* input outside the operation's domain */
  PG_ERR_PRECONDITION = 2,     /* coprimality / admissibility failure */
  PG_ERR_INVALID_ARGUMENT = 3, /* null pointer, malformed number, unknown name */
  PG_ERR_INTERNAL = 4
} pg_status;

PG_API const char* pg_status_string(pg_status status);
PG_API const char* pg_last_error(void);
PG_API void pg_string_free(char* s);

/* ---------------------------------------------------------------- oracle */

typedef struct pg_oracle pg_oracle;

PG_API pg_status pg_oracle_create(uint64_t limit, pg_oracle** out);
PG_API void pg_oracle_destroy(pg_oracle* oracle);
PG_API uint64_t pg_oracle_limit(const pg_oracle* oracle);
/* number of primes <= limit */
PG_API uint64_t pg_oracle_prime_count(const pg_oracle* oracle);
PG_API pg_status pg_oracle_is_prime(const pg_oracle* oracle, uint64_t n, int* out);

typedef struct pg_list pg_list;

PG_API size_t pg_list_size(const pg_list* list);
PG_API uint64_t pg_list_at(const pg_list* list, size_t index);
PG_API void pg_list_destroy(pg_list* list);

PG_API pg_status pg_oracle_primes(const pg_oracle* oracle, pg_list** out);
/* p <= limit with p and p+2k prime; needs limit + 2k <= oracle limit */
PG_API pg_status pg_oracle_pairs(const pg_oracle* oracle, uint64_t k, uint64_t limit,
                                 pg_list** out);
/* *found = 0 when m admits no decomposition into distinct odd primes */
PG_API pg_status pg_oracle_goldbach(const pg_oracle* oracle, uint64_t m, int* found,
                                    uint64_t* p1, uint64_t* p2);
PG_API pg_status pg_pnt_estimate(uint64_t n, double* out);

/* -------------------------------------------------------------- theorems */

typedef enum pg_theorem {
  PG_WILSON = 0,
  PG_CLEMENT,
  PG_POLIGNAC_FACTORIAL,
  PG_SIMIONOV,
  PG_HALF_WILSON,
  PG_TWIN_HALF,
  PG_POLIGNAC_HALF,
  PG_GOLDBACH_COROLLARY,
  PG_DUAL_INDEX_COROLLARY
} pg_theorem;

typedef enum pg_verdict_kind {
  PG_SATISFIED = 0,
  PG_NOT_SATISFIED = 1,
  PG_PRECONDITION_VIOLATED = 2
} pg_verdict_kind;

PG_API pg_status pg_theorem_parse(const char* name, pg_theorem* out);
PG_API const char* pg_theorem_name(pg_theorem theorem);
PG_API const char* pg_theorem_statement(pg_theorem theorem);
/* 1 when only "p prime => Satisfied" is asserted */
PG_API int pg_theorem_is_forward_only(pg_theorem theorem);

/* Decimal-string arguments; unused ones may be NULL. */
typedef struct pg_test_args {
  const char* p;
  const char* k;
  const char* k1;
  const char* k2;
  const char* p1;
  const char* p2;
} pg_test_args;

typedef struct pg_verdict pg_verdict;

/* `oracle` is consulted by PG_GOLDBACH_COROLLARY only; when NULL a sieve
 * covering max(p1, p2) is built for the call. */
PG_API pg_status pg_test(pg_theorem theorem, const pg_test_args* args, const pg_oracle* oracle,
                         pg_verdict** out);
PG_API void pg_verdict_destroy(pg_verdict* verdict);
PG_API pg_verdict_kind pg_verdict_get_kind(const pg_verdict* verdict);
/* "" unless PG_PRECONDITION_VIOLATED */
PG_API const char* pg_verdict_reason(const pg_verdict* verdict);
/* "" when PG_PRECONDITION_VIOLATED */
PG_API const char* pg_verdict_residual(const pg_verdict* verdict);
PG_API const char* pg_verdict_modulus(const pg_verdict* verdict);
PG_API uint64_t pg_verdict_mults(const pg_verdict* verdict);
/* "Satisfied residual=0 mod 35" / "PreconditionViolated: <reason>" */
PG_API const char* pg_verdict_describe(const pg_verdict* verdict);

/* ------------------------------------------------------------------ scan */

typedef enum pg_format { PG_FORMAT_TABLE = 0, PG_FORMAT_CSV = 1 } pg_format;

typedef struct pg_scan_config {
  uint64_t p_min;
  uint64_t p_max;
  uint64_t k;
  const pg_theorem* theorems;
  size_t theorem_count;
  int count_mults;
  unsigned jobs; /* 0 or 1: serial */
} pg_scan_config;

typedef struct pg_scan pg_scan;

PG_API pg_status pg_scan_run(const pg_scan_config* config, const pg_oracle* oracle,
                             pg_scan** out);
PG_API void pg_scan_destroy(pg_scan* scan);
PG_API uint64_t pg_scan_rows(const pg_scan* scan);
PG_API uint64_t pg_scan_mismatches(const pg_scan* scan);
PG_API uint64_t pg_scan_oracle_pairs(const pg_scan* scan);
PG_API pg_status pg_scan_theorem_tally(const pg_scan* scan, pg_theorem theorem,
                                       uint64_t* satisfied, uint64_t* skipped,
                                       uint64_t* mismatches, uint64_t* mults);
PG_API pg_status pg_scan_emit(const pg_scan* scan, pg_format format, char** out);

/* ------------------------------------------------------------- synthesis */

typedef struct pg_scheme pg_scheme;

typedef enum pg_scheme_field {
  PG_SCHEME_LAMBDA = 0,
  PG_SCHEME_G,
  PG_SCHEME_C1,
  PG_SCHEME_C2,
  PG_SCHEME_X,
  PG_SCHEME_Y
} pg_scheme_field;

/* c1, c2 may carry a leading '-' */
PG_API pg_status pg_solve(const char* lambda, const char* g, const char* c1, const char* c2,
                          pg_scheme** out);
PG_API pg_status pg_scheme_t3(uint64_t k, pg_scheme** out);
/* sign: +1 or -1, the value of (-1)^((p-1)/2) */
PG_API pg_status pg_scheme_t7(uint64_t k, int sign, pg_scheme** out);
PG_API void pg_scheme_destroy(pg_scheme* scheme);
PG_API const char* pg_scheme_get(const pg_scheme* scheme, pg_scheme_field field);
PG_API int pg_scheme_identity_holds(const pg_scheme* scheme);
/* Field table, combined congruence, and (for t7 presets) the 4^k note. */
PG_API const char* pg_scheme_render(const pg_scheme* scheme);
/* Combined congruence only, e.g. "96[(p-1)!+1] ≡ -23p (mod p(p+4))". */
PG_API const char* pg_scheme_congruence(const pg_scheme* scheme);
PG_API pg_status pg_combine(const pg_scheme* scheme, const char* f1_residue, const char* p,
                            char** residual);

/* ----------------------------------------------------------------- bench */

typedef struct pg_bench_report {
  uint64_t p;
  uint64_t k;
  uint64_t mults_t3;
  uint64_t mults_t7;
  double ratio;
  int has_wall;
  int64_t wall_ns_t3;
  int64_t wall_ns_t7;
} pg_bench_report;

PG_API pg_status pg_bench_pair(uint64_t p, uint64_t k, int timed, pg_bench_report* out);
/* CSV for odd admissible p in [from, to] */
PG_API pg_status pg_bench_sweep_csv(uint64_t from, uint64_t to, uint64_t k, int timed,
                                    char** out);
PG_API pg_status pg_bench_csv(const pg_bench_report* reports, size_t count, int with_wall,
                              char** out);

#ifdef __cplusplus
}
#endif

#endif /* POLIGNAC_H */
