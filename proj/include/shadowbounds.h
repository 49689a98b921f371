/*
 * C interface of libshadowbounds: exact upper bounds on the number of
 * minimum-weight shadow vectors of singly even self-dual binary codes, a
 * Johnson-scheme engine behind them, and a desk-scale GF(2) code verifier.
 *
 * All computation is exact (big integers and rationals); results come back
 * as JSON documents. Every function returning strings allocates them with
 * the library allocator; release them with sdb_string_free.
 */

#ifndef SHADOWBOUNDS_H
#define SHADOWBOUNDS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdb_status {
  SDB_OK = 0,
  SDB_ERR_DOMAIN = 1,   /* parameters outside the mathematical domain */
  SDB_ERR_PARSE = 2,    /* malformed input text */
  SDB_ERR_INTERNAL = 3  /* violated internal invariant; never expected */
} sdb_status;

const char* sdb_version(void);

void sdb_string_free(char* s);

/*
 * On success *out_json receives the result document and *out_error is left
 * untouched; on failure *out_error receives a message (when non-NULL).
 */

/* Second eigenmatrix of the Johnson graph J(v, d), exact fractions. */
sdb_status sdb_qmatrix_json(int64_t v, int64_t d, char** out_json, char** out_error);

/* Delsarte cap M on families of d-subsets pairwise meeting in one point. */
sdb_status sdb_bound_m_json(int64_t v, int64_t d, char** out_json, char** out_error);

/*
 * Bound on B_s, the number of weight-s = d/2+1 shadow vectors, for a singly
 * even self-dual [n, n/2, d] code. Set compare_prior to also get the
 * three-case baseline bound (n == 0 mod 4 only).
 */
sdb_status sdb_bound_json(int64_t n, int64_t d, int compare_prior, char** out_json, char** out_error);

/*
 * max{a+b : 0 <= a,b <= s, s(a+b) - ab <= n}; closed form for n < s^2 and,
 * with with_oracle, the exhaustive value plus all achieving pairs.
 */
sdb_status sdb_max_ab_json(int64_t s, int64_t n, int with_oracle, char** out_json, char** out_error);

/* The shipped parameter tables, recomputed on every call. */
sdb_status sdb_table1_json(char** out_json, char** out_error);
sdb_status sdb_table2_json(char** out_json, char** out_error);

/* Parameter-range refinement for a stored weight-enumerator family
 * (W42, W62, W72, W82, W90, W100). */
sdb_status sdb_restrict_json(const char* family, char** out_json, char** out_error);

/* Largest published minimum weight d(n) for the lengths shipped with the
 * library; SDB_ERR_DOMAIN when unknown. */
sdb_status sdb_known_dn(int64_t n, int64_t* out_dn);

/* GF(2) codes are held behind an opaque handle. */
typedef struct sdb_code sdb_code;

/*
 * Parse a generator matrix: one row of '0'/'1' per line, inline whitespace
 * ignored. Dependent rows are dropped; when that happens and out_warnings is
 * non-NULL it receives a newline-joined description.
 */
sdb_status sdb_code_parse(const char* text, sdb_code** out_code, char** out_warnings, char** out_error);

void sdb_code_free(sdb_code* code);

int64_t sdb_code_length(const sdb_code* code);
int64_t sdb_code_dimension(const sdb_code* code);

/*
 * Classification, weight distributions, shadow decomposition checks and the
 * applicable B_s bound comparison. Codeword enumeration is O(2^(n/2));
 * lengths above max_n are refused with SDB_ERR_DOMAIN.
 */
sdb_status sdb_code_verify_json(const sdb_code* code, int64_t max_n, char** out_json, char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* SHADOWBOUNDS_H */
