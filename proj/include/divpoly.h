/*
   Copyright 2026 The divpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface of libdivpoly: exact arithmetic on divisibility polynomials,
 * cyclotomic factorizations, saturated divisor sets, labeled Hasse
 * diagrams, and the integer divisibility sequences they generate.
 *
 * Conventions:
 *   - Every fallible function returns a divpoly_status; DIVPOLY_OK is 0.
 *     On failure, divpoly_last_error() returns a thread-local message.
 *   - Objects are opaque handles created and destroyed by this library.
 *     Handles are immutable after creation and may be shared between
 *     threads.
 *   - Arbitrary-precision integers cross the boundary as decimal strings.
 *     Strings returned through `char **` out-parameters are heap
 *     allocated; release them with divpoly_string_free().
 *   - Array getters follow a two-call pattern: pass buf = NULL to query
 *     the count, then call again with a buffer of sufficient capacity.
 */

#ifndef DIVPOLY_H
#define DIVPOLY_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIVPOLY_BUILD)
#    define DIVPOLY_API __declspec(dllexport)
#  else
#    define DIVPOLY_API __declspec(dllimport)
#  endif
#else
#  define DIVPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum divpoly_status {
  DIVPOLY_OK = 0,
  DIVPOLY_ERR_INVALID_ARGUMENT = 1,
  DIVPOLY_ERR_BUFFER_TOO_SMALL = 2,
  DIVPOLY_ERR_PARSE = 3,
  DIVPOLY_ERR_ZERO_POLYNOMIAL = 4,
  DIVPOLY_ERR_INEXACT_DIVISION = 5,
  DIVPOLY_ERR_NON_INTEGRAL_NORMAL_PART = 6,
  DIVPOLY_ERR_NOT_CYCLOTOMIC_PRODUCT = 7,
  DIVPOLY_ERR_NOT_ORDER_REVERSING = 8,
  DIVPOLY_ERR_EMPTY_SET = 9,
  DIVPOLY_ERR_EMPTY_SUPPORT = 10,
  DIVPOLY_ERR_INVALID_ORDER = 11,
  DIVPOLY_ERR_ASYMMETRY_VIOLATION = 12,
  DIVPOLY_ERR_DEGENERATE_DENOMINATOR = 13,
  DIVPOLY_ERR_DEGENERATE_PARAMETERS = 14,
  DIVPOLY_ERR_INTEGRALITY_VIOLATION = 15,
  DIVPOLY_ERR_OUT_OF_MEMORY = 16,
  DIVPOLY_ERR_INTERNAL = 17
} divpoly_status;

/* Opaque handles. */
typedef struct divpoly_poly divpoly_poly;   /* integer polynomial           */
typedef struct divpoly_set divpoly_set;     /* saturated (divisor-closed) set */
typedef struct divpoly_map divpoly_map;     /* multiplicity map             */
typedef struct divpoly_hasse divpoly_hasse; /* labeled Hasse diagram        */

/* Core/exponent pair of the canonical factorization. */
typedef struct divpoly_canon_factor {
  divpoly_set* core;
  uint64_t exponent;
} divpoly_canon_factor;

/* ------------------------------------------------------------------ */
/* Diagnostics and memory                                              */

DIVPOLY_API const char* divpoly_version(void);
/* Thread-local message of the most recent failure ("" after success). */
DIVPOLY_API const char* divpoly_last_error(void);
DIVPOLY_API const char* divpoly_status_name(divpoly_status status);

DIVPOLY_API void divpoly_string_free(char* s);
DIVPOLY_API void divpoly_string_array_free(char** strings, uint64_t count);
DIVPOLY_API void divpoly_canon_factors_free(divpoly_canon_factor* factors,
                                            uint64_t count);
DIVPOLY_API void divpoly_set_array_free(divpoly_set** sets, uint64_t count);

/* ------------------------------------------------------------------ */
/* Polynomials                                                         */

/* Grammar: signed integer-coefficient monomials in x, '^' for powers,
 * optional '*', whitespace-insensitive, e.g. "x^4+x^3-x-1". */
DIVPOLY_API divpoly_status divpoly_poly_parse(const char* text,
                                              divpoly_poly** out);
DIVPOLY_API void divpoly_poly_free(divpoly_poly* p);
/* Canonical monomial form; parsing it reproduces the polynomial. */
DIVPOLY_API divpoly_status divpoly_poly_format(const divpoly_poly* p, char** out);
/* Degree; -1 for the zero polynomial. */
DIVPOLY_API divpoly_status divpoly_poly_degree(const divpoly_poly* p, int64_t* out);
/* Decimal coefficient of x^i (i beyond the degree yields "0"). */
DIVPOLY_API divpoly_status divpoly_poly_coeff(const divpoly_poly* p, uint64_t i,
                                              char** out);
DIVPOLY_API divpoly_status divpoly_poly_equal(const divpoly_poly* a,
                                              const divpoly_poly* b, int* out);

DIVPOLY_API divpoly_status divpoly_poly_mul(const divpoly_poly* a,
                                            const divpoly_poly* b,
                                            divpoly_poly** out);
/* Exact quotient over the integers; DIVPOLY_ERR_INEXACT_DIVISION when a
 * remainder or a fractional quotient coefficient appears. */
DIVPOLY_API divpoly_status divpoly_poly_divide_exact(const divpoly_poly* a,
                                                     const divpoly_poly* b,
                                                     divpoly_poly** out);
/* f(x^n), n >= 1. */
DIVPOLY_API divpoly_status divpoly_poly_compose_power(const divpoly_poly* f,
                                                      uint64_t n,
                                                      divpoly_poly** out);
/* f(v) for a decimal integer v. */
DIVPOLY_API divpoly_status divpoly_poly_evaluate(const divpoly_poly* f,
                                                 const char* value,
                                                 char** out);
DIVPOLY_API divpoly_status divpoly_poly_is_palindromic(const divpoly_poly* f,
                                                       int* out);
/* f = C * x^s * g with g monic of nonzero constant term. */
DIVPOLY_API divpoly_status divpoly_poly_normal_decompose(const divpoly_poly* f,
                                                         char** constant_out,
                                                         uint64_t* power_out,
                                                         divpoly_poly** normal_out);
/* Primitive gcd over the rationals, positive leading coefficient. */
DIVPOLY_API divpoly_status divpoly_poly_gcd(const divpoly_poly* a,
                                            const divpoly_poly* b,
                                            divpoly_poly** out);

/* ------------------------------------------------------------------ */
/* Cyclotomic polynomials                                              */

DIVPOLY_API divpoly_status divpoly_cyclotomic(uint64_t n, divpoly_poly** out);
DIVPOLY_API divpoly_status divpoly_euler_totient(uint64_t n, uint64_t* out);
/* Product of the distinct cyclotomics indexed by the set (1 if empty). */
DIVPOLY_API divpoly_status divpoly_phi_of_set(const divpoly_set* s,
                                              divpoly_poly** out);
/* Product of cyclotomic powers prescribed by the map (1 for the zero map). */
DIVPOLY_API divpoly_status divpoly_phi_of_map(const divpoly_map* m,
                                              divpoly_poly** out);

/* ------------------------------------------------------------------ */
/* Saturated sets                                                      */

/* All divisors of at least one generator; generators must be positive. */
DIVPOLY_API divpoly_status divpoly_set_saturate(const uint64_t* generators,
                                                uint64_t count,
                                                divpoly_set** out);
DIVPOLY_API void divpoly_set_free(divpoly_set* s);
DIVPOLY_API divpoly_status divpoly_set_elements(const divpoly_set* s,
                                                uint64_t* buf, uint64_t capacity,
                                                uint64_t* count);
DIVPOLY_API divpoly_status divpoly_set_maximal_generators(const divpoly_set* s,
                                                          uint64_t* buf,
                                                          uint64_t capacity,
                                                          uint64_t* count);
DIVPOLY_API divpoly_status divpoly_set_equal(const divpoly_set* a,
                                             const divpoly_set* b, int* out);
/* Elementwise products {s*t}. */
DIVPOLY_API divpoly_status divpoly_set_product(const divpoly_set* a,
                                               const divpoly_set* b,
                                               divpoly_set** out);
/* Index set of Phi_S(x^n). */
DIVPOLY_API divpoly_status divpoly_set_decompress(const divpoly_set* s, uint64_t n,
                                                  divpoly_set** out);
/* Core with generator gcd 1 plus the extracted exponent. */
DIVPOLY_API divpoly_status divpoly_set_compress_core(const divpoly_set* s,
                                                     divpoly_set** core_out,
                                                     uint64_t* exponent_out);
/* *found = 1 and *n_out = N when the set is the full divisor set of N. */
DIVPOLY_API divpoly_status divpoly_set_is_principal(const divpoly_set* s,
                                                    int* found, uint64_t* n_out);
/* First pair 1 <= m < n <= bound violating
 * <m>S intersect <n>S == <gcd(m,n)>S, if any. */
DIVPOLY_API divpoly_status divpoly_set_strong_identity_check(
    const divpoly_set* s, uint64_t bound, int* found, uint64_t* m_out,
    uint64_t* n_out);

/* ------------------------------------------------------------------ */
/* Multiplicity maps                                                   */

/* Entries (keys[i] -> multiplicities[i]); keys must be positive and
 * distinct, zero multiplicities are dropped. */
DIVPOLY_API divpoly_status divpoly_map_create(const uint64_t* keys,
                                              const uint64_t* multiplicities,
                                              uint64_t count, divpoly_map** out);
DIVPOLY_API void divpoly_map_free(divpoly_map* m);
/* Indicator map of a set (multiplicity 1 everywhere on it). */
DIVPOLY_API divpoly_status divpoly_map_indicator(const divpoly_set* s,
                                                 divpoly_map** out);
DIVPOLY_API divpoly_status divpoly_map_entries(const divpoly_map* m,
                                               uint64_t* keys_buf,
                                               uint64_t* mults_buf,
                                               uint64_t capacity, uint64_t* count);
DIVPOLY_API divpoly_status divpoly_map_at(const divpoly_map* m, uint64_t h,
                                          uint64_t* out);
DIVPOLY_API divpoly_status divpoly_map_equal(const divpoly_map* a,
                                             const divpoly_map* b, int* out);
DIVPOLY_API divpoly_status divpoly_map_is_order_reversing(const divpoly_map* m,
                                                          int* out);
/* Indecomposability of the corresponding polynomial: map(1) == 1. */
DIVPOLY_API divpoly_status divpoly_map_is_indecomposable(const divpoly_map* m,
                                                         int* out);
/* Level sets {h : map(h) >= j} for j = 1..map(1), largest first. Free the
 * result with divpoly_set_array_free. */
DIVPOLY_API divpoly_status divpoly_map_slicing_layers(const divpoly_map* m,
                                                      divpoly_set*** layers_out,
                                                      uint64_t* count_out);

/* ------------------------------------------------------------------ */
/* Hasse diagrams                                                      */

DIVPOLY_API divpoly_status divpoly_hasse_build(const divpoly_map* m,
                                               divpoly_hasse** out);
DIVPOLY_API void divpoly_hasse_free(divpoly_hasse* h);
DIVPOLY_API divpoly_status divpoly_hasse_node_count(const divpoly_hasse* h,
                                                    uint64_t* out);
DIVPOLY_API divpoly_status divpoly_hasse_edge_count(const divpoly_hasse* h,
                                                    uint64_t* out);
DIVPOLY_API divpoly_status divpoly_hasse_node(const divpoly_hasse* h,
                                              uint64_t index, uint64_t* value_out,
                                              uint64_t* multiplicity_out);
DIVPOLY_API divpoly_status divpoly_hasse_edge(const divpoly_hasse* h,
                                              uint64_t index, uint64_t* lower_out,
                                              uint64_t* upper_out);
/* DOT digraph text, deterministic node and edge order. */
DIVPOLY_API divpoly_status divpoly_hasse_dot(const divpoly_hasse* h, char** out);

/* ------------------------------------------------------------------ */
/* Recognition and canonical form                                      */

/* Decomposes f = C * x^s * Phi_map with an order-reversing map, i.e.
 * decides whether f divides f(x^n) for every n. Failure statuses:
 * NOT_CYCLOTOMIC_PRODUCT, NOT_ORDER_REVERSING, NON_INTEGRAL_NORMAL_PART,
 * ZERO_POLYNOMIAL. */
DIVPOLY_API divpoly_status divpoly_recognize(const divpoly_poly* f,
                                             char** constant_out,
                                             uint64_t* power_out,
                                             divpoly_map** map_out);
/* Tests f(x) | f(x^n) for 2 <= n <= n_max by rational long division;
 * *found = 1 and *n_out = first failing n when there is one. */
DIVPOLY_API divpoly_status divpoly_oracle_composition_divides(
    const divpoly_poly* f, uint64_t n_max, int* found, uint64_t* n_out);
/* f = C * x^s * prod_j Phi_{core_j}(x^{exponent_j}), cores with generator
 * gcd 1. Free the factor array with divpoly_canon_factors_free. */
DIVPOLY_API divpoly_status divpoly_canonical_form(const divpoly_poly* f,
                                                  char** constant_out,
                                                  uint64_t* power_out,
                                                  divpoly_canon_factor** factors_out,
                                                  uint64_t* count_out);

/* ------------------------------------------------------------------ */
/* Lucas-pair sequences                                                */

/* alpha^n = a + b*alpha in the ring with alpha^2 = P*alpha - Q; both
 * components as decimal strings. */
DIVPOLY_API divpoly_status divpoly_alpha_power(int64_t p, int64_t q, uint64_t n,
                                               char** a_out, char** b_out);
/* S_n = (alpha^n - beta^n)/(alpha - beta). */
DIVPOLY_API divpoly_status divpoly_s_term(int64_t p, int64_t q, uint64_t n,
                                          char** out);
/* T_n = alpha^n + beta^n. */
DIVPOLY_API divpoly_status divpoly_trace_term(int64_t p, int64_t q, uint64_t n,
                                              char** out);
/* Phi_d(alpha^n, beta^n), d >= 2, n >= 1. */
DIVPOLY_API divpoly_status divpoly_phi_eval_at_power(uint64_t d, int64_t p,
                                                     int64_t q, uint64_t n,
                                                     char** out);
/* A_n = Phi_map(alpha^n, beta^n) / Phi_map(alpha, beta); the map must be
 * order-reversing. */
DIVPOLY_API divpoly_status divpoly_seq_term(const divpoly_map* m, int64_t p,
                                            int64_t q, uint64_t n, char** out);
/* [A_0, ..., A_{n_max}] as decimal strings; free with
 * divpoly_string_array_free. */
DIVPOLY_API divpoly_status divpoly_seq_range(const divpoly_map* m, int64_t p,
                                             int64_t q, uint64_t n_max,
                                             char*** terms_out,
                                             uint64_t* count_out);
/* First pair m | n, m < n <= n_max with A_m not dividing A_n, if any. */
DIVPOLY_API divpoly_status divpoly_verify_divisibility(const divpoly_map* m,
                                                       int64_t p, int64_t q,
                                                       uint64_t n_max, int* found,
                                                       uint64_t* m_out,
                                                       uint64_t* n_out);
/* First pair 2 <= m < n <= n_max with gcd(A_m, A_n) != |A_{gcd(m,n)}|. */
DIVPOLY_API divpoly_status divpoly_verify_strong_divisibility(
    const divpoly_map* m, int64_t p, int64_t q, uint64_t n_max, int* found,
    uint64_t* m_out, uint64_t* n_out);
/* First 2 < d <= d_max with |Phi_d(alpha, beta)| <= 1, if any. Rejects
 * Q = 0, P = 0 and P^2 = 4Q with DIVPOLY_ERR_DEGENERATE_PARAMETERS. */
DIVPOLY_API divpoly_status divpoly_phi_lower_bound_check(int64_t p, int64_t q,
                                                         uint64_t d_max,
                                                         int* found,
                                                         uint64_t* d_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DIVPOLY_H */
