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

#ifndef DIVPOLY_LUCAS_HPP
#define DIVPOLY_LUCAS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "satset.hpp"

namespace divpoly {

/// Lucas pair parameters: alpha and beta are the roots of
/// x^2 - P x + Q, so P = alpha + beta and Q = alpha * beta. (P, Q) =
/// (1, -1) gives the Fibonacci pair, (3, 2) the Mersenne pair.
struct RingParams {
  mpz_class P;
  mpz_class Q;
  friend bool operator==(const RingParams&, const RingParams&) = default;
};

/// Element a + b*alpha of Z[alpha] with alpha^2 = P*alpha - Q. All
/// sequence arithmetic happens here; no irrational intermediate ever
/// appears. Conjugation swaps alpha and beta = P - alpha.
class QuadInt {
 public:
  QuadInt(mpz_class a, mpz_class b, RingParams params)
      : a_(std::move(a)), b_(std::move(b)), params_(std::move(params)) {}

  static QuadInt one(const RingParams& params) { return {1, 0, params}; }
  static QuadInt alpha(const RingParams& params) { return {0, 1, params}; }

  const mpz_class& a() const noexcept { return a_; }
  const mpz_class& b() const noexcept { return b_; }
  const RingParams& params() const noexcept { return params_; }

  QuadInt conj() const { return {a_ + b_ * params_.P, -b_, params_}; }
  /// alpha^n + beta^n when applied to alpha^n: the map a + b*alpha |->
  /// 2a + bP.
  mpz_class trace() const { return 2 * a_ + b_ * params_.P; }

  QuadInt operator*(const QuadInt& o) const;
  QuadInt operator+(const QuadInt& o) const;
  QuadInt scaled(const mpz_class& c) const { return {a_ * c, b_ * c, params_}; }

  friend bool operator==(const QuadInt&, const QuadInt&) = default;

 private:
  mpz_class a_;
  mpz_class b_;
  RingParams params_;
};

/// alpha^n by square-and-multiply; n = 0 gives 1.
QuadInt alpha_power(const RingParams& params, std::uint64_t n);

/// S_n = (alpha^n - beta^n) / (alpha - beta), read off as the
/// alpha-component of alpha^n. Fibonacci numbers at (1, -1), Mersenne
/// numbers at (3, 2).
mpz_class s_term(const RingParams& params, std::uint64_t n);

/// T_n = alpha^n + beta^n (Lucas numbers at (1, -1)).
mpz_class trace_term(const RingParams& params, std::uint64_t n);

/// Phi_d(alpha^n, beta^n) for d >= 2, n >= 1: the homogenized cyclotomic
/// evaluated inside the ring. Symmetry of Phi_d in its two arguments for
/// d > 1 forces the alpha-component to cancel; a surviving component is
/// an internal bug and raises Errc::asymmetry_violation.
mpz_class phi_eval_at_power(std::uint64_t d, const RingParams& params,
                            std::uint64_t n);

/// True when the pair degenerates: alpha*beta = 0, alpha = +-beta, or
/// alpha/beta a root of unity. For integer parameters the ratio can only
/// be a root of unity of order 1, 2, 3, 4 or 6 (its minimal polynomial
/// over Q has degree <= 2), so testing those five evaluations covers
/// every case.
bool is_degenerate(const RingParams& params);

/// An order-reversing multiplicity map together with ring parameters;
/// defines the sequence A_n = Phi_map(alpha^n, beta^n) / Phi_map(alpha, beta).
class SequenceSpec {
 public:
  /// Raises Errc::not_order_reversing when the map is not order-reversing.
  SequenceSpec(MultiplicityMap map, RingParams params);

  const MultiplicityMap& map() const noexcept { return map_; }
  const RingParams& params() const noexcept { return params_; }

 private:
  MultiplicityMap map_;
  RingParams params_;
};

/// A_n. The numerator and denominator are multiplied out fully before a
/// single exact division: per-factor ratios need not be integers, only
/// the product is. A_1 = 1 always; A_0 = 0 whenever map(1) >= 1; for the
/// zero map every term is 1.
///
/// Errors: Errc::degenerate_denominator when some Phi_d(alpha, beta) = 0
/// for d > 1 in the support; Errc::integrality_violation when the
/// division is inexact (impossible for valid specs, kept as a hard check).
mpz_class seq_term(const SequenceSpec& spec, std::uint64_t n);

/// [A_0, ..., A_{n_max}], one ring multiplication per term.
std::vector<mpz_class> seq_range(const SequenceSpec& spec, std::uint64_t n_max);

/// Scans pairs m | n, m < n <= n_max for A_m not dividing A_n (zero
/// divides only zero) and returns the first violation, or nullopt.
/// n_max >= 2.
std::optional<std::pair<std::uint64_t, std::uint64_t>> verify_divisibility(
    const SequenceSpec& spec, std::uint64_t n_max);

/// Scans 2 <= m < n <= n_max for gcd(A_m, A_n) != |A_{gcd(m,n)}| and
/// returns the first violation, or nullopt. Strong divisibility is a
/// statement up to sign. n_max >= 2.
std::optional<std::pair<std::uint64_t, std::uint64_t>> verify_strong_divisibility(
    const SequenceSpec& spec, std::uint64_t n_max);

/// Checks |Phi_d(alpha, beta)| > 1 for 2 < d <= d_max; returns the first
/// violating d, or nullopt. Requires a nondegenerate real-case pair:
/// Q = 0, P = 0 and P^2 = 4Q are rejected with
/// Errc::degenerate_parameters.
std::optional<std::uint64_t> phi_lower_bound_check(const RingParams& params,
                                                   std::uint64_t d_max);

}  // namespace divpoly

#endif  // DIVPOLY_LUCAS_HPP
