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

#include "lucas.hpp"

#include <numeric>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "intpoly.hpp"

namespace divpoly {

QuadInt QuadInt::operator*(const QuadInt& o) const {
  if (params_ != o.params_)
    raise(Errc::invalid_argument, "ring arithmetic between different parameter sets");
  // (a1 + b1 x)(a2 + b2 x) with x^2 = Px - Q.
  const mpz_class bb = b_ * o.b_;
  return {a_ * o.a_ - params_.Q * bb, a_ * o.b_ + b_ * o.a_ + params_.P * bb,
          params_};
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
  if (params_ != o.params_)
    raise(Errc::invalid_argument, "ring arithmetic between different parameter sets");
  return {a_ + o.a_, b_ + o.b_, params_};
}

QuadInt alpha_power(const RingParams& params, std::uint64_t n) {
  QuadInt result = QuadInt::one(params);
  QuadInt base = QuadInt::alpha(params);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

mpz_class s_term(const RingParams& params, std::uint64_t n) {
  return alpha_power(params, n).b();
}

mpz_class trace_term(const RingParams& params, std::uint64_t n) {
  return alpha_power(params, n).trace();
}

namespace {

// Phi_d at (u, conj u) for u = alpha^n. Symmetric for d > 1, so the
// alpha-component must vanish.
mpz_class phi_eval_at(std::uint64_t d, const QuadInt& u) {
  const IntPoly phi = cyclotomic(d);
  const QuadInt v = u.conj();
  const std::size_t deg = static_cast<std::size_t>(phi.degree());

  std::vector<QuadInt> upow, vpow;
  upow.reserve(deg + 1);
  vpow.reserve(deg + 1);
  upow.push_back(QuadInt::one(u.params()));
  vpow.push_back(QuadInt::one(u.params()));
  for (std::size_t i = 1; i <= deg; ++i) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }

  QuadInt acc{0, 0, u.params()};
  for (std::size_t i = 0; i <= deg; ++i) {
    const mpz_class& c = phi[i];
    if (c == 0) continue;
    acc = acc + (upow[i] * vpow[deg - i]).scaled(c);
  }
  if (acc.b() != 0)
    raise(Errc::asymmetry_violation,
          "homogenized cyclotomic evaluation kept an alpha-component");
  return acc.a();
}

}  // namespace

mpz_class phi_eval_at_power(std::uint64_t d, const RingParams& params,
                            std::uint64_t n) {
  if (d < 2) raise(Errc::invalid_order, "phi_eval_at_power: order must be >= 2");
  if (n < 1) raise(Errc::invalid_argument, "phi_eval_at_power: n must be >= 1");
  return phi_eval_at(d, alpha_power(params, n));
}

bool is_degenerate(const RingParams& params) {
  const mpz_class p2 = params.P * params.P;
  return params.Q == 0          // alpha*beta = 0
         || p2 == 4 * params.Q  // alpha = beta (Phi_1 vanishes)
         || params.P == 0       // alpha = -beta (Phi_2 vanishes)
         || p2 == params.Q      // Phi_3 vanishes
         || p2 == 2 * params.Q  // Phi_4 vanishes
         || p2 == 3 * params.Q; // Phi_6 vanishes
}

SequenceSpec::SequenceSpec(MultiplicityMap map, RingParams params)
    : map_(std::move(map)), params_(std::move(params)) {
  if (!is_order_reversing(map_))
    raise(Errc::not_order_reversing, "sequence map must be order-reversing");
}

namespace {

mpz_class pow_mpz(const mpz_class& base, std::uint64_t e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// prod_{d>1} Phi_d(alpha, beta)^{map(d)}, rejecting vanishing factors.
// The Phi_1 part of the normalization is handled by reading S_n off the
// alpha-component, so it never appears here.
mpz_class denominator(const MultiplicityMap& map, const RingParams& params) {
  mpz_class den = 1;
  const QuadInt alpha1 = alpha_power(params, 1);
  for (const auto& [d, mult] : map.entries()) {
    if (d == 1) continue;
    const mpz_class v = phi_eval_at(d, alpha1);
    if (v == 0)
      raise(Errc::degenerate_denominator,
            "Phi_" + std::to_string(d) + "(alpha,beta) = 0 for these parameters");
    den *= pow_mpz(v, mult);
  }
  return den;
}

mpz_class numerator_at(const MultiplicityMap& map, const QuadInt& u) {
  mpz_class num = pow_mpz(u.b(), map.at(1));
  for (const auto& [d, mult] : map.entries()) {
    if (d == 1) continue;
    num *= pow_mpz(phi_eval_at(d, u), mult);
  }
  return num;
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    raise(Errc::integrality_violation, "sequence term is not an integer");
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

mpz_class seq_term(const SequenceSpec& spec, std::uint64_t n) {
  const mpz_class den = denominator(spec.map(), spec.params());
  const mpz_class num = numerator_at(spec.map(), alpha_power(spec.params(), n));
  return exact_quotient(num, den);
}

std::vector<mpz_class> seq_range(const SequenceSpec& spec, std::uint64_t n_max) {
  const mpz_class den = denominator(spec.map(), spec.params());
  std::vector<mpz_class> out;
  out.reserve(n_max + 1);
  QuadInt u = QuadInt::one(spec.params());
  const QuadInt step = QuadInt::alpha(spec.params());
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    out.push_back(exact_quotient(numerator_at(spec.map(), u), den));
    u = u * step;
  }
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> verify_divisibility(
    const SequenceSpec& spec, std::uint64_t n_max) {
  if (n_max < 2) raise(Errc::invalid_argument, "verify_divisibility: n_max must be >= 2");
  const std::vector<mpz_class> a = seq_range(spec, n_max);
  for (std::uint64_t m = 1; m < n_max; ++m) {
    for (std::uint64_t n = 2 * m; n <= n_max; n += m) {
      if (a[m] == 0 ? a[n] != 0
                    : !mpz_divisible_p(a[n].get_mpz_t(), a[m].get_mpz_t()))
        return std::make_pair(m, n);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> verify_strong_divisibility(
    const SequenceSpec& spec, std::uint64_t n_max) {
  if (n_max < 2)
    raise(Errc::invalid_argument, "verify_strong_divisibility: n_max must be >= 2");
  const std::vector<mpz_class> a = seq_range(spec, n_max);
  for (std::uint64_t m = 2; m < n_max; ++m) {
    for (std::uint64_t n = m + 1; n <= n_max; ++n) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a[m].get_mpz_t(), a[n].get_mpz_t());
      if (g != abs(a[std::gcd(m, n)])) return std::make_pair(m, n);
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> phi_lower_bound_check(const RingParams& params,
                                                   std::uint64_t d_max) {
  if (params.Q == 0 || params.P == 0 || params.P * params.P == 4 * params.Q)
    raise(Errc::degenerate_parameters,
          "lower bound requires alpha*beta != 0 and alpha != +-beta");
  const QuadInt alpha1 = alpha_power(params, 1);
  for (std::uint64_t d = 3; d <= d_max; ++d) {
    if (abs(phi_eval_at(d, alpha1)) <= 1) return d;
  }
  return std::nullopt;
}

}  // namespace divpoly
