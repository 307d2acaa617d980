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

#ifndef DIVPOLY_INTPOLY_HPP
#define DIVPOLY_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace divpoly {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Values are immutable after construction in the sense
/// that every operation returns a fresh polynomial; sharing across
/// threads is safe.
///
/// Representation: coeffs_[i] is the coefficient of x^i. The zero
/// polynomial is the empty vector; otherwise the top coefficient is
/// nonzero. degree() of the zero polynomial is the sentinel
/// kZeroDegree (stands in for "minus infinity").
class IntPoly {
 public:
  static constexpr int kZeroDegree = -1;

  IntPoly() = default;

  /// Takes ownership of a coefficient vector; trailing zeros are trimmed.
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly one();
  static IntPoly constant(mpz_class c);
  static IntPoly monomial(mpz_class c, std::size_t power);
  /// x^n - 1.
  static IntPoly power_minus_one(std::uint64_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  int degree() const noexcept {
    return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  const mpz_class& operator[](std::size_t i) const noexcept;

  /// Leading coefficient; the polynomial must be nonzero.
  const mpz_class& leading() const;
  bool is_monic() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly& operator*=(const IntPoly& rhs);

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Diagnostic form: "[c0, c1, ...]" (the human-readable monomial form
/// lives in textio).
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Exact quotient a / b over the integers. Throws Errc::inexact_division
/// when long division leaves a remainder or hits a non-integer quotient
/// coefficient, Errc::zero_polynomial when b is zero.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Like divide_exact but reports inexactness as nullopt instead of
/// throwing. Still throws on a zero divisor.
std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b);

/// f(x^n) for n >= 1.
IntPoly compose_power(const IntPoly& f, std::uint64_t n);

/// Horner evaluation f(v).
mpz_class evaluate_at(const IntPoly& f, const mpz_class& v);

/// True iff the coefficient list reads the same in both directions.
/// The polynomial must be nonzero.
bool is_palindromic(const IntPoly& f);

/// f = constant * x^power * normal, with normal monic and of nonzero
/// constant term.
struct NormalForm {
  mpz_class constant;
  std::uint64_t power = 0;
  IntPoly normal;
};

/// Splits off the leading coefficient and the power of x at the origin.
/// The leading coefficient must divide every coefficient, otherwise
/// Errc::non_integral_normal_part; zero input raises
/// Errc::zero_polynomial.
NormalForm normal_decompose(const IntPoly& f);

/// gcd of the absolute coefficient values; 0 for the zero polynomial.
mpz_class content(const IntPoly& f);

/// f divided by its content; sign of the leading coefficient preserved.
IntPoly primitive_part(const IntPoly& f);

/// Greatest common divisor over the rationals, returned in primitive
/// integer form with positive leading coefficient. Uses fraction-free
/// (primitive-part) Euclidean reduction. The inputs must not both be
/// zero.
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace divpoly

#endif  // DIVPOLY_INTPOLY_HPP
