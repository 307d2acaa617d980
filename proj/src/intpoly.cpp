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

#include "intpoly.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"

namespace divpoly {

namespace {

const mpz_class kZero = 0;

// Degrees in this library stay in the hundreds; anything near this bound
// indicates a runaway composition, not a legitimate input.
constexpr std::uint64_t kMaxDegree = std::uint64_t{1} << 24;

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::one() { return constant(1); }

IntPoly IntPoly::constant(mpz_class c) {
  std::vector<mpz_class> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t power) {
  if (c == 0) return IntPoly{};
  std::vector<mpz_class> v(power + 1);
  v[power] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::power_minus_one(std::uint64_t n) {
  if (n == 0) raise(Errc::invalid_argument, "power_minus_one: n must be positive");
  if (n > kMaxDegree) raise(Errc::invalid_argument, "power_minus_one: degree too large");
  std::vector<mpz_class> v(static_cast<std::size_t>(n) + 1);
  v[0] = -1;
  v[static_cast<std::size_t>(n)] = 1;
  return IntPoly(std::move(v));
}

bool IntPoly::is_one() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

const mpz_class& IntPoly::operator[](std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
  if (is_zero()) raise(Errc::zero_polynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i];
  }
  return os << ']';
}

std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) raise(Errc::zero_polynomial, "division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<mpz_class> rem = a.coeffs();
  const std::vector<mpz_class>& bc = b.coeffs();
  const mpz_class& lead = bc.back();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - db);

  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
      return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[i - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    quot[i - db] = std::move(t);
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) raise(Errc::inexact_division, "polynomial division leaves a remainder");
  return std::move(*q);
}

IntPoly compose_power(const IntPoly& f, std::uint64_t n) {
  if (n == 0) raise(Errc::invalid_argument, "compose_power: n must be positive");
  if (f.is_zero() || n == 1) return f;
  const auto deg = static_cast<std::uint64_t>(f.degree());
  if (deg > 0 && deg > kMaxDegree / n)
    raise(Errc::invalid_argument, "compose_power: result degree too large");
  std::vector<mpz_class> v(static_cast<std::size_t>(deg * n) + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    v[i * static_cast<std::size_t>(n)] = f.coeffs()[i];
  }
  return IntPoly(std::move(v));
}

mpz_class evaluate_at(const IntPoly& f, const mpz_class& v) {
  mpz_class acc = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc *= v;
    acc += f.coeffs()[i];
  }
  return acc;
}

bool is_palindromic(const IntPoly& f) {
  if (f.is_zero()) raise(Errc::zero_polynomial, "is_palindromic: zero polynomial");
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

NormalForm normal_decompose(const IntPoly& f) {
  if (f.is_zero()) raise(Errc::zero_polynomial, "normal_decompose: zero polynomial");
  const auto& c = f.coeffs();
  std::size_t s = 0;
  while (c[s] == 0) ++s;
  const mpz_class& lead = c.back();
  std::vector<mpz_class> g(c.size() - s);
  for (std::size_t i = s; i < c.size(); ++i) {
    if (!mpz_divisible_p(c[i].get_mpz_t(), lead.get_mpz_t())) {
      raise(Errc::non_integral_normal_part,
            "leading coefficient does not divide all coefficients");
    }
    mpz_divexact(g[i - s].get_mpz_t(), c[i].get_mpz_t(), lead.get_mpz_t());
  }
  return NormalForm{lead, s, IntPoly(std::move(g))};
}

mpz_class content(const IntPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  const mpz_class g = content(f);
  if (g == 1) return f;
  std::vector<mpz_class> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

namespace {

// Primitive normalization: content 1 and positive leading coefficient.
IntPoly normalize_primitive(IntPoly p) {
  p = primitive_part(std::move(p));
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return p;
}

// Some nonzero rational multiple of (a mod b); the caller strips content
// right after, so the scaling factor is irrelevant. deg a >= deg b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  const std::vector<mpz_class>& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (db == 0) return IntPoly{};  // constants are units over the rationals

  std::vector<mpz_class> rem = a.coeffs();
  const mpz_class& lb = bc.back();
  while (!rem.empty() && rem.size() - 1 >= db) {
    const mpz_class t = rem.back();
    for (auto& c : rem) c *= lb;
    const std::size_t shift = rem.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return normalize_primitive(IntPoly(std::move(rem)));
}

}  // namespace

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero())
    raise(Errc::zero_polynomial, "gcd of two zero polynomials");
  IntPoly big = normalize_primitive(a);
  IntPoly small = normalize_primitive(b);
  if (big.degree() < small.degree()) std::swap(big, small);
  while (!small.is_zero()) {
    IntPoly r = pseudo_remainder(big, small);
    big = std::move(small);
    small = std::move(r);
  }
  return big;
}

}  // namespace divpoly
