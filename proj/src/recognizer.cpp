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

#include "recognizer.hpp"

#include <map>
#include <utility>

#include "errors.hpp"
#include "numtheory.hpp"

namespace divpoly {

DivPolyDecomposition recognize(const IntPoly& f) {
  NormalForm nf = normal_decompose(f);
  IntPoly residue = std::move(nf.normal);

  const std::uint64_t deg = static_cast<std::uint64_t>(residue.degree());
  const std::uint64_t stop = 2 * deg * deg + 1;
  std::map<std::uint64_t, std::uint64_t> mults;
  for (std::uint64_t d = 1; d <= stop && residue.degree() > 0; ++d) {
    if (euler_totient(d) > static_cast<std::uint64_t>(residue.degree())) continue;
    const IntPoly phi = cyclotomic(d);
    std::uint64_t count = 0;
    while (auto q = try_divide_exact(residue, phi)) {
      residue = std::move(*q);
      ++count;
    }
    if (count > 0) mults.emplace(d, count);
  }

  // The normal part and every cyclotomic are monic, so a constant residue
  // can only be 1.
  if (!residue.is_one())
    raise(Errc::not_cyclotomic_product,
          "a factor with roots off the unit circle survives cyclotomic stripping");

  MultiplicityMap map{std::move(mults)};
  if (!is_order_reversing(map))
    raise(Errc::not_order_reversing,
          "cyclotomic multiplicities do not decrease along divisibility");
  return DivPolyDecomposition{std::move(nf.constant), nf.power, std::move(map)};
}

namespace {

// Remainder test over the rationals: constants are units there, so this
// is divisibility in the field sense.
bool divides_over_rationals(const IntPoly& divisor, const IntPoly& dividend) {
  const std::vector<mpz_class>& dc = divisor.coeffs();
  const std::size_t db = dc.size() - 1;
  std::vector<mpq_class> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const mpq_class lead(dc.back());

  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const mpq_class t = rem[i] / lead;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] -= t * mpq_class(dc[j]);
    }
  }
  for (std::size_t j = 0; j < db && j < rem.size(); ++j) {
    if (rem[j] != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::uint64_t> oracle_composition_divides(const IntPoly& f,
                                                        std::uint64_t n_max) {
  if (f.is_zero()) raise(Errc::zero_polynomial, "oracle: zero polynomial");
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (!divides_over_rationals(f, compose_power(f, n))) return n;
  }
  return std::nullopt;
}

bool is_indecomposable(const MultiplicityMap& m) {
  if (m.is_zero()) raise(Errc::empty_support, "is_indecomposable: zero map");
  if (!is_order_reversing(m))
    raise(Errc::not_order_reversing, "is_indecomposable: map is not order-reversing");
  return m.at(1) == 1;
}

CanonicalForm canonical_form(const IntPoly& f) {
  DivPolyDecomposition dec = recognize(f);
  CanonicalForm out;
  out.constant = std::move(dec.constant);
  out.power = dec.power;
  for (const SaturatedSet& layer : slicing_layers(dec.map)) {
    CompressedForm cf = compress_core(layer);
    out.factors.push_back({std::move(cf.core), cf.exponent});
  }
  return out;
}

}  // namespace divpoly
