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

#ifndef DIVPOLY_RECOGNIZER_HPP
#define DIVPOLY_RECOGNIZER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotomic.hpp"
#include "intpoly.hpp"
#include "satset.hpp"

namespace divpoly {

/// f = constant * x^power * prod_h Phi_h^{map(h)} with an order-reversing
/// map; that shape is exactly what makes f(x) divide f(x^n) for every n.
struct DivPolyDecomposition {
  mpz_class constant;
  std::uint64_t power = 0;
  MultiplicityMap map;
};

/// Decides whether f is a divisibility polynomial and produces its
/// decomposition. Strips cyclotomic factors from the normal part by
/// trial exact division, scanning orders d in increasing order while
/// euler_totient(d) can still fit the remaining degree (hard stop at
/// d = 2*deg^2 + 1, since phi(d) >= sqrt(d/2)); repeated division at the
/// same d yields the multiplicity.
///
/// Errors: Errc::not_cyclotomic_product when a nonconstant residue
/// survives stripping, Errc::not_order_reversing when the multiplicities
/// violate the downward-closure condition, plus whatever
/// normal_decompose raises.
DivPolyDecomposition recognize(const IntPoly& f);

/// Brute-force oracle for the defining property: tests f(x) | f(x^n) for
/// 2 <= n <= n_max by long division over the rationals, fully independent
/// of the cyclotomic machinery. Returns the first failing n, or nullopt.
std::optional<std::uint64_t> oracle_composition_divides(const IntPoly& f,
                                                        std::uint64_t n_max);

/// A normal divisibility polynomial is a product of two nonconstant ones
/// exactly when map(1) >= 2, so indecomposability is map(1) == 1.
/// Requires a nonzero order-reversing map.
bool is_indecomposable(const MultiplicityMap& m);

struct CanonicalFactor {
  SaturatedSet core;
  std::uint64_t exponent = 1;
};

/// f = constant * x^power * prod_j Phi_{core_j}(x^{exponent_j}) where each
/// core has generator gcd 1. Factors come from the slicing layers of the
/// recognized map, largest layer first.
struct CanonicalForm {
  mpz_class constant;
  std::uint64_t power = 0;
  std::vector<CanonicalFactor> factors;
};

/// recognize, slice into layers, compress each layer.
CanonicalForm canonical_form(const IntPoly& f);

}  // namespace divpoly

#endif  // DIVPOLY_RECOGNIZER_HPP
