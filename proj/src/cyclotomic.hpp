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

#ifndef DIVPOLY_CYCLOTOMIC_HPP
#define DIVPOLY_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <mutex>

#include "intpoly.hpp"
#include "satset.hpp"

namespace divpoly {

/// Memo table for cyclotomic polynomials. Entries are computed from
/// Gauss's identity x^n - 1 = prod_{d|n} Phi_d(x): one exact division of
/// x^n - 1 by the product over the proper divisors. No complex
/// arithmetic anywhere; roots of unity exist only as indices.
///
/// Concurrent callers observe the same results as a cache-free pure
/// function; a race at worst recomputes a value.
class CyclotomicTable {
 public:
  IntPoly get(std::uint64_t n);

 private:
  std::mutex mu_;
  std::map<std::uint64_t, IntPoly> memo_;
};

/// Phi_n via a process-wide shared table. n >= 1; the result is monic of
/// degree euler_totient(n).
IntPoly cyclotomic(std::uint64_t n);

/// prod_{d in lambda} Phi_d(x); the empty set yields 1.
IntPoly phi_of_set(const SaturatedSet& lambda);

/// prod_h Phi_h(x)^{map(h)}; the zero map yields 1.
IntPoly phi_of_map(const MultiplicityMap& m);

}  // namespace divpoly

#endif  // DIVPOLY_CYCLOTOMIC_HPP
