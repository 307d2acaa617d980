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

#include "cyclotomic.hpp"

#include "errors.hpp"
#include "numtheory.hpp"

namespace divpoly {

IntPoly CyclotomicTable::get(std::uint64_t n) {
  if (n == 0) raise(Errc::invalid_argument, "cyclotomic: n must be positive");
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
  }
  // Computed outside the lock; recursion below takes the lock per level.
  IntPoly proper = IntPoly::one();
  for (std::uint64_t d : divisors(n)) {
    if (d < n) proper *= get(d);
  }
  IntPoly phi = divide_exact(IntPoly::power_minus_one(n), proper);
  {
    std::lock_guard lock(mu_);
    auto [it, inserted] = memo_.emplace(n, std::move(phi));
    (void)inserted;
    return it->second;
  }
}

IntPoly cyclotomic(std::uint64_t n) {
  static CyclotomicTable table;
  return table.get(n);
}

IntPoly phi_of_set(const SaturatedSet& lambda) {
  IntPoly out = IntPoly::one();
  for (std::uint64_t d : lambda.elements()) out *= cyclotomic(d);
  return out;
}

IntPoly phi_of_map(const MultiplicityMap& m) {
  IntPoly out = IntPoly::one();
  for (const auto& [h, mult] : m.entries()) {
    const IntPoly phi = cyclotomic(h);
    for (std::uint64_t k = 0; k < mult; ++k) out *= phi;
  }
  return out;
}

}  // namespace divpoly
