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

#include "numtheory.hpp"

#include <algorithm>

#include "errors.hpp"

namespace divpoly {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) raise(Errc::invalid_argument, "factorize: n must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) raise(Errc::invalid_argument, "euler_totient: n must be positive");
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

}  // namespace divpoly
