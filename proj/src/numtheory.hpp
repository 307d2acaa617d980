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

#ifndef DIVPOLY_NUMTHEORY_HPP
#define DIVPOLY_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace divpoly {

/// Prime factorization of n >= 1 by trial division, (prime, exponent)
/// pairs in ascending prime order. factorize(1) is empty.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All positive divisors of n >= 1, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler's totient: the number of 1 <= k <= n coprime to n.
std::uint64_t euler_totient(std::uint64_t n);

}  // namespace divpoly

#endif  // DIVPOLY_NUMTHEORY_HPP
