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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "numtheory.hpp"

using divpoly::cyclotomic;
using divpoly::euler_totient;
using divpoly::IntPoly;
using divpoly::MultiplicityMap;
using divpoly::SaturatedSet;

namespace {

IntPoly poly(std::vector<long> coeffs) {
  std::vector<mpz_class> v(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(3) == poly({1, 1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  // divide x^9 - 1 by Phi_1 * Phi_3 = x^3 - 1 and re-multiply to confirm
  const IntPoly phi9 = divide_exact(IntPoly::power_minus_one(9),
                                    IntPoly::power_minus_one(3));
  CHECK(cyclotomic(9) == phi9);
  CHECK(cyclotomic(9) == poly({1, 0, 0, 1, 0, 0, 1}));
  CHECK(phi9 * IntPoly::power_minus_one(3) == IntPoly::power_minus_one(9));

  CHECK_THROWS_AS(cyclotomic(0), divpoly::Error);
}

TEST_CASE("euler totient") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(6) == 2);
  CHECK(euler_totient(12) == 4);
  CHECK(euler_totient(97) == 96);
  CHECK(euler_totient(360) == 96);
  CHECK_THROWS_AS(euler_totient(0), divpoly::Error);
}

TEST_CASE("phi_of_set examples") {
  CHECK(divpoly::phi_of_set(SaturatedSet::saturate({1})) == poly({-1, 1}));
  CHECK(divpoly::phi_of_set(SaturatedSet::saturate({2, 3})) ==
        poly({-1, -1, 0, 1, 1}));
  CHECK(divpoly::phi_of_set(SaturatedSet::saturate({6})) ==
        IntPoly::power_minus_one(6));
  CHECK(divpoly::phi_of_set(SaturatedSet{}) == IntPoly::one());
}

TEST_CASE("phi_of_map examples") {
  CHECK(divpoly::phi_of_map(MultiplicityMap({{1, 1}})) == poly({-1, 1}));
  // (x-1)^2 (x+1) = x^3 - x^2 - x + 1; at x = 2: 1 * 3 = 3 = 8 - 4 - 2 + 1
  const IntPoly p = divpoly::phi_of_map(MultiplicityMap({{1, 2}, {2, 1}}));
  CHECK(p == poly({1, -1, -1, 1}));
  CHECK(evaluate_at(p, 2) == 3);
  CHECK(divpoly::phi_of_map(MultiplicityMap{}) == IntPoly::one());
}

TEST_CASE("Gauss identity up to 120") {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    IntPoly prod = IntPoly::one();
    for (std::uint64_t d : divpoly::divisors(n)) prod *= cyclotomic(d);
    CAPTURE(n);
    CHECK(prod == IntPoly::power_minus_one(n));
  }
}

TEST_CASE("degree of Phi_n equals the totient up to 300") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CAPTURE(n);
    CHECK(static_cast<std::uint64_t>(cyclotomic(n).degree()) == euler_totient(n));
    CHECK(cyclotomic(n).is_monic());
  }
}

TEST_CASE("Phi_n is palindromic for 2 <= n <= 300") {
  for (std::uint64_t n = 2; n <= 300; ++n) {
    CAPTURE(n);
    CHECK(is_palindromic(cyclotomic(n)));
  }
}

TEST_CASE("prime-power shift: Phi_m(x^p)") {
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  for (std::uint64_t p : primes) {
    for (std::uint64_t m = 1; m <= 40; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      const IntPoly lhs = compose_power(cyclotomic(m), p);
      if (m % p == 0) {
        CHECK(lhs == cyclotomic(m * p));
      } else {
        CHECK(lhs == cyclotomic(m) * cyclotomic(m * p));
      }
    }
  }
}

TEST_CASE("map sums multiply polynomials") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<std::uint64_t> key(1, 10);
  std::uniform_int_distribution<std::uint64_t> mult(1, 2);
  for (int iter = 0; iter < 30; ++iter) {
    std::map<std::uint64_t, std::uint64_t> ea, eb;
    for (int k = 0; k < 3; ++k) {
      ea[key(rng)] = mult(rng);
      eb[key(rng)] = mult(rng);
    }
    const MultiplicityMap a(ea), b(eb);
    CHECK(divpoly::phi_of_map(a + b) ==
          divpoly::phi_of_map(a) * divpoly::phi_of_map(b));
  }
}

TEST_CASE("memo table behaves like a pure function under concurrency") {
  // Reference values from a fresh, single-threaded table.
  divpoly::CyclotomicTable reference;
  std::vector<IntPoly> expected;
  for (std::uint64_t n = 1; n <= 80; ++n) expected.push_back(reference.get(n));

  divpoly::CyclotomicTable shared;
  std::vector<int> failures(8, 0);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      std::vector<std::uint64_t> order(80);
      for (std::uint64_t i = 0; i < 80; ++i) order[i] = i + 1;
      std::mt19937 rng(1000 + t);
      std::shuffle(order.begin(), order.end(), rng);
      for (std::uint64_t n : order) {
        if (!(shared.get(n) == expected[n - 1])) failures[t]++;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) CHECK(failures[t] == 0);
}
