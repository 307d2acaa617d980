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

#include <random>

#include "errors.hpp"
#include "lucas.hpp"

using divpoly::alpha_power;
using divpoly::Errc;
using divpoly::MultiplicityMap;
using divpoly::phi_eval_at_power;
using divpoly::QuadInt;
using divpoly::RingParams;
using divpoly::s_term;
using divpoly::SaturatedSet;
using divpoly::seq_range;
using divpoly::seq_term;
using divpoly::SequenceSpec;
using divpoly::trace_term;

namespace {

using u64 = std::uint64_t;

const RingParams kFib{1, -1};
const RingParams kMers{3, 2};

MultiplicityMap indicator(std::vector<u64> gens) {
  return MultiplicityMap::indicator(SaturatedSet::saturate(gens));
}

bool fails_with(Errc expected, const auto& fn) {
  try {
    fn();
  } catch (const divpoly::Error& e) {
    return e.code() == expected;
  }
  return false;
}

std::vector<long> to_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

MultiplicityMap random_order_reversing(std::mt19937& rng, u64 bound,
                                       int max_layers) {
  std::uniform_int_distribution<u64> gen(1, bound);
  std::uniform_int_distribution<int> layers(1, max_layers);
  std::uniform_int_distribution<int> gens(1, 3);
  MultiplicityMap out;
  for (int i = 0, k = layers(rng); i < k; ++i) {
    std::vector<u64> g;
    for (int j = 0, n = gens(rng); j < n; ++j) g.push_back(gen(rng));
    out = out + MultiplicityMap::indicator(SaturatedSet::saturate(g));
  }
  return out;
}

}  // namespace

TEST_CASE("alpha_power examples") {
  SUBCASE("Fibonacci ring: alpha^n = F_{n-1} + F_n alpha") {
    const QuadInt u = alpha_power(kFib, 5);
    CHECK(u.a() == 3);
    CHECK(u.b() == 5);
  }
  SUBCASE("n = 0") {
    const QuadInt u = alpha_power(RingParams{7, 11}, 0);
    CHECK(u.a() == 1);
    CHECK(u.b() == 0);
  }
  SUBCASE("t^3 = 7t - 6 mod t^2 - 3t + 2") {
    const QuadInt u = alpha_power(kMers, 3);
    CHECK(u.a() == -6);
    CHECK(u.b() == 7);
  }
}

TEST_CASE("s_term examples") {
  CHECK(s_term(kFib, 14) == 377);
  CHECK(s_term(kFib, 14) % 13 == 0);  // 377 = 13 * 29
  CHECK(s_term(kMers, 7) == 127);
  CHECK(s_term(RingParams{5, -3}, 0) == 0);
  CHECK(s_term(kFib, 1) == 1);
}

TEST_CASE("phi_eval_at_power examples") {
  CHECK(phi_eval_at_power(2, kFib, 2) == 3);  // alpha^2 + beta^2 = L_2
  CHECK(phi_eval_at_power(3, kFib, 2) == 8);  // L_4 + Q^2 = 7 + 1
  CHECK(phi_eval_at_power(2, kMers, 1) == 3);  // alpha + beta = P
  CHECK(fails_with(Errc::invalid_order, [] { phi_eval_at_power(1, kFib, 1); }));
  CHECK(fails_with(Errc::invalid_argument, [] { phi_eval_at_power(2, kFib, 0); }));
}

TEST_CASE("seq_term examples") {
  const SequenceSpec table1(indicator({2, 3}), kFib);
  CHECK(seq_term(table1, 5) == 3355);
  CHECK(seq_term(table1, 0) == 0);
  CHECK(seq_term(table1, 1) == 1);

  CHECK(seq_term(SequenceSpec(indicator({1}), kMers), 7) == 127);

  CHECK(fails_with(Errc::degenerate_denominator, [] {
    seq_term(SequenceSpec(indicator({2}), RingParams{0, 1}), 3);
  }));
  CHECK(fails_with(Errc::not_order_reversing, [] {
    SequenceSpec(MultiplicityMap({{2, 1}}), kFib);
  }));
}

TEST_CASE("seq_range examples") {
  CHECK(to_longs(seq_range(SequenceSpec(indicator({2, 3}), kFib), 9)) ==
        std::vector<long>{0, 1, 12, 68, 504, 3355, 23256, 158717, 1089648,
                          7463884});
  CHECK(to_longs(seq_range(SequenceSpec(indicator({1}), kFib), 7)) ==
        std::vector<long>{0, 1, 1, 2, 3, 5, 8, 13});
  // A_n = F_{2n} for <2>
  CHECK(to_longs(seq_range(SequenceSpec(indicator({2}), kFib), 5)) ==
        std::vector<long>{0, 1, 3, 8, 21, 55});
  // zero map: every term is an empty product over an empty product
  CHECK(to_longs(seq_range(SequenceSpec(MultiplicityMap{}, kFib), 3)) ==
        std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("verify_divisibility examples") {
  CHECK(verify_divisibility(SequenceSpec(indicator({2, 3}), kFib), 12) ==
        std::nullopt);
  CHECK(verify_divisibility(SequenceSpec(indicator({1}), kMers), 12) ==
        std::nullopt);
  // Lambda = <3,4> = {1,2,3,4}
  CHECK(verify_divisibility(SequenceSpec(indicator({3, 4}), kFib), 12) ==
        std::nullopt);
  CHECK(fails_with(Errc::invalid_argument, [] {
    verify_divisibility(SequenceSpec(indicator({1}), kFib), 1);
  }));
}

TEST_CASE("verify_strong_divisibility examples") {
  // gcd(A_2, A_3) = gcd(12, 68) = 4 != 1 = A_1
  CHECK(verify_strong_divisibility(SequenceSpec(indicator({2, 3}), kFib), 10) ==
        std::pair<u64, u64>{2, 3});
  CHECK(verify_strong_divisibility(SequenceSpec(indicator({1}), kFib), 20) ==
        std::nullopt);
  CHECK(verify_strong_divisibility(SequenceSpec(indicator({2}), kFib), 20) ==
        std::nullopt);
}

TEST_CASE("phi_lower_bound_check examples") {
  CHECK(divpoly::phi_lower_bound_check(kFib, 50) == std::nullopt);
  CHECK(divpoly::phi_lower_bound_check(kMers, 50) == std::nullopt);
  CHECK(fails_with(Errc::degenerate_parameters, [] {
    divpoly::phi_lower_bound_check(RingParams{2, 1}, 10);
  }));
  CHECK(fails_with(Errc::degenerate_parameters, [] {
    divpoly::phi_lower_bound_check(RingParams{0, -1}, 10);
  }));
  CHECK(fails_with(Errc::degenerate_parameters, [] {
    divpoly::phi_lower_bound_check(RingParams{3, 0}, 10);
  }));
}

TEST_CASE("ring laws") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<long> pq(-9, 9);
  std::uniform_int_distribution<u64> nn(0, 24);
  for (int iter = 0; iter < 60; ++iter) {
    const RingParams params{pq(rng), pq(rng)};
    const u64 m = nn(rng), n = nn(rng);
    CHECK(alpha_power(params, m + n) ==
          alpha_power(params, m) * alpha_power(params, n));
    // conjugation is a ring homomorphism fixing integers
    const QuadInt x = alpha_power(params, m);
    const QuadInt y = alpha_power(params, n) + QuadInt(pq(rng), 0, params);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("homogenized evaluations are symmetric (alpha-component vanishes)") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> pq(-9, 9);
  std::uniform_int_distribution<u64> dd(2, 15);
  std::uniform_int_distribution<u64> nn(1, 30);
  for (int iter = 0; iter < 150; ++iter) {
    const RingParams params{pq(rng), pq(rng)};
    // phi_eval_at_power raises asymmetry_violation if the component
    // survives, so a clean return is the assertion
    CHECK_NOTHROW((void)phi_eval_at_power(dd(rng), params, nn(rng)));
  }
}

TEST_CASE("random corpus: integrality and divisibility") {
  std::mt19937 rng(3);
  const RingParams params_list[] = {{1, -1}, {3, 2}, {1, 2}, {4, 1}, {-1, -1}};
  int checked = 0;
  for (int iter = 0; iter < 12; ++iter) {
    const MultiplicityMap m = random_order_reversing(rng, 8, 3);
    for (const RingParams& params : params_list) {
      const SequenceSpec spec(m, params);
      try {
        CHECK(verify_divisibility(spec, 16) == std::nullopt);
        ++checked;
      } catch (const divpoly::Error& e) {
        // only a vanishing denominator may interrupt the scan
        CHECK(e.code() == Errc::degenerate_denominator);
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("strong divisibility holds exactly for principal sets") {
  std::mt19937 rng(4);
  const RingParams params_list[] = {{1, -1}, {3, 2}, {4, 1}, {5, -3}};
  std::uniform_int_distribution<u64> gen(1, 8);
  std::uniform_int_distribution<int> gens(1, 3);
  for (int iter = 0; iter < 25; ++iter) {
    std::vector<u64> g;
    for (int j = 0, n = gens(rng); j < n; ++j) g.push_back(gen(rng));
    const SaturatedSet lambda = SaturatedSet::saturate(g);
    for (const RingParams& params : params_list) {
      const SequenceSpec spec(MultiplicityMap::indicator(lambda), params);
      const bool principal = is_principal(lambda).has_value();
      const auto witness = verify_strong_divisibility(spec, 15);
      CAPTURE(lambda);
      CAPTURE(params.P.get_si());
      CAPTURE(params.Q.get_si());
      CHECK(witness.has_value() == !principal);
    }
  }
}

TEST_CASE("coprime-tuple sequence identity") {
  // A_n * S_n^{k-1} = prod_i S_{N_i n} / S_{N_i}
  const std::vector<std::vector<u64>> tuples = {{2, 3}, {2, 5}, {3, 4, 5}, {5, 7}};
  for (const RingParams& params : {kFib, kMers}) {
    for (const auto& t : tuples) {
      const SequenceSpec spec(indicator(t), params);
      for (u64 n = 0; n <= 12; ++n) {
        mpz_class lhs = seq_term(spec, n);
        for (std::size_t i = 1; i < t.size(); ++i) lhs *= s_term(params, n);
        mpz_class rhs = 1;
        for (u64 big_n : t) {
          const mpz_class num = s_term(params, big_n * n);
          const mpz_class den = s_term(params, big_n);
          REQUIRE(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
          rhs *= num / den;
        }
        CAPTURE(n);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("the lone trace factor is not integer-valued") {
  // T_{2n}/T_2 with Fibonacci parameters: 2/3, 1, 7/3, 6, 47/3, ...
  CHECK(trace_term(kFib, 0) == 2);
  CHECK(trace_term(kFib, 2) == 3);
  CHECK(trace_term(kFib, 4) == 7);
  CHECK(trace_term(kFib, 8) == 47);
  CHECK(trace_term(kFib, 0) % 3 != 0);
  CHECK(trace_term(kFib, 4) % 3 != 0);
  CHECK(trace_term(kFib, 8) % 3 != 0);
}

TEST_CASE("principal sets reduce to normalized subsequences") {
  for (const RingParams& params : {kFib, kMers}) {
    for (u64 big_n = 1; big_n <= 6; ++big_n) {
      const SequenceSpec spec(indicator({big_n}), params);
      const auto a = seq_range(spec, 12);
      const mpz_class den = s_term(params, big_n);
      for (u64 n = 0; n <= 12; ++n) {
        CAPTURE(big_n);
        CAPTURE(n);
        CHECK(a[n] * den == s_term(params, big_n * n));
      }
    }
  }
}

TEST_CASE("degeneracy detection") {
  CHECK(divpoly::is_degenerate(RingParams{0, 5}));   // alpha = -beta
  CHECK(divpoly::is_degenerate(RingParams{2, 1}));   // alpha = beta
  CHECK(divpoly::is_degenerate(RingParams{3, 0}));   // alpha*beta = 0
  CHECK(divpoly::is_degenerate(RingParams{1, 1}));   // ratio of order 3
  CHECK(divpoly::is_degenerate(RingParams{2, 2}));   // ratio of order 4
  CHECK(divpoly::is_degenerate(RingParams{3, 3}));   // ratio of order 6
  CHECK_FALSE(divpoly::is_degenerate(kFib));
  CHECK_FALSE(divpoly::is_degenerate(kMers));
  CHECK_FALSE(divpoly::is_degenerate(RingParams{1, 2}));
}
