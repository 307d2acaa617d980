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

#ifndef DIVPOLY_SATSET_HPP
#define DIVPOLY_SATSET_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace divpoly {

/// Finite divisor-closed set of positive integers, stored as a strictly
/// increasing element list. Every element's divisors are elements too;
/// nonempty sets therefore contain 1. The empty set is a valid value.
class SaturatedSet {
 public:
  SaturatedSet() = default;

  /// Divisor closure of the generators: every divisor of at least one
  /// generator. Generators must be positive; an empty list yields the
  /// empty set.
  static SaturatedSet saturate(const std::vector<std::uint64_t>& generators);

  /// Wraps an explicit element list, validating strict ascending order
  /// and divisor closure.
  static SaturatedSet from_elements(std::vector<std::uint64_t> elements);

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<std::uint64_t>& elements() const noexcept { return elems_; }
  bool contains(std::uint64_t v) const noexcept;
  /// Largest element; the set must be nonempty.
  std::uint64_t max_element() const;

  /// The divisibility-maximal elements, ascending. Saturating them
  /// reproduces the set, and no output element divides another.
  std::vector<std::uint64_t> maximal_generators() const;

  friend bool operator==(const SaturatedSet& a, const SaturatedSet& b) = default;

 private:
  std::vector<std::uint64_t> elems_;
};

std::ostream& operator<<(std::ostream& os, const SaturatedSet& s);

/// {s*t : s in S, t in T}, deduplicated. Products of saturated sets are
/// saturated.
SaturatedSet set_product(const SaturatedSet& s, const SaturatedSet& t);

/// Index set of Phi_Lambda(x^n): the product of the divisor set of n
/// with Lambda.
SaturatedSet decompress(const SaturatedSet& lambda, std::uint64_t n);

struct CompressedForm {
  SaturatedSet core;
  std::uint64_t exponent = 1;
};

/// Splits Lambda = decompress(core, exponent) with exponent the gcd of the
/// maximal generators; the core's own generator gcd is 1. Empty input
/// raises Errc::empty_set.
CompressedForm compress_core(const SaturatedSet& lambda);

/// N when Lambda is the full divisor set of a single N, otherwise
/// nullopt. Empty input raises Errc::empty_set.
std::optional<std::uint64_t> is_principal(const SaturatedSet& lambda);

/// Scans 1 <= m < n <= bound for a pair violating
///   decompress(Lambda,m) intersect decompress(Lambda,n)
///     == decompress(Lambda, gcd(m,n))
/// and returns the first one, or nullopt. Violations exist for
/// non-principal Lambda already among its own elements, so the
/// one-argument overload uses bound = max_element().
std::optional<std::pair<std::uint64_t, std::uint64_t>> strong_set_identity_check(
    const SaturatedSet& lambda, std::uint64_t bound);
std::optional<std::pair<std::uint64_t, std::uint64_t>> strong_set_identity_check(
    const SaturatedSet& lambda);

/// Finitely supported map from positive integers to multiplicities >= 1
/// (absent means 0). Encodes the exponent of each cyclotomic factor in a
/// product.
class MultiplicityMap {
 public:
  MultiplicityMap() = default;

  /// Entries with multiplicity 0 are dropped; keys must be positive.
  explicit MultiplicityMap(std::map<std::uint64_t, std::uint64_t> entries);
  MultiplicityMap(
      std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> entries)
      : MultiplicityMap(std::map<std::uint64_t, std::uint64_t>(entries)) {}

  /// The indicator map of a set: multiplicity 1 on every element.
  static MultiplicityMap indicator(const SaturatedSet& s);

  /// Multiplicity at h (0 when absent).
  std::uint64_t at(std::uint64_t h) const noexcept;
  const std::map<std::uint64_t, std::uint64_t>& entries() const noexcept {
    return entries_;
  }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::vector<std::uint64_t> support() const;

  /// Pointwise sum; products of polynomials correspond to sums of maps.
  friend MultiplicityMap operator+(const MultiplicityMap& a,
                                   const MultiplicityMap& b);

  friend bool operator==(const MultiplicityMap& a, const MultiplicityMap& b) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const MultiplicityMap& m);

/// True iff h | h' implies map(h) >= map(h') for all positive h, h'.
/// Checking divisors of support elements suffices: the map vanishes
/// elsewhere, and a missing divisor of a supported element is exactly a
/// saturation failure.
bool is_order_reversing(const MultiplicityMap& m);

/// Level sets layer_j = {m : map(m) >= j} for j = 1..map(1), largest
/// first. Each layer is saturated, layers are nested, and the indicator
/// sum reconstructs the map. Requires an order-reversing map.
std::vector<SaturatedSet> slicing_layers(const MultiplicityMap& m);

struct HasseNode {
  std::uint64_t value = 0;
  std::uint64_t multiplicity = 0;
  friend bool operator==(const HasseNode&, const HasseNode&) = default;
};

struct HasseEdge {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering-relation graph of the divisibility order restricted to a
/// map's support, with multiplicity labels. Nodes ascend by value; edges
/// are sorted by (lower, upper).
class HasseDiagram {
 public:
  HasseDiagram(std::vector<HasseNode> nodes, std::vector<HasseEdge> edges)
      : nodes_(std::move(nodes)), edges_(std::move(edges)) {}

  const std::vector<HasseNode>& nodes() const noexcept { return nodes_; }
  const std::vector<HasseEdge>& edges() const noexcept { return edges_; }

 private:
  std::vector<HasseNode> nodes_;
  std::vector<HasseEdge> edges_;
};

/// Builds the labeled Hasse diagram of a map's support. Empty support
/// raises Errc::empty_support. Plain sets pass their indicator map.
HasseDiagram hasse_diagram(const MultiplicityMap& m);

}  // namespace divpoly

#endif  // DIVPOLY_SATSET_HPP
