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

#include "satset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "numtheory.hpp"

namespace divpoly {

SaturatedSet SaturatedSet::saturate(const std::vector<std::uint64_t>& generators) {
  std::set<std::uint64_t> acc;
  for (std::uint64_t g : generators) {
    if (g == 0) raise(Errc::invalid_argument, "saturate: generators must be positive");
    for (std::uint64_t d : divisors(g)) acc.insert(d);
  }
  SaturatedSet out;
  out.elems_.assign(acc.begin(), acc.end());
  return out;
}

SaturatedSet SaturatedSet::from_elements(std::vector<std::uint64_t> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == 0)
      raise(Errc::invalid_argument, "saturated set elements must be positive");
    if (i > 0 && elements[i] <= elements[i - 1])
      raise(Errc::invalid_argument, "saturated set elements must strictly increase");
  }
  SaturatedSet out;
  out.elems_ = std::move(elements);
  for (std::uint64_t v : out.elems_) {
    for (std::uint64_t d : divisors(v)) {
      if (!out.contains(d))
        raise(Errc::invalid_argument, "element list is not divisor-closed");
    }
  }
  return out;
}

bool SaturatedSet::contains(std::uint64_t v) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::uint64_t SaturatedSet::max_element() const {
  if (elems_.empty()) raise(Errc::empty_set, "max_element of the empty set");
  return elems_.back();
}

std::vector<std::uint64_t> SaturatedSet::maximal_generators() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v : elems_) {
    bool maximal = true;
    for (std::uint64_t w : elems_) {
      if (w != v && w % v == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(v);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SaturatedSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) os << ',';
    os << s.elements()[i];
  }
  return os << '}';
}

SaturatedSet set_product(const SaturatedSet& s, const SaturatedSet& t) {
  std::set<std::uint64_t> acc;
  for (std::uint64_t a : s.elements()) {
    for (std::uint64_t b : t.elements()) {
      if (a > std::numeric_limits<std::uint64_t>::max() / b)
        raise(Errc::invalid_argument, "set_product: element product overflows");
      acc.insert(a * b);
    }
  }
  // Products of saturated sets stay saturated; go through the validating
  // constructor anyway, the sets here are tiny.
  return SaturatedSet::from_elements({acc.begin(), acc.end()});
}

SaturatedSet decompress(const SaturatedSet& lambda, std::uint64_t n) {
  if (n == 0) raise(Errc::invalid_argument, "decompress: n must be positive");
  return set_product(SaturatedSet::saturate({n}), lambda);
}

CompressedForm compress_core(const SaturatedSet& lambda) {
  if (lambda.empty()) raise(Errc::empty_set, "compress_core: empty set");
  std::vector<std::uint64_t> gens = lambda.maximal_generators();
  std::uint64_t g = 0;
  for (std::uint64_t v : gens) g = std::gcd(g, v);
  for (std::uint64_t& v : gens) v /= g;
  return CompressedForm{SaturatedSet::saturate(gens), g};
}

std::optional<std::uint64_t> is_principal(const SaturatedSet& lambda) {
  if (lambda.empty()) raise(Errc::empty_set, "is_principal: empty set");
  const auto gens = lambda.maximal_generators();
  if (gens.size() == 1) return gens.front();
  return std::nullopt;
}

namespace {

SaturatedSet intersect(const SaturatedSet& a, const SaturatedSet& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return SaturatedSet::from_elements(std::move(out));
}

}  // namespace

std::optional<std::pair<std::uint64_t, std::uint64_t>> strong_set_identity_check(
    const SaturatedSet& lambda, std::uint64_t bound) {
  if (lambda.empty()) raise(Errc::empty_set, "strong_set_identity_check: empty set");
  std::vector<SaturatedSet> scaled(bound + 1);
  for (std::uint64_t k = 1; k <= bound; ++k) scaled[k] = decompress(lambda, k);
  for (std::uint64_t m = 1; m < bound; ++m) {
    for (std::uint64_t n = m + 1; n <= bound; ++n) {
      if (intersect(scaled[m], scaled[n]) != scaled[std::gcd(m, n)])
        return std::make_pair(m, n);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> strong_set_identity_check(
    const SaturatedSet& lambda) {
  return strong_set_identity_check(lambda, lambda.max_element());
}

MultiplicityMap::MultiplicityMap(std::map<std::uint64_t, std::uint64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.count(0))
    raise(Errc::invalid_argument, "multiplicity map keys must be positive");
  std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
}

MultiplicityMap MultiplicityMap::indicator(const SaturatedSet& s) {
  std::map<std::uint64_t, std::uint64_t> e;
  for (std::uint64_t v : s.elements()) e.emplace(v, 1);
  return MultiplicityMap(std::move(e));
}

std::uint64_t MultiplicityMap::at(std::uint64_t h) const noexcept {
  auto it = entries_.find(h);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::uint64_t> MultiplicityMap::support() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries_.size());
  for (const auto& [h, m] : entries_) {
    (void)m;
    out.push_back(h);
  }
  return out;
}

MultiplicityMap operator+(const MultiplicityMap& a, const MultiplicityMap& b) {
  std::map<std::uint64_t, std::uint64_t> e = a.entries_;
  for (const auto& [h, m] : b.entries_) e[h] += m;
  return MultiplicityMap(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const MultiplicityMap& m) {
  os << '{';
  bool first = true;
  for (const auto& [h, mult] : m.entries()) {
    if (!first) os << ',';
    first = false;
    os << h << ':' << mult;
  }
  return os << '}';
}

bool is_order_reversing(const MultiplicityMap& m) {
  for (const auto& [h, mult] : m.entries()) {
    for (std::uint64_t d : divisors(h)) {
      if (d != h && m.at(d) < mult) return false;
    }
  }
  return true;
}

std::vector<SaturatedSet> slicing_layers(const MultiplicityMap& m) {
  if (!is_order_reversing(m))
    raise(Errc::not_order_reversing, "slicing_layers: map is not order-reversing");
  const std::uint64_t top = m.at(1);  // bounds every multiplicity
  std::vector<SaturatedSet> layers;
  layers.reserve(top);
  for (std::uint64_t j = 1; j <= top; ++j) {
    std::vector<std::uint64_t> level;
    for (const auto& [h, mult] : m.entries()) {
      if (mult >= j) level.push_back(h);
    }
    layers.push_back(SaturatedSet::from_elements(std::move(level)));
  }
  return layers;
}

HasseDiagram hasse_diagram(const MultiplicityMap& m) {
  if (m.is_zero()) raise(Errc::empty_support, "hasse_diagram: empty support");
  std::vector<HasseNode> nodes;
  for (const auto& [h, mult] : m.entries()) nodes.push_back({h, mult});

  const std::vector<std::uint64_t> vals = m.support();
  std::vector<HasseEdge> edges;
  for (std::uint64_t a : vals) {
    for (std::uint64_t b : vals) {
      if (a >= b || b % a != 0) continue;
      bool covering = true;
      for (std::uint64_t c : vals) {
        if (c != a && c != b && c % a == 0 && b % c == 0) {
          covering = false;
          break;
        }
      }
      if (covering) edges.push_back({a, b});
    }
  }
  return HasseDiagram(std::move(nodes), std::move(edges));
}

}  // namespace divpoly
