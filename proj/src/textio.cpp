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

#include "textio.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace divpoly {

namespace {

// Exponents beyond this are almost certainly typos and would allocate
// absurd coefficient vectors.
constexpr std::uint64_t kMaxExponent = 1u << 20;

class PolyReader {
 public:
  explicit PolyReader(std::string_view text) : text_(text) {}

  IntPoly read() {
    std::map<std::uint64_t, mpz_class> terms;
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      auto [coeff, power] = read_term();
      terms[power] += sign * coeff;
      first = false;
      skip_ws();
    }
    const std::size_t top = static_cast<std::size_t>(terms.rbegin()->first);
    std::vector<mpz_class> coeffs(top + 1);
    for (auto& [p, c] : terms) coeffs[static_cast<std::size_t>(p)] = std::move(c);
    return IntPoly(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::ostringstream os;
    os << expected << " at position " << pos_;
    throw ParseError(pos_, os.str());
  }

  mpz_class read_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::uint64_t read_exponent() {
    skip_ws();
    if (!at_end() && peek() == '-') fail("negative exponents are not allowed");
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an exponent");
    const mpz_class e = read_integer();
    if (e > kMaxExponent) fail("exponent too large");
    return e.get_ui();
  }

  // coefficient, x-part, or both joined by an optional '*'.
  std::pair<mpz_class, std::uint64_t> read_term() {
    skip_ws();
    mpz_class coeff = 1;
    bool saw_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_integer();
      saw_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (!at_end() && peek() == 'x') {
      ++pos_;
      skip_ws();
      std::uint64_t power = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        power = read_exponent();
      }
      return {std::move(coeff), power};
    }
    if (!saw_coeff) fail("expected a coefficient or 'x'");
    return {std::move(coeff), 0};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_unsigned_coeff(std::ostream& os, const mpz_class& c, std::size_t power) {
  const mpz_class mag = abs(c);
  if (mag != 1 || power == 0) os << mag.get_str();
  if (power >= 1) {
    os << 'x';
    if (power >= 2) os << '^' << power;
  }
}

}  // namespace

IntPoly parse_polynomial(std::string_view text) { return PolyReader(text).read(); }

std::string format_polynomial(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    append_unsigned_coeff(os, c, i);
  }
  return os.str();
}

std::string emit_dot(const HasseDiagram& d) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  for (const HasseNode& n : d.nodes()) {
    os << "  \"" << n.value << "\" [label=\"" << n.value;
    if (n.multiplicity != 1) os << " (" << n.multiplicity << ")";
    os << "\"];\n";
  }
  for (const HasseEdge& e : d.edges()) {
    os << "  \"" << e.lower << "\" -> \"" << e.upper << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace divpoly
