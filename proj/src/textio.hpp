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

#ifndef DIVPOLY_TEXTIO_HPP
#define DIVPOLY_TEXTIO_HPP

#include <string>
#include <string_view>

#include "intpoly.hpp"
#include "satset.hpp"

namespace divpoly {

/// Reads a polynomial in x: signed integer-coefficient monomials, `^`
/// for powers, optional `*`, whitespace-insensitive. Examples:
/// "x^4+x^3-x-1", "x^2 - 2*x + 1", "-3". Repeated powers accumulate.
/// Malformed input raises ParseError with the byte position and the
/// expected token.
IntPoly parse_polynomial(std::string_view text);

/// Canonical monomial form, highest power first: "x^4 + x^3 - x - 1".
/// parse_polynomial inverts it.
std::string format_polynomial(const IntPoly& p);

/// DOT digraph, edges drawn bottom-up (rankdir=BT). One node per diagram
/// node labeled "value" or "value (mult)" when the multiplicity is not 1;
/// deterministic ordering (nodes ascending by value).
std::string emit_dot(const HasseDiagram& d);

}  // namespace divpoly

#endif  // DIVPOLY_TEXTIO_HPP
