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

#ifndef DIVPOLY_ERRORS_HPP
#define DIVPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divpoly {

/// Failure classes surfaced by the library. Each value maps 1-1 onto a
/// status code of the C API.
enum class Errc {
  invalid_argument,
  parse_error,
  zero_polynomial,
  inexact_division,
  non_integral_normal_part,
  not_cyclotomic_product,
  not_order_reversing,
  empty_set,
  empty_support,
  invalid_order,
  asymmetry_violation,
  degenerate_denominator,
  degenerate_parameters,
  integrality_violation,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the polynomial text reader; carries the byte offset of the
/// offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse_error, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace divpoly

#endif  // DIVPOLY_ERRORS_HPP
