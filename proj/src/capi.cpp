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

#include "divpoly.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "intpoly.hpp"
#include "lucas.hpp"
#include "numtheory.hpp"
#include "recognizer.hpp"
#include "satset.hpp"
#include "textio.hpp"

/* Opaque handles wrap the C++ values directly. */
struct divpoly_poly {
  divpoly::IntPoly rep;
};
struct divpoly_set {
  divpoly::SaturatedSet rep;
};
struct divpoly_map {
  divpoly::MultiplicityMap rep;
};
struct divpoly_hasse {
  divpoly::HasseDiagram rep;
};

namespace {

thread_local std::string g_last_error;

divpoly_status status_of(divpoly::Errc code) {
  using divpoly::Errc;
  switch (code) {
    case Errc::invalid_argument: return DIVPOLY_ERR_INVALID_ARGUMENT;
    case Errc::parse_error: return DIVPOLY_ERR_PARSE;
    case Errc::zero_polynomial: return DIVPOLY_ERR_ZERO_POLYNOMIAL;
    case Errc::inexact_division: return DIVPOLY_ERR_INEXACT_DIVISION;
    case Errc::non_integral_normal_part: return DIVPOLY_ERR_NON_INTEGRAL_NORMAL_PART;
    case Errc::not_cyclotomic_product: return DIVPOLY_ERR_NOT_CYCLOTOMIC_PRODUCT;
    case Errc::not_order_reversing: return DIVPOLY_ERR_NOT_ORDER_REVERSING;
    case Errc::empty_set: return DIVPOLY_ERR_EMPTY_SET;
    case Errc::empty_support: return DIVPOLY_ERR_EMPTY_SUPPORT;
    case Errc::invalid_order: return DIVPOLY_ERR_INVALID_ORDER;
    case Errc::asymmetry_violation: return DIVPOLY_ERR_ASYMMETRY_VIOLATION;
    case Errc::degenerate_denominator: return DIVPOLY_ERR_DEGENERATE_DENOMINATOR;
    case Errc::degenerate_parameters: return DIVPOLY_ERR_DEGENERATE_PARAMETERS;
    case Errc::integrality_violation: return DIVPOLY_ERR_INTEGRALITY_VIOLATION;
  }
  return DIVPOLY_ERR_INTERNAL;
}

/* Boundary guard: clears the error slot, translates exceptions. */
template <typename Fn>
divpoly_status guarded(Fn&& fn) noexcept {
  g_last_error.clear();
  try {
    return fn();
  } catch (const divpoly::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    return DIVPOLY_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DIVPOLY_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DIVPOLY_ERR_INTERNAL;
  }
}

divpoly_status fail_arg(const char* message) {
  g_last_error = message;
  return DIVPOLY_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

divpoly::RingParams params_of(int64_t p, int64_t q) {
  divpoly::RingParams out;
  out.P = static_cast<long>(p);
  out.Q = static_cast<long>(q);
  return out;
}

divpoly_status copy_values(const std::vector<std::uint64_t>& values,
                           uint64_t* buf, uint64_t capacity, uint64_t* count) {
  if (count == nullptr) return fail_arg("count must not be NULL");
  *count = values.size();
  if (buf == nullptr) return DIVPOLY_OK;
  if (capacity < values.size()) {
    g_last_error = "buffer too small";
    return DIVPOLY_ERR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buf, values.data(), values.size() * sizeof(uint64_t));
  return DIVPOLY_OK;
}

/* Report an optional counterexample through (found, slots...). */
template <typename Opt, typename... Slots>
divpoly_status report_optional(const Opt& value, int* found, Slots*... slots) {
  if (found == nullptr || ((slots == nullptr) || ...))
    return fail_arg("output pointers must not be NULL");
  if (value.has_value()) {
    *found = 1;
    if constexpr (sizeof...(Slots) == 1) {
      auto assign = [&](auto* slot) { *slot = *value; };
      (assign(slots), ...);
    } else {
      auto [m, n] = *value;
      uint64_t pair[2] = {m, n};
      std::size_t i = 0;
      ((*slots = pair[i++]), ...);
    }
  } else {
    *found = 0;
  }
  return DIVPOLY_OK;
}

}  // namespace

extern "C" {

const char* divpoly_version(void) { return "1.0.0"; }

const char* divpoly_last_error(void) { return g_last_error.c_str(); }

const char* divpoly_status_name(divpoly_status status) {
  switch (status) {
    case DIVPOLY_OK: return "ok";
    case DIVPOLY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DIVPOLY_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case DIVPOLY_ERR_PARSE: return "parse error";
    case DIVPOLY_ERR_ZERO_POLYNOMIAL: return "zero polynomial";
    case DIVPOLY_ERR_INEXACT_DIVISION: return "inexact division";
    case DIVPOLY_ERR_NON_INTEGRAL_NORMAL_PART: return "non-integral normal part";
    case DIVPOLY_ERR_NOT_CYCLOTOMIC_PRODUCT: return "not a cyclotomic product";
    case DIVPOLY_ERR_NOT_ORDER_REVERSING: return "not order-reversing";
    case DIVPOLY_ERR_EMPTY_SET: return "empty set";
    case DIVPOLY_ERR_EMPTY_SUPPORT: return "empty support";
    case DIVPOLY_ERR_INVALID_ORDER: return "invalid order";
    case DIVPOLY_ERR_ASYMMETRY_VIOLATION: return "asymmetry violation";
    case DIVPOLY_ERR_DEGENERATE_DENOMINATOR: return "degenerate denominator";
    case DIVPOLY_ERR_DEGENERATE_PARAMETERS: return "degenerate parameters";
    case DIVPOLY_ERR_INTEGRALITY_VIOLATION: return "integrality violation";
    case DIVPOLY_ERR_OUT_OF_MEMORY: return "out of memory";
    case DIVPOLY_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void divpoly_string_free(char* s) { std::free(s); }

void divpoly_string_array_free(char** strings, uint64_t count) {
  if (strings == nullptr) return;
  for (uint64_t i = 0; i < count; ++i) std::free(strings[i]);
  std::free(strings);
}

void divpoly_canon_factors_free(divpoly_canon_factor* factors, uint64_t count) {
  if (factors == nullptr) return;
  for (uint64_t i = 0; i < count; ++i) delete factors[i].core;
  std::free(factors);
}

void divpoly_set_array_free(divpoly_set** sets, uint64_t count) {
  if (sets == nullptr) return;
  for (uint64_t i = 0; i < count; ++i) delete sets[i];
  std::free(sets);
}

/* ------------------------------------------------------------------ */
/* Polynomials                                                         */

divpoly_status divpoly_poly_parse(const char* text, divpoly_poly** out) {
  if (text == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{divpoly::parse_polynomial(text)};
    return DIVPOLY_OK;
  });
}

void divpoly_poly_free(divpoly_poly* p) { delete p; }

divpoly_status divpoly_poly_format(const divpoly_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(divpoly::format_polynomial(p->rep));
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_degree(const divpoly_poly* p, int64_t* out) {
  if (p == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = p->rep.degree();
  return DIVPOLY_OK;
}

divpoly_status divpoly_poly_coeff(const divpoly_poly* p, uint64_t i, char** out) {
  if (p == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(p->rep[static_cast<std::size_t>(i)].get_str());
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_equal(const divpoly_poly* a, const divpoly_poly* b,
                                  int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = a->rep == b->rep ? 1 : 0;
  return DIVPOLY_OK;
}

divpoly_status divpoly_poly_mul(const divpoly_poly* a, const divpoly_poly* b,
                                divpoly_poly** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{a->rep * b->rep};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_divide_exact(const divpoly_poly* a,
                                         const divpoly_poly* b,
                                         divpoly_poly** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{divpoly::divide_exact(a->rep, b->rep)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_compose_power(const divpoly_poly* f, uint64_t n,
                                          divpoly_poly** out) {
  if (f == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{divpoly::compose_power(f->rep, n)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_evaluate(const divpoly_poly* f, const char* value,
                                     char** out) {
  if (f == nullptr || value == nullptr || out == nullptr)
    return fail_arg("NULL argument");
  return guarded([&] {
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), value, 10) != 0)
      divpoly::raise(divpoly::Errc::invalid_argument, "value is not a decimal integer");
    *out = dup_string(divpoly::evaluate_at(f->rep, v).get_str());
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_is_palindromic(const divpoly_poly* f, int* out) {
  if (f == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = divpoly::is_palindromic(f->rep) ? 1 : 0;
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_normal_decompose(const divpoly_poly* f,
                                             char** constant_out,
                                             uint64_t* power_out,
                                             divpoly_poly** normal_out) {
  if (f == nullptr || constant_out == nullptr || power_out == nullptr ||
      normal_out == nullptr)
    return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::NormalForm nf = divpoly::normal_decompose(f->rep);
    *constant_out = dup_string(nf.constant.get_str());
    *power_out = nf.power;
    *normal_out = new divpoly_poly{std::move(nf.normal)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_poly_gcd(const divpoly_poly* a, const divpoly_poly* b,
                                divpoly_poly** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{divpoly::primitive_gcd(a->rep, b->rep)};
    return DIVPOLY_OK;
  });
}

/* ------------------------------------------------------------------ */
/* Cyclotomic polynomials                                              */

divpoly_status divpoly_cyclotomic(uint64_t n, divpoly_poly** out) {
  if (out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{divpoly::cyclotomic(n)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_euler_totient(uint64_t n, uint64_t* out) {
  if (out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = divpoly::euler_totient(n);
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_phi_of_set(const divpoly_set* s, divpoly_poly** out) {
  if (s == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{divpoly::phi_of_set(s->rep)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_phi_of_map(const divpoly_map* m, divpoly_poly** out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_poly{divpoly::phi_of_map(m->rep)};
    return DIVPOLY_OK;
  });
}

/* ------------------------------------------------------------------ */
/* Saturated sets                                                      */

divpoly_status divpoly_set_saturate(const uint64_t* generators, uint64_t count,
                                    divpoly_set** out) {
  if (out == nullptr || (generators == nullptr && count > 0))
    return fail_arg("NULL argument");
  return guarded([&] {
    std::vector<std::uint64_t> gens(generators, generators + count);
    *out = new divpoly_set{divpoly::SaturatedSet::saturate(gens)};
    return DIVPOLY_OK;
  });
}

void divpoly_set_free(divpoly_set* s) { delete s; }

divpoly_status divpoly_set_elements(const divpoly_set* s, uint64_t* buf,
                                    uint64_t capacity, uint64_t* count) {
  if (s == nullptr) return fail_arg("NULL argument");
  return copy_values(s->rep.elements(), buf, capacity, count);
}

divpoly_status divpoly_set_maximal_generators(const divpoly_set* s, uint64_t* buf,
                                              uint64_t capacity, uint64_t* count) {
  if (s == nullptr) return fail_arg("NULL argument");
  return copy_values(s->rep.maximal_generators(), buf, capacity, count);
}

divpoly_status divpoly_set_equal(const divpoly_set* a, const divpoly_set* b,
                                 int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = a->rep == b->rep ? 1 : 0;
  return DIVPOLY_OK;
}

divpoly_status divpoly_set_product(const divpoly_set* a, const divpoly_set* b,
                                   divpoly_set** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_set{divpoly::set_product(a->rep, b->rep)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_set_decompress(const divpoly_set* s, uint64_t n,
                                      divpoly_set** out) {
  if (s == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_set{divpoly::decompress(s->rep, n)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_set_compress_core(const divpoly_set* s,
                                         divpoly_set** core_out,
                                         uint64_t* exponent_out) {
  if (s == nullptr || core_out == nullptr || exponent_out == nullptr)
    return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::CompressedForm cf = divpoly::compress_core(s->rep);
    *core_out = new divpoly_set{std::move(cf.core)};
    *exponent_out = cf.exponent;
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_set_is_principal(const divpoly_set* s, int* found,
                                        uint64_t* n_out) {
  if (s == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    return report_optional(divpoly::is_principal(s->rep), found, n_out);
  });
}

divpoly_status divpoly_set_strong_identity_check(const divpoly_set* s,
                                                 uint64_t bound, int* found,
                                                 uint64_t* m_out, uint64_t* n_out) {
  if (s == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    return report_optional(divpoly::strong_set_identity_check(s->rep, bound),
                           found, m_out, n_out);
  });
}

/* ------------------------------------------------------------------ */
/* Multiplicity maps                                                   */

divpoly_status divpoly_map_create(const uint64_t* keys,
                                  const uint64_t* multiplicities, uint64_t count,
                                  divpoly_map** out) {
  if (out == nullptr || (count > 0 && (keys == nullptr || multiplicities == nullptr)))
    return fail_arg("NULL argument");
  return guarded([&] {
    std::map<std::uint64_t, std::uint64_t> entries;
    for (uint64_t i = 0; i < count; ++i) {
      if (!entries.emplace(keys[i], multiplicities[i]).second)
        divpoly::raise(divpoly::Errc::invalid_argument, "duplicate map key");
    }
    *out = new divpoly_map{divpoly::MultiplicityMap(std::move(entries))};
    return DIVPOLY_OK;
  });
}

void divpoly_map_free(divpoly_map* m) { delete m; }

divpoly_status divpoly_map_indicator(const divpoly_set* s, divpoly_map** out) {
  if (s == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_map{divpoly::MultiplicityMap::indicator(s->rep)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_map_entries(const divpoly_map* m, uint64_t* keys_buf,
                                   uint64_t* mults_buf, uint64_t capacity,
                                   uint64_t* count) {
  if (m == nullptr || count == nullptr) return fail_arg("NULL argument");
  const auto& entries = m->rep.entries();
  *count = entries.size();
  if (keys_buf == nullptr && mults_buf == nullptr) return DIVPOLY_OK;
  if (keys_buf == nullptr || mults_buf == nullptr)
    return fail_arg("keys and multiplicities buffers must come together");
  if (capacity < entries.size()) {
    g_last_error = "buffer too small";
    return DIVPOLY_ERR_BUFFER_TOO_SMALL;
  }
  uint64_t i = 0;
  for (const auto& [h, mult] : entries) {
    keys_buf[i] = h;
    mults_buf[i] = mult;
    ++i;
  }
  return DIVPOLY_OK;
}

divpoly_status divpoly_map_at(const divpoly_map* m, uint64_t h, uint64_t* out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = m->rep.at(h);
  return DIVPOLY_OK;
}

divpoly_status divpoly_map_equal(const divpoly_map* a, const divpoly_map* b,
                                 int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = a->rep == b->rep ? 1 : 0;
  return DIVPOLY_OK;
}

divpoly_status divpoly_map_is_order_reversing(const divpoly_map* m, int* out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = divpoly::is_order_reversing(m->rep) ? 1 : 0;
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_map_is_indecomposable(const divpoly_map* m, int* out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = divpoly::is_indecomposable(m->rep) ? 1 : 0;
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_map_slicing_layers(const divpoly_map* m,
                                          divpoly_set*** layers_out,
                                          uint64_t* count_out) {
  if (m == nullptr || layers_out == nullptr || count_out == nullptr)
    return fail_arg("NULL argument");
  return guarded([&] {
    std::vector<divpoly::SaturatedSet> layers = divpoly::slicing_layers(m->rep);
    auto** out = static_cast<divpoly_set**>(
        std::malloc(sizeof(divpoly_set*) * std::max<std::size_t>(layers.size(), 1)));
    if (out == nullptr) throw std::bad_alloc();
    for (std::size_t i = 0; i < layers.size(); ++i)
      out[i] = new divpoly_set{std::move(layers[i])};
    *layers_out = out;
    *count_out = layers.size();
    return DIVPOLY_OK;
  });
}

/* ------------------------------------------------------------------ */
/* Hasse diagrams                                                      */

divpoly_status divpoly_hasse_build(const divpoly_map* m, divpoly_hasse** out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new divpoly_hasse{divpoly::hasse_diagram(m->rep)};
    return DIVPOLY_OK;
  });
}

void divpoly_hasse_free(divpoly_hasse* h) { delete h; }

divpoly_status divpoly_hasse_node_count(const divpoly_hasse* h, uint64_t* out) {
  if (h == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = h->rep.nodes().size();
  return DIVPOLY_OK;
}

divpoly_status divpoly_hasse_edge_count(const divpoly_hasse* h, uint64_t* out) {
  if (h == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = h->rep.edges().size();
  return DIVPOLY_OK;
}

divpoly_status divpoly_hasse_node(const divpoly_hasse* h, uint64_t index,
                                  uint64_t* value_out, uint64_t* multiplicity_out) {
  if (h == nullptr || value_out == nullptr || multiplicity_out == nullptr)
    return fail_arg("NULL argument");
  if (index >= h->rep.nodes().size()) return fail_arg("node index out of range");
  *value_out = h->rep.nodes()[index].value;
  *multiplicity_out = h->rep.nodes()[index].multiplicity;
  return DIVPOLY_OK;
}

divpoly_status divpoly_hasse_edge(const divpoly_hasse* h, uint64_t index,
                                  uint64_t* lower_out, uint64_t* upper_out) {
  if (h == nullptr || lower_out == nullptr || upper_out == nullptr)
    return fail_arg("NULL argument");
  if (index >= h->rep.edges().size()) return fail_arg("edge index out of range");
  *lower_out = h->rep.edges()[index].lower;
  *upper_out = h->rep.edges()[index].upper;
  return DIVPOLY_OK;
}

divpoly_status divpoly_hasse_dot(const divpoly_hasse* h, char** out) {
  if (h == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(divpoly::emit_dot(h->rep));
    return DIVPOLY_OK;
  });
}

/* ------------------------------------------------------------------ */
/* Recognition and canonical form                                      */

divpoly_status divpoly_recognize(const divpoly_poly* f, char** constant_out,
                                 uint64_t* power_out, divpoly_map** map_out) {
  if (f == nullptr || constant_out == nullptr || power_out == nullptr ||
      map_out == nullptr)
    return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::DivPolyDecomposition dec = divpoly::recognize(f->rep);
    *constant_out = dup_string(dec.constant.get_str());
    *power_out = dec.power;
    *map_out = new divpoly_map{std::move(dec.map)};
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_oracle_composition_divides(const divpoly_poly* f,
                                                  uint64_t n_max, int* found,
                                                  uint64_t* n_out) {
  if (f == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    return report_optional(divpoly::oracle_composition_divides(f->rep, n_max),
                           found, n_out);
  });
}

divpoly_status divpoly_canonical_form(const divpoly_poly* f, char** constant_out,
                                      uint64_t* power_out,
                                      divpoly_canon_factor** factors_out,
                                      uint64_t* count_out) {
  if (f == nullptr || constant_out == nullptr || power_out == nullptr ||
      factors_out == nullptr || count_out == nullptr)
    return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::CanonicalForm cf = divpoly::canonical_form(f->rep);
    auto* factors = static_cast<divpoly_canon_factor*>(std::malloc(
        sizeof(divpoly_canon_factor) * std::max<std::size_t>(cf.factors.size(), 1)));
    if (factors == nullptr) throw std::bad_alloc();
    for (std::size_t i = 0; i < cf.factors.size(); ++i) {
      factors[i].core = new divpoly_set{std::move(cf.factors[i].core)};
      factors[i].exponent = cf.factors[i].exponent;
    }
    *constant_out = dup_string(cf.constant.get_str());
    *power_out = cf.power;
    *factors_out = factors;
    *count_out = cf.factors.size();
    return DIVPOLY_OK;
  });
}

/* ------------------------------------------------------------------ */
/* Lucas-pair sequences                                                */

divpoly_status divpoly_alpha_power(int64_t p, int64_t q, uint64_t n, char** a_out,
                                   char** b_out) {
  if (a_out == nullptr || b_out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::QuadInt u = divpoly::alpha_power(params_of(p, q), n);
    *a_out = dup_string(u.a().get_str());
    *b_out = dup_string(u.b().get_str());
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_s_term(int64_t p, int64_t q, uint64_t n, char** out) {
  if (out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(divpoly::s_term(params_of(p, q), n).get_str());
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_trace_term(int64_t p, int64_t q, uint64_t n, char** out) {
  if (out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(divpoly::trace_term(params_of(p, q), n).get_str());
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_phi_eval_at_power(uint64_t d, int64_t p, int64_t q,
                                         uint64_t n, char** out) {
  if (out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(divpoly::phi_eval_at_power(d, params_of(p, q), n).get_str());
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_seq_term(const divpoly_map* m, int64_t p, int64_t q,
                                uint64_t n, char** out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::SequenceSpec spec(m->rep, params_of(p, q));
    *out = dup_string(divpoly::seq_term(spec, n).get_str());
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_seq_range(const divpoly_map* m, int64_t p, int64_t q,
                                 uint64_t n_max, char*** terms_out,
                                 uint64_t* count_out) {
  if (m == nullptr || terms_out == nullptr || count_out == nullptr)
    return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::SequenceSpec spec(m->rep, params_of(p, q));
    std::vector<mpz_class> terms = divpoly::seq_range(spec, n_max);
    auto** out = static_cast<char**>(std::malloc(sizeof(char*) * terms.size()));
    if (out == nullptr) throw std::bad_alloc();
    uint64_t written = 0;
    try {
      for (const mpz_class& t : terms) out[written++] = dup_string(t.get_str());
    } catch (...) {
      divpoly_string_array_free(out, written);
      throw;
    }
    *terms_out = out;
    *count_out = terms.size();
    return DIVPOLY_OK;
  });
}

divpoly_status divpoly_verify_divisibility(const divpoly_map* m, int64_t p,
                                           int64_t q, uint64_t n_max, int* found,
                                           uint64_t* m_out, uint64_t* n_out) {
  if (m == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::SequenceSpec spec(m->rep, params_of(p, q));
    return report_optional(divpoly::verify_divisibility(spec, n_max), found,
                           m_out, n_out);
  });
}

divpoly_status divpoly_verify_strong_divisibility(const divpoly_map* m, int64_t p,
                                                  int64_t q, uint64_t n_max,
                                                  int* found, uint64_t* m_out,
                                                  uint64_t* n_out) {
  if (m == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    divpoly::SequenceSpec spec(m->rep, params_of(p, q));
    return report_optional(divpoly::verify_strong_divisibility(spec, n_max), found,
                           m_out, n_out);
  });
}

divpoly_status divpoly_phi_lower_bound_check(int64_t p, int64_t q, uint64_t d_max,
                                             int* found, uint64_t* d_out) {
  return guarded([&] {
    return report_optional(divpoly::phi_lower_bound_check(params_of(p, q), d_max),
                           found, d_out);
  });
}

} /* extern "C" */
