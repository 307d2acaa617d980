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

// Command-line front end. Talks to the library exclusively through the
// C API in divpoly.h.
//
// Exit codes: 0 on success / property holds, 1 when a property fails or
// recognition is negative, 2 on usage, parse, or invalid-input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divpoly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;

// Thrown to unwind to main with a specific exit code.
struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliFailure{code, message};
}

int exit_code_for(divpoly_status status) {
  switch (status) {
    case DIVPOLY_ERR_NOT_CYCLOTOMIC_PRODUCT:
    case DIVPOLY_ERR_NOT_ORDER_REVERSING:
    case DIVPOLY_ERR_NON_INTEGRAL_NORMAL_PART:
      return kExitProperty;  // recognition negative
    default:
      return kExitUsage;
  }
}

void check(divpoly_status status) {
  if (status == DIVPOLY_OK) return;
  std::string message = divpoly_last_error();
  if (message.empty()) message = divpoly_status_name(status);
  die(exit_code_for(status), message);
}

std::string take_string(char* s) {
  std::string out(s);
  divpoly_string_free(s);
  return out;
}

using PolyPtr = std::unique_ptr<divpoly_poly, decltype(&divpoly_poly_free)>;
using SetPtr = std::unique_ptr<divpoly_set, decltype(&divpoly_set_free)>;
using MapPtr = std::unique_ptr<divpoly_map, decltype(&divpoly_map_free)>;
using HassePtr = std::unique_ptr<divpoly_hasse, decltype(&divpoly_hasse_free)>;

PolyPtr parse_poly(const std::string& text) {
  divpoly_poly* p = nullptr;
  check(divpoly_poly_parse(text.c_str(), &p));
  return PolyPtr(p, &divpoly_poly_free);
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text,
                                           const std::string& what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      die(kExitUsage, "invalid " + what + " entry: '" + item + "'");
    }
  }
  if (out.empty()) die(kExitUsage, what + " list is empty");
  return out;
}

SetPtr saturate(const std::vector<std::uint64_t>& gens) {
  divpoly_set* s = nullptr;
  check(divpoly_set_saturate(gens.data(), gens.size(), &s));
  return SetPtr(s, &divpoly_set_free);
}

// "h:m,h:m,..." with positive h and m.
MapPtr parse_map_option(const std::string& text) {
  std::vector<std::uint64_t> keys, mults;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      die(kExitUsage, "map entry '" + item + "' is not of the form h:m");
    try {
      keys.push_back(std::stoull(item.substr(0, colon)));
      mults.push_back(std::stoull(item.substr(colon + 1)));
    } catch (const std::exception&) {
      die(kExitUsage, "invalid map entry: '" + item + "'");
    }
  }
  if (keys.empty()) die(kExitUsage, "map list is empty");
  divpoly_map* m = nullptr;
  check(divpoly_map_create(keys.data(), mults.data(), keys.size(), &m));
  return MapPtr(m, &divpoly_map_free);
}

std::vector<std::uint64_t> set_generators(const divpoly_set* s) {
  std::uint64_t count = 0;
  check(divpoly_set_maximal_generators(s, nullptr, 0, &count));
  std::vector<std::uint64_t> out(count);
  check(divpoly_set_maximal_generators(s, out.data(), count, &count));
  return out;
}

std::string format_poly(const divpoly_poly* p) {
  char* text = nullptr;
  check(divpoly_poly_format(p, &text));
  return take_string(text);
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

// Builds the sequence map from --set/--map (exactly one must be present)
// and returns its entries for reporting.
MapPtr sequence_map(const std::string& set_arg, const std::string& map_arg) {
  if (set_arg.empty() == map_arg.empty())
    die(kExitUsage, "exactly one of --set and --map is required");
  if (!map_arg.empty()) return parse_map_option(map_arg);
  SetPtr s = saturate(parse_uint_list(set_arg, "generator"));
  divpoly_map* m = nullptr;
  check(divpoly_map_indicator(s.get(), &m));
  return MapPtr(m, &divpoly_map_free);
}

struct MapEntries {
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> mults;
};

MapEntries map_entries(const divpoly_map* m) {
  std::uint64_t count = 0;
  check(divpoly_map_entries(m, nullptr, nullptr, 0, &count));
  MapEntries out;
  out.keys.resize(count);
  out.mults.resize(count);
  check(divpoly_map_entries(m, out.keys.data(), out.mults.data(), count, &count));
  return out;
}

std::string format_map(const MapEntries& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.keys.size(); ++i) {
    if (i) os << ',';
    os << e.keys[i] << ':' << e.mults[i];
  }
  return os.str();
}

// Support of the map as a saturated set (for the JSON generators field).
std::vector<std::uint64_t> support_generators(const divpoly_map* m) {
  const MapEntries e = map_entries(m);
  SetPtr s = saturate(e.keys);
  return set_generators(s.get());
}

struct SeqOptions {
  std::string set_arg;
  std::string map_arg;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::uint64_t n = 0;
  bool json = false;
  bool csv = false;
};

std::string run_seq(const SeqOptions& opt) {
  MapPtr m = sequence_map(opt.set_arg, opt.map_arg);
  char** terms = nullptr;
  std::uint64_t count = 0;
  check(divpoly_seq_range(m.get(), opt.p, opt.q, opt.n, &terms, &count));
  std::vector<std::string> values;
  values.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) values.emplace_back(terms[i]);
  divpoly_string_array_free(terms, count);

  std::ostringstream os;
  if (opt.json) {
    nlohmann::json doc;
    doc["P"] = opt.p;
    doc["Q"] = opt.q;
    doc["generators"] = support_generators(m.get());
    nlohmann::json jmap = nlohmann::json::object();
    const MapEntries e = map_entries(m.get());
    for (std::size_t i = 0; i < e.keys.size(); ++i)
      jmap[std::to_string(e.keys[i])] = e.mults[i];
    doc["map"] = jmap;
    doc["terms"] = values;
    os << doc.dump() << '\n';
  } else if (opt.csv) {
    os << "n,term\n";
    for (std::size_t i = 0; i < values.size(); ++i) os << i << ',' << values[i] << '\n';
  } else {
    for (const std::string& v : values) os << v << '\n';
  }
  return os.str();
}

std::string run_verify(const std::string& mode, const SeqOptions& opt, int* exit_code) {
  MapPtr m = sequence_map(opt.set_arg, opt.map_arg);
  int found = 0;
  std::uint64_t vm = 0, vn = 0;
  if (mode == "div") {
    check(divpoly_verify_divisibility(m.get(), opt.p, opt.q, opt.n, &found, &vm, &vn));
  } else if (mode == "strongdiv") {
    check(divpoly_verify_strong_divisibility(m.get(), opt.p, opt.q, opt.n, &found,
                                             &vm, &vn));
  } else {
    die(kExitUsage, "verify mode must be 'div' or 'strongdiv'");
  }
  if (found) {
    *exit_code = kExitProperty;
    std::ostringstream os;
    os << "counterexample: (" << vm << "," << vn << ")\n";
    return os.str();
  }
  *exit_code = kExitOk;
  return "OK\n";
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) die(kExitUsage, "cannot open output file: " + out_path);
  f << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisibility polynomials, cyclotomic factorizations, and the "
               "integer divisibility sequences they generate"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--output", out_path, "write the result to PATH instead of stdout");

  std::uint64_t cyclo_n = 0;
  auto* cmd_cyclo = app.add_subcommand("cyclo", "print the N-th cyclotomic polynomial");
  cmd_cyclo->add_option("N", cyclo_n, "cyclotomic index (>= 1)")->required();

  std::string phiset_gens;
  auto* cmd_phiset = app.add_subcommand(
      "phi-set", "print the product of distinct cyclotomics over a saturated set");
  cmd_phiset->add_option("generators", phiset_gens, "comma-separated generators")
      ->required();

  std::string recognize_poly;
  auto* cmd_recognize = app.add_subcommand(
      "recognize", "decompose a divisibility polynomial into cyclotomic factors");
  cmd_recognize->add_option("polynomial", recognize_poly, "polynomial in x")
      ->required();

  std::string canon_poly;
  auto* cmd_canon = app.add_subcommand(
      "canon", "canonical compressed factorization of a divisibility polynomial");
  cmd_canon->add_option("polynomial", canon_poly, "polynomial in x")->required();

  std::string hasse_gens, hasse_map;
  bool hasse_dot = false;
  auto* cmd_hasse =
      app.add_subcommand("hasse", "Hasse diagram of a saturated set or labeled map");
  cmd_hasse->add_option("generators", hasse_gens, "comma-separated generators");
  cmd_hasse->add_option("--map", hasse_map, "explicit multiplicity map h:m,...");
  cmd_hasse->add_flag("--dot", hasse_dot, "emit DOT digraph text");

  SeqOptions seq_opt;
  auto* cmd_seq = app.add_subcommand("seq", "generate sequence terms A_0..A_N");
  cmd_seq->add_option("--set", seq_opt.set_arg, "saturated-set generators G1,G2,...");
  cmd_seq->add_option("--map", seq_opt.map_arg, "multiplicity map h:m,...");
  cmd_seq->add_option("-P", seq_opt.p, "alpha + beta")->required();
  cmd_seq->add_option("-Q", seq_opt.q, "alpha * beta")->required();
  cmd_seq->add_option("-n", seq_opt.n, "last index N")->required();
  auto* flag_json = cmd_seq->add_flag("--json", seq_opt.json, "JSON object output");
  cmd_seq->add_flag("--csv", seq_opt.csv, "CSV output")->excludes(flag_json);

  SeqOptions verify_opt;
  std::string verify_mode;
  auto* cmd_verify = app.add_subcommand(
      "verify", "check (strong) divisibility of a sequence up to an index bound");
  cmd_verify->add_option("mode", verify_mode, "'div' or 'strongdiv'")->required();
  cmd_verify->add_option("--set", verify_opt.set_arg, "saturated-set generators");
  cmd_verify->add_option("--map", verify_opt.map_arg, "multiplicity map h:m,...");
  cmd_verify->add_option("-P", verify_opt.p, "alpha + beta")->required();
  cmd_verify->add_option("-Q", verify_opt.q, "alpha * beta")->required();
  cmd_verify->add_option("-n", verify_opt.n, "scan bound")->required();

  std::string compress_gens;
  auto* cmd_compress = app.add_subcommand(
      "compress", "core and exponent of a saturated set");
  cmd_compress->add_option("generators", compress_gens, "comma-separated generators")
      ->required();

  // let the global -o appear after a subcommand as well
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string output;
    int exit_code = kExitOk;

    if (cmd_cyclo->parsed()) {
      divpoly_poly* p = nullptr;
      check(divpoly_cyclotomic(cyclo_n, &p));
      PolyPtr poly(p, &divpoly_poly_free);
      output = format_poly(poly.get()) + "\n";
    } else if (cmd_phiset->parsed()) {
      SetPtr s = saturate(parse_uint_list(phiset_gens, "generator"));
      divpoly_poly* p = nullptr;
      check(divpoly_phi_of_set(s.get(), &p));
      PolyPtr poly(p, &divpoly_poly_free);
      output = format_poly(poly.get()) + "\n";
    } else if (cmd_recognize->parsed()) {
      PolyPtr f = parse_poly(recognize_poly);
      char* constant = nullptr;
      std::uint64_t power = 0;
      divpoly_map* map = nullptr;
      check(divpoly_recognize(f.get(), &constant, &power, &map));
      MapPtr m(map, &divpoly_map_free);
      std::ostringstream os;
      os << "constant: " << take_string(constant) << '\n'
         << "power: " << power << '\n'
         << "map: " << format_map(map_entries(m.get())) << '\n';
      output = os.str();
    } else if (cmd_canon->parsed()) {
      PolyPtr f = parse_poly(canon_poly);
      char* constant = nullptr;
      std::uint64_t power = 0;
      divpoly_canon_factor* factors = nullptr;
      std::uint64_t count = 0;
      check(divpoly_canonical_form(f.get(), &constant, &power, &factors, &count));
      std::ostringstream os;
      os << "constant: " << take_string(constant) << '\n' << "power: " << power << '\n';
      for (std::uint64_t i = 0; i < count; ++i) {
        os << "factor: core=" << join(set_generators(factors[i].core))
           << " exponent=" << factors[i].exponent << '\n';
      }
      divpoly_canon_factors_free(factors, count);
      output = os.str();
    } else if (cmd_hasse->parsed()) {
      if (hasse_gens.empty() == hasse_map.empty())
        die(kExitUsage, "exactly one of generators and --map is required");
      MapPtr m = sequence_map(hasse_gens, hasse_map);
      divpoly_hasse* h = nullptr;
      check(divpoly_hasse_build(m.get(), &h));
      HassePtr hasse(h, &divpoly_hasse_free);
      if (hasse_dot) {
        char* dot = nullptr;
        check(divpoly_hasse_dot(hasse.get(), &dot));
        output = take_string(dot);
      } else {
        std::uint64_t nodes = 0, edges = 0;
        check(divpoly_hasse_node_count(hasse.get(), &nodes));
        check(divpoly_hasse_edge_count(hasse.get(), &edges));
        std::ostringstream os;
        for (std::uint64_t i = 0; i < nodes; ++i) {
          std::uint64_t value = 0, mult = 0;
          check(divpoly_hasse_node(hasse.get(), i, &value, &mult));
          os << value << " (" << mult << ")\n";
        }
        for (std::uint64_t i = 0; i < edges; ++i) {
          std::uint64_t lower = 0, upper = 0;
          check(divpoly_hasse_edge(hasse.get(), i, &lower, &upper));
          os << lower << " -> " << upper << '\n';
        }
        output = os.str();
      }
    } else if (cmd_seq->parsed()) {
      output = run_seq(seq_opt);
    } else if (cmd_verify->parsed()) {
      output = run_verify(verify_mode, verify_opt, &exit_code);
    } else if (cmd_compress->parsed()) {
      SetPtr s = saturate(parse_uint_list(compress_gens, "generator"));
      divpoly_set* core = nullptr;
      std::uint64_t exponent = 0;
      check(divpoly_set_compress_core(s.get(), &core, &exponent));
      SetPtr core_ptr(core, &divpoly_set_free);
      std::ostringstream os;
      os << "core: " << join(set_generators(core_ptr.get())) << '\n'
         << "exponent: " << exponent << '\n';
      output = os.str();
    }

    write_output(out_path, output);
    return exit_code;
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
