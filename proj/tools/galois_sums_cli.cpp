/*
 * Copyright 2026 The galois-sums Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// galois-sums: command-line front end for the library.
//
// Exit codes: 0 success, 2 bad input, 3 resource cap, 4 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galois_sums/codebook.hpp"
#include "galois_sums/serialize.hpp"
#include "galois_sums/sums.hpp"
#include "galois_sums/verification.hpp"
#include "json.hpp"

namespace gs = galois_sums;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

struct Config {
  std::int64_t p = 3;
  std::int64_t n = 2;
  std::int64_t s = 1;
  std::vector<std::int64_t> modulus;  // low to high, monic
  bool json = false;
  std::string out;
  std::int64_t cap_elements = gs::kDefaultElementCap;
  std::int64_t cap_terms = 10'000'000;
  std::int64_t cap_pairs = gs::kDefaultPairCap;
  double tol = 1e-9;
  std::uint64_t seed = 20240601;

  void validate() const {
    if (cap_elements <= 0 || cap_terms <= 0 || cap_pairs <= 0) {
      throw gs::Error(gs::ErrorKind::InvalidParams, "caps must be positive");
    }
    if (!(tol >= 1e-12)) throw gs::Error(gs::ErrorKind::InvalidParams, "tolerance must be at least 1e-12");
  }

  gs::SumOptions sums() const {
    gs::SumOptions o;
    o.term_cap = cap_terms;
    return o;
  }

  std::shared_ptr<const gs::CharacterGroup> group() const {
    const gs::RingParams params{p, n, s};
    params.validate();
    std::optional<gs::Polynomial> h;
    if (!modulus.empty()) h = gs::Polynomial{modulus, params.char_modulus()};
    return gs::CharacterGroup::create(gs::GaloisRing::create(params, h, cap_elements));
  }
};

// Output sink honoring --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw gs::Error(gs::ErrorKind::IoError, "cannot open '" + path + "' for writing");
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw gs::Error(gs::ErrorKind::InvalidParams, "bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw gs::Error(gs::ErrorKind::InvalidParams, "empty integer list");
  return out;
}

// A single integer is read as an integer of R, a list as coordinates.
gs::RingElement parse_element(const gs::GaloisRing& ring, const std::string& text) {
  const auto values = parse_list(text);
  if (values.size() == 1) return ring.from_integer(values[0]);
  gs::RingElement x{values};
  (void)ring.index_of(x);
  return x;
}

std::string element_str(const gs::RingElement& x) {
  if (x.coords.size() == 1) return std::to_string(x.coords[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) s += (i ? "," : "") + std::to_string(x.coords[i]);
  return s + ")";
}

// Exponents against the unit basis printed by `ring`, each in [0, order).
gs::MultCharacter parse_character(const gs::CharacterGroup& group, const std::string& spec) {
  const auto exps = parse_list(spec);
  const auto& orders = group.basis().orders;
  if (exps.size() != orders.size()) {
    throw gs::Error(gs::ErrorKind::InvalidParams, "character '" + spec + "' needs " + std::to_string(orders.size()) +
                                                      " exponents");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] >= orders[i]) {
      throw gs::Error(gs::ErrorKind::InvalidParams, "exponent " + std::to_string(exps[i]) + " of '" + spec +
                                                        "' is outside [0, " + std::to_string(orders[i]) + ")");
    }
  }
  return group.character(exps);
}

std::vector<gs::MultCharacter> parse_characters(const gs::CharacterGroup& group, const std::vector<std::string>& specs) {
  std::vector<gs::MultCharacter> out;
  for (const auto& spec : specs) out.push_back(parse_character(group, spec));
  return out;
}

std::string complex_str(std::complex<double> v) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

void print_sum(std::ostream& os, const std::string& what, const gs::SumValue& v, bool agree) {
  os << what << " = " << complex_str(v.value) << "\n"
     << "|value|  = " << std::abs(v.value) << "\n"
     << "expected = " << v.expected.magnitude.describe();
  if (v.expected.exact) os << " (exact " << complex_str(*v.expected.exact) << ")";
  os << "\nlaw      = " << v.expected.rule << "\n"
     << "terms    = " << v.terms << "\n"
     << "agree    = " << (agree ? "yes" : "no") << "\n";
}

int cmd_ring(const Config& cfg) {
  const auto group = cfg.group();
  const gs::GaloisRing& ring = group->ring();
  Sink sink(cfg.out);
  std::vector<gs::RingElement> teich = ring.teichmuller_set();
  if (cfg.json) {
    gs::Json j = gs::ring_to_json(ring);
    gs::Json t = gs::Json::array();
    for (const auto& x : teich) t.push_back(gs::element_to_json(x));
    j["teichmuller"] = t;
    gs::Json basis = gs::Json::array();
    for (std::size_t i = 0; i < group->rank(); ++i) {
      basis.push_back({{"generator", gs::element_to_json(group->basis().generators[i])},
                       {"order", group->basis().orders[i]}});
    }
    j["unit_basis"] = basis;
    sink.os() << j.dump(2) << "\n";
    return kExitOk;
  }
  auto& os = sink.os();
  os << "ring     " << ring.describe() << "\n"
     << "modulus  " << ring.modulus().to_string() << "\n"
     << "|R|      " << ring.size() << "\n"
     << "|R*|     " << ring.unit_count() << "\n"
     << "T        {";
  // Sorted by index for reading; the library keeps 0, xi^0, xi^1, ...
  std::sort(teich.begin(), teich.end(),
            [&](const gs::RingElement& x, const gs::RingElement& y) { return ring.index_of(x) < ring.index_of(y); });
  for (std::size_t i = 0; i < teich.size(); ++i) os << (i ? "," : "") << element_str(teich[i]);
  os << "}\nbasis\n";
  for (std::size_t i = 0; i < group->rank(); ++i) {
    os << "  g" << i + 1 << " = " << element_str(group->basis().generators[i]) << "  order "
       << group->basis().orders[i] << "\n";
  }
  return kExitOk;
}

int cmd_chars(const Config& cfg, const std::string& section) {
  const auto group = cfg.group();
  Sink sink(cfg.out);
  if (cfg.json) {
    gs::Json j = gs::character_table_json(*group);
    if (!section.empty()) j["sections"] = gs::sections_json(group, gs::parse_section(section));
    sink.os() << j.dump(2) << "\n";
    return kExitOk;
  }
  auto& os = sink.os();
  os << "characters of " << group->ring().describe() << " (exponents against the unit basis, level)\n";
  for (const auto& chi : group->enumerate()) {
    os << "  " << chi.to_string() << "  level " << chi.triviality_level() << (chi.is_primitive() ? " primitive" : "")
       << "\n";
  }
  if (!section.empty()) {
    os << "sections (" << section << ")\n";
    for (const auto& row : gs::sections_json(group, gs::parse_section(section))) os << "  " << row.dump() << "\n";
  }
  return kExitOk;
}

int emit_sum(const Config& cfg, const std::string& what, const gs::SumValue& v, std::int64_t q) {
  const double tol = std::max(cfg.tol, gs::default_tolerance(v.terms));
  const bool agree = gs::agrees(v, q, tol);
  Sink sink(cfg.out);
  if (cfg.json) {
    gs::Json j = gs::sum_to_json(v);
    j["agree"] = agree;
    sink.os() << j.dump(2) << "\n";
  } else {
    print_sum(sink.os(), what, v, agree);
  }
  return agree ? kExitOk : kExitVerify;
}

int cmd_gauss(const Config& cfg, const std::string& chi_spec, const std::string& b_text) {
  const auto group = cfg.group();
  const auto chi = parse_character(*group, chi_spec);
  const auto b = parse_element(group->ring(), b_text);
  return emit_sum(cfg, "G(" + chi.to_string() + ", " + element_str(b) + ")", gs::gauss_sum(chi, b), group->ring().q());
}

int cmd_jacobi(const Config& cfg, const std::vector<std::string>& specs, const std::string& a_text, bool inject) {
  const auto group = cfg.group();
  const auto chars = parse_characters(*group, specs);
  if (chars.size() < 2) throw gs::Error(gs::ErrorKind::InvalidParams, "jacobi needs at least two characters");
  const auto a = parse_element(group->ring(), a_text);
  gs::SumValue v = gs::jacobi_evaluate(chars, a, cfg.sums());
  // Test mode: perturb the brute value so the agreement check must fail.
  if (inject) v.value += 1.0;
  return emit_sum(cfg, "J_" + element_str(a), v, group->ring().q());
}

int cmd_tilde(const Config& cfg, const std::vector<std::string>& specs, int k, const std::string& a_text) {
  const auto group = cfg.group();
  const auto chars = parse_characters(*group, specs);
  const auto a = parse_element(group->ring(), a_text);
  const gs::TildeCase c = gs::tilde_jacobi_classify(chars, k, a, cfg.sums());
  gs::SumValue v = gs::tilde_jacobi_brute(chars, k, a, cfg.sums());
  v.expected = c.expected;
  v.expected.rule = "case " + std::to_string(c.number) + ": " + v.expected.rule;
  return emit_sum(cfg, "J~_" + element_str(a), v, group->ring().q());
}

struct CodebookArgs {
  int m = 3;
  int k = 1;
  std::string a = "1";
  std::string psi0;
  std::string section = "lex-min";
  std::string csv;
  std::string matrix_json;
  bool no_eval = false;
};

int cmd_codebook(const Config& cfg, const CodebookArgs& args) {
  const auto group = cfg.group();
  gs::CodebookParams params;
  params.group = group;
  params.m = args.m;
  params.k = args.k;
  params.a = parse_element(group->ring(), args.a);
  params.allow_nonunit_a = true;
  if (!args.psi0.empty()) params.psi0 = parse_list(args.psi0);
  params.section = gs::parse_section(args.section);
  const gs::Codebook cb = gs::build_codebook(params);
  for (const auto& w : cb.warnings) std::cerr << "warning: " << w << "\n";
  if (!args.csv.empty()) {
    std::ofstream f(args.csv);
    if (!f) throw gs::Error(gs::ErrorKind::IoError, "cannot open '" + args.csv + "'");
    gs::export_csv(cb.matrix, f);
  }
  if (!args.matrix_json.empty()) {
    std::ofstream f(args.matrix_json);
    if (!f) throw gs::Error(gs::ErrorKind::IoError, "cannot open '" + args.matrix_json + "'");
    f << gs::codebook_to_json(cb).dump() << "\n";
  }
  Sink sink(cfg.out);
  if (args.no_eval) {
    if (cfg.json) {
      sink.os() << gs::Json{{"N", cb.n_rows}, {"K", cb.length}}.dump(2) << "\n";
    } else {
      sink.os() << "N " << cb.n_rows << "\nK " << cb.length << "\n";
    }
    return kExitOk;
  }
  const gs::EvalReport r = gs::imax_exhaustive(cb, cfg.cap_pairs);
  const bool agree = std::abs(r.imax_measured - r.imax_formula) <= cfg.tol;
  if (cfg.json) {
    gs::Json j = gs::report_to_json(r);
    j["agree"] = agree;
    j["warnings"] = cb.warnings;
    sink.os() << j.dump(2) << "\n";
  } else {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "ring          %s\nN             %lld\nK             %lld\nimax_measured %.15g\nimax_formula  %.15g\n"
                  "welch         %.15g\nratio         %.15g\nargmax        (%lld, %lld)\nagree         %s\n",
                  group->ring().describe().c_str(), static_cast<long long>(r.n), static_cast<long long>(r.k),
                  r.imax_measured, r.imax_formula, r.welch, r.ratio, static_cast<long long>(r.argmax_i),
                  static_cast<long long>(r.argmax_j), agree ? "yes" : "no");
    sink.os() << buf;
  }
  return agree ? kExitOk : kExitVerify;
}

int cmd_table2(const Config& cfg, const std::vector<std::int64_t>& extra) {
  std::vector<std::int64_t> qs = gs::table2_default_qs();
  for (auto q : extra) {
    if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
  }
  const auto rows = gs::table2(qs);
  Sink sink(cfg.out);
  if (cfg.json) {
    sink.os() << gs::table2_to_json(rows).dump(2) << "\n";
    return kExitOk;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "%6s %16s %14s %16s %16s %16s\n", "q", "N", "K", "Imax", "I_W", "ratio");
  sink.os() << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%6lld %16lld %14lld %16.11g %16.11g %16.12g\n", static_cast<long long>(r.q),
                  static_cast<long long>(r.n_rows), static_cast<long long>(r.length), r.imax, r.welch, r.ratio);
    sink.os() << buf;
  }
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::vector<std::string> names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = gs::suite_names();
  gs::SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.tol = std::max(cfg.tol, 1e-6);
  opt.sums = cfg.sums();
  // Validate every name before running anything.
  for (const auto& name : names) {
    if (std::find(gs::suite_names().begin(), gs::suite_names().end(), name) == gs::suite_names().end()) {
      throw gs::Error(gs::ErrorKind::InvalidParams, "unknown suite '" + name + "'");
    }
  }
  Sink sink(cfg.out);
  bool all = true;
  gs::Json results = gs::Json::array();
  for (const auto& name : names) {
    const gs::SuiteResult r = gs::run_suite(name, opt);
    all = all && r.passed;
    if (cfg.json) {
      results.push_back(
          {{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}, {"notes", r.notes}});
    } else {
      sink.os() << (r.passed ? "PASS " : "FAIL ") << r.name << "  checks " << r.checks << ", failures " << r.failures
                << "\n";
      for (const auto& line : r.notes) sink.os() << "    " << line << "\n";
    }
  }
  if (cfg.json) sink.os() << gs::Json{{"passed", all}, {"suites", results}}.dump(2) << "\n";
  return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois ring Gauss and Jacobi sums, and Jacobi-sum codebooks"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string modulus_text;
  app.add_option("-p", cfg.p, "characteristic prime");
  app.add_option("-n", cfg.n, "ring depth, R = GR(p^n, p^{ns})");
  app.add_option("-s", cfg.s, "residue field degree");
  app.add_option("--modulus", modulus_text, "monic basic primitive modulus, coefficients low to high");
  app.add_flag("--json", cfg.json, "emit JSON");
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_option("--cap-elements", cfg.cap_elements, "largest ring size");
  app.add_option("--cap-terms", cfg.cap_terms, "largest number of summed terms");
  app.add_option("--cap-pairs", cfg.cap_pairs, "largest number of codebook row pairs scanned");
  app.add_option("--tol", cfg.tol, "absolute tolerance for printed comparisons");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");

  auto* ring_cmd = app.add_subcommand("ring", "modulus, sizes, Teichmuller set and unit basis");

  auto* chars_cmd = app.add_subcommand("chars", "multiplicative character table");
  std::string section;
  chars_cmd->add_option("--sections", section, "also list extensions of phi_a (lex-min or lex-max)");

  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum G(chi, lambda_b)");
  std::string chi_spec;
  std::string b_text = "1";
  gauss_cmd->add_option("--chi", chi_spec, "character exponents, e.g. 1,0")->required();
  gauss_cmd->add_option("-b", b_text, "additive twist: an integer or coordinates");

  auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi sum J_a(chi_1, ..., chi_m)");
  std::vector<std::string> specs;
  std::string a_text = "1";
  bool inject = false;
  jacobi_cmd->add_option("--chi", specs, "character exponents, once per character")->required();
  jacobi_cmd->add_option("-a", a_text, "target: an integer or coordinates");
  jacobi_cmd->add_flag("--inject-disagreement", inject, "test mode: perturb the value")->group("");

  auto* tilde_cmd = app.add_subcommand("tilde-jacobi", "modified sum over S with extended characters");
  int tilde_k = 1;
  tilde_cmd->add_option("--chi", specs, "character exponents, once per character")->required();
  tilde_cmd->add_option("-k", tilde_k, "number of leading coordinates in 1 + M");
  tilde_cmd->add_option("-a", a_text, "target: an integer or coordinates");

  auto* codebook_cmd = app.add_subcommand("codebook", "build and evaluate the Jacobi-sum codebook");
  CodebookArgs cb;
  codebook_cmd->add_option("-m", cb.m, "number of coordinates");
  codebook_cmd->add_option("-k", cb.k, "leading coordinates in 1 + M");
  codebook_cmd->add_option("-a", cb.a, "target: an integer or coordinates");
  codebook_cmd->add_option("--psi0", cb.psi0, "exponents of psi_0 over the residue ring");
  codebook_cmd->add_option("--section", cb.section, "lex-min or lex-max");
  codebook_cmd->add_option("--csv", cb.csv, "export the matrix as CSV");
  codebook_cmd->add_option("--matrix-json", cb.matrix_json, "export the matrix as JSON");
  codebook_cmd->add_flag("--no-eval", cb.no_eval, "skip the exhaustive Imax scan");

  auto* table2_cmd = app.add_subcommand("table2", "analytic codebook parameters");
  std::vector<std::int64_t> extra_qs;
  table2_cmd->add_option("--q", extra_qs, "extra prime powers q");

  auto* verify_cmd = app.add_subcommand("verify", "run named verification suites");
  std::vector<std::string> suites;
  verify_cmd->add_option("suites", suites, "suite names, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (!modulus_text.empty()) cfg.modulus = parse_list(modulus_text);
    cfg.validate();
    if (*ring_cmd) return cmd_ring(cfg);
    if (*chars_cmd) return cmd_chars(cfg, section);
    if (*gauss_cmd) return cmd_gauss(cfg, chi_spec, b_text);
    if (*jacobi_cmd) return cmd_jacobi(cfg, specs, a_text, inject);
    if (*tilde_cmd) return cmd_tilde(cfg, specs, tilde_k, a_text);
    if (*codebook_cmd) return cmd_codebook(cfg, cb);
    if (*table2_cmd) return cmd_table2(cfg, extra_qs);
    if (*verify_cmd) return cmd_verify(cfg, suites);
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gs::is_resource_error(e.kind()) ? kExitResource : kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
