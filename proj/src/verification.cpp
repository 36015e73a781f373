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

#include "galois_sums/verification.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "galois_sums/arith.hpp"
#include "galois_sums/codebook.hpp"

namespace galois_sums {

namespace {

constexpr std::size_t kMaxNotes = 8;

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (failure_notes_ < kMaxNotes) {
      result_.notes.push_back("FAIL " + describe());
      ++failure_notes_;
    }
  }
  void note(std::string line) { result_.notes.push_back(std::move(line)); }

  SuiteResult finish() {
    result_.passed = result_.failures == 0 && result_.checks > 0;
    return result_;
  }

 private:
  SuiteResult result_;
  std::size_t failure_notes_ = 0;
};

struct Group {
  std::shared_ptr<const GaloisRing> ring;
  std::shared_ptr<const CharacterGroup> group;
};

Group make(std::int64_t p, std::int64_t n, std::int64_t s) {
  auto ring = GaloisRing::create({p, n, s});
  return {ring, CharacterGroup::create(ring)};
}

std::string fmt(std::complex<double> v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.9g, %.9g)", v.real(), v.imag());
  return buf;
}

std::vector<RingElement> canonical_targets(const GaloisRing& ring) {
  std::vector<RingElement> out{ring.zero(), ring.one()};
  for (std::int64_t k = 1; k < ring.n(); ++k) out.push_back(ring.p_power(k));
  return out;
}

std::string label(const std::vector<MultCharacter>& chars, const RingElement& a) {
  std::ostringstream os;
  for (const auto& c : chars) os << c.to_string() << " ";
  os << "a=[";
  for (std::size_t i = 0; i < a.coords.size(); ++i) os << (i ? "," : "") << a.coords[i];
  os << "]";
  return os.str();
}

// Visits every ordered m-tuple of characters.
void for_each_tuple(const std::vector<MultCharacter>& chars, int m,
                    const std::function<void(const std::vector<MultCharacter>&)>& fn) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  std::vector<MultCharacter> tuple(static_cast<std::size_t>(m), chars.front());
  while (true) {
    for (int i = 0; i < m; ++i) tuple[static_cast<std::size_t>(i)] = chars[idx[static_cast<std::size_t>(i)]];
    fn(tuple);
    int j = m - 1;
    while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == chars.size()) {
      idx[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) return;
  }
}

SuiteResult gauss_laws(const SuiteOptions& opt) {
  Tally t("gauss-laws");
  std::mt19937_64 rng(opt.seed);
  const std::vector<RingParams> rings{{2, 2, 1}, {2, 3, 1}, {3, 2, 1}, {3, 3, 1}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}};
  for (const auto& params : rings) {
    const Group g = make(params.p, params.n, params.s);
    const GaloisRing& ring = *g.ring;
    std::vector<RingElement> twists = canonical_targets(ring);
    // One random unit multiple of every nonzero canonical twist.
    std::uniform_int_distribution<std::size_t> pick(0, ring.units().size() - 1);
    for (std::int64_t k = 0; k < ring.n(); ++k) {
      const RingElement u = ring.element(ring.units()[pick(rng)]);
      twists.push_back(ring.mul(u, k == 0 ? ring.one() : ring.p_power(k)));
    }
    for (const auto& chi : g.group->enumerate()) {
      for (const auto& b : twists) {
        const SumValue v = gauss_sum(chi, b);
        t.check(agrees(v, ring.q(), opt.tol), [&] {
          return ring.describe() + " G(" + label({chi}, b) + ") = " + fmt(v.value) + ", expected " +
                 v.expected.magnitude.describe() + " [" + v.expected.rule + "]";
        });
      }
    }
  }
  return t.finish();
}

SuiteResult jacobi_exhaustive(const std::string& name, int m, const SuiteOptions& opt) {
  Tally t(name);
  std::int64_t unclassified = 0;
  std::map<std::string, std::int64_t> rules;
  for (const auto& params : std::vector<RingParams>{{3, 2, 1}, {2, 2, 2}}) {
    const Group g = make(params.p, params.n, params.s);
    const GaloisRing& ring = *g.ring;
    const auto chars = g.group->enumerate();
    const auto targets = canonical_targets(ring);
    for_each_tuple(chars, m, [&](const std::vector<MultCharacter>& tuple) {
      for (const auto& a : targets) {
        const SumValue v = jacobi_evaluate(tuple, a, opt.sums);
        if (v.expected.magnitude.kind == MagnitudeKind::Unclassified) ++unclassified;
        ++rules[v.expected.rule];
        t.check(agrees(v, ring.q(), opt.tol), [&] {
          return ring.describe() + " J(" + label(tuple, a) + ") = " + fmt(v.value) + ", expected " +
                 v.expected.magnitude.describe() + " [" + v.expected.rule + "]";
        });
      }
    });
  }
  t.note("unclassified: " + std::to_string(unclassified));
  t.check(unclassified == 0, [&] { return std::to_string(unclassified) + " sums left unclassified"; });
  std::ostringstream os;
  os << "rules:";
  for (const auto& [rule, count] : rules) os << " " << rule << "=" << count;
  t.note(os.str());
  return t.finish();
}

// J_a over R against factor * J over R_{n-k} for tuples trivial on 1 + p^{n-k}R.
SuiteResult recursion(const std::string& name, bool stated_factor, const SuiteOptions& opt) {
  Tally t(name);
  const int m = 2;
  for (const auto& params : std::vector<RingParams>{{3, 3, 1}, {2, 3, 2}}) {
    const Group g = make(params.p, params.n, params.s);
    const GaloisRing& ring = *g.ring;
    const std::int64_t n = ring.n();
    const auto chars = g.group->enumerate();
    for (std::int64_t k = 1; k <= std::min<std::int64_t>(2, n - 1); ++k) {
      std::vector<MultCharacter> eligible;
      for (const auto& c : chars) {
        if (c.trivial_on(n - k)) eligible.push_back(c);
      }
      const auto reduced = g.group->reduced(k);
      const double factor = std::pow(static_cast<double>(ring.q()), static_cast<double>((stated_factor ? m : m - 1) * k));
      std::vector<RingElement> targets{ring.zero(), ring.one()};
      for (std::int64_t j = 1; j <= 2 && j < n; ++j) targets.push_back(ring.p_power(j));
      for_each_tuple(eligible, m, [&](const std::vector<MultCharacter>& tuple) {
        std::vector<MultCharacter> projected;
        for (const auto& c : tuple) projected.push_back(project_character(c, k));
        for (const auto& a : targets) {
          const SumValue big = jacobi_brute(tuple, a, opt.sums);
          const SumValue small = jacobi_brute(projected, reduced->ring().element(
                                                             reduced->ring().index_of(ring.reduce(a, k))),
                                              opt.sums);
          const std::complex<double> predicted = factor * small.value;
          t.check(std::abs(big.value - predicted) <= opt.tol, [&] {
            return ring.describe() + " k=" + std::to_string(k) + " J(" + label(tuple, a) + ") = " + fmt(big.value) +
                   ", factor * reduced = " + fmt(predicted);
          });
        }
      });
    }
  }
  t.note(std::string("factor: q^{") + (stated_factor ? "mk" : "(m-1)k") + "}");
  return t.finish();
}

SuiteResult counting(const SuiteOptions& opt) {
  Tally t("counting");
  for (const auto& params : std::vector<RingParams>{{3, 2, 1}, {2, 2, 2}}) {
    const Group g = make(params.p, params.n, params.s);
    const GaloisRing& ring = *g.ring;
    const std::vector<RingElement> targets{ring.zero(), ring.one(), ring.p_power(1)};
    for (int m : {2, 3}) {
      for (const auto& a : targets) {
        const std::int64_t formula = count_unit_solutions(ring, m, a);
        const std::int64_t brute = count_unit_solutions_brute(ring, m, a, opt.sums);
        t.check(formula == brute, [&] {
          return ring.describe() + " m=" + std::to_string(m) + " " + label({}, a) + ": formula " +
                 std::to_string(formula) + ", count " + std::to_string(brute);
        });
      }
    }
    for (const auto& [m, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
      for (const auto& a : targets) {
        const std::int64_t formula = s_cardinality(ring, m, k);
        const std::int64_t brute = s_cardinality_brute(ring, m, k, a, opt.sums);
        t.check(formula == brute, [&] {
          return ring.describe() + " |S| m=" + std::to_string(m) + " k=" + std::to_string(k) + " " + label({}, a) +
                 ": formula " + std::to_string(formula) + ", count " + std::to_string(brute);
        });
      }
    }
  }
  return t.finish();
}

SuiteResult codebook_attainment(const SuiteOptions& opt) {
  Tally t("codebook");
  for (const auto& params : std::vector<RingParams>{{3, 2, 1}, {2, 2, 2}}) {
    const Group g = make(params.p, params.n, params.s);
    const GaloisRing& ring = *g.ring;
    CodebookParams cp;
    cp.group = g.group;
    cp.exec = opt.sums.exec;
    const Codebook cb = build_codebook(cp);
    const EvalReport r = imax_exhaustive(cb, kDefaultPairCap, opt.sums.exec);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s (N,K)=(%lld,%lld) imax measured %.12f formula %.12f welch %.12f argmax (%lld,%lld)",
                  ring.describe().c_str(), static_cast<long long>(r.n), static_cast<long long>(r.k), r.imax_measured,
                  r.imax_formula, r.welch, static_cast<long long>(r.argmax_i), static_cast<long long>(r.argmax_j));
    t.note(buf);
    t.check(std::abs(r.imax_measured - r.imax_formula) <= 1e-9,
            [&] { return ring.describe() + " measured Imax differs from the closed form"; });
    double worst = 0.0;
    for (std::int64_t i = 0; i < cb.matrix.rows; ++i) {
      double norm = 0.0;
      for (const auto& v : cb.matrix.row(i)) norm += std::norm(v);
      worst = std::max(worst, std::abs(std::sqrt(norm) - 1.0));
    }
    t.check(worst <= 1e-9, [&] { return ring.describe() + " row norm off by " + std::to_string(worst); });
    t.check(r.imax_measured >= r.welch - 1e-12, [&] { return ring.describe() + " Welch bound violated"; });
  }
  return t.finish();
}

struct PrintedRow {
  std::int64_t q;
  std::int64_t n_rows;
  std::int64_t length;
  const char* imax;
  const char* welch;
  const char* ratio;
};

// Within one unit of the last printed digit.
bool matches_printed(double value, const char* printed) {
  const std::string s(printed);
  const auto dot = s.find('.');
  const auto decimals = static_cast<int>(s.size() - dot - 1);
  const long double scaled = std::round(static_cast<long double>(value) * std::pow(10.0L, decimals));
  const long double digits = std::stold(s.substr(0, dot) + s.substr(dot + 1));
  return std::abs(scaled - digits) <= 1.0L;
}

SuiteResult table2_suite() {
  Tally t("table2");
  static const std::vector<PrintedRow> printed{
      {11, 146410, 13310, "0.010989011", "0.008264491", "1.329665789"},
      {19, 2345778, 123462, "0.003257329", "0.002770084", "1.175895515"},
      {31, 27705630, 893730, "0.0011481056", "0.0010405827", "1.1033294864"},
      {53, 410305012, 7741604, "0.0003769318", "0.0003559986", "1.0588013557"},
      {81, 3443737680, 42515280, "0.0001582028", "0.0001524158", "1.0379686757"},
      {121, 25723065720, 212587320, "0.0000700231", "0.0000683013", "1.0252083187"},
      {179, 182739371218, 1020890342, "0.00003173898", "0.00003121001", "1.01694861459"},
      {256, 1095216660480, 4278190080, "0.00001543901", "0.00001525879", "1.01181084127"},
  };
  std::vector<std::int64_t> qs;
  for (const auto& p : printed) qs.push_back(p.q);
  const auto rows = table2(qs);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& p = printed[i];
    const auto where = [&](const std::string& col) { return "q=" + std::to_string(p.q) + " column " + col; };
    t.check(r.n_rows == p.n_rows, [&] { return where("N"); });
    t.check(r.length == p.length, [&] { return where("K"); });
    t.check(matches_printed(r.imax, p.imax), [&] { return where("Imax"); });
    t.check(matches_printed(r.welch, p.welch), [&] { return where("I_W"); });
    t.check(matches_printed(r.ratio, p.ratio), [&] { return where("ratio"); });
    // The displayed quotient and the direct quotient must agree.
    t.check(std::abs(r.ratio - r.imax / r.welch) <= 1e-12 * r.ratio, [&] { return where("ratio vs Imax/I_W"); });
  }
  return t.finish();
}

SuiteResult remark(const SuiteOptions& opt) {
  Tally t("remark");
  const Group g = make(3, 2, 1);
  const GaloisRing& ring = *g.ring;
  const double unit_imax = imax_formula(3, 2, 3);
  struct Path {
    const char* name;
    RingElement a;
    double stated;
    RemarkCase which;
  };
  const std::vector<Path> paths{{"a=0", ring.zero(), 0.6, RemarkCase::ZeroTarget},
                                {"a=p", ring.p_power(1), std::sqrt(27.0) / 10.0, RemarkCase::NonzeroIdeal}};
  for (const auto& path : paths) {
    CodebookParams cp;
    cp.group = g.group;
    cp.a = path.a;
    cp.allow_nonunit_a = true;
    cp.exec = opt.sums.exec;
    const EvalReport r = imax_exhaustive(build_codebook(cp), kDefaultPairCap, opt.sums.exec);
    const double formula = imax_remark(3, 2, 3, path.which);
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s: measured %.12f, stated %.12f, remark formula %.12f", path.name,
                  r.imax_measured, path.stated, formula);
    t.note(buf);
    t.check(std::abs(r.imax_measured - path.stated) <= 1e-9,
            [&] { return std::string(path.name) + " measured Imax differs from the stated value"; });
    t.check(r.imax_measured > unit_imax, [&] { return std::string(path.name) + " does not exceed the unit-a Imax"; });
  }
  return t.finish();
}

SuiteResult tilde_cases(const SuiteOptions& opt) {
  Tally t("tilde-cases");
  std::mt19937_64 rng(opt.seed);
  const std::vector<Group> groups{make(3, 2, 1), make(2, 2, 2)};
  std::map<int, std::int64_t> seen;
  constexpr int kConfigs = 500;
  for (int i = 0; i < kConfigs; ++i) {
    const Group& g = groups[static_cast<std::size_t>(i % 2)];
    const GaloisRing& ring = *g.ring;
    const int m = std::uniform_int_distribution<int>(2, 3)(rng);
    const int k = std::uniform_int_distribution<int>(1, m - 1)(rng);
    // Trivial characters with probability 1/2 so every case is reached.
    std::vector<MultCharacter> chars;
    std::uniform_int_distribution<std::int64_t> nontrivial(1, g.group->character_count() - 1);
    for (int j = 0; j < m; ++j) {
      const bool trivial = std::bernoulli_distribution(0.5)(rng);
      chars.push_back(trivial ? g.group->trivial() : g.group->character_at(nontrivial(rng)));
    }
    const RingElement a = ring.element(std::uniform_int_distribution<ElementIndex>(0, ring.size() - 1)(rng));
    const TildeCase c = tilde_jacobi_classify(chars, k, a, opt.sums);
    ++seen[c.number];
    SumValue v = tilde_jacobi_brute(chars, k, a, opt.sums);
    v.expected = c.expected;
    t.check(agrees(v, ring.q(), opt.tol), [&] {
      return ring.describe() + " case " + std::to_string(c.number) + " k=" + std::to_string(k) + " " + label(chars, a) +
             ": " + fmt(v.value) + ", expected " + c.expected.magnitude.describe() + " [" + c.expected.rule + "]";
    });
  }
  std::ostringstream os;
  os << "cases:";
  for (int c = 1; c <= 4; ++c) {
    os << " " << c << "=" << seen[c];
    t.check(seen[c] > 0, [&] { return "case " + std::to_string(c) + " never drawn"; });
  }
  t.note(os.str());
  return t.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gauss-laws", "jacobi-pairs", "jacobi-triples", "recursion",
                                              "recursion-mk", "counting",   "codebook",       "table2",
                                              "remark",     "tilde-cases"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "gauss-laws") return gauss_laws(options);
  if (name == "jacobi-pairs") return jacobi_exhaustive(name, 2, options);
  if (name == "jacobi-triples") return jacobi_exhaustive(name, 3, options);
  if (name == "recursion") return recursion(name, false, options);
  if (name == "recursion-mk") return recursion(name, true, options);
  if (name == "counting") return counting(options);
  if (name == "codebook") return codebook_attainment(options);
  if (name == "table2") return table2_suite();
  if (name == "remark") return remark(options);
  if (name == "tilde-cases") return tilde_cases(options);
  throw Error(ErrorKind::InvalidParams, "unknown suite '" + name + "'");
}

}  // namespace galois_sums
