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

#include "galois_sums/sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "galois_sums/arith.hpp"

namespace galois_sums {

namespace {

using cd = std::complex<double>;

const GaloisRing& common_ring(const std::vector<MultCharacter>& chars) {
  if (chars.size() < 2) throw Error(ErrorKind::InvalidParams, "need at least two characters");
  for (const auto& chi : chars) {
    if (!chi.group().same_group(chars.front().group())) {
      throw Error(ErrorKind::RingMismatch, "characters belong to different rings");
    }
  }
  return chars.front().ring();
}

// Product of the sizes, or TooLarge past the cap.
std::int64_t checked_terms(const std::vector<std::int64_t>& sizes, std::int64_t cap) {
  std::int64_t terms = 1;
  for (std::int64_t s : sizes) {
    if (s != 0 && terms > cap / s) {
      throw Error(ErrorKind::TooLarge, "brute-force sum exceeds the term cap of " + std::to_string(cap));
    }
    terms *= s;
  }
  if (terms > cap) {
    throw Error(ErrorKind::TooLarge, "brute-force sum has " + std::to_string(terms) +
                                         " terms, cap is " + std::to_string(cap));
  }
  return terms;
}

// chi on units, zero on M.
std::vector<cd> unit_table(const MultCharacter& chi) {
  const GaloisRing& ring = chi.ring();
  std::vector<cd> table(static_cast<std::size_t>(ring.size()), cd(0.0, 0.0));
  for (ElementIndex u : ring.units()) table[static_cast<std::size_t>(u)] = chi.eval(u).to_complex();
  return table;
}

std::vector<ElementIndex> all_elements(const GaloisRing& ring) {
  std::vector<ElementIndex> v(static_cast<std::size_t>(ring.size()));
  std::iota(v.begin(), v.end(), ElementIndex{0});
  return v;
}

double sign_at_minus_one(const MultCharacter& chi) {
  const GaloisRing& ring = chi.ring();
  return chi.eval(ring.neg(ring.one())).is_one() ? 1.0 : -1.0;
}

// Canonical target for a level: 0 -> 1, 1..n-1 -> p^k, n -> 0.
RingElement target_at(const GaloisRing& ring, std::int64_t level) {
  if (level == 0) return ring.one();
  return ring.p_power(level);
}

Expectation exact_integer(std::int64_t v, std::string rule) {
  return {ExpectedMagnitude::exact_integer(v), cd(static_cast<double>(v), 0.0), std::move(rule)};
}

Expectation exact_zero(std::string rule) {
  return {ExpectedMagnitude::zero(), cd(0.0, 0.0), std::move(rule)};
}

// sign * q^{twice/2} * prod G(num_i, lambda) / G(den, lambda_b).
Expectation gauss_quotient(const std::vector<MultCharacter>& numerators, const MultCharacter& denominator,
                           const RingElement& b, double sign, std::int64_t twice, std::string rule) {
  const GaloisRing& ring = denominator.ring();
  const std::int64_t q = ring.q();
  cd value(sign * std::pow(static_cast<double>(q), static_cast<double>(twice) / 2.0), 0.0);
  std::int64_t total = twice;
  bool zero = false;
  for (const auto& chi : numerators) {
    const SumValue g = gauss_sum(chi, ring.one());
    value *= g.value;
    if (g.expected.magnitude.kind == MagnitudeKind::Zero) zero = true;
    total += g.expected.magnitude.twice_exponent;
  }
  if (zero) return exact_zero(rule);
  const SumValue den = gauss_sum(denominator, b);
  if (den.expected.magnitude.kind != MagnitudeKind::PowerOfQ) {
    return {ExpectedMagnitude{}, std::nullopt, rule + ": vanishing denominator"};
  }
  value /= den.value;
  total -= den.expected.magnitude.twice_exponent;
  return {ExpectedMagnitude::power_of_q(total), value, std::move(rule)};
}

// Moves the last character satisfying pred to the end; false if none does.
template <class Pred>
bool move_last(std::vector<MultCharacter>& chars, Pred pred) {
  for (std::size_t i = chars.size(); i-- > 0;) {
    if (pred(chars[i])) {
      std::swap(chars[i], chars.back());
      return true;
    }
  }
  return false;
}

Expectation dispatch(std::vector<MultCharacter> chars, std::int64_t level, const SumOptions& options);

Expectation dispatch_pair(std::vector<MultCharacter> chars, std::int64_t level) {
  const GaloisRing& ring = chars.front().ring();
  const std::int64_t n = ring.n();
  const std::int64_t q = ring.q();
  const std::int64_t units = ring.unit_count();
  const std::int64_t qn1 = ipow(q, n - 1);

  // One trivial character.
  if (chars[0].is_trivial() || chars[1].is_trivial()) {
    const MultCharacter& chi = chars[0].is_trivial() ? chars[1] : chars[0];
    if (level == 0) return exact_integer(chi.trivial_on(1) ? -qn1 : 0, "pair-one-trivial");
    return exact_zero("pair-one-trivial");
  }

  const MultCharacter prod = chars[0] * chars[1];
  if (prod.is_trivial()) {
    const MultCharacter& chi2 = chars[1];
    const double sign = sign_at_minus_one(chi2);
    const auto s = static_cast<std::int64_t>(sign);
    if (level == 0) return exact_integer(chi2.trivial_on(1) ? -s * qn1 : 0, "pair-inverse-characters");
    if (!chi2.trivial_on(level + 1)) return exact_zero("pair-inverse-characters");
    if (chi2.trivial_on(level)) return exact_integer(s * units, "pair-inverse-characters");
    return exact_integer(-s * qn1, "pair-inverse-characters");
  }

  if (!move_last(chars, [](const MultCharacter& c) { return c.is_primitive(); })) {
    return {ExpectedMagnitude{}, std::nullopt, "pair-unhandled"};
  }
  if (level == 0) {
    if (prod.is_primitive()) return gauss_quotient({chars[0], chars[1]}, prod, ring.one(), 1.0, 0, "pair-gauss-quotient");
    return exact_zero("pair-imprimitive-product");
  }
  if (prod.is_primitive()) return exact_zero("pair-primitive-product");
  const std::int64_t t = prod.triviality_level();
  if (level != n - t) return exact_zero("pair-level-mismatch");
  return gauss_quotient({chars[0], chars[1]}, prod, ring.p_power(level), 1.0, 2 * level,
                        "pair-gauss-quotient-at-p-power");
}

Expectation dispatch(std::vector<MultCharacter> chars, std::int64_t level, const SumOptions& options) {
  const GaloisRing& ring = chars.front().ring();
  const std::int64_t n = ring.n();
  const std::int64_t q = ring.q();
  const auto m = static_cast<std::int64_t>(chars.size());

  if (std::all_of(chars.begin(), chars.end(), [](const MultCharacter& c) { return c.is_trivial(); })) {
    return exact_integer(count_unit_solutions(ring, static_cast<int>(m), target_at(ring, level)),
                         "unit-solution-count");
  }

  if (n == 1) {
    const SumValue v = jacobi_brute(chars, target_at(ring, level), options);
    return {ExpectedMagnitude::residue_field(std::abs(v.value)), v.value, "residue-field-direct-sum"};
  }

  if (level == n) {
    move_last(chars, [](const MultCharacter& c) { return !c.is_trivial(); });
    const MultCharacter prod = product(chars);
    if (!prod.is_trivial()) return exact_zero("zero-target-nontrivial-product");
    const double sign = sign_at_minus_one(chars.back());
    const std::int64_t units = ring.unit_count();
    if (m == 2) return exact_integer(static_cast<std::int64_t>(sign) * units, "zero-target-pair");
    std::vector<MultCharacter> head(chars.begin(), chars.end() - 1);
    Expectation inner = dispatch(std::move(head), 0, options);
    Expectation out;
    out.magnitude = scale(inner.magnitude, q, static_cast<std::int64_t>(sign) * units, 0);
    if (inner.exact) out.exact = *inner.exact * (sign * static_cast<double>(units));
    out.rule = "zero-target-reduction(" + inner.rule + ")";
    return out;
  }

  if (m == 2) {
    Expectation e = dispatch_pair(chars, level);
    if (e.magnitude.kind != MagnitudeKind::Unclassified || e.rule != "pair-unhandled") return e;
  } else if (move_last(chars, [](const MultCharacter& c) { return c.is_primitive(); })) {
    const MultCharacter prod = product(chars);
    if (level == 0) {
      if (prod.is_primitive()) return gauss_quotient(chars, prod, ring.one(), 1.0, 0, "gauss-quotient");
      return exact_zero("imprimitive-product");
    }
    const std::int64_t t = prod.triviality_level();
    if (t >= 1 && t <= n - 1 && level == n - t) {
      return gauss_quotient(chars, prod, ring.p_power(level), 1.0, 2 * level, "gauss-quotient-at-p-power");
    }
    if (t == 0 && level == n - 1) {
      std::vector<MultCharacter> head(chars.begin(), chars.end() - 1);
      const MultCharacter head_prod = product(head);
      return gauss_quotient(head, head_prod, ring.one(), -sign_at_minus_one(chars.back()), 2 * (n - 1),
                            "trivial-product-gauss-quotient");
    }
    return exact_zero("level-mismatch");
  }

  // No primitive character: every character factors through R_t, t the
  // largest triviality level.
  std::int64_t t = 0;
  for (const auto& c : chars) t = std::max(t, c.triviality_level());
  if (t < 1 || t >= n) return {ExpectedMagnitude{}, std::nullopt, "unhandled"};
  const std::int64_t k = n - t;
  std::vector<MultCharacter> projected;
  projected.reserve(chars.size());
  for (const auto& c : chars) projected.push_back(project_character(c, k));
  const std::int64_t reduced_level = std::min(level, t);
  Expectation inner = dispatch(std::move(projected), reduced_level, options);
  const std::int64_t twice = 2 * (m - 1) * k;
  Expectation out;
  out.magnitude = scale(inner.magnitude, q, 1, twice);
  if (inner.exact) out.exact = *inner.exact * std::pow(static_cast<double>(q), static_cast<double>(twice) / 2.0);
  out.rule = "reduced-ring-lift(" + inner.rule + ")";
  return out;
}

}  // namespace

std::string to_string(MagnitudeKind kind) {
  switch (kind) {
    case MagnitudeKind::Zero: return "zero";
    case MagnitudeKind::PowerOfQ: return "power-of-q";
    case MagnitudeKind::ExplicitInteger: return "integer";
    case MagnitudeKind::ScaledPowerOfQ: return "scaled-power-of-q";
    case MagnitudeKind::ResidueField: return "residue-field";
    case MagnitudeKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

ExpectedMagnitude ExpectedMagnitude::scaled(std::int64_t coefficient, std::int64_t twice) {
  if (coefficient == 0) return zero();
  if (coefficient == 1) return power_of_q(twice);
  return {MagnitudeKind::ScaledPowerOfQ, twice, coefficient, 0.0};
}

double ExpectedMagnitude::magnitude(std::int64_t q) const {
  const double qd = static_cast<double>(q);
  switch (kind) {
    case MagnitudeKind::Zero: return 0.0;
    case MagnitudeKind::PowerOfQ: return std::pow(qd, static_cast<double>(twice_exponent) / 2.0);
    case MagnitudeKind::ExplicitInteger: return std::abs(static_cast<double>(integer));
    case MagnitudeKind::ScaledPowerOfQ:
      return static_cast<double>(integer) * std::pow(qd, static_cast<double>(twice_exponent) / 2.0);
    case MagnitudeKind::ResidueField: return numeric;
    case MagnitudeKind::Unclassified: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string ExpectedMagnitude::describe() const {
  std::ostringstream os;
  switch (kind) {
    case MagnitudeKind::Zero: os << "0"; break;
    case MagnitudeKind::PowerOfQ: os << "q^(" << twice_exponent << "/2)"; break;
    case MagnitudeKind::ExplicitInteger: os << integer; break;
    case MagnitudeKind::ScaledPowerOfQ: os << integer << "*q^(" << twice_exponent << "/2)"; break;
    case MagnitudeKind::ResidueField: os << "residue-field " << numeric; break;
    case MagnitudeKind::Unclassified: os << "unclassified"; break;
  }
  return os.str();
}

ExpectedMagnitude scale(const ExpectedMagnitude& m, std::int64_t q, std::int64_t coefficient, std::int64_t twice) {
  const std::int64_t c = coefficient < 0 ? -coefficient : coefficient;
  switch (m.kind) {
    case MagnitudeKind::Zero:
    case MagnitudeKind::Unclassified:
      return m;
    case MagnitudeKind::ExplicitInteger:
      if (twice % 2 == 0) return ExpectedMagnitude::exact_integer(checked_mul(checked_mul(m.integer, coefficient), ipow(q, twice / 2)));
      return ExpectedMagnitude::scaled(checked_mul(c, m.integer < 0 ? -m.integer : m.integer), twice);
    case MagnitudeKind::PowerOfQ:
      return ExpectedMagnitude::scaled(c, m.twice_exponent + twice);
    case MagnitudeKind::ScaledPowerOfQ:
      return ExpectedMagnitude::scaled(checked_mul(c, m.integer), m.twice_exponent + twice);
    case MagnitudeKind::ResidueField:
      return ExpectedMagnitude::residue_field(m.numeric * static_cast<double>(c) *
                                              std::pow(static_cast<double>(q), static_cast<double>(twice) / 2.0));
  }
  return m;
}

double default_tolerance(std::int64_t terms) {
  return std::max(1e-12 * static_cast<double>(terms), 1e-9);
}

bool agrees(const SumValue& sum, std::int64_t q, double tol) {
  if (sum.expected.magnitude.kind == MagnitudeKind::Unclassified) return false;
  if (sum.expected.exact && std::abs(sum.value - *sum.expected.exact) > tol) return false;
  return std::abs(std::abs(sum.value) - sum.expected.magnitude.magnitude(q)) <= tol;
}

SumValue gauss_sum(const MultCharacter& chi, const RingElement& b) {
  const GaloisRing& ring = chi.ring();
  (void)ring.index_of(b);
  cd acc(0.0, 0.0);
  for (ElementIndex u : ring.units()) {
    const RingElement x = ring.element(u);
    acc += (chi.eval(u) * additive_char_eval(ring, b, x)).to_complex();
  }
  return {acc, ring.unit_count(), gauss_expected(chi, b)};
}

Expectation gauss_expected(const MultCharacter& chi, const RingElement& b) {
  const GaloisRing& ring = chi.ring();
  const std::int64_t n = ring.n();
  const Valuation v = ring.valuation(b);
  if (chi.is_trivial()) {
    if (v.k == n) return exact_integer(ring.unit_count(), "gauss-trivial-character");
    if (v.k == n - 1) return exact_integer(-ipow(ring.q(), n - 1), "gauss-trivial-character");
    return exact_zero("gauss-trivial-character");
  }
  if (v.k == n) return exact_zero("gauss-zero-twist");
  if (v.k == 0) {
    if (chi.is_primitive()) return {ExpectedMagnitude::power_of_q(n), std::nullopt, "gauss-unit-twist"};
    return exact_zero("gauss-unit-twist");
  }
  if (chi.triviality_level() == n - v.k) {
    return {ExpectedMagnitude::power_of_q(n + v.k), std::nullopt, "gauss-p-power-twist"};
  }
  return exact_zero("gauss-p-power-twist");
}

std::int64_t count_unit_solutions(const GaloisRing& ring, int m, const RingElement& a) {
  if (m < 2) throw Error(ErrorKind::InvalidParams, "m must be at least 2");
  const std::int64_t q = ring.q();
  const std::int64_t n = ring.n();
  const bool in_m = !ring.is_unit(a);
  const std::int64_t odd = (m % 2 == 0) ? 1 : -1;  // (-1)^m
  std::int64_t base = ipow(q - 1, m);
  base = checked_add(base, in_m ? odd * (q - 1) : -odd);
  const std::int64_t e = n * m - m - n;
  if (e >= 0) return checked_mul(ipow(q, e), base);
  const std::int64_t d = ipow(q, -e);
  if (base % d != 0) throw Error(ErrorKind::Internal, "unit solution count is not integral");
  return base / d;
}

std::int64_t count_unit_solutions_brute(const GaloisRing& ring, int m, const RingElement& a,
                                        const SumOptions& options) {
  if (m < 2) throw Error(ErrorKind::InvalidParams, "m must be at least 2");
  checked_terms(std::vector<std::int64_t>(static_cast<std::size_t>(m - 1), ring.unit_count()), options.term_cap);
  std::vector<std::int64_t> indicator(static_cast<std::size_t>(ring.size()), 0);
  for (ElementIndex u : ring.units()) indicator[static_cast<std::size_t>(u)] = 1;
  kernels::CountTupleProblem problem;
  problem.ring = &ring;
  problem.domains.assign(static_cast<std::size_t>(m - 1), ring.units());
  problem.weights.assign(static_cast<std::size_t>(m), indicator);
  problem.target = ring.index_of(a);
  return kernels::tuple_sum(problem, options.exec);
}

SumValue jacobi_brute(const std::vector<MultCharacter>& chars, const RingElement& a, const SumOptions& options) {
  const GaloisRing& ring = common_ring(chars);
  const std::size_t m = chars.size();
  const std::int64_t terms =
      checked_terms(std::vector<std::int64_t>(m - 1, ring.unit_count()), options.term_cap);
  std::vector<std::vector<cd>> tables;
  tables.reserve(m);
  for (const auto& chi : chars) tables.push_back(unit_table(chi));
  kernels::ComplexTupleProblem problem;
  problem.ring = &ring;
  problem.domains.assign(m - 1, ring.units());
  for (const auto& t : tables) problem.weights.emplace_back(t);
  problem.target = ring.index_of(a);
  return {kernels::tuple_sum(problem, options.exec), terms, {}};
}

CanonicalTarget canonicalize(const std::vector<MultCharacter>& chars, const RingElement& a) {
  const GaloisRing& ring = common_ring(chars);
  const MultCharacter prod = product(chars);
  const Valuation v = ring.valuation(a);
  if (v.k == ring.n()) return {ring.zero(), ring.n(), RootOfUnity(0, 1)};
  if (v.k == 0) return {ring.one(), 0, prod.eval(a)};
  // a = p^k t: lift t digit by digit through the Teichmuller set.
  const auto reduced = ring.reduced(v.k);
  const auto digits = reduced->teichmuller_decompose(v.unit);
  std::vector<RingElement> lifted(static_cast<std::size_t>(ring.n()), ring.zero());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    lifted[i] = ring.teichmuller_lift(ring.lift_coordinates(digits[i]));
  }
  const RingElement t = ring.teichmuller_compose(lifted);
  return {ring.p_power(v.k), v.k, prod.eval(t)};
}

Expectation jacobi_expected(const std::vector<MultCharacter>& chars, const RingElement& a,
                            const SumOptions& options) {
  common_ring(chars);
  const CanonicalTarget target = canonicalize(chars, a);
  Expectation e = dispatch(chars, target.level, options);
  if (e.exact) *e.exact *= target.scalar.to_complex();
  return e;
}

SumValue jacobi_evaluate(const std::vector<MultCharacter>& chars, const RingElement& a, const SumOptions& options) {
  SumValue v = jacobi_brute(chars, a, options);
  v.expected = jacobi_expected(chars, a, options);
  return v;
}

std::int64_t s_cardinality(const GaloisRing& ring, int m, int k) {
  if (m < 2 || k < 1 || k > m - 1) throw Error(ErrorKind::InvalidParams, "need m >= 2 and 1 <= k <= m-1");
  return checked_mul(ipow(ring.unit_count(), k), ipow(ring.size(), m - k - 1));
}

std::int64_t s_cardinality_brute(const GaloisRing& ring, int m, int k, const RingElement& a,
                                 const SumOptions& options) {
  if (m < 2 || k < 1 || k > m - 1) throw Error(ErrorKind::InvalidParams, "need m >= 2 and 1 <= k <= m-1");
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(k), ring.unit_count());
  sizes.resize(static_cast<std::size_t>(m - 1), ring.size());
  checked_terms(sizes, options.term_cap);
  std::vector<std::int64_t> indicator(static_cast<std::size_t>(ring.size()), 0);
  for (ElementIndex u : ring.units()) indicator[static_cast<std::size_t>(u)] = 1;
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(ring.size()), 1);
  const std::vector<ElementIndex> everything = all_elements(ring);
  kernels::CountTupleProblem problem;
  problem.ring = &ring;
  for (int i = 0; i < m; ++i) {
    if (i < m - 1) problem.domains.emplace_back(i < k ? std::span<const ElementIndex>(ring.units()) : everything);
    problem.weights.emplace_back(i < k ? std::span<const std::int64_t>(indicator) : ones);
  }
  problem.target = ring.index_of(a);
  return kernels::tuple_sum(problem, options.exec);
}

SumValue tilde_jacobi_brute(const std::vector<MultCharacter>& chars, int k, const RingElement& a,
                            const SumOptions& options) {
  const GaloisRing& ring = common_ring(chars);
  const int m = static_cast<int>(chars.size());
  if (k < 1 || k > m - 1) throw Error(ErrorKind::InvalidParams, "need 1 <= k <= m-1");
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(k), ring.unit_count());
  sizes.resize(static_cast<std::size_t>(m - 1), ring.size());
  const std::int64_t terms = checked_terms(sizes, options.term_cap);
  std::vector<std::vector<cd>> tables;
  for (int i = 0; i < m; ++i) {
    tables.push_back(i < k ? unit_table(chars[static_cast<std::size_t>(i)])
                           : chars[static_cast<std::size_t>(i)].extended_table());
  }
  const std::vector<ElementIndex> everything = all_elements(ring);
  kernels::ComplexTupleProblem problem;
  problem.ring = &ring;
  for (int i = 0; i < m; ++i) {
    if (i < m - 1) problem.domains.emplace_back(i < k ? std::span<const ElementIndex>(ring.units()) : everything);
    problem.weights.emplace_back(tables[static_cast<std::size_t>(i)]);
  }
  problem.target = ring.index_of(a);
  return {kernels::tuple_sum(problem, options.exec), terms, {}};
}

TildeCase tilde_jacobi_classify(const std::vector<MultCharacter>& chars, int k, const RingElement& a,
                                const SumOptions& options) {
  const GaloisRing& ring = common_ring(chars);
  const int m = static_cast<int>(chars.size());
  if (k < 1 || k > m - 1) throw Error(ErrorKind::InvalidParams, "need 1 <= k <= m-1");
  const auto trivial = [](const MultCharacter& c) { return c.is_trivial(); };
  const auto tail_begin = chars.begin() + k;
  const bool tail_all_nontrivial = std::none_of(tail_begin, chars.end(), trivial);
  const bool tail_all_trivial = std::all_of(tail_begin, chars.end(), trivial);
  const bool head_all_trivial = std::all_of(chars.begin(), tail_begin, trivial);
  if (tail_all_nontrivial) {
    Expectation e = jacobi_expected(chars, a, options);
    e.rule = "tilde-nontrivial-tail(" + e.rule + ")";
    return {1, std::move(e)};
  }
  if (tail_all_trivial && head_all_trivial) return {2, exact_integer(s_cardinality(ring, m, k), "tilde-all-trivial")};
  if (tail_all_trivial) return {3, exact_zero("tilde-trivial-tail")};
  return {4, exact_zero("tilde-mixed-tail")};
}

}  // namespace galois_sums
