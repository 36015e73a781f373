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

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galois_sums/characters.hpp"
#include "galois_sums/kernels.hpp"

namespace galois_sums {

enum class MagnitudeKind {
  Zero,
  PowerOfQ,         // q^{twice_exponent / 2}
  ExplicitInteger,  // the sum is exactly `integer`
  ScaledPowerOfQ,   // integer * q^{twice_exponent / 2}
  ResidueField,     // measured over a residue field, then scaled; stored in `numeric`
  Unclassified,
};

std::string to_string(MagnitudeKind kind);

struct ExpectedMagnitude {
  MagnitudeKind kind = MagnitudeKind::Unclassified;
  std::int64_t twice_exponent = 0;
  std::int64_t integer = 0;
  double numeric = 0.0;

  static ExpectedMagnitude zero() { return {MagnitudeKind::Zero, 0, 0, 0.0}; }
  static ExpectedMagnitude power_of_q(std::int64_t twice) { return {MagnitudeKind::PowerOfQ, twice, 0, 0.0}; }
  static ExpectedMagnitude exact_integer(std::int64_t v) { return {MagnitudeKind::ExplicitInteger, 0, v, 0.0}; }
  static ExpectedMagnitude scaled(std::int64_t coefficient, std::int64_t twice);
  static ExpectedMagnitude residue_field(double magnitude) { return {MagnitudeKind::ResidueField, 0, 0, magnitude}; }

  double magnitude(std::int64_t q) const;  // NaN when unclassified
  std::string describe() const;
};

// coefficient * q^{twice / 2} times the given magnitude.
ExpectedMagnitude scale(const ExpectedMagnitude& m, std::int64_t q, std::int64_t coefficient, std::int64_t twice);

struct Expectation {
  ExpectedMagnitude magnitude;
  std::optional<std::complex<double>> exact;  // when the closed form gives the value itself
  std::string rule;                           // name of the law that produced it
};

struct SumValue {
  std::complex<double> value;
  std::int64_t terms = 0;
  Expectation expected;
};

// max(1e-12 * terms, 1e-9).
double default_tolerance(std::int64_t terms);

// |value - exact| <= tol when a value is known, and ||value| - magnitude| <= tol.
// Unclassified never agrees.
bool agrees(const SumValue& sum, std::int64_t q, double tol);

struct SumOptions {
  std::int64_t term_cap = 10'000'000;
  Execution exec = Execution::Parallel;
};

// G(chi, lambda_b) by direct summation over R^*, with the closed-form expectation.
SumValue gauss_sum(const MultCharacter& chi, const RingElement& b);
Expectation gauss_expected(const MultCharacter& chi, const RingElement& b);

// Number of unit tuples (x_1, ..., x_m) with x_1 + ... + x_m = a.
std::int64_t count_unit_solutions(const GaloisRing& ring, int m, const RingElement& a);
std::int64_t count_unit_solutions_brute(const GaloisRing& ring, int m, const RingElement& a,
                                        const SumOptions& options = {});

// Brute-force J_a over (R^*)^m; TooLarge past options.term_cap.
SumValue jacobi_brute(const std::vector<MultCharacter>& chars, const RingElement& a,
                      const SumOptions& options = {});

// J_a = scalar * J_{canonical}, canonical in {0, 1, p, ..., p^{n-1}}.
struct CanonicalTarget {
  RingElement a;
  std::int64_t level = 0;  // 0 for a unit, k for p^k, n for zero
  RootOfUnity scalar;      // the product character at a (unit) or at the lifted cofactor
};

CanonicalTarget canonicalize(const std::vector<MultCharacter>& chars, const RingElement& a);

// Closed-form value or magnitude of J_a. Base-field sums and Gauss quotients
// are evaluated by direct summation.
Expectation jacobi_expected(const std::vector<MultCharacter>& chars, const RingElement& a,
                            const SumOptions& options = {});

// jacobi_brute with the expectation attached.
SumValue jacobi_evaluate(const std::vector<MultCharacter>& chars, const RingElement& a,
                         const SumOptions& options = {});

// |S| for S = (R^*)^k x R^{m-k} restricted to x_1 + ... + x_m = a.
std::int64_t s_cardinality(const GaloisRing& ring, int m, int k);
std::int64_t s_cardinality_brute(const GaloisRing& ring, int m, int k, const RingElement& a,
                                 const SumOptions& options = {});

// The modified sum over S with the extended characters.
SumValue tilde_jacobi_brute(const std::vector<MultCharacter>& chars, int k, const RingElement& a,
                            const SumOptions& options = {});

struct TildeCase {
  int number = 0;  // 1: tail nontrivial, 2: all trivial, 3: tail trivial, 4: tail mixed
  Expectation expected;
};

TildeCase tilde_jacobi_classify(const std::vector<MultCharacter>& chars, int k, const RingElement& a,
                                const SumOptions& options = {});

}  // namespace galois_sums
