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
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "galois_sums/characters.hpp"
#include "galois_sums/kernels.hpp"

namespace galois_sums {

inline constexpr std::int64_t kDefaultEntryCap = 100'000'000;
inline constexpr std::int64_t kDefaultPairCap = 4'000'000'000;

struct CodebookParams {
  std::shared_ptr<const CharacterGroup> group;  // characters of R, n >= 2
  int m = 3;
  int k = 1;
  RingElement a;                      // empty means 1
  std::vector<std::int64_t> psi0;     // exponents over R_{n-1}; empty means trivial
  SectionChoice section = SectionChoice::LexMin;
  bool allow_nonunit_a = false;       // a in M is only meaningful for the non-optimal variants
  std::int64_t entry_cap = kDefaultEntryCap;
  Execution exec = Execution::Parallel;
};

struct CodebookMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::complex<double>> entries;  // rows x cols, row-major

  std::span<const std::complex<double>> row(std::int64_t i) const {
    return {entries.data() + i * cols, static_cast<std::size_t>(cols)};
  }
  bool operator==(const CodebookMatrix&) const = default;
};

// Row label: (a_1, psi_2, a_2, ..., psi_m, a_m) with a_i residue-field element
// indices and psi_i character ordinals of R_{n-1}; basis rows carry {index}.
struct RowLabel {
  bool basis = false;
  std::vector<std::int64_t> values;
};

struct Codebook {
  CodebookParams params;
  std::int64_t n_rows = 0;  // N
  std::int64_t length = 0;  // K
  CodebookMatrix matrix;
  std::vector<std::int64_t> support;  // per row
  std::vector<RowLabel> labels;
  std::vector<std::string> warnings;
};

struct CodebookSize {
  std::int64_t n = 0;  // N
  std::int64_t k = 0;  // K
};

CodebookSize codebook_size(std::int64_t q, std::int64_t n, std::int64_t m, std::int64_t k);

Codebook build_codebook(const CodebookParams& params);

struct EvalReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double imax_measured = 0.0;
  double imax_formula = 0.0;  // NaN when no closed form applies
  double welch = 0.0;  // 0 when N <= K
  double ratio = 0.0;  // imax_measured / welch
  std::int64_t argmax_i = -1;
  std::int64_t argmax_j = -1;
};

EvalReport imax_exhaustive(const Codebook& codebook, std::int64_t pair_cap = kDefaultPairCap,
                           Execution exec = Execution::Parallel);

// Maximum cross-correlation of the unit-target construction.
double imax_formula(std::int64_t q, std::int64_t n, std::int64_t m);

enum class RemarkCase { ZeroTarget, NonzeroIdeal };
double imax_remark(std::int64_t q, std::int64_t n, std::int64_t m, RemarkCase which);

// sqrt((N - K) / ((N - 1) K)); DegenerateDimensions unless N > K >= 1.
double welch_bound(std::int64_t n_rows, std::int64_t length);

// Imax / I_W, evaluated through the closed-form quotient of the two.
double asymptotic_ratio(std::int64_t q, std::int64_t n, std::int64_t m, std::int64_t k);

struct Table2Row {
  std::int64_t q = 0;
  std::int64_t n_rows = 0;
  std::int64_t length = 0;
  double imax = 0.0;
  double welch = 0.0;
  double ratio = 0.0;
};

const std::vector<std::int64_t>& table2_default_qs();
// n = 2, m = 3, k = 1; NotPrimePower for any other q.
std::vector<Table2Row> table2(const std::vector<std::int64_t>& qs);

// One line per row of interleaved re,im with 17 significant digits.
void export_csv(const CodebookMatrix& matrix, std::ostream& out);
CodebookMatrix import_csv(std::istream& in);

}  // namespace galois_sums
