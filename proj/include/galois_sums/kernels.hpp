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
#include <span>
#include <vector>

#include "galois_sums/ring.hpp"

namespace galois_sums {

enum class Execution { Serial, Parallel };

// Worker count for the parallel kernels: GALOIS_SUMS_THREADS when set to a
// positive integer, otherwise the OpenMP default.
int configured_threads();

namespace kernels {

// Sum over (x_1, ..., x_m) with x_i in domains[i] for i < m and
// x_m = target - (x_1 + ... + x_{m-1}) of w_1(x_1) ... w_m(x_m). Weight tables
// are indexed by ElementIndex; a restriction on x_m is a zero weight.
template <class W>
struct TupleProblem {
  const GaloisRing* ring = nullptr;
  std::vector<std::span<const ElementIndex>> domains;  // m - 1 entries
  std::vector<std::span<const W>> weights;             // m entries
  ElementIndex target = 0;

  std::int64_t terms() const {
    std::int64_t t = 1;
    for (const auto& d : domains) t *= static_cast<std::int64_t>(d.size());
    return t;
  }
};

using ComplexTupleProblem = TupleProblem<std::complex<double>>;
using CountTupleProblem = TupleProblem<std::int64_t>;

// Plain nested loops in lexicographic tuple order.
std::complex<double> tuple_sum_serial(const ComplexTupleProblem& problem);
std::int64_t tuple_sum_serial(const CountTupleProblem& problem);

// One partial per element of the first domain, combined in domain order, so
// the result does not depend on the thread count.
std::complex<double> tuple_sum_parallel(const ComplexTupleProblem& problem);
std::int64_t tuple_sum_parallel(const CountTupleProblem& problem);

template <class W>
W tuple_sum(const TupleProblem<W>& problem, Execution exec) {
  return exec == Execution::Serial ? tuple_sum_serial(problem) : tuple_sum_parallel(problem);
}

// Codebook rows: row r has entries prod_i tables[chars[r*m + i]][tuples[t*m + i]]
// over the K tuples, scaled to unit norm over its support.
struct RowBuildProblem {
  std::span<const ElementIndex> tuples;  // K x m, row-major
  int m = 0;
  std::span<const std::int64_t> row_characters;                // rows x m table ids
  std::span<const std::vector<std::complex<double>>> tables;  // by table id, by element
};

struct RowBuildResult {
  std::vector<std::complex<double>> entries;  // rows x K
  std::vector<std::int64_t> support;
};

RowBuildResult build_rows_serial(const RowBuildProblem& problem);
RowBuildResult build_rows_parallel(const RowBuildProblem& problem);

// max |c_i c_j^H| over i < j; ties keep the smallest (i, j).
struct PairScanResult {
  double value = 0.0;
  std::int64_t i = -1;
  std::int64_t j = -1;
};

PairScanResult max_pair_serial(std::span<const std::complex<double>> rows, std::int64_t row_count,
                               std::int64_t length);
PairScanResult max_pair_parallel(std::span<const std::complex<double>> rows, std::int64_t row_count,
                                 std::int64_t length);

// sum_t a_t * conj(b_t); shared by both scans so they agree bit for bit.
inline std::complex<double> inner_product(const std::complex<double>* a, const std::complex<double>* b,
                                          std::int64_t length) {
  double re = 0.0;
  double im = 0.0;
  for (std::int64_t t = 0; t < length; ++t) {
    re += a[t].real() * b[t].real() + a[t].imag() * b[t].imag();
    im += a[t].imag() * b[t].real() - a[t].real() * b[t].imag();
  }
  return {re, im};
}

}  // namespace kernels
}  // namespace galois_sums
