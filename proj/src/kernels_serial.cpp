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

#include <cmath>

#include "galois_sums/kernels.hpp"

namespace galois_sums::kernels {

namespace {

template <class W>
W nested(const TupleProblem<W>& p, std::size_t pos, ElementIndex partial, W weight) {
  const GaloisRing& ring = *p.ring;
  if (pos == p.domains.size()) {
    return weight * p.weights[pos][static_cast<std::size_t>(ring.sub_index(p.target, partial))];
  }
  W acc{};
  for (ElementIndex x : p.domains[pos]) {
    const W w = p.weights[pos][static_cast<std::size_t>(x)];
    if (w == W{}) continue;
    acc += nested(p, pos + 1, ring.add_index(partial, x), weight * w);
  }
  return acc;
}

}  // namespace

std::complex<double> tuple_sum_serial(const ComplexTupleProblem& problem) {
  return nested(problem, 0, 0, std::complex<double>(1.0, 0.0));
}

std::int64_t tuple_sum_serial(const CountTupleProblem& problem) {
  return nested(problem, 0, 0, std::int64_t{1});
}

RowBuildResult build_rows_serial(const RowBuildProblem& problem) {
  const auto m = static_cast<std::size_t>(problem.m);
  const std::size_t len = problem.tuples.size() / m;
  const std::size_t rows = problem.row_characters.size() / m;
  RowBuildResult out;
  out.entries.assign(rows * len, {});
  out.support.assign(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::int64_t support = 0;
    for (std::size_t t = 0; t < len; ++t) {
      std::complex<double> v(1.0, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        const auto& table = problem.tables[static_cast<std::size_t>(problem.row_characters[r * m + i])];
        v *= table[static_cast<std::size_t>(problem.tuples[t * m + i])];
      }
      out.entries[r * len + t] = v;
      if (v != std::complex<double>(0.0, 0.0)) ++support;
    }
    out.support[r] = support;
    if (support > 0) {
      const double scale = 1.0 / std::sqrt(static_cast<double>(support));
      for (std::size_t t = 0; t < len; ++t) out.entries[r * len + t] *= scale;
    }
  }
  return out;
}

PairScanResult max_pair_serial(std::span<const std::complex<double>> rows, std::int64_t row_count,
                               std::int64_t length) {
  PairScanResult best;
  for (std::int64_t i = 0; i < row_count; ++i) {
    for (std::int64_t j = i + 1; j < row_count; ++j) {
      const double v = std::abs(inner_product(&rows[static_cast<std::size_t>(i * length)],
                                              &rows[static_cast<std::size_t>(j * length)], length));
      if (best.i < 0 || v > best.value) best = {v, i, j};
    }
  }
  return best;
}

}  // namespace galois_sums::kernels
