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

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "galois_sums/kernels.hpp"

namespace galois_sums {

int configured_threads() {
  if (const char* env = std::getenv("GALOIS_SUMS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

namespace kernels {

namespace {

// Iterative odometer over positions 1..m-2 for a fixed first coordinate.
template <class W>
W inner_sum(const TupleProblem<W>& p, ElementIndex x0, W w0) {
  const GaloisRing& ring = *p.ring;
  const std::size_t depth = p.domains.size();
  const auto& last = p.weights[depth];
  if (depth == 1) return w0 * last[static_cast<std::size_t>(ring.sub_index(p.target, x0))];

  // Stack of (position in domain, partial sum, partial weight) for positions 1..depth-1.
  std::vector<std::size_t> cursor(depth, 0);
  std::vector<ElementIndex> partial(depth + 1, 0);
  std::vector<W> weight(depth + 1, W{});
  partial[1] = x0;
  weight[1] = w0;
  W acc{};
  std::size_t pos = 1;
  while (true) {
    if (cursor[pos] == p.domains[pos].size()) {
      if (pos == 1) break;
      cursor[pos] = 0;
      --pos;
      ++cursor[pos];
      continue;
    }
    const ElementIndex x = p.domains[pos][cursor[pos]];
    const W w = weight[pos] * p.weights[pos][static_cast<std::size_t>(x)];
    if (w == W{}) {
      ++cursor[pos];
      continue;
    }
    const ElementIndex s = ring.add_index(partial[pos], x);
    if (pos + 1 == depth) {
      acc += w * last[static_cast<std::size_t>(ring.sub_index(p.target, s))];
      ++cursor[pos];
    } else {
      partial[pos + 1] = s;
      weight[pos + 1] = w;
      ++pos;
    }
  }
  return acc;
}

template <class W>
W parallel_sum(const TupleProblem<W>& p) {
  const auto& first = p.domains[0];
  const auto count = static_cast<std::int64_t>(first.size());
  std::vector<W> partials(first.size(), W{});
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
  for (std::int64_t i = 0; i < count; ++i) {
    const ElementIndex x = first[static_cast<std::size_t>(i)];
    const W w = p.weights[0][static_cast<std::size_t>(x)];
    if (w != W{}) partials[static_cast<std::size_t>(i)] = inner_sum(p, x, w);
  }
  W total{};
  for (const W& v : partials) total += v;
  return total;
}

}  // namespace

std::complex<double> tuple_sum_parallel(const ComplexTupleProblem& problem) { return parallel_sum(problem); }

std::int64_t tuple_sum_parallel(const CountTupleProblem& problem) { return parallel_sum(problem); }

RowBuildResult build_rows_parallel(const RowBuildProblem& problem) {
  const auto m = static_cast<std::size_t>(problem.m);
  const std::size_t len = problem.tuples.size() / m;
  const auto rows = static_cast<std::int64_t>(problem.row_characters.size() / m);
  RowBuildResult out;
  out.entries.assign(static_cast<std::size_t>(rows) * len, {});
  out.support.assign(static_cast<std::size_t>(rows), 0);
#pragma omp parallel for schedule(static) num_threads(configured_threads())
  for (std::int64_t ri = 0; ri < rows; ++ri) {
    const auto r = static_cast<std::size_t>(ri);
    std::int64_t support = 0;
    std::complex<double>* row = &out.entries[r * len];
    for (std::size_t t = 0; t < len; ++t) {
      std::complex<double> v(1.0, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        const auto& table = problem.tables[static_cast<std::size_t>(problem.row_characters[r * m + i])];
        v *= table[static_cast<std::size_t>(problem.tuples[t * m + i])];
      }
      row[t] = v;
      if (v != std::complex<double>(0.0, 0.0)) ++support;
    }
    out.support[r] = support;
    if (support > 0) {
      const double scale = 1.0 / std::sqrt(static_cast<double>(support));
      for (std::size_t t = 0; t < len; ++t) row[t] *= scale;
    }
  }
  return out;
}

PairScanResult max_pair_parallel(std::span<const std::complex<double>> rows, std::int64_t row_count,
                                 std::int64_t length) {
  std::vector<PairScanResult> per_row(static_cast<std::size_t>(std::max<std::int64_t>(row_count, 0)));
#pragma omp parallel for schedule(dynamic, 4) num_threads(configured_threads())
  for (std::int64_t i = 0; i < row_count; ++i) {
    PairScanResult best;
    const std::complex<double>* a = &rows[static_cast<std::size_t>(i * length)];
    for (std::int64_t j = i + 1; j < row_count; ++j) {
      const double v = std::abs(inner_product(a, &rows[static_cast<std::size_t>(j * length)], length));
      if (best.i < 0 || v > best.value) best = {v, i, j};
    }
    per_row[static_cast<std::size_t>(i)] = best;
  }
  PairScanResult best;
  for (const auto& r : per_row) {
    if (r.i < 0) continue;
    if (best.i < 0 || r.value > best.value) best = r;
  }
  return best;
}

}  // namespace kernels
}  // namespace galois_sums
