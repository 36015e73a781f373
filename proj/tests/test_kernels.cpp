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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "galois_sums/characters.hpp"
#include "galois_sums/kernels.hpp"

namespace gs = galois_sums;
namespace k = galois_sums::kernels;

namespace {

class ThreadEnv {
 public:
  explicit ThreadEnv(int threads) { setenv("GALOIS_SUMS_THREADS", std::to_string(threads).c_str(), 1); }
  ~ThreadEnv() { unsetenv("GALOIS_SUMS_THREADS"); }
};

struct Fixture {
  std::shared_ptr<const gs::GaloisRing> ring;
  std::vector<std::vector<std::complex<double>>> tables;
  std::vector<gs::ElementIndex> all;
};

Fixture make_fixture(gs::RingParams params, int m, std::uint64_t seed) {
  Fixture f;
  const auto group = gs::CharacterGroup::create(gs::GaloisRing::create(params));
  f.ring = group->ring_ptr();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, group->character_count() - 1);
  for (int i = 0; i < m; ++i) f.tables.push_back(group->character_at(pick(rng)).extended_table());
  for (gs::ElementIndex x = 0; x < f.ring->size(); ++x) f.all.push_back(x);
  return f;
}

k::ComplexTupleProblem problem_of(const Fixture& f, const std::vector<std::span<const gs::ElementIndex>>& domains,
                                  gs::ElementIndex target) {
  k::ComplexTupleProblem p;
  p.ring = f.ring.get();
  p.domains = domains;
  for (const auto& t : f.tables) p.weights.emplace_back(t);
  p.target = target;
  return p;
}

}  // namespace

TEST(TupleSum, MatchesExplicitLoopsForThreeCoordinates) {
  const Fixture f = make_fixture({3, 2, 1}, 3, 1);
  const auto& r = *f.ring;
  for (gs::ElementIndex a = 0; a < r.size(); ++a) {
    std::complex<double> oracle = 0.0;
    for (auto x1 : r.units()) {
      for (auto x2 : f.all) {
        const auto x3 = r.sub_index(r.sub_index(a, x1), x2);
        oracle += f.tables[0][static_cast<std::size_t>(x1)] * f.tables[1][static_cast<std::size_t>(x2)] *
                  f.tables[2][static_cast<std::size_t>(x3)];
      }
    }
    const auto p = problem_of(f, {r.units(), f.all}, a);
    EXPECT_EQ(p.terms(), 6 * 9);
    EXPECT_NEAR(std::abs(k::tuple_sum_serial(p) - oracle), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(k::tuple_sum_parallel(p) - oracle), 0.0, 1e-9);
  }
}

TEST(TupleSum, CountsAgree) {
  const auto ring = gs::GaloisRing::create({2, 2, 2});
  std::vector<std::int64_t> unit_weight(static_cast<std::size_t>(ring->size()), 0);
  for (auto u : ring->units()) unit_weight[static_cast<std::size_t>(u)] = 1;
  for (gs::ElementIndex a = 0; a < ring->size(); ++a) {
    k::CountTupleProblem p;
    p.ring = ring.get();
    p.domains = {ring->units(), ring->units()};
    p.weights = {unit_weight, unit_weight, unit_weight};
    p.target = a;
    std::int64_t oracle = 0;
    for (auto x1 : ring->units()) {
      for (auto x2 : ring->units()) {
        if (ring->is_unit_index(ring->sub_index(ring->sub_index(a, x1), x2))) ++oracle;
      }
    }
    EXPECT_EQ(k::tuple_sum_serial(p), oracle);
    EXPECT_EQ(k::tuple_sum_parallel(p), oracle);
  }
}

TEST(TupleSum, ParallelResultIndependentOfThreadCount) {
  const Fixture f = make_fixture({2, 3, 2}, 4, 5);
  const auto& r = *f.ring;
  const auto p = problem_of(f, {r.units(), f.all, r.units()}, r.index_of(r.one()));
  std::complex<double> reference;
  {
    ThreadEnv env(1);
    EXPECT_EQ(gs::configured_threads(), 1);
    reference = k::tuple_sum_parallel(p);
  }
  for (int threads : {2, 3, 8}) {
    ThreadEnv env(threads);
    EXPECT_EQ(gs::configured_threads(), threads);
    const auto v = k::tuple_sum_parallel(p);
    EXPECT_EQ(v, reference) << threads << " threads";
  }
  EXPECT_NEAR(std::abs(k::tuple_sum_serial(p) - reference), 0.0, 1e-9);
}

TEST(TupleSum, DispatchOnExecution) {
  const Fixture f = make_fixture({3, 2, 1}, 2, 9);
  const auto p = problem_of(f, {f.ring->units()}, 1);
  EXPECT_EQ(k::tuple_sum(p, gs::Execution::Serial), k::tuple_sum_serial(p));
  EXPECT_EQ(k::tuple_sum(p, gs::Execution::Parallel), k::tuple_sum_parallel(p));
}

TEST(RowBuild, SerialAndParallelIdentical) {
  const Fixture f = make_fixture({3, 2, 1}, 3, 3);
  const auto& r = *f.ring;
  // Tuples: every (x1, x2, x3) with x1 a unit, in lexicographic order.
  std::vector<gs::ElementIndex> tuples;
  for (auto x1 : r.units()) {
    for (auto x2 : f.all) {
      for (auto x3 : f.all) tuples.insert(tuples.end(), {x1, x2, x3});
    }
  }
  const std::vector<std::int64_t> rows{0, 1, 2, 2, 1, 0, 1, 1, 1};
  const k::RowBuildProblem p{tuples, 3, rows, f.tables};
  const auto s = k::build_rows_serial(p);
  const auto q = k::build_rows_parallel(p);
  EXPECT_EQ(s.entries, q.entries);
  EXPECT_EQ(s.support, q.support);
  ASSERT_EQ(s.support.size(), 3u);
  const std::size_t len = tuples.size() / 3;
  for (std::size_t row = 0; row < 3; ++row) {
    double norm = 0.0;
    std::int64_t support = 0;
    for (std::size_t t = 0; t < len; ++t) {
      const auto v = s.entries[row * len + t];
      norm += std::norm(v);
      if (std::abs(v) > 0.5 / std::sqrt(static_cast<double>(len))) ++support;
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
    EXPECT_EQ(support, s.support[row]);
  }
}

TEST(PairScan, FindsPlantedMaximum) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss;
  const std::int64_t rows = 40;
  const std::int64_t len = 16;
  std::vector<std::complex<double>> m(static_cast<std::size_t>(rows * len));
  for (auto& v : m) v = {gauss(rng), gauss(rng)};
  for (std::int64_t i = 0; i < rows; ++i) {
    double norm = 0.0;
    for (std::int64_t t = 0; t < len; ++t) norm += std::norm(m[static_cast<std::size_t>(i * len + t)]);
    for (std::int64_t t = 0; t < len; ++t) m[static_cast<std::size_t>(i * len + t)] /= std::sqrt(norm);
  }
  // Rows 7 and 31 become parallel.
  for (std::int64_t t = 0; t < len; ++t) {
    m[static_cast<std::size_t>(31 * len + t)] = std::complex<double>(0.0, 1.0) * m[static_cast<std::size_t>(7 * len + t)];
  }
  double oracle = 0.0;
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = i + 1; j < rows; ++j) {
      oracle = std::max(oracle, std::abs(k::inner_product(&m[static_cast<std::size_t>(i * len)],
                                                          &m[static_cast<std::size_t>(j * len)], len)));
    }
  }
  const auto s = k::max_pair_serial(m, rows, len);
  const auto p = k::max_pair_parallel(m, rows, len);
  EXPECT_EQ(s.value, oracle);
  EXPECT_EQ(s.i, 7);
  EXPECT_EQ(s.j, 31);
  EXPECT_NEAR(s.value, 1.0, 1e-12);
  EXPECT_EQ(p.value, s.value);
  EXPECT_EQ(p.i, s.i);
  EXPECT_EQ(p.j, s.j);
}

TEST(PairScan, TiesKeepTheSmallestPair) {
  // Identity rows: every pair correlates to exactly zero.
  const std::int64_t n = 5;
  std::vector<std::complex<double>> m(static_cast<std::size_t>(n * n), 0.0);
  for (std::int64_t i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1.0;
  for (const auto& r : {k::max_pair_serial(m, n, n), k::max_pair_parallel(m, n, n)}) {
    EXPECT_EQ(r.value, 0.0);
    EXPECT_EQ(r.i, 0);
    EXPECT_EQ(r.j, 1);
  }
}

TEST(InnerProduct, ConjugatesSecondArgument) {
  const std::vector<std::complex<double>> a{{1, 2}, {0, 1}};
  const std::vector<std::complex<double>> b{{3, -1}, {2, 2}};
  const auto v = k::inner_product(a.data(), b.data(), 2);
  const auto oracle = a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]);
  EXPECT_NEAR(std::abs(v - oracle), 0.0, 1e-15);
}
