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

#include <cmath>
#include <set>
#include <sstream>

#include "galois_sums/codebook.hpp"
#include "galois_sums/errors.hpp"
#include "galois_sums/sums.hpp"

namespace gs = galois_sums;

namespace {

using Group = std::shared_ptr<const gs::CharacterGroup>;

Group group(std::int64_t p, std::int64_t n, std::int64_t s) {
  return gs::CharacterGroup::create(gs::GaloisRing::create({p, n, s}));
}

gs::Codebook build(const Group& g, gs::SectionChoice section = gs::SectionChoice::LexMin,
                   std::vector<std::int64_t> psi0 = {}, gs::Execution exec = gs::Execution::Parallel) {
  gs::CodebookParams params;
  params.group = g;
  params.section = section;
  params.psi0 = std::move(psi0);
  params.exec = exec;
  return gs::build_codebook(params);
}

// Row characters rebuilt from the row label (a_1, psi_2, a_2, ..., psi_m, a_m).
std::vector<gs::MultCharacter> row_characters(const gs::Codebook& cb, std::int64_t row) {
  const auto& g = cb.params.group;
  const auto reduced = g->reduced(1);
  const auto& field = g->residue_field()->ring();
  const auto& d = cb.labels[static_cast<std::size_t>(row)].values;
  const auto psi0 = cb.params.psi0.empty() ? reduced->trivial() : reduced->character(cb.params.psi0);
  std::vector<gs::MultCharacter> out{gs::lift_character(psi0, g) *
                                     gs::extend_phi(g, field.element(d[0]), cb.params.section)};
  for (int i = 1; i < cb.params.m; ++i) {
    out.push_back(gs::lift_character(reduced->character_at(d[static_cast<std::size_t>(2 * i - 1)]), g) *
                  gs::extend_phi(g, field.element(d[static_cast<std::size_t>(2 * i)]), cb.params.section));
  }
  return out;
}

}  // namespace

TEST(Size, Examples) {
  EXPECT_EQ(gs::codebook_size(3, 2, 3, 1).n, 162);
  EXPECT_EQ(gs::codebook_size(3, 2, 3, 1).k, 54);
  EXPECT_EQ(gs::codebook_size(4, 2, 3, 1).n, 768);
  EXPECT_EQ(gs::codebook_size(4, 2, 3, 1).k, 192);
  EXPECT_EQ(gs::codebook_size(11, 2, 3, 1).n, 146410);
  EXPECT_EQ(gs::codebook_size(11, 2, 3, 1).k, 13310);
  EXPECT_EQ(gs::codebook_size(53, 2, 3, 1).n, 410305012);
  EXPECT_EQ(gs::codebook_size(53, 2, 3, 1).k, 7741604);
  for (std::int64_t q : {3, 4, 5, 7}) EXPECT_EQ(gs::codebook_size(q, 2, 2, 1).k, q * q - q);
  EXPECT_THROW((void)gs::codebook_size(3, 2, 3, 3), gs::Error);
}

TEST(Formulas, ImaxWelchRatio) {
  EXPECT_NEAR(gs::imax_formula(3, 2, 3), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(gs::imax_formula(4, 2, 3), 1.0 / 7.0, 1e-15);
  EXPECT_NEAR(gs::imax_formula(11, 2, 3), 0.010989011, 5e-10);
  EXPECT_NEAR(gs::imax_formula(19, 2, 3), 0.003257329, 5e-10);
  EXPECT_NEAR(gs::welch_bound(146410, 13310), 0.008264491, 5e-10);
  EXPECT_NEAR(gs::welch_bound(2345778, 123462), 0.002770084, 5e-10);
  EXPECT_NEAR(gs::welch_bound(2, 1), 1.0, 1e-15);
  EXPECT_THROW((void)gs::welch_bound(3, 3), gs::Error);
  EXPECT_NEAR(gs::asymptotic_ratio(11, 2, 3, 1), 1.329665789, 5e-10);
  EXPECT_NEAR(gs::asymptotic_ratio(256, 2, 3, 1), 1.01181084127, 5e-12);
  double previous = 1e300;
  for (auto q : gs::table2_default_qs()) {
    const double excess = gs::asymptotic_ratio(q, 2, 3, 1) - 1.0;
    EXPECT_LT(excess, previous);
    previous = excess;
  }
}

TEST(Formulas, Table2Rows) {
  const auto rows = gs::table2(gs::table2_default_qs());
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[3].n_rows, 410305012);
  EXPECT_EQ(rows[3].length, 7741604);
  EXPECT_NEAR(rows[4].imax, 0.0001582028, 1e-10);
  EXPECT_NEAR(rows[6].welch, 0.00003121001, 1e-11);
  for (const auto& r : rows) EXPECT_NEAR(r.ratio, r.imax / r.welch, 1e-12 * r.ratio);
}

TEST(Formulas, RemarkVariants) {
  // (q^n - q^{n-1}) q^{(m-2)n/2} / (q^{nm-m-n} ((q-1)^m + (-1)^m (q-1))) at q=3, n=2, m=3.
  EXPECT_NEAR(gs::imax_remark(3, 2, 3, gs::RemarkCase::ZeroTarget), 6.0 * 3.0 / (3.0 * 6.0), 1e-12);
  // sqrt(q^{2m+2n-mn-1}) / ((q-1)^m + (-1)^m (q-1)).
  EXPECT_NEAR(gs::imax_remark(3, 2, 3, gs::RemarkCase::NonzeroIdeal), std::sqrt(27.0) / 6.0, 1e-12);
  EXPECT_THROW((void)gs::imax_remark(2, 2, 3, gs::RemarkCase::ZeroTarget), gs::Error);
}

TEST(Build, ShapeNormsAndSupport) {
  for (const auto& g : {group(3, 2, 1), group(2, 2, 2)}) {
    const auto cb = build(g);
    const auto q = g->ring().q();
    const auto size = gs::codebook_size(q, 2, 3, 1);
    EXPECT_EQ(cb.n_rows, size.n);
    EXPECT_EQ(cb.length, size.k);
    EXPECT_EQ(cb.matrix.rows, size.n);
    EXPECT_EQ(cb.matrix.cols, size.k);
    ASSERT_EQ(static_cast<std::int64_t>(cb.support.size()), size.n);
    ASSERT_EQ(static_cast<std::int64_t>(cb.labels.size()), size.n);
    EXPECT_TRUE(cb.warnings.empty());
    // q^{mn-m-n} ((q-1)^m + (-1)^{m+1}) with m=3, n=2 is q ((q-1)^3 + 1).
    const std::int64_t lower = q * ((q - 1) * (q - 1) * (q - 1) + 1);
    const std::int64_t f_rows = size.n - size.k;
    for (std::int64_t i = 0; i < cb.n_rows; ++i) {
      double norm = 0.0;
      for (const auto& v : cb.matrix.row(i)) norm += std::norm(v);
      EXPECT_NEAR(norm, 1.0, 1e-9);
      if (i < f_rows) {
        EXPECT_GE(cb.support[static_cast<std::size_t>(i)], lower);
        EXPECT_LE(cb.support[static_cast<std::size_t>(i)], size.k);
        EXPECT_FALSE(cb.labels[static_cast<std::size_t>(i)].basis);
      } else {
        EXPECT_EQ(cb.support[static_cast<std::size_t>(i)], 1);
        EXPECT_TRUE(cb.labels[static_cast<std::size_t>(i)].basis);
      }
    }
  }
}

TEST(Build, SerialAndParallelIdentical) {
  const auto g = group(3, 2, 1);
  const auto s = build(g, gs::SectionChoice::LexMin, {}, gs::Execution::Serial);
  const auto p = build(g, gs::SectionChoice::LexMin, {}, gs::Execution::Parallel);
  EXPECT_EQ(s.matrix, p.matrix);
  const auto rs = gs::imax_exhaustive(s, gs::kDefaultPairCap, gs::Execution::Serial);
  const auto rp = gs::imax_exhaustive(s, gs::kDefaultPairCap, gs::Execution::Parallel);
  EXPECT_EQ(rs.imax_measured, rp.imax_measured);
  EXPECT_EQ(rs.argmax_i, rp.argmax_i);
  EXPECT_EQ(rs.argmax_j, rp.argmax_j);
}

TEST(Evaluate, Q3AttainsTheClosedForm) {
  const auto cb = build(group(3, 2, 1));
  const auto r = gs::imax_exhaustive(cb);
  EXPECT_EQ(r.n, 162);
  EXPECT_EQ(r.k, 54);
  EXPECT_NEAR(r.imax_measured, 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.imax_formula, 1.0 / 3.0, 1e-15);
  EXPECT_GE(r.imax_measured, r.welch - 1e-12);
  EXPECT_NEAR(r.ratio, r.imax_measured / r.welch, 1e-12);
}

TEST(Evaluate, Q4MeasuresTwoSevenths) {
  // Frozen from an independent exhaustive scan; the closed form gives 1/7.
  const auto cb = build(group(2, 2, 2));
  const auto r = gs::imax_exhaustive(cb);
  EXPECT_EQ(r.n, 768);
  EXPECT_EQ(r.k, 192);
  EXPECT_NEAR(r.imax_measured, 2.0 / 7.0, 1e-9);
  EXPECT_NEAR(r.imax_formula, 1.0 / 7.0, 1e-15);
  EXPECT_GE(r.imax_measured, r.welch - 1e-12);
}

TEST(Evaluate, SectionAndPsi0Independence) {
  const auto g = group(3, 2, 1);
  const auto base = build(g);
  const auto other = build(g, gs::SectionChoice::LexMax);
  EXPECT_NE(base.matrix, other.matrix);
  const auto rb = gs::imax_exhaustive(base);
  const auto ro = gs::imax_exhaustive(other);
  EXPECT_EQ(rb.n, ro.n);
  EXPECT_EQ(rb.k, ro.k);
  EXPECT_NEAR(rb.imax_measured, ro.imax_measured, 1e-12);
  const auto shifted = build(g, gs::SectionChoice::LexMin, {1});
  EXPECT_NE(base.matrix, shifted.matrix);
  EXPECT_NEAR(gs::imax_exhaustive(shifted).imax_measured, rb.imax_measured, 1e-12);
}

TEST(Evaluate, BasisAloneIsOrthogonal) {
  gs::Codebook cb;
  cb.params.group = group(3, 2, 1);
  cb.n_rows = cb.length = 4;
  cb.matrix = {4, 4, std::vector<std::complex<double>>(16, 0.0)};
  for (int i = 0; i < 4; ++i) cb.matrix.entries[static_cast<std::size_t>(5 * i)] = 1.0;
  const auto r = gs::imax_exhaustive(cb);
  EXPECT_EQ(r.imax_measured, 0.0);
  EXPECT_EQ(r.welch, 0.0);
}

TEST(Evaluate, NonUnitTargets) {
  const auto g = group(3, 2, 1);
  gs::CodebookParams params;
  params.group = g;
  params.a = g->ring().zero();
  EXPECT_THROW((void)gs::build_codebook(params), gs::Error);
  params.allow_nonunit_a = true;
  const auto zero = gs::build_codebook(params);
  EXPECT_FALSE(zero.warnings.empty());
  const auto r0 = gs::imax_exhaustive(zero);
  EXPECT_NEAR(r0.imax_measured, 1.0, 1e-9);
  EXPECT_GT(r0.imax_measured, gs::imax_formula(3, 2, 3));
  params.a = g->ring().from_integer(3);
  const auto r3 = gs::imax_exhaustive(gs::build_codebook(params));
  EXPECT_NEAR(r3.imax_measured, 1.0, 1e-9);
  EXPECT_NEAR(r3.imax_formula, gs::imax_remark(3, 2, 3, gs::RemarkCase::NonzeroIdeal), 1e-15);
}

TEST(Evaluate, Caps) {
  const auto g = group(3, 2, 1);
  gs::CodebookParams params;
  params.group = g;
  params.entry_cap = 1000;
  try {
    (void)gs::build_codebook(params);
    FAIL() << "expected TooLarge";
  } catch (const gs::Error& e) {
    EXPECT_EQ(e.kind(), gs::ErrorKind::TooLarge);
  }
  const auto cb = build(g);
  EXPECT_THROW((void)gs::imax_exhaustive(cb, 1000), gs::Error);
  params.group = group(3, 1, 1);
  params.entry_cap = gs::kDefaultEntryCap;
  EXPECT_THROW((void)gs::build_codebook(params), gs::Error);
}

TEST(CrossCorrelation, QuotientTupleLaw) {
  for (const auto& g : {group(3, 2, 1), group(2, 2, 2)}) {
    const auto cb = build(g);
    const auto& r = g->ring();
    const int m = cb.params.m;
    const std::int64_t f_rows = cb.n_rows - cb.length;
    // Rows to pair with: all of them on Z_9, a sample on GR(4,16).
    const std::int64_t stride = r.q() == 3 ? 1 : 11;
    std::vector<std::vector<gs::MultCharacter>> chars;
    for (std::int64_t i = 0; i < f_rows; ++i) chars.push_back(row_characters(cb, i));
    std::set<long long> allowed{0};
    std::vector<std::tuple<std::int64_t, std::int64_t, double>> measured;
    int exact = 0;
    for (std::int64_t i = 0; i < f_rows; i += stride) {
      for (std::int64_t j = i + 1; j < f_rows; ++j) {
        std::vector<gs::MultCharacter> quotient;
        bool same_tail = false;
        for (int l = 0; l < m; ++l) {
          quotient.push_back(chars[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                             chars[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)].inverse());
          if (l >= cb.params.k && quotient.back().is_trivial() &&
              !chars[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)].is_trivial()) {
            same_tail = true;
          }
        }
        std::complex<double> ip = 0.0;
        const auto a = cb.matrix.row(i);
        const auto b = cb.matrix.row(j);
        for (std::int64_t t = 0; t < cb.length; ++t) ip += a[static_cast<std::size_t>(t)] * std::conj(b[static_cast<std::size_t>(t)]);
        const double scale = std::sqrt(static_cast<double>(cb.support[static_cast<std::size_t>(i)]) *
                                       static_cast<double>(cb.support[static_cast<std::size_t>(j)]));
        const auto c = gs::tilde_jacobi_classify(quotient, cb.params.k, r.one());
        const double predicted = c.expected.magnitude.magnitude(r.q());
        allowed.insert(std::llround(predicted * 1e6));
        measured.emplace_back(i, j, std::abs(ip) * scale);
        // Where the extensions multiply, the identity is exact.
        if (!same_tail) {
          const auto tilde = gs::tilde_jacobi_brute(quotient, cb.params.k, r.one()).value;
          ASSERT_NEAR(std::abs(ip * scale - tilde), 0.0, 1e-6) << r.describe() << " rows " << i << ", " << j;
          ++exact;
        }
      }
    }
    EXPECT_GT(exact, 0);
    for (const auto& [i, j, v] : measured) {
      const auto key = std::llround(v * 1e6);
      EXPECT_TRUE(allowed.count(key) || allowed.count(key - 1) || allowed.count(key + 1))
          << r.describe() << " rows " << i << ", " << j << " magnitude " << v;
    }
  }
}

TEST(Csv, BasisLines) {
  gs::CodebookMatrix e2{2, 2, {1.0, 0.0, 0.0, 1.0}};
  std::ostringstream out;
  gs::export_csv(e2, out);
  EXPECT_EQ(out.str(), "1,0,0,0\n0,0,1,0\n");
}

TEST(Csv, RoundTripIsIdempotent) {
  const auto cb = build(group(3, 2, 1));
  std::ostringstream first;
  gs::export_csv(cb.matrix, first);
  std::istringstream in(first.str());
  const auto back = gs::import_csv(in);
  EXPECT_EQ(back, cb.matrix);
  std::ostringstream second;
  gs::export_csv(back, second);
  EXPECT_EQ(first.str(), second.str());
  std::istringstream bad("1,0,2\n");
  EXPECT_THROW((void)gs::import_csv(bad), gs::Error);
}
