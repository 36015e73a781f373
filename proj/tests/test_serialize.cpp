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

#include "galois_sums/codebook.hpp"
#include "galois_sums/errors.hpp"
#include "galois_sums/serialize.hpp"
#include "galois_sums/sums.hpp"

namespace gs = galois_sums;

namespace {

std::shared_ptr<const gs::CharacterGroup> group(std::int64_t p, std::int64_t n, std::int64_t s) {
  return gs::CharacterGroup::create(gs::GaloisRing::create({p, n, s}));
}

}  // namespace

TEST(Json, Ring) {
  const auto r = gs::GaloisRing::create({2, 2, 2});
  const auto j = gs::ring_to_json(*r);
  EXPECT_EQ(j.at("p"), 2);
  EXPECT_EQ(j.at("size"), 16);
  EXPECT_EQ(j.at("units"), 12);
  EXPECT_EQ(j.at("modulus"), gs::Json::array({1, 1, 1}));
}

TEST(Json, ElementRoundTrip) {
  const auto r = gs::GaloisRing::create({2, 2, 2});
  for (std::int64_t i = 0; i < r->size(); ++i) {
    const auto x = r->element(i);
    EXPECT_EQ(gs::element_from_json(*r, gs::element_to_json(x)), x);
  }
  EXPECT_THROW((void)gs::element_from_json(*r, gs::Json(3)), gs::Error);
  EXPECT_THROW((void)gs::element_from_json(*r, gs::Json::array({1, 2, 3})), gs::Error);
}

TEST(Json, CharacterTableAndSections) {
  const auto g = group(3, 2, 1);
  const auto j = gs::character_table_json(*g);
  EXPECT_EQ(j.at("characters").size(), 6u);
  EXPECT_EQ(j.at("basis").size(), 2u);
  EXPECT_EQ(j.at("basis")[1].at("order"), 3);
  const auto s = gs::sections_json(g, gs::SectionChoice::LexMin);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].at("exponents"), gs::Json::array({0, 0}));
}

TEST(Json, SumResultSchema) {
  const auto g = group(3, 2, 1);
  const auto v = gs::jacobi_evaluate({g->trivial(), g->trivial()}, g->ring().one());
  const auto j = gs::sum_to_json(v);
  ASSERT_TRUE(j.at("value").is_array());
  EXPECT_NEAR(j.at("value")[0].get<double>(), 3.0, 1e-9);
  EXPECT_EQ(j.at("expected").at("kind"), "integer");
  EXPECT_EQ(j.at("expected").at("integer"), 3);
  EXPECT_EQ(j.at("lemma"), "unit-solution-count");
  EXPECT_EQ(j.at("terms"), 6);
  // Output parses back as JSON.
  EXPECT_EQ(gs::Json::parse(j.dump()), j);
}

TEST(Json, ReportAndTable2) {
  gs::EvalReport r;
  r.n = 162;
  r.k = 54;
  r.argmax_i = 3;
  r.argmax_j = 9;
  const auto j = gs::report_to_json(r);
  EXPECT_EQ(j.at("N"), 162);
  EXPECT_EQ(j.at("argmax"), gs::Json::array({3, 9}));
  const auto t = gs::table2_to_json(gs::table2(gs::table2_default_qs()));
  ASSERT_EQ(t.size(), 8u);
  EXPECT_EQ(t[0].at("K"), 13310);
}

TEST(Json, CodebookMetadataAndRoundTrip) {
  gs::CodebookParams params;
  params.group = group(3, 2, 1);
  params.section = gs::SectionChoice::LexMax;
  const auto cb = gs::build_codebook(params);
  const auto j = gs::codebook_to_json(cb);
  EXPECT_EQ(j.at("params").at("section"), "lex-max");
  EXPECT_EQ(j.at("params").at("ring").at("modulus"), gs::Json::array({1, 1}));
  EXPECT_EQ(j.at("N"), 162);
  EXPECT_EQ(gs::matrix_from_json(gs::Json::parse(j.dump())), cb.matrix);
  EXPECT_THROW((void)gs::matrix_from_json(gs::Json{{"rows", {{1.0, 0.0, 2.0}}}}), gs::Error);
}
