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

#include <random>

#include "galois_sums/errors.hpp"
#include "galois_sums/ring.hpp"

namespace gs = galois_sums;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Schoolbook product in Z_m[x] reduced by the monic h; the oracle for mul().
std::vector<std::int64_t> poly_mulmod(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                      const std::vector<std::int64_t>& h, std::int64_t m) {
  const std::size_t s = h.size() - 1;
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], m);
  }
  for (std::size_t d = prod.size(); d-- > s;) {
    const std::int64_t c = prod[d];
    for (std::size_t i = 0; i <= s; ++i) prod[d - s + i] = mod(prod[d - s + i] - c * h[i], m);
  }
  prod.resize(s);
  return prod;
}

std::shared_ptr<const gs::GaloisRing> ring(std::int64_t p, std::int64_t n, std::int64_t s) {
  return gs::GaloisRing::create({p, n, s});
}

const std::vector<gs::RingParams> kRings{{2, 2, 1}, {2, 3, 1}, {3, 2, 1}, {3, 3, 1}, {2, 2, 2},
                                         {2, 3, 2}, {3, 2, 2}, {2, 1, 3}, {5, 2, 1}};

}  // namespace

TEST(Modulus, SmallCases) {
  EXPECT_EQ(gs::find_basic_primitive_poly(2, 2, 2).coeffs, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(gs::find_basic_primitive_poly(3, 2, 1).coeffs, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(gs::find_basic_primitive_poly(2, 1, 3).coeffs, (std::vector<std::int64_t>{1, 1, 0, 1}));
}

TEST(Modulus, DividesXToTheQMinusOneMinusOne) {
  for (const auto& params : kRings) {
    const auto r = gs::GaloisRing::create(params);
    const auto& h = r->modulus().coeffs;
    // x^{q-1} mod h by repeated multiplication must be 1.
    std::vector<std::int64_t> acc(h.size() - 1, 0);
    acc[0] = 1;
    std::vector<std::int64_t> x(h.size() - 1, 0);
    if (x.size() > 1) {
      x[1] = 1;
    } else {
      x[0] = mod(-h[0], r->char_modulus());
    }
    for (std::int64_t i = 0; i < r->q() - 1; ++i) acc = poly_mulmod(acc, x, h, r->char_modulus());
    std::vector<std::int64_t> one(h.size() - 1, 0);
    one[0] = 1;
    EXPECT_EQ(acc, one) << r->describe();
  }
}

TEST(Construction, RejectsBadParameters) {
  try {
    (void)ring(4, 2, 1);
    FAIL() << "expected an error";
  } catch (const gs::Error& e) {
    EXPECT_EQ(e.kind(), gs::ErrorKind::InvalidParams);
    EXPECT_STREQ(e.what(), "p must be prime");
  }
  EXPECT_THROW((void)ring(3, 0, 1), gs::Error);
  EXPECT_THROW((void)ring(3, 2, 0), gs::Error);
  try {
    (void)gs::GaloisRing::create({3, 12, 2}, std::nullopt, 1000);
    FAIL() << "expected a size error";
  } catch (const gs::Error& e) {
    EXPECT_TRUE(gs::is_resource_error(e.kind()));
  }
}

TEST(Construction, RejectsNonPrimitiveModulus) {
  // x^2 + 1 is irreducible over F_3 but x has order 4, not 8.
  EXPECT_THROW((void)gs::GaloisRing::create({3, 1, 2}, gs::Polynomial{{1, 0, 1}, 3}), gs::Error);
}

TEST(Construction, TeichmullerSetOfZ9) {
  const auto r = ring(3, 2, 1);
  // Oracle: solve t^3 = t by exhaustion.
  std::vector<std::int64_t> expected;
  for (std::int64_t t = 0; t < 9; ++t) {
    if ((t * t * t) % 9 == t) expected.push_back(t);
  }
  std::vector<std::int64_t> got;
  for (const auto& t : r->teichmuller_set()) got.push_back(t.coords[0]);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got, (std::vector<std::int64_t>{0, 1, 8}));
}

TEST(Construction, Sizes) {
  const auto r = ring(2, 2, 2);
  EXPECT_EQ(r->size(), 16);
  EXPECT_EQ(r->unit_count(), 12);
  const auto f = ring(2, 1, 2);
  EXPECT_EQ(f->size(), 4);
  EXPECT_EQ(f->unit_count(), 3);
  for (const auto& params : kRings) {
    const auto g = gs::GaloisRing::create(params);
    EXPECT_EQ(static_cast<std::int64_t>(g->units().size()), g->size() - g->size() / g->q());
    // |p^k R| = q^{n-k}
    for (std::int64_t k = 0; k <= g->n(); ++k) {
      std::int64_t count = 0;
      for (std::int64_t i = 0; i < g->size(); ++i) {
        if (g->valuation(g->element(i)).k >= k) ++count;
      }
      std::int64_t expect = 1;
      for (std::int64_t j = 0; j < g->n() - k; ++j) expect *= g->q();
      EXPECT_EQ(count, expect) << g->describe() << " k=" << k;
    }
  }
}

TEST(Construction, TeichmullerInvariants) {
  for (const auto& params : kRings) {
    const auto g = gs::GaloisRing::create(params);
    EXPECT_EQ(static_cast<std::int64_t>(g->teichmuller_set().size()), g->q());
    for (const auto& t : g->teichmuller_set()) EXPECT_EQ(g->pow(t, g->q()), t);
    // xi has order exactly q - 1.
    for (std::int64_t e = 1; e < g->q() - 1; ++e) EXPECT_NE(g->pow(g->xi(), e), g->one());
    EXPECT_EQ(g->pow(g->xi(), g->q() - 1), g->one());
  }
}

TEST(Arithmetic, Examples) {
  const auto z9 = ring(3, 2, 1);
  EXPECT_EQ(z9->inv(z9->from_integer(2)), z9->from_integer(5));
  const auto gr = ring(2, 2, 2);
  const gs::RingElement xi{{0, 1}};
  EXPECT_EQ(gr->mul(xi, xi), (gs::RingElement{{3, 3}}));
  EXPECT_THROW((void)z9->inv(z9->from_integer(3)), gs::Error);
}

TEST(Arithmetic, MatchesPolynomialOracle) {
  std::mt19937_64 rng(7);
  for (const auto& params : kRings) {
    const auto g = gs::GaloisRing::create(params);
    std::uniform_int_distribution<std::int64_t> pick(0, g->size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const auto x = g->element(pick(rng));
      const auto y = g->element(pick(rng));
      EXPECT_EQ(g->mul(x, y).coords, poly_mulmod(x.coords, y.coords, g->modulus().coeffs, g->char_modulus()));
      EXPECT_EQ(g->add(x, g->neg(x)), g->zero());
      EXPECT_EQ(g->sub(g->add(x, y), y), x);
      EXPECT_EQ(g->index_of(g->mul(x, y)), g->mul_index(g->index_of(x), g->index_of(y)));
      EXPECT_EQ(g->index_of(g->add(x, y)), g->add_index(g->index_of(x), g->index_of(y)));
      if (g->is_unit(x)) EXPECT_EQ(g->mul(x, g->inv(x)), g->one());
    }
  }
}

TEST(Arithmetic, IndexIsLexicographic) {
  const auto g = ring(2, 2, 2);
  EXPECT_EQ(g->element(0), g->zero());
  EXPECT_EQ(g->element(1), (gs::RingElement{{0, 1}}));
  EXPECT_EQ(g->element(4), (gs::RingElement{{1, 0}}));
  for (std::int64_t i = 0; i < g->size(); ++i) EXPECT_EQ(g->index_of(g->element(i)), i);
}

TEST(Teichmuller, Decomposition) {
  const auto z9 = ring(3, 2, 1);
  const auto digits = z9->teichmuller_decompose(z9->from_integer(5));
  ASSERT_EQ(digits.size(), 2u);
  EXPECT_EQ(digits[0].coords[0], 8);
  EXPECT_EQ(digits[1].coords[0], 8);
  // Oracle: the only pair in T^2 with t0 + 3 t1 = 5.
  int hits = 0;
  for (std::int64_t t0 : {0, 1, 8}) {
    for (std::int64_t t1 : {0, 1, 8}) {
      if ((t0 + 3 * t1) % 9 == 5) ++hits;
    }
  }
  EXPECT_EQ(hits, 1);
  for (const auto& params : kRings) {
    const auto g = gs::GaloisRing::create(params);
    const auto zero_digits = g->teichmuller_decompose(g->zero());
    for (const auto& d : zero_digits) EXPECT_EQ(d, g->zero());
    const auto xi_digits = g->teichmuller_decompose(g->xi());
    EXPECT_EQ(xi_digits[0], g->xi());
    for (std::size_t i = 1; i < xi_digits.size(); ++i) EXPECT_EQ(xi_digits[i], g->zero());
    for (std::int64_t i = 0; i < g->size(); ++i) {
      const auto x = g->element(i);
      EXPECT_EQ(g->teichmuller_compose(g->teichmuller_decompose(x)), x);
    }
  }
}

TEST(Valuation, Examples) {
  const auto z9 = ring(3, 2, 1);
  const auto v = z9->valuation(z9->from_integer(6));
  EXPECT_EQ(v.k, 1);
  EXPECT_EQ(v.unit.coords, (std::vector<std::int64_t>{2}));
  EXPECT_TRUE(z9->is_unit(z9->from_integer(5)));
  const auto gr = ring(2, 2, 2);
  const auto w = gr->valuation(gs::RingElement{{0, 2}});
  EXPECT_EQ(w.k, 1);
  EXPECT_EQ(w.unit.coords, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(z9->valuation(z9->zero()).k, 2);
}

TEST(Frobenius, Examples) {
  const auto gr = ring(2, 2, 2);
  EXPECT_EQ(gr->frobenius(gr->one()), gr->one());
  EXPECT_EQ(gr->frobenius(gr->xi()), gr->mul(gr->xi(), gr->xi()));
}

TEST(Frobenius, RingAutomorphismOfOrderS) {
  std::mt19937_64 rng(11);
  for (const auto& params : kRings) {
    const auto g = gs::GaloisRing::create(params);
    std::uniform_int_distribution<std::int64_t> pick(0, g->size() - 1);
    const int pairs = params.s > 1 ? 10000 : 200;
    for (int trial = 0; trial < pairs; ++trial) {
      const auto x = g->element(pick(rng));
      const auto y = g->element(pick(rng));
      ASSERT_EQ(g->frobenius(g->mul(x, y)), g->mul(g->frobenius(x), g->frobenius(y)));
      ASSERT_EQ(g->frobenius(g->add(x, y)), g->add(g->frobenius(x), g->frobenius(y)));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = g->element(pick(rng));
      auto y = x;
      for (std::int64_t i = 0; i < g->s(); ++i) y = g->frobenius(y);
      EXPECT_EQ(y, x);
    }
    for (std::int64_t i = 0; i < g->size(); ++i) {
      const auto x = g->element(i);
      EXPECT_EQ(g->trace(g->frobenius(x)), g->trace(x));
    }
  }
}

TEST(Trace, Examples) {
  const auto z9 = ring(3, 2, 1);
  for (std::int64_t v = 0; v < 9; ++v) EXPECT_EQ(z9->trace(z9->from_integer(v)), v);
  const auto gr = ring(2, 2, 2);
  EXPECT_EQ(gr->trace(gr->xi()), 3);
  for (const auto& params : kRings) {
    const auto g = gs::GaloisRing::create(params);
    EXPECT_EQ(g->trace(g->one()), params.s % g->char_modulus());
  }
}

TEST(Reduction, Examples) {
  const auto z9 = ring(3, 2, 1);
  EXPECT_EQ(z9->reduce(z9->from_integer(5), 1).coords, (std::vector<std::int64_t>{2}));
  const auto gr = ring(2, 2, 2);
  EXPECT_EQ(gr->reduce(gs::RingElement{{1, 2}}, 1).coords, (std::vector<std::int64_t>{1, 0}));
  EXPECT_THROW((void)z9->reduced(0), gs::Error);
  EXPECT_THROW((void)z9->reduced(2), gs::Error);
}

TEST(Reduction, HomomorphismCommutingWithTrace) {
  for (const auto& params : kRings) {
    const auto g = gs::GaloisRing::create(params);
    for (std::int64_t k = 1; k < g->n(); ++k) {
      const auto small = g->reduced(k);
      for (std::int64_t i = 0; i < g->size(); ++i) {
        const auto x = g->element(i);
        const auto tx = g->reduce(x, k);
        EXPECT_EQ(small->trace(tx), g->trace(x) % small->char_modulus()) << g->describe();
        const auto y = g->element((i * 7 + 3) % g->size());
        EXPECT_EQ(g->reduce(g->mul(x, y), k), small->mul(tx, g->reduce(y, k)));
        EXPECT_EQ(g->reduce(g->add(x, y), k), small->add(tx, g->reduce(y, k)));
      }
    }
  }
}
