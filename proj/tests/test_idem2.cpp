// Copyright 2026 The idemfact authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "idemfact/idem2.hpp"
#include "oracles.hpp"

using namespace idemfact;
using testutil::product_of;
using testutil::zmat;

namespace {

template <class R>
Matrix<R> row_target(const R& ring, const typename R::Elem& a, const typename R::Elem& b) {
  Matrix<R> m(ring, 2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  return m;
}

template <class R>
void check_all_idempotent(const std::vector<Matrix<R>>& fs) {
  for (const auto& f : fs) REQUIRE(is_idempotent(f));
}

std::vector<mpz_class> zseq(const std::vector<long>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("rank-one factor table") {
  IntegerRing z;
  SplitMix64 g(101);
  for (int t = 0; t < 60; ++t) {
    mpz_class p = draw_element(z, g, 9);
    mpz_class q = draw_element(z, g, 9);
    mpz_class u = g.next() % 2 ? 1 : -1;

    struct CaseParams {
      Rank1Case tag;
      std::vector<mpz_class> params;
    };
    const std::vector<CaseParams> cases = {
        {Rank1Case::a, {p}},        {Rank1Case::a_prime, {p}},
        {Rank1Case::b, {p, q}},     {Rank1Case::b_prime, {p, q}},
        {Rank1Case::c, {p, q}},     {Rank1Case::c_prime, {p, q}},
        {Rank1Case::d, {p, u}},     {Rank1Case::e, {u, q}},
    };
    auto target_for = [&](const CaseParams& cs) {
      Matrix<IntegerRing> m(z, 2, 2);
      const auto& ps = cs.params;
      switch (cs.tag) {
        case Rank1Case::a: m(0, 0) = ps[0]; break;
        case Rank1Case::a_prime: m(1, 0) = ps[0]; break;
        case Rank1Case::b: m(0, 0) = ps[0]; m(0, 1) = ps[0] * ps[1]; break;
        case Rank1Case::b_prime: m(0, 0) = ps[0]; m(1, 0) = ps[1] * ps[0]; break;
        case Rank1Case::c: m(0, 0) = ps[0] * ps[1]; m(0, 1) = ps[0]; break;
        case Rank1Case::c_prime: m(0, 0) = ps[1] * ps[0]; m(1, 0) = ps[0]; break;
        case Rank1Case::d: m(0, 0) = ps[0]; m(0, 1) = ps[1]; break;
        case Rank1Case::e: m(0, 0) = ps[0]; m(0, 1) = ps[1]; break;
      }
      return m;
    };
    for (const auto& cs : cases) {
      auto fs = table_factor_2x2(z, cs.tag, cs.params);
      check_all_idempotent(fs);
      REQUIRE(product_of(z, 2, fs) == target_for(cs));
    }
  }

  REQUIRE_THROWS_AS(table_factor_2x2(z, Rank1Case::a, zseq({1, 2})), Error);
  REQUIRE_THROWS_AS(table_factor_2x2(z, Rank1Case::b, zseq({1})), Error);
  // d requires a unit second parameter, e a unit first parameter
  REQUIRE_THROWS_AS(table_factor_2x2(z, Rank1Case::d, zseq({3, 2})), Error);
  REQUIRE_THROWS_AS(table_factor_2x2(z, Rank1Case::e, zseq({2, 3})), Error);
}

TEST_CASE("bezout quadruples") {
  IntegerRing z;
  auto q = make_quad<IntegerRing>(z, 2, 3, -1, 1);
  auto e = idempotent_from_bezout(z, q);
  REQUIRE(is_idempotent(e));
  REQUIRE(e == zmat({{-2, 2}, {-3, 3}}));
  REQUIRE_THROWS_AS(make_quad<IntegerRing>(z, 2, 3, 1, 1), Error);
}

TEST_CASE("quotient sequence to chain pins") {
  IntegerRing z;
  auto ch = rseq_to_chain(z, zseq({-1, 2, 2}));
  REQUIRE(ch.size() == 2);
  REQUIRE(ch[0] == make_quad<IntegerRing>(z, 1, 0, 1, 1));
  REQUIRE(ch[1] == make_quad<IntegerRing>(z, -1, 2, 5, 3));

  auto ch2 = rseq_to_chain(z, zseq({-7}));
  REQUIRE(ch2.size() == 1);
  REQUIRE(ch2[0] == make_quad<IntegerRing>(z, 1, 0, 1, 7));

  REQUIRE_THROWS_AS(rseq_to_chain(z, zseq({1, 2})), Error);
  REQUIRE_THROWS_AS(rseq_to_chain(z, zseq({})), Error);
}

TEST_CASE("chain to quotient sequence pins") {
  IntegerRing z;
  std::vector<BezoutQuad<IntegerRing>> unit_chain = {
      make_quad<IntegerRing>(z, 1, 0, 1, 0)};
  REQUIRE(chain_to_rseq(z, unit_chain) == zseq({0}));

  std::vector<BezoutQuad<IntegerRing>> bad = {
      make_quad<IntegerRing>(z, -1, 0, -1, 0)};
  REQUIRE_THROWS_AS(chain_to_rseq(z, bad), Error);
}

TEST_CASE("round trip between quotient sequences and chains") {
  IntegerRing z;
  SplitMix64 g(111);
  for (int t = 0; t < 80; ++t) {
    const int len = 2 * int(g.next() % 5) + 1;  // odd, up to 9
    std::vector<mpz_class> rs;
    for (int k = 0; k < len; ++k) rs.push_back(draw_element(z, g, 9));
    auto chain = rseq_to_chain(z, rs);
    REQUIRE(chain_to_rseq(z, chain) == rs);
    check_all_idempotent(chain_to_idempotents(z, chain));
  }
}

TEST_CASE("chain normalization") {
  IntegerRing z;
  SplitMix64 g(121);
  for (int t = 0; t < 60; ++t) {
    const int len = 2 * int(g.next() % 4) + 1;
    std::vector<mpz_class> rs;
    for (int k = 0; k < len; ++k) rs.push_back(draw_element(z, g, 9));
    auto chain = rseq_to_chain(z, rs);
    auto target = product_of(z, 2, chain_to_idempotents(z, chain));
    const mpz_class a = target(0, 0), b = target(0, 1);
    if (!(ext_gcd(z, a, b).g == 1)) continue;

    // unit-twist interior quads; per-factor matrices stay fixed
    auto twisted = chain;
    for (auto& qd : twisted) {
      if (g.next() % 2) {
        qd.a = -qd.a;
        qd.b = -qd.b;
        qd.c = -qd.c;
        qd.d = -qd.d;
      }
    }
    auto renorm = normalize_chain(z, twisted, a, b);
    REQUIRE(detail::chain_is_normalized(z, renorm));
    REQUIRE(renorm.size() == chain.size());
    for (std::size_t i = 0; i < renorm.size(); ++i) {
      REQUIRE(idempotent_from_bezout(z, renorm[i]) ==
              idempotent_from_bezout(z, twisted[i]));
    }
    // applying it again is a no-op
    REQUIRE(normalize_chain(z, renorm, a, b) == renorm);
  }
}

TEST_CASE("euclid quotient sequences") {
  IntegerRing z;
  REQUIRE(euclid_rseq<IntegerRing>(z, 5, 3) == zseq({-1, 2, 2}));
  REQUIRE(euclid_rseq<IntegerRing>(z, 3, 5) == zseq({-2, 3, 0, -1, 1}));
  REQUIRE(euclid_rseq<IntegerRing>(z, 1, 0) == zseq({0}));
  REQUIRE_THROWS_AS(euclid_rseq<IntegerRing>(z, 2, 4), Error);
  REQUIRE_THROWS_AS(euclid_rseq<IntegerRing>(z, 0, 0), Error);
}

TEST_CASE("coprime rows factor through the full pipeline") {
  auto run = [&](const auto& ring, std::uint64_t seed, int iters) {
    using R = std::decay_t<decltype(ring)>;
    SplitMix64 g(seed);
    for (int t = 0; t < iters; ++t) {
      auto a = draw_element(ring, g, 9);
      auto b = draw_element(ring, g, 9);
      if (ring.is_zero(a) && ring.is_zero(b)) continue;
      if (!(ext_gcd(ring, a, b).g == ring.one())) continue;
      auto rs = euclid_rseq(ring, a, b);
      REQUIRE(rs.size() % 2 == 1);
      auto chain = rseq_to_chain(ring, rs);
      auto fs = chain_to_idempotents(ring, chain);
      for (const auto& f : fs) REQUIRE(is_idempotent(f));
      REQUIRE(product_of(ring, 2, fs) == row_target<R>(ring, a, b));
    }
  };
  run(IntegerRing{}, 131, 120);
  run(PolyModRing{5}, 132, 80);
  run(GaussianRing{}, 133, 80);
}

TEST_CASE("unit shift factorization") {
  auto run = [&](const auto& ring, std::uint64_t seed, int iters) {
    using R = std::decay_t<decltype(ring)>;
    SplitMix64 g(seed);
    for (int t = 0; t < iters; ++t) {
      auto b = draw_element(ring, g, 9);
      auto x = draw_element(ring, g, 9);
      auto u = testutil::random_unit(ring, g);
      auto a = ring.sub(u, ring.mul(b, x));
      auto res = factor_unit_shift(ring, a, b, x);
      for (const auto& f : res.factors) REQUIRE(is_idempotent(f));
      REQUIRE(product_of(ring, 2, res.factors) == row_target<R>(ring, a, b));

      Matrix<R> left(ring, 2, 2);
      left(0, 0) = a;
      left(0, 1) = b;
      left(1, 0) = ring.neg(x);
      left(1, 1) = ring.one();
      Matrix<R> diag_u(ring, 2, 2);
      diag_u(0, 0) = u;
      diag_u(1, 1) = ring.one();
      REQUIRE(mat_mul(left, res.completion) == diag_u);
    }
  };
  run(IntegerRing{}, 141, 100);
  run(PolyModRing{5}, 142, 60);
  run(GaussianRing{}, 143, 60);

  IntegerRing z;
  REQUIRE_THROWS_AS(factor_unit_shift<IntegerRing>(z, 2, 2, 1), Error);
}

TEST_CASE("2x2 singular factorization pins") {
  auto fs = factor_singular_2x2(zmat({{5, 3}, {0, 0}}));
  REQUIRE(fs.size() == 2);
  REQUIRE(fs[0] == zmat({{1, 1}, {0, 0}}));
  REQUIRE(fs[1] == zmat({{-5, -3}, {10, 6}}));

  IntegerRing z;
  auto fz = factor_singular_2x2(Matrix<IntegerRing>(z, 2, 2));
  REQUIRE(fz.size() == 1);
  REQUIRE(fz[0].is_zero());

  auto fe = factor_singular_2x2(zmat({{2, -2}, {1, -1}}));
  REQUIRE(fe.size() == 1);

  auto fc = factor_singular_2x2(zmat({{2, 4}, {1, 2}}));
  for (const auto& f : fc) REQUIRE(is_idempotent(f));
  REQUIRE(product_of(z, 2, fc) == zmat({{2, 4}, {1, 2}}));

  REQUIRE_THROWS_AS(factor_singular_2x2(zmat({{1, 2}, {3, 4}})), Error);
}

TEST_CASE("2x2 singular factorization on random inputs") {
  auto run = [&](const auto& ring, std::uint64_t seed, int iters) {
    SplitMix64 g(seed);
    for (int t = 0; t < iters; ++t) {
      auto m = gen_singular(ring, 2, g.next(), 9);
      auto fs = factor_singular_2x2(m);
      for (const auto& f : fs) REQUIRE(is_idempotent(f));
      REQUIRE(product_of(ring, 2, fs) == m);
    }
  };
  run(IntegerRing{}, 151, 120);
  run(RationalRing{}, 152, 60);
  run(GaussianRing{}, 153, 60);
  run(PolyModRing{5}, 154, 60);
}

TEST_CASE("2x2 rejection is exact") {
  IntegerRing z;
  SplitMix64 g(161);
  for (int t = 0; t < 60; ++t) {
    auto m = testutil::random_invertible(z, g, 2, 5, 3);
    REQUIRE_THROWS_AS(factor_singular_2x2(m), Error);
  }
}
