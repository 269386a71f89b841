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

#include "idemfact/matrix.hpp"
#include "oracles.hpp"

using namespace idemfact;
using testutil::det_cofactor;
using testutil::zmat;

namespace {

template <class R>
void check_det_against_cofactor(const R& ring, std::uint64_t seed, int iters) {
  SplitMix64 g(seed);
  for (int t = 0; t < iters; ++t) {
    const int n = int(g.next() % 4) + 1;
    auto m = draw_matrix(ring, g, n, n, 5);
    REQUIRE(det_bareiss(m) == det_cofactor(m));
  }
}

}  // namespace

TEST_CASE("matrix multiplication") {
  auto a = zmat({{1, 1}, {0, 0}});
  auto b = zmat({{-5, -3}, {10, 6}});
  REQUIRE(mat_mul(a, b) == zmat({{5, 3}, {0, 0}}));

  IntegerRing z;
  SplitMix64 g(21);
  auto r = draw_matrix(z, g, 3, 3, 9);
  REQUIRE(mat_mul(Matrix<IntegerRing>::identity(z, 3), r) == r);

  auto zero = Matrix<IntegerRing>(z, 2, 2);
  REQUIRE(mat_mul(zero, b).is_zero());

  REQUIRE_THROWS_AS(mat_mul(a, draw_matrix(z, g, 3, 2, 4)), Error);
  Matrix<PolyModRing> p(PolyModRing{5}, 2, 2);
  // different rings cannot be multiplied even with compatible shapes
  REQUIRE_THROWS_AS(mat_mul(p, Matrix<PolyModRing>(PolyModRing{7}, 2, 2)), Error);
}

TEST_CASE("matrix add, sub, transpose, block") {
  auto a = zmat({{1, 2}, {3, 4}});
  auto b = zmat({{5, 6}, {7, 8}});
  REQUIRE(mat_add(a, b) == zmat({{6, 8}, {10, 12}}));
  REQUIRE(mat_sub(b, a) == zmat({{4, 4}, {4, 4}}));
  REQUIRE(a.transposed() == zmat({{1, 3}, {2, 4}}));
  auto c = zmat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  REQUIRE(c.block(1, 1, 2, 2) == zmat({{5, 6}, {8, 9}}));
  REQUIRE_THROWS_AS(c.block(2, 2, 2, 2), Error);
}

TEST_CASE("bareiss determinant pins") {
  REQUIRE(det_bareiss(zmat({{1, 2}, {3, 4}})) == -2);
  REQUIRE(det_bareiss(zmat({{2, 4}, {1, 2}})) == 0);
  IntegerRing z;
  REQUIRE(det_bareiss(Matrix<IntegerRing>::identity(z, 4)) == 1);
  REQUIRE_THROWS_AS(det_bareiss(Matrix<IntegerRing>(z, 2, 3)), Error);
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
  check_det_against_cofactor(IntegerRing{}, 31, 120);
  check_det_against_cofactor(RationalRing{}, 32, 60);
  check_det_against_cofactor(GaussianRing{}, 33, 60);
  check_det_against_cofactor(PolyModRing{5}, 34, 60);
}

TEST_CASE("idempotency test") {
  REQUIRE(is_idempotent(zmat({{2, -2}, {1, -1}})));
  REQUIRE(!is_idempotent(zmat({{0, 0}, {1, 0}})));
  IntegerRing z;
  REQUIRE(is_idempotent(Matrix<IntegerRing>(z, 3, 3)));
  REQUIRE(is_idempotent(Matrix<IntegerRing>::identity(z, 3)));
  REQUIRE_THROWS_AS(is_idempotent(Matrix<IntegerRing>(z, 2, 3)), Error);
}

TEST_CASE("exact inverse") {
  IntegerRing z;
  SplitMix64 g(41);
  for (int t = 0; t < 50; ++t) {
    const int n = int(g.next() % 3) + 2;
    auto p = testutil::random_invertible(z, g, n, 6, 3);
    auto q = exact_inverse(p);
    REQUIRE(mat_mul(p, q) == Matrix<IntegerRing>::identity(z, n));
    REQUIRE(mat_mul(q, p) == Matrix<IntegerRing>::identity(z, n));
  }
  // non-unit determinant has no inverse over Z
  REQUIRE_THROWS_AS(exact_inverse(zmat({{2, 0}, {0, 1}})), Error);
  REQUIRE_THROWS_AS(exact_inverse(zmat({{2, 4}, {1, 2}})), Error);

  // over the rationals any nonzero determinant works
  RationalRing qr;
  Matrix<RationalRing> m(qr, 2, 2);
  m(0, 0) = mpq_class(2);
  m(1, 1) = mpq_class(1, 3);
  auto mi = exact_inverse(m);
  REQUIRE(mat_mul(m, mi) == Matrix<RationalRing>::identity(qr, 2));
}

TEST_CASE("fraction lift keeps entries reduced") {
  auto a = zmat({{2, -6}, {0, 4}});
  auto f = to_fractions(a);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      REQUIRE(f(i, j).den == 1);
      REQUIRE(f(i, j).num == a(i, j));
    }
  }
}
