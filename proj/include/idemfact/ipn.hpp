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

// Singular n x n matrices as ordered products of idempotents. A singular
// matrix is conjugated to a bordered form with zero last row; the leading
// block is triangularized (each inverted row operation re-enters the product
// through its idempotent embedding), the first pivot is split off, and the
// rest recurses. A basis change through the canonical form of the last
// recursive factor exposes an identity block whose coupling row is cleared
// by embedded transvections, leaving a smaller singular matrix.

#pragma once

#include <utility>
#include <vector>

#include "idemfact/errors.hpp"
#include "idemfact/ge.hpp"
#include "idemfact/hermite.hpp"
#include "idemfact/idem2.hpp"
#include "idemfact/matrix.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

namespace detail {

template <class R>
bool last_row_zero(const Matrix<R>& m) {
  for (int j = 0; j < m.cols(); ++j) {
    if (!m.ring().is_zero(m(m.rows() - 1, j))) return false;
  }
  return true;
}

// diag(I_offset, inner) with inner square.
template <class R>
Matrix<R> pad_identity(const Matrix<R>& inner, int offset) {
  const R& ring = inner.ring();
  const int n = inner.rows() + offset;
  auto out = Matrix<R>::identity(ring, n);
  for (int i = 0; i < inner.rows(); ++i) {
    for (int j = 0; j < inner.cols(); ++j) out(offset + i, offset + j) = inner(i, j);
  }
  return out;
}

template <class R>
std::vector<Matrix<R>> factor_singular_impl(const Matrix<R>& a, int budget);

// core is n x n (n >= 3) with zero last row and nonsingular leading block.
template <class R>
std::vector<Matrix<R>> reduce_bordered_impl(const Matrix<R>& core, int budget) {
  const R& ring = core.ring();
  const int n = core.rows();
  if (is_idempotent(core)) return {core};

  auto b = core.block(0, 0, n - 1, n - 1);
  std::vector<Matrix<R>> factors;

  // Triangularize the leading block; each inverted row operation joins the
  // product as its idempotent embedding.
  auto tri = triangularize(b);
  for (const auto& op : tri.ops) {
    for (auto& f : embed_ge_as_idempotents(ring, invert(ring, op), n)) {
      factors.push_back(std::move(f));
    }
  }
  // Residual after pulling the embeddings out: [[d, top],[0, d1block]] where
  // d is the first pivot and d1block keeps its own zero last row.
  Matrix<R> residual(ring, n, n);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) residual(i, j) = tri.result(i, j);
  }
  {
    auto c = core.block(0, n - 1, n - 1, 1);
    for (const auto& op : tri.ops) apply_ge(op, c);
    for (int i = 0; i < n - 1; ++i) residual(i, n - 1) = c(i, 0);
  }
  auto d1 = residual(0, 0);
  auto d1block = residual.block(1, 1, n - 1, n - 1);

  auto inner = factor_singular_impl(d1block, budget - 1);
  while (!inner.empty() && inner.back() == Matrix<R>::identity(ring, n - 1)) {
    inner.pop_back();
  }
  if (inner.empty()) fail(Errc::internal, "recursive factor list collapsed");
  const auto& ym = inner.back();
  if (ym.is_zero()) fail(Errc::internal, "recursive factorization ends in zero");
  for (const auto& y : inner) factors.push_back(pad_identity(y, 1));

  // Remaining factor g satisfies residual == diag(1, d1block) * g.
  Matrix<R> g(ring, n, n);
  g(0, 0) = d1;
  for (int j = 1; j < n; ++j) g(0, j) = residual(0, j);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) g(i, j) = ym(i - 1, j - 1);
  }

  // Conjugate through the canonical form of ym and a cyclic row/col shift so
  // an identity block leads and rows below h are zero.
  auto icf = idempotent_canonical_form(ym);
  const int h = icf.rank;
  if (h < 1 || h > n - 2) fail(Errc::internal, "canonical rank out of range");
  auto q = pad_identity(icf.c, 1);
  auto q_inv = pad_identity(icf.c_inv, 1);
  auto gp = mat_mul(mat_mul(q_inv, g), q);

  // position -> old index: new 0..h-1 hold old 1..h, new h holds old 0.
  std::vector<int> old_of(n);
  for (int i = 0; i < h; ++i) old_of[i] = i + 1;
  old_of[h] = 0;
  for (int i = h + 1; i < n; ++i) old_of[i] = i;
  Matrix<R> s(ring, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) = gp(old_of[i], old_of[j]);
  }
  for (int i = h + 1; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!ring.is_zero(s(i, j))) fail(Errc::internal, "shifted factor rows not cleared");
    }
  }

  // Clear the coupling entries left of the pivot in row h with embedded
  // transvections, then recurse on the trailing singular block.
  std::vector<Matrix<R>> s_factors;
  for (int k = 0; k < h; ++k) {
    auto c = s(h, k);
    if (ring.is_zero(c)) continue;
    for (auto& f :
         embed_ge_as_idempotents(ring, GEFactor<R>::elementary(h, k, c), n)) {
      s_factors.push_back(std::move(f));
    }
    for (int j = 0; j < n; ++j) {
      s(h, j) = ring.sub(s(h, j), ring.mul(c, s(k, j)));
    }
  }
  auto w = s.block(h, h, n - h, n - h);
  for (const auto& z : factor_singular_impl(w, budget - 1)) {
    s_factors.push_back(pad_identity(z, h));
  }

  // Undo the permutation and basis change: g == k * s * k^-1.
  Matrix<R> perm(ring, n, n);
  for (int i = 0; i < n; ++i) perm(i, old_of[i]) = ring.one();
  auto k_left = mat_mul(q, perm.transposed());
  auto k_right = mat_mul(perm, q_inv);
  for (auto& f : s_factors) {
    factors.push_back(mat_mul(mat_mul(k_left, f), k_right));
  }
  return factors;
}

template <class R>
std::vector<Matrix<R>> factor_singular_impl(const Matrix<R>& a, int budget) {
  const R& ring = a.ring();
  const int n = a.rows();
  if (budget < 0) fail(Errc::internal, "recursion depth exceeded");
  if (n == 1) return {a};
  if (is_idempotent(a)) return {a};
  if (n == 2) return factor_singular_2x2(a);

  bool conjugated = false;
  Matrix<R> core = a;
  Matrix<R> p = Matrix<R>::identity(ring, n);
  Matrix<R> p_inv = p;
  if (!last_row_zero(a)) {
    auto u = left_null_row(a);
    auto cmp = unimodular_complete(u);
    p = cmp.p;
    p_inv = cmp.p_inv;
    core = mat_mul(mat_mul(p, a), p_inv);
    if (!last_row_zero(core)) fail(Errc::internal, "conjugation did not clear the last row");
    conjugated = true;
  }

  std::vector<Matrix<R>> factors;
  auto b = core.block(0, 0, n - 1, n - 1);
  if (ring.is_zero(det_bareiss(b))) {
    // core == [[I, c],[0, 0]] * diag(b, 1); recurse on the leading block.
    auto mask = Matrix<R>::identity(ring, n);
    mask(n - 1, n - 1) = ring.zero();
    for (int i = 0; i < n - 1; ++i) mask(i, n - 1) = core(i, n - 1);
    factors.push_back(std::move(mask));
    for (const auto& e : factor_singular_impl(b, budget - 1)) {
      // diag(e, 1): identity in the trailing slot.
      Matrix<R> g = Matrix<R>::identity(ring, n);
      for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j) g(i, j) = e(i, j);
      }
      factors.push_back(std::move(g));
    }
  } else {
    factors = reduce_bordered_impl(core, budget);
  }
  if (conjugated) {
    for (auto& f : factors) f = mat_mul(mat_mul(p_inv, f), p);
  }
  return factors;
}

}  // namespace detail

// Ordered idempotent factorization of a singular square matrix.
template <class R>
std::vector<Matrix<R>> factor_singular(const Matrix<R>& a) {
  if (a.rows() != a.cols()) fail(Errc::not_square, "factorization needs a square matrix");
  const R& ring = a.ring();
  if (!ring.is_zero(det_bareiss(a))) fail(Errc::not_singular, "matrix is not singular");
  auto factors = detail::factor_singular_impl(a, a.rows() + 1);
  auto product = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) product = mat_mul(product, factors[i]);
  if (!(product == a)) fail(Errc::internal, "factor product does not reproduce the input");
  return factors;
}

// Bordered form with nonsingular leading block to idempotent factors; the
// last row must be zero and the leading (n-1) block invertible over the
// fraction field.
template <class R>
std::vector<Matrix<R>> reduce_bordered(const Matrix<R>& core) {
  if (core.rows() != core.cols()) fail(Errc::not_square, "bordered form must be square");
  const int n = core.rows();
  if (n < 3) fail(Errc::size_too_small, "bordered reduction needs n >= 3");
  if (!detail::last_row_zero(core)) fail(Errc::shape_mismatch, "last row must be zero");
  if (core.ring().is_zero(det_bareiss(core.block(0, 0, n - 1, n - 1)))) {
    fail(Errc::not_invertible, "leading block is singular");
  }
  if (is_idempotent(core)) return {core};
  return detail::reduce_bordered_impl(core, n + 1);
}

}  // namespace idemfact
