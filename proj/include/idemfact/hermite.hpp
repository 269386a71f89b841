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

// Column Hermite reduction with tracked unimodular transforms, and the
// derived kernels: extracting an annihilating row for a singular matrix,
// completing a unimodular row to an invertible matrix, and conjugating an
// idempotent to diag(I_h, 0).

#pragma once

#include <utility>
#include <vector>

#include "idemfact/errors.hpp"
#include "idemfact/fraction.hpp"
#include "idemfact/matrix.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

template <class R>
struct TrackedReduction {
  Matrix<R> result;         // result == a * transform
  Matrix<R> transform;      // unimodular column transform
  Matrix<R> transform_inv;  // transform * transform_inv == identity
};

// Column Hermite form: pivots run left-to-right, top-to-bottom, every entry
// to the right of a pivot in its row is zero, and pivots are canonical
// associates. Columns left of a pivot are not reduced against it.
template <class R>
TrackedReduction<R> column_hnf(const Matrix<R>& a) {
  const R& ring = a.ring();
  const int m = a.rows(), n = a.cols();
  TrackedReduction<R> out{a, Matrix<R>::identity(ring, n), Matrix<R>::identity(ring, n)};
  Matrix<R>& res = out.result;
  Matrix<R>& t = out.transform;
  Matrix<R>& tinv = out.transform_inv;

  // Column operations applied to (res, t); the inverse row operation keeps
  // tinv equal to transform^-1.
  auto col_addmul = [&](int dst, int src, const typename R::Elem& coef) {
    for (int i = 0; i < m; ++i) res(i, dst) = ring.add(res(i, dst), ring.mul(coef, res(i, src)));
    for (int i = 0; i < n; ++i) t(i, dst) = ring.add(t(i, dst), ring.mul(coef, t(i, src)));
    auto nc = ring.neg(coef);
    for (int j = 0; j < n; ++j) tinv(src, j) = ring.add(tinv(src, j), ring.mul(nc, tinv(dst, j)));
  };
  auto col_swap = [&](int c1, int c2) {
    for (int i = 0; i < m; ++i) std::swap(res(i, c1), res(i, c2));
    for (int i = 0; i < n; ++i) std::swap(t(i, c1), t(i, c2));
    for (int j = 0; j < n; ++j) std::swap(tinv(c1, j), tinv(c2, j));
  };
  auto col_scale = [&](int c, const typename R::Elem& unit) {
    for (int i = 0; i < m; ++i) res(i, c) = ring.mul(res(i, c), unit);
    for (int i = 0; i < n; ++i) t(i, c) = ring.mul(t(i, c), unit);
    auto uinv = ring.unit_inverse(unit);
    for (int j = 0; j < n; ++j) tinv(c, j) = ring.mul(tinv(c, j), uinv);
  };

  int pc = 0;
  for (int r = 0; r < m && pc < n; ++r) {
    int first = -1;
    for (int j = pc; j < n; ++j) {
      if (!ring.is_zero(res(r, j))) {
        first = j;
        break;
      }
    }
    if (first < 0) continue;  // no pivot in this row
    if (first != pc) col_swap(first, pc);
    // Euclidean sweep: reduce every entry right of the pivot; a nonzero
    // remainder becomes the new, smaller pivot and the sweep restarts.
    bool stable = false;
    while (!stable) {
      stable = true;
      for (int j = pc + 1; j < n; ++j) {
        if (ring.is_zero(res(r, j))) continue;
        auto d = ring.euclid_div(res(r, j), res(r, pc));
        if (!ring.is_zero(d.quot)) col_addmul(j, pc, ring.neg(d.quot));
        if (!ring.is_zero(res(r, j))) {
          col_swap(pc, j);
          stable = false;
        }
      }
    }
    auto un = ring.canonical_associate(res(r, pc));
    if (!(un.unit == ring.one())) col_scale(pc, ring.unit_inverse(un.unit));
    ++pc;
  }
  return out;
}

// First row vector (up to the determinism conventions below) annihilating a
// singular square matrix from the left: u * a == 0 with u nonzero, entries in
// the base ring, content 1, and the first nonzero entry canonical. The
// kernel direction comes from fraction-field elimination of the transpose,
// taking the first free column.
template <class R>
Matrix<R> left_null_row(const Matrix<R>& a) {
  if (a.rows() != a.cols()) fail(Errc::not_square, "null row needs a square matrix");
  const R& ring = a.ring();
  const int n = a.rows();
  if (!ring.is_zero(det_bareiss(a))) fail(Errc::not_singular, "matrix is not singular");

  FractionField<R> field(ring);
  auto t = to_fractions(a.transposed());
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int pr = 0;
  for (int c = 0; c < n && pr < n; ++c) {
    int pivot = -1;
    for (int r = pr; r < n; ++r) {
      if (!field.is_zero(t(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != pr) {
      for (int j = 0; j < n; ++j) std::swap(t(pr, j), t(pivot, j));
    }
    for (int r = pr + 1; r < n; ++r) {
      if (field.is_zero(t(r, c))) continue;
      auto coef = field.div(t(r, c), t(pr, c));
      for (int j = c; j < n; ++j) t(r, j) = field.sub(t(r, j), field.mul(coef, t(pr, j)));
    }
    pivots.emplace_back(pr, c);
    ++pr;
  }

  int free_col = -1;
  for (int c = 0; c < n; ++c) {
    bool is_pivot = false;
    for (const auto& p : pivots) is_pivot = is_pivot || p.second == c;
    if (!is_pivot) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) fail(Errc::internal, "singular matrix without free column");

  std::vector<Frac<R>> x(n, field.zero());
  x[free_col] = field.one();
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    auto s = field.zero();
    for (int j = c + 1; j < n; ++j) s = field.add(s, field.mul(t(r, j), x[j]));
    x[c] = field.neg(field.div(s, t(r, c)));
  }

  // Clear denominators, strip content, and normalize the leading unit.
  auto l = ring.one();
  for (const auto& f : x) l = lcm(ring, l, f.den);
  std::vector<typename R::Elem> u(n);
  for (int i = 0; i < n; ++i) u[i] = ring.mul(x[i].num, exact_div(ring, l, x[i].den));
  auto g = ring.zero();
  for (const auto& e : u) g = gcd(ring, g, e);
  for (auto& e : u) e = exact_div(ring, e, g);
  for (const auto& e : u) {
    if (ring.is_zero(e)) continue;
    auto un = ring.canonical_associate(e);
    if (!(un.unit == ring.one())) {
      auto vinv = ring.unit_inverse(un.unit);
      for (auto& w : u) w = ring.mul(w, vinv);
    }
    break;
  }

  Matrix<R> row(ring, 1, n);
  for (int i = 0; i < n; ++i) row(0, i) = u[i];
  return row;
}

template <class R>
struct UnimodularCompletion {
  Matrix<R> p;      // invertible, last row equals the input row
  Matrix<R> p_inv;  // p * p_inv == identity
};

// Complete a unimodular row (content a unit) to an invertible matrix whose
// last row is the given one.
template <class R>
UnimodularCompletion<R> unimodular_complete(const Matrix<R>& u) {
  if (u.rows() != 1) fail(Errc::shape_mismatch, "expected a single row");
  const R& ring = u.ring();
  const int n = u.cols();
  auto red = column_hnf(u);
  if (!(red.result(0, 0) == ring.one())) {
    fail(Errc::not_unimodular, "row content is not a unit");
  }
  // u * transform == e_1; swap the first and last coordinates so the last
  // row of the inverse is u itself.
  Matrix<R> p = red.transform_inv;
  Matrix<R> p_inv = red.transform;
  if (n > 1) {
    for (int j = 0; j < n; ++j) std::swap(p(0, j), p(n - 1, j));
    for (int i = 0; i < n; ++i) std::swap(p_inv(i, 0), p_inv(i, n - 1));
  }
  return {p, p_inv};
}

template <class R>
struct IdempotentForm {
  Matrix<R> c;      // c^-1 * y * c == diag(I_rank, 0)
  Matrix<R> c_inv;
  int rank;
};

// Basis change revealing an idempotent's image/kernel split. Columns of the
// column Hermite forms of y and I - y are bases of the image of y and of
// I - y; stacking them gives the conjugator.
template <class R>
IdempotentForm<R> idempotent_canonical_form(const Matrix<R>& y) {
  if (y.rows() != y.cols()) fail(Errc::not_square, "idempotent form needs a square matrix");
  if (!is_idempotent(y)) fail(Errc::not_idempotent, "matrix is not idempotent");
  const R& ring = y.ring();
  const int n = y.rows();
  auto count_nonzero_cols = [&](const Matrix<R>& m) {
    int k = 0;
    for (int j = 0; j < m.cols(); ++j) {
      bool nz = false;
      for (int i = 0; i < m.rows(); ++i) nz = nz || !ring.is_zero(m(i, j));
      if (nz) ++k;
    }
    return k;
  };
  auto him = column_hnf(y);
  auto hker = column_hnf(mat_sub(Matrix<R>::identity(ring, n), y));
  int h = count_nonzero_cols(him.result);
  int k = count_nonzero_cols(hker.result);
  if (h + k != n) fail(Errc::internal, "image and kernel ranks do not split");
  Matrix<R> c(ring, n, n);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < n; ++i) c(i, j) = him.result(i, j);
  }
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) c(i, h + j) = hker.result(i, j);
  }
  if (!ring.is_unit(det_bareiss(c))) {
    fail(Errc::internal, "idempotent basis is not unimodular");
  }
  auto c_inv = exact_inverse(c);
  auto d = mat_mul(mat_mul(c_inv, y), c);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool expect_one = i == j && i < h;
      if (expect_one ? !(d(i, j) == ring.one()) : !ring.is_zero(d(i, j))) {
        fail(Errc::internal, "conjugation did not reach diag(I, 0)");
      }
    }
  }
  return {c, c_inv, h};
}

}  // namespace idemfact
