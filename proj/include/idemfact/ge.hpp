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

// Row-operation factors (elementary transvections, unit row scalings, row
// swaps), Euclidean triangularization emitting them, decompositions of
// invertible 2x2 matrices into such factors, and the size-n idempotent
// embeddings: for an (n-1)-sized factor F, a short product of n x n
// idempotents equal to diag(F, 0).

#pragma once

#include <utility>
#include <vector>

#include "idemfact/errors.hpp"
#include "idemfact/matrix.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

// One row operation, applied from the left. Indices are 0-based.
template <class R>
struct GEFactor {
  enum class Kind { elementary, diag_units, swap };
  Kind kind = Kind::elementary;
  int i = 0, j = 0;                     // elementary: row_i += c * row_j; swap: i <-> j
  typename R::Elem c{};                 // elementary coefficient
  std::vector<typename R::Elem> units;  // diag_units: per-row unit scales

  static GEFactor elementary(int i, int j, typename R::Elem c) {
    GEFactor f;
    f.kind = Kind::elementary;
    f.i = i;
    f.j = j;
    f.c = std::move(c);
    return f;
  }
  static GEFactor diag_units(std::vector<typename R::Elem> units) {
    GEFactor f;
    f.kind = Kind::diag_units;
    f.units = std::move(units);
    return f;
  }
  static GEFactor swap(int i, int j) {
    GEFactor f;
    f.kind = Kind::swap;
    f.i = i;
    f.j = j;
    return f;
  }
};

namespace detail {

template <class R>
void check_ge_indices(const GEFactor<R>& f, int n) {
  using Kind = typename GEFactor<R>::Kind;
  if (f.kind == Kind::diag_units) {
    if (int(f.units.size()) != n) fail(Errc::shape_mismatch, "diag factor has wrong arity");
    return;
  }
  if (f.i < 0 || f.j < 0 || f.i >= n || f.j >= n || f.i == f.j) {
    fail(Errc::shape_mismatch, "row indices out of range");
  }
}

}  // namespace detail

// Apply the row operation in place.
template <class R>
void apply_ge(const GEFactor<R>& f, Matrix<R>& m) {
  using Kind = typename GEFactor<R>::Kind;
  const R& ring = m.ring();
  detail::check_ge_indices(f, m.rows());
  switch (f.kind) {
    case Kind::elementary:
      for (int j = 0; j < m.cols(); ++j) {
        m(f.i, j) = ring.add(m(f.i, j), ring.mul(f.c, m(f.j, j)));
      }
      return;
    case Kind::swap:
      for (int j = 0; j < m.cols(); ++j) std::swap(m(f.i, j), m(f.j, j));
      return;
    case Kind::diag_units:
      for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) m(i, j) = ring.mul(f.units[i], m(i, j));
      }
      return;
  }
}

template <class R>
Matrix<R> realize(const R& ring, const GEFactor<R>& f, int n) {
  auto m = Matrix<R>::identity(ring, n);
  apply_ge(f, m);
  return m;
}

template <class R>
GEFactor<R> invert(const R& ring, const GEFactor<R>& f) {
  using Kind = typename GEFactor<R>::Kind;
  GEFactor<R> g = f;
  switch (f.kind) {
    case Kind::elementary:
      g.c = ring.neg(f.c);
      return g;
    case Kind::swap:
      return g;
    case Kind::diag_units:
      for (auto& u : g.units) u = ring.unit_inverse(u);
      return g;
  }
  fail(Errc::internal, "unreachable factor kind");
}

template <class R>
struct Triangularized {
  std::vector<GEFactor<R>> ops;  // applied in order: realize(ops_k)...realize(ops_1) * a == result
  Matrix<R> result;              // upper triangular, canonical pivots
};

// Euclidean row reduction to upper-triangular form. Below-pivot entries are
// ground down by division-with-remainder; a nonzero remainder is swapped
// into the pivot slot, strictly shrinking the pivot norm. One trailing
// diag_units factor (if needed) makes the pivots canonical associates.
template <class R>
Triangularized<R> triangularize(const Matrix<R>& a) {
  if (a.rows() != a.cols()) fail(Errc::not_square, "triangularization needs a square matrix");
  const R& ring = a.ring();
  const int n = a.rows();
  Triangularized<R> out{{}, a};
  Matrix<R>& m = out.result;
  auto emit = [&](GEFactor<R> f) {
    apply_ge(f, m);
    out.ops.push_back(std::move(f));
  };
  for (int c = 0; c < n; ++c) {
    if (ring.is_zero(m(c, c))) {
      int pivot = -1;
      for (int r = c + 1; r < n; ++r) {
        if (!ring.is_zero(m(r, c))) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;  // column already clear below the diagonal
      emit(GEFactor<R>::swap(c, pivot));
    }
    bool stable = false;
    while (!stable) {
      stable = true;
      for (int r = c + 1; r < n; ++r) {
        if (ring.is_zero(m(r, c))) continue;
        auto d = ring.euclid_div(m(r, c), m(c, c));
        if (!ring.is_zero(d.quot)) emit(GEFactor<R>::elementary(r, c, ring.neg(d.quot)));
        if (!ring.is_zero(m(r, c))) {
          emit(GEFactor<R>::swap(c, r));
          stable = false;
        }
      }
    }
  }
  std::vector<typename R::Elem> scales(n, ring.one());
  bool scaled = false;
  for (int c = 0; c < n; ++c) {
    if (ring.is_zero(m(c, c))) continue;
    auto un = ring.canonical_associate(m(c, c));
    if (!(un.unit == ring.one())) {
      scales[c] = ring.unit_inverse(un.unit);
      scaled = true;
    }
  }
  if (scaled) emit(GEFactor<R>::diag_units(std::move(scales)));
  return out;
}

template <class R>
struct GE2Strategy {
  enum class Kind { euclid, unit_shift };
  Kind kind = Kind::euclid;
  typename R::Elem shift{};  // unit_shift only
};

namespace detail {

// [[r,1],[1,0]] as five elementary/diagonal factors.
template <class R>
void push_quotient_factors(const R& ring, const typename R::Elem& r,
                           std::vector<GEFactor<R>>& out) {
  out.push_back(GEFactor<R>::elementary(0, 1, r));
  out.push_back(GEFactor<R>::elementary(1, 0, ring.one()));
  out.push_back(GEFactor<R>::diag_units({ring.one(), ring.neg(ring.one())}));
  out.push_back(GEFactor<R>::elementary(0, 1, ring.one()));
  out.push_back(GEFactor<R>::elementary(1, 0, ring.neg(ring.one())));
}

}  // namespace detail

// Decompose an invertible 2x2 matrix into row-operation factors whose
// ordered product is the input.
//
// euclid: invert the triangularization (plus one cleanup transvection).
// unit_shift(x): closed form from a + b*x being a unit,
//   A = diag(u, v) * [[1,0],[v^-1 w, 1]] * M(u^-1 b) * M(-x)
// with u = a + bx, w = c + dx, v = d - w u^-1 b, and each M(r) = [[r,1],[1,0]]
// expanded into five elementary factors; at most twelve factors total.
template <class R>
std::vector<GEFactor<R>> ge2_decompose(const Matrix<R>& a, const GE2Strategy<R>& strategy) {
  using Kind = typename GE2Strategy<R>::Kind;
  if (a.rows() != 2 || a.cols() != 2) fail(Errc::shape_mismatch, "expected a 2x2 matrix");
  const R& ring = a.ring();
  if (!ring.is_unit(det_bareiss(a))) fail(Errc::not_invertible, "determinant is not a unit");

  if (strategy.kind == Kind::euclid) {
    auto tri = triangularize(a);
    if (!(tri.result(0, 0) == ring.one() && tri.result(1, 1) == ring.one())) {
      fail(Errc::internal, "unit-determinant matrix with non-unit pivot");
    }
    auto ops = std::move(tri.ops);
    if (!ring.is_zero(tri.result(0, 1))) {
      ops.push_back(GEFactor<R>::elementary(0, 1, ring.neg(tri.result(0, 1))));
    }
    std::vector<GEFactor<R>> out;
    out.reserve(ops.size());
    for (const auto& op : ops) out.push_back(invert(ring, op));
    return out;
  }

  const auto& x = strategy.shift;
  auto u = ring.add(a(0, 0), ring.mul(a(0, 1), x));
  if (!ring.is_unit(u)) fail(Errc::not_a_unit, "a + b*x is not a unit");
  auto uinv = ring.unit_inverse(u);
  auto w = ring.add(a(1, 0), ring.mul(a(1, 1), x));
  auto v = ring.sub(a(1, 1), ring.mul(ring.mul(w, uinv), a(0, 1)));
  if (!ring.is_unit(v)) fail(Errc::internal, "cofactor scale is not a unit");
  std::vector<GEFactor<R>> out;
  if (!(u == ring.one() && v == ring.one())) {
    out.push_back(GEFactor<R>::diag_units({u, v}));
  }
  auto s = ring.mul(ring.unit_inverse(v), w);
  if (!ring.is_zero(s)) out.push_back(GEFactor<R>::elementary(1, 0, s));
  detail::push_quotient_factors(ring, ring.mul(uinv, a(0, 1)), out);
  detail::push_quotient_factors(ring, ring.neg(x), out);
  return out;
}

// diag(F, 0) for an (n-1)-sized row-operation factor F, as a product of
// n x n idempotents (n >= 3). Every template below multiplies out to the
// embedded factor and each matrix squares to itself.
template <class R>
std::vector<Matrix<R>> embed_ge_as_idempotents(const R& ring, const GEFactor<R>& f, int n) {
  using Kind = typename GEFactor<R>::Kind;
  if (n < 3) fail(Errc::size_too_small, "embedding needs n >= 3");
  detail::check_ge_indices(f, n - 1);
  const int last = n - 1;
  auto proj = Matrix<R>::identity(ring, n);  // diag(1,...,1,0)
  proj(last, last) = ring.zero();

  switch (f.kind) {
    case Kind::elementary: {
      auto mid = Matrix<R>::identity(ring, n);
      mid(last, last) = ring.zero();
      mid(f.i, f.j) = f.c;
      mid(f.i, last) = ring.one();
      mid(last, f.j) = ring.neg(f.c);
      return {proj, mid, proj};
    }
    case Kind::swap: {
      int i = f.i < f.j ? f.i : f.j;
      int j = f.i < f.j ? f.j : f.i;
      auto mid = Matrix<R>::identity(ring, n);
      auto one = ring.one();
      auto neg_one = ring.neg(one);
      mid(i, i) = ring.zero();
      mid(i, j) = one;
      mid(i, last) = one;
      mid(j, i) = one;
      mid(j, j) = ring.zero();
      mid(j, last) = neg_one;
      mid(last, i) = neg_one;
      mid(last, j) = one;
      mid(last, last) = ring.add(one, one);
      return {proj, mid, proj};
    }
    case Kind::diag_units: {
      std::vector<Matrix<R>> out;
      for (int k = 0; k < n - 1; ++k) {
        if (f.units[k] == ring.one()) continue;
        auto left = proj;
        left(k, last) = ring.neg(ring.one());
        auto right = proj;
        right(last, k) = ring.sub(ring.one(), f.units[k]);
        out.push_back(std::move(left));
        out.push_back(std::move(right));
      }
      if (out.empty()) out.push_back(proj);
      return out;
    }
  }
  fail(Errc::internal, "unreachable factor kind");
}

// diag(F, 0) for a one-line 2x2 matrix F (zero second row or zero second
// column), as three n x n idempotents.
template <class R>
std::vector<Matrix<R>> embed_ge_as_idempotents(const Matrix<R>& f, int n) {
  if (f.rows() != 2 || f.cols() != 2) fail(Errc::shape_mismatch, "expected a 2x2 matrix");
  if (n < 3) fail(Errc::size_too_small, "embedding needs n >= 3");
  const R& ring = f.ring();
  const int last = n - 1;
  auto zero_row = ring.is_zero(f(1, 0)) && ring.is_zero(f(1, 1));
  auto zero_col = ring.is_zero(f(0, 1)) && ring.is_zero(f(1, 1));
  if (!zero_row && !zero_col) fail(Errc::shape_mismatch, "expected a one-line 2x2 matrix");

  auto corner = Matrix<R>(ring, n, n);
  corner(last, last) = ring.one();

  if (zero_row) {
    Matrix<R> ones_row(ring, n, n);
    for (int j = 0; j < n; ++j) ones_row(0, j) = ring.one();
    auto bottom = Matrix<R>::identity(ring, n);
    bottom(last, last) = ring.zero();
    bottom(last, 0) = f(0, 0);
    bottom(last, 1) = f(0, 1);
    return {ones_row, corner, bottom};
  }
  auto lastcol = Matrix<R>::identity(ring, n);
  lastcol(last, last) = ring.zero();
  lastcol(0, last) = f(0, 0);
  lastcol(1, last) = f(1, 0);
  Matrix<R> ones_col(ring, n, n);
  for (int i = 0; i < n; ++i) ones_col(i, 0) = ring.one();
  return {lastcol, corner, ones_col};
}

}  // namespace idemfact
