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

// Dense row-major matrices over an exact ring, with the handful of exact
// kernels the factorization pipeline needs: multiplication, fraction-free
// determinants, idempotency testing and exact inversion.

#pragma once

#include <utility>
#include <vector>

#include "idemfact/errors.hpp"
#include "idemfact/fraction.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

template <class R>
class Matrix {
 public:
  using Elem = typename R::Elem;

  Matrix(R ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) fail(Errc::shape_mismatch, "matrix dimensions must be positive");
    entries_.assign(std::size_t(rows) * cols, ring_.zero());
  }

  static Matrix identity(R ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = m.ring_.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const R& ring() const { return ring_; }

  Elem& operator()(int i, int j) { return entries_[std::size_t(i) * cols_ + j]; }
  const Elem& operator()(int i, int j) const { return entries_[std::size_t(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!ring_.is_zero(e)) return false;
    }
    return true;
  }

  Matrix transposed() const {
    Matrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix block(int row0, int col0, int nrows, int ncols) const {
    if (row0 < 0 || col0 < 0 || nrows < 1 || ncols < 1 || row0 + nrows > rows_ ||
        col0 + ncols > cols_) {
      fail(Errc::shape_mismatch, "block out of range");
    }
    Matrix b(ring_, nrows, ncols);
    for (int i = 0; i < nrows; ++i) {
      for (int j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    }
    return b;
  }

 private:
  R ring_;
  int rows_, cols_;
  std::vector<Elem> entries_;
};

namespace detail {

template <class R>
void require_same_ring(const Matrix<R>& a, const Matrix<R>& b) {
  if (!(a.ring() == b.ring())) fail(Errc::ring_mismatch, "matrices over different rings");
}

}  // namespace detail

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b);
  if (a.cols() != b.rows()) fail(Errc::shape_mismatch, "inner dimensions differ");
  const R& ring = a.ring();
  Matrix<R> c(ring, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        c(i, j) = ring.add(c(i, j), ring.mul(aik, b(k, j)));
      }
    }
  }
  return c;
}

template <class R>
Matrix<R> mat_add(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::shape_mismatch, "shapes differ");
  Matrix<R> c = a;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a.ring().add(a(i, j), b(i, j));
  }
  return c;
}

template <class R>
Matrix<R> mat_sub(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::shape_mismatch, "shapes differ");
  Matrix<R> c = a;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a.ring().sub(a(i, j), b(i, j));
  }
  return c;
}

// Fraction-free Bareiss elimination; every interior division is exact.
template <class R>
typename R::Elem det_bareiss(const Matrix<R>& a) {
  if (a.rows() != a.cols()) fail(Errc::not_square, "determinant of non-square matrix");
  const R& ring = a.ring();
  const int n = a.rows();
  if (n == 1) return a(0, 0);
  Matrix<R> m = a;
  bool negate = false;
  typename R::Elem prev = ring.one();
  for (int k = 0; k < n - 1; ++k) {
    if (ring.is_zero(m(k, k))) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!ring.is_zero(m(r, k))) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return ring.zero();
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        auto t = ring.sub(ring.mul(m(i, j), m(k, k)), ring.mul(m(i, k), m(k, j)));
        m(i, j) = exact_div(ring, t, prev);
      }
      m(i, k) = ring.zero();
    }
    prev = m(k, k);
  }
  return negate ? ring.neg(m(n - 1, n - 1)) : m(n - 1, n - 1);
}

template <class R>
bool is_idempotent(const Matrix<R>& f) {
  if (f.rows() != f.cols()) fail(Errc::not_square, "idempotency needs a square matrix");
  return mat_mul(f, f) == f;
}

template <class R>
Matrix<FractionField<R>> to_fractions(const Matrix<R>& a) {
  FractionField<R> field(a.ring());
  Matrix<FractionField<R>> m(field, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = field.from_base(a(i, j));
  }
  return m;
}

// Exact inverse over the base ring; throws NotInvertible unless det is a unit.
template <class R>
Matrix<R> exact_inverse(const Matrix<R>& a) {
  if (a.rows() != a.cols()) fail(Errc::not_square, "inverse of non-square matrix");
  const R& ring = a.ring();
  const int n = a.rows();
  FractionField<R> field(ring);
  auto m = to_fractions(a);
  auto inv = Matrix<FractionField<R>>::identity(field, n);
  // Gauss-Jordan over the fraction field.
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!field.is_zero(m(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) fail(Errc::not_invertible, "matrix is singular");
    if (pivot != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(c, j), m(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    }
    auto scale = field.unit_inverse(m(c, c));
    for (int j = 0; j < n; ++j) {
      m(c, j) = field.mul(m(c, j), scale);
      inv(c, j) = field.mul(inv(c, j), scale);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || field.is_zero(m(r, c))) continue;
      auto coef = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) = field.sub(m(r, j), field.mul(coef, m(c, j)));
        inv(r, j) = field.sub(inv(r, j), field.mul(coef, inv(c, j)));
      }
    }
  }
  // Entries must land back in the base ring exactly when det is a unit.
  Matrix<R> out(ring, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& f = inv(i, j);
      if (!(f.den == ring.one())) {
        fail(Errc::not_invertible, "inverse has non-unit determinant");
      }
      out(i, j) = f.num;
    }
  }
  return out;
}

}  // namespace idemfact
