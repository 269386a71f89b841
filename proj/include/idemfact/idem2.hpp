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

// Factorization of singular 2x2 matrices into idempotents. The engine works
// on matrices with a zero bottom row: [[a,b],[0,0]] with gcd(a,b)=1 is peeled
// into rank-one idempotents (a;b)(c,d) with ca+db=1, chained so adjacent
// pairs link up. The chain is produced from the quotient sequence of the
// extended Euclidean algorithm on (-b, a), and arbitrary singular matrices
// reduce to this shape by conjugating with a completed annihilating row and
// splitting off the content as a one-parameter factor.

#pragma once

#include <utility>
#include <vector>

#include "idemfact/errors.hpp"
#include "idemfact/hermite.hpp"
#include "idemfact/matrix.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

namespace detail {

template <class R>
Matrix<R> mat2(const R& ring, const typename R::Elem& a, const typename R::Elem& b,
               const typename R::Elem& c, const typename R::Elem& d) {
  Matrix<R> m(ring, 2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace detail

// Tags for the one- and two-parameter rank-one shapes with closed-form
// factor lists. Primed cases are the transposed (first-column) shapes; d and
// e are the unit-entry row shapes.
enum class Rank1Case { a, a_prime, b, b_prime, c, c_prime, d, e };

// Closed-form idempotent factor lists:
//   a        [[p,0],[0,0]]            a'  [[0,0],[p,0]]
//   b        [[p,pq],[0,0]]           b'  [[p,0],[qp,0]]
//   c        [[pq,p],[0,0]]           c'  [[qp,0],[p,0]]
//   d        [[p,q],[0,0]], q a unit  e   [[p,q],[0,0]], p a unit
// Cases a/a' take one parameter (p); the rest take two (p, q).
template <class R>
std::vector<Matrix<R>> table_factor_2x2(const R& ring, Rank1Case tag,
                                        const std::vector<typename R::Elem>& params) {
  using detail::mat2;
  const auto zero = ring.zero();
  const auto one = ring.one();
  const std::size_t arity = (tag == Rank1Case::a || tag == Rank1Case::a_prime) ? 1 : 2;
  if (params.size() != arity) fail(Errc::bad_length, "wrong parameter count for table case");
  const auto& p = params[0];
  switch (tag) {
    case Rank1Case::a:
      return {mat2(ring, one, p, zero, zero), mat2(ring, zero, zero, zero, one),
              mat2(ring, one, zero, one, zero)};
    case Rank1Case::a_prime:
      return {mat2(ring, zero, zero, p, one), mat2(ring, one, zero, zero, zero),
              mat2(ring, one, zero, one, zero)};
    case Rank1Case::b: {
      auto list = table_factor_2x2(ring, Rank1Case::a, {p});
      list.push_back(mat2(ring, one, params[1], zero, zero));
      return list;
    }
    case Rank1Case::b_prime: {
      const auto& q = params[1];
      return {mat2(ring, one, zero, q, zero), mat2(ring, one, one, zero, zero),
              mat2(ring, zero, zero, zero, one), mat2(ring, one, zero, p, zero)};
    }
    case Rank1Case::c: {
      const auto& q = params[1];
      return {mat2(ring, one, p, zero, zero), mat2(ring, zero, zero, q, one)};
    }
    case Rank1Case::c_prime: {
      const auto& q = params[1];
      return {mat2(ring, zero, q, zero, one), mat2(ring, one, zero, p, zero)};
    }
    case Rank1Case::d: {
      // [[p,q],[0,0]] with q a unit is case c with parameters (q, q^-1 p).
      const auto& q = params[1];
      return table_factor_2x2(ring, Rank1Case::c,
                              {q, ring.mul(ring.unit_inverse(q), p)});
    }
    case Rank1Case::e: {
      // [[p,q],[0,0]] with p a unit is case b with parameters (p, p^-1 q).
      const auto& q = params[1];
      return table_factor_2x2(ring, Rank1Case::b,
                              {p, ring.mul(ring.unit_inverse(p), q)});
    }
  }
  fail(Errc::internal, "unreachable table case");
}

// A Bezout quadruple (a, b, c, d) with ca + db == 1; the outer product
// (a;b)(c,d) is then idempotent.
template <class R>
struct BezoutQuad {
  typename R::Elem a, b, c, d;
  bool operator==(const BezoutQuad&) const = default;
};

template <class R>
BezoutQuad<R> make_quad(const R& ring, const typename R::Elem& a, const typename R::Elem& b,
                        const typename R::Elem& c, const typename R::Elem& d) {
  auto s = ring.add(ring.mul(c, a), ring.mul(d, b));
  if (!(s == ring.one())) fail(Errc::bad_chain, "Bezout quad violates ca + db = 1");
  return {a, b, c, d};
}

template <class R>
Matrix<R> idempotent_from_bezout(const R& ring, const BezoutQuad<R>& q) {
  return detail::mat2(ring, ring.mul(q.a, q.c), ring.mul(q.a, q.d), ring.mul(q.b, q.c),
                      ring.mul(q.b, q.d));
}

template <class R>
std::vector<Matrix<R>> chain_to_idempotents(const R& ring,
                                            const std::vector<BezoutQuad<R>>& chain) {
  std::vector<Matrix<R>> out;
  out.reserve(chain.size());
  for (const auto& q : chain) out.push_back(idempotent_from_bezout(ring, q));
  return out;
}

// Rescale a chain whose idempotents multiply to [[a,b],[0,0]] (a, b coprime)
// so that it starts at (1,0,1,d) and adjacent quads satisfy the linking
// relation c_i a_{i+1} + d_i b_{i+1} = 1. The matrices are unchanged; only
// the (column, row) split of each rank-one factor moves by a unit.
template <class R>
std::vector<BezoutQuad<R>> normalize_chain(const R& ring,
                                           const std::vector<BezoutQuad<R>>& chain,
                                           const typename R::Elem& a,
                                           const typename R::Elem& b) {
  using E = typename R::Elem;
  if (chain.empty()) fail(Errc::bad_chain, "empty chain");
  if (!(ext_gcd(ring, a, b).g == ring.one())) {
    fail(Errc::not_coprime, "target row is not coprime");
  }
  auto product = idempotent_from_bezout(ring, chain[0]);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    product = mat_mul(product, idempotent_from_bezout(ring, chain[i]));
  }
  if (!(product == detail::mat2(ring, a, b, ring.zero(), ring.zero()))) {
    fail(Errc::bad_chain, "chain product is not [[a,b],[0,0]]");
  }
  if (!ring.is_zero(chain[0].b)) {
    fail(Errc::bad_chain, "chain does not start on the top row");
  }
  std::vector<BezoutQuad<R>> out;
  out.reserve(chain.size());
  // c1*a1 = 1 since b1 = 0, so a1 is a unit and the first quad rescales to
  // (1, 0, 1, a1*d1).
  out.push_back(make_quad(ring, ring.one(), ring.zero(), ring.one(),
                          ring.mul(chain[0].a, chain[0].d)));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& prev = out.back();
    const auto& cur = chain[i];
    E u = ring.add(ring.mul(prev.c, cur.a), ring.mul(prev.d, cur.b));
    if (!ring.is_unit(u)) fail(Errc::bad_chain, "adjacent quads do not link by a unit");
    E v = ring.unit_inverse(u);
    out.push_back(make_quad(ring, ring.mul(cur.a, v), ring.mul(cur.b, v),
                            ring.mul(u, cur.c), ring.mul(u, cur.d)));
  }
  if (!(out.back().c == a && out.back().d == b)) {
    fail(Errc::internal, "normalized chain does not end at (a, b)");
  }
  return out;
}

namespace detail {

template <class R>
bool chain_is_normalized(const R& ring, const std::vector<BezoutQuad<R>>& chain) {
  if (chain.empty()) return false;
  if (!(chain[0].a == ring.one() && ring.is_zero(chain[0].b) && chain[0].c == ring.one())) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto u = ring.add(ring.mul(chain[i].c, chain[i + 1].a),
                      ring.mul(chain[i].d, chain[i + 1].b));
    if (!(u == ring.one())) return false;
  }
  return true;
}

}  // namespace detail

// Quotient sequence of a normalized chain: with M(r) = [[r,1],[1,0]] and
// S = [[0,-1],[1,0]], the chain endpoints satisfy
// (c_n, d_n) = (1,0) * M(r_{2n-2}) ... M(r_0) * S. All entries are 2x2
// determinants of adjacent quads.
template <class R>
std::vector<typename R::Elem> chain_to_rseq(const R& ring,
                                            const std::vector<BezoutQuad<R>>& chain) {
  if (!detail::chain_is_normalized(ring, chain)) {
    fail(Errc::not_normalized, "chain is not normalized");
  }
  std::vector<typename R::Elem> rs;
  rs.reserve(2 * chain.size() - 1);
  rs.push_back(ring.neg(chain[0].d));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    rs.push_back(ring.sub(ring.mul(chain[i].a, chain[i + 1].b),
                          ring.mul(chain[i + 1].a, chain[i].b)));
    rs.push_back(ring.sub(ring.mul(chain[i + 1].c, chain[i].d),
                          ring.mul(chain[i].c, chain[i + 1].d)));
  }
  return rs;
}

// Inverse of chain_to_rseq: rebuild the normalized chain from an odd-length
// quotient sequence by running the two-term recurrences forward.
template <class R>
std::vector<BezoutQuad<R>> rseq_to_chain(const R& ring,
                                         const std::vector<typename R::Elem>& rs) {
  using E = typename R::Elem;
  if (rs.empty() || rs.size() % 2 == 0) {
    fail(Errc::bad_length, "quotient sequence must have odd length");
  }
  std::vector<BezoutQuad<R>> chain;
  chain.reserve((rs.size() + 1) / 2);
  chain.push_back(make_quad(ring, ring.one(), ring.zero(), ring.one(), ring.neg(rs[0])));
  for (std::size_t i = 1; i + 1 < rs.size(); i += 2) {
    const auto& prev = chain.back();
    const E& r = rs[i];
    const E& rp = rs[i + 1];
    E bn = ring.add(ring.mul(r, prev.c), prev.b);
    E an = ring.sub(prev.a, ring.mul(r, prev.d));
    E cn = ring.add(ring.mul(rp, bn), prev.c);
    E dn = ring.sub(prev.d, ring.mul(rp, an));
    chain.push_back(make_quad(ring, an, bn, cn, dn));
  }
  return chain;
}

// Quotient sequence for a coprime pair (a, b): Euclid on (-b, a), then a
// unit patch if the loop ends at a unit other than one, then a parity patch
// so the length is odd. Each patch appends three entries via the identity
// (1,0) M(u) M(-u^-1) M(e) = (u, 0), valid for every e.
template <class R>
std::vector<typename R::Elem> euclid_rseq(const R& ring, const typename R::Elem& a,
                                          const typename R::Elem& b) {
  using E = typename R::Elem;
  if (!(ext_gcd(ring, a, b).g == ring.one())) {
    fail(Errc::not_coprime, "inputs are not coprime");
  }
  E first = ring.neg(b), second = a;
  std::vector<E> rs;
  while (!ring.is_zero(second)) {
    auto d = ring.euclid_div(first, second);
    rs.push_back(d.quot);
    first = std::move(second);
    second = std::move(d.rem);
  }
  if (!(first == ring.one())) {
    E v = ring.unit_inverse(first);
    rs.push_back(ring.zero());
    rs.push_back(ring.neg(v));
    rs.push_back(first);
  }
  if (rs.size() % 2 == 0) {
    rs.push_back(ring.zero());
    rs.push_back(ring.neg(ring.one()));
    rs.push_back(ring.one());
  }
  return rs;
}

// Factor [[a,b],[0,0]] when some shift x makes u = a + bx a unit, together
// with the invertible completion: [[a,b],[-x,1]] * completion = [[u,0],[0,1]].
template <class R>
struct UnitShift {
  std::vector<Matrix<R>> factors;
  Matrix<R> completion;
};

template <class R>
UnitShift<R> factor_unit_shift(const R& ring, const typename R::Elem& a,
                               const typename R::Elem& b, const typename R::Elem& x) {
  using detail::mat2;
  using E = typename R::Elem;
  E u = ring.add(a, ring.mul(b, x));
  if (!ring.is_unit(u)) fail(Errc::not_a_unit, "a + b*x is not a unit");
  E v = ring.unit_inverse(u);
  E vb = ring.mul(v, b);
  Matrix<R> completion =
      mat2(ring, ring.one(), ring.neg(vb), x, ring.sub(ring.one(), ring.mul(x, vb)));
  Matrix<R> target = mat2(ring, a, b, ring.zero(), ring.zero());
  UnitShift<R> out{{}, completion};
  if (is_idempotent(target)) {
    out.factors.push_back(target);
    return out;
  }
  auto push = [&](Matrix<R> m) {
    if (out.factors.empty() || !(out.factors.back() == m)) out.factors.push_back(std::move(m));
  };
  Matrix<R> p0 = mat2(ring, ring.one(), ring.zero(), ring.zero(), ring.zero());
  if (u == ring.one()) {
    push(p0);
  } else {
    for (auto& f : table_factor_2x2(ring, Rank1Case::a, {u})) push(std::move(f));
  }
  E va = ring.mul(v, a);
  Matrix<R> e = mat2(ring, va, vb, ring.mul(x, va), ring.mul(x, vb));
  if (!ring.is_zero(x)) push(p0);
  push(e);
  return out;
}

// Full 2x2 path: singular matrix to an ordered idempotent product.
template <class R>
std::vector<Matrix<R>> factor_singular_2x2(const Matrix<R>& m) {
  using detail::mat2;
  using E = typename R::Elem;
  if (m.rows() != 2 || m.cols() != 2) fail(Errc::shape_mismatch, "expected a 2x2 matrix");
  const R& ring = m.ring();
  if (!ring.is_zero(det_bareiss(m))) fail(Errc::not_singular, "matrix is not singular");
  if (is_idempotent(m)) return {m};

  bool conjugated = false;
  Matrix<R> core = m;
  Matrix<R> p = Matrix<R>::identity(ring, 2);
  Matrix<R> p_inv = p;
  if (!(ring.is_zero(m(1, 0)) && ring.is_zero(m(1, 1)))) {
    auto u = left_null_row(m);
    auto cmp = unimodular_complete(u);
    p = cmp.p;
    p_inv = cmp.p_inv;
    core = mat_mul(mat_mul(p, m), p_inv);
    if (!(ring.is_zero(core(1, 0)) && ring.is_zero(core(1, 1)))) {
      fail(Errc::internal, "conjugation did not clear the bottom row");
    }
    conjugated = true;
  }

  E a = core(0, 0), b = core(0, 1);
  std::vector<Matrix<R>> factors;
  E g = gcd(ring, a, b);
  if (!(g == ring.one())) {
    for (auto& f : table_factor_2x2(ring, Rank1Case::a, {g})) factors.push_back(std::move(f));
    a = exact_div(ring, a, g);
    b = exact_div(ring, b, g);
  }
  auto chain = rseq_to_chain(ring, euclid_rseq(ring, a, b));
  if (!(chain.back().c == a && chain.back().d == b)) {
    fail(Errc::internal, "chain does not target (a, b)");
  }
  for (auto& f : chain_to_idempotents(ring, chain)) factors.push_back(std::move(f));
  if (conjugated) {
    for (auto& f : factors) f = mat_mul(mat_mul(p_inv, f), p);
  }
  return factors;
}

}  // namespace idemfact
