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

// Exact-arithmetic Euclidean domains: integers, rationals, Gaussian integers
// and F_p[x]. Every ring is a small value object whose member functions
// implement the shared concept used by the generic algorithms:
//
//   using Elem = ...;                 value type, regular, operator==
//   zero(), one(), is_zero(a)
//   add(a,b), sub(a,b), mul(a,b), neg(a)
//   euclid_div(a,b) -> {quot, rem}    canonical division, N(rem) < N(b)
//   canonical_associate(a) -> {unit, canonical}   with a == unit * canonical
//   is_unit(a), unit_inverse(a)
//
// Canonical associates: nonnegative for integers, 1 for rational nonzero,
// monic for polynomials, and the quarter-plane re > 0, im >= 0 (with 0 for
// zero) for Gaussian integers. canonical_associate is idempotent on its
// canonical output, and units always canonicalize to one.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "idemfact/errors.hpp"

namespace idemfact {

struct RingDescriptor {
  enum class Kind { integer, rational, gauss, polymod };
  Kind kind = Kind::integer;
  std::uint64_t modulus = 0;  // polymod only
  bool operator==(const RingDescriptor&) const = default;
};

template <class E>
struct DivResult {
  E quot, rem;
};

template <class E>
struct ExtGcd {
  E g, x, y;  // g == a*x + b*y
};

template <class E>
struct UnitPart {
  E unit, canonical;  // value == unit * canonical
};

// ---------------------------------------------------------------------------
// Integers (GMP), remainders normalized to 0 <= r < |b|.

class IntegerRing {
 public:
  using Elem = mpz_class;

  RingDescriptor descriptor() const { return {RingDescriptor::Kind::integer, 0}; }
  bool operator==(const IntegerRing&) const = default;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem neg(const Elem& a) const { return Elem(-a); }

  DivResult<Elem> euclid_div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) fail(Errc::division_by_zero, "integer division by zero");
    Elem q, r;
    if (sgn(b) > 0) {
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
      mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    return {q, r};
  }

  UnitPart<Elem> canonical_associate(const Elem& a) const {
    if (sgn(a) < 0) return {Elem(-1), Elem(-a)};
    return {Elem(1), a};
  }

  bool is_unit(const Elem& a) const { return a == 1 || a == -1; }

  Elem unit_inverse(const Elem& a) const {
    if (!is_unit(a)) fail(Errc::not_a_unit, "integer is not a unit");
    return a;  // 1 and -1 are self-inverse
  }
};

// ---------------------------------------------------------------------------
// Rationals (GMP mpq, always reduced with positive denominator). A field:
// euclid_div is exact with zero remainder.

class RationalRing {
 public:
  using Elem = mpq_class;

  RingDescriptor descriptor() const { return {RingDescriptor::Kind::rational, 0}; }
  bool operator==(const RationalRing&) const = default;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem neg(const Elem& a) const { return Elem(-a); }

  DivResult<Elem> euclid_div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) fail(Errc::division_by_zero, "rational division by zero");
    return {Elem(a / b), Elem(0)};
  }

  UnitPart<Elem> canonical_associate(const Elem& a) const {
    if (is_zero(a)) return {one(), zero()};
    return {a, one()};
  }

  bool is_unit(const Elem& a) const { return !is_zero(a); }

  Elem unit_inverse(const Elem& a) const {
    if (is_zero(a)) fail(Errc::not_a_unit, "zero is not a unit");
    return Elem(1 / a);
  }
};

// ---------------------------------------------------------------------------
// Gaussian integers Z[i] with the rounded-quotient division (each quotient
// coordinate rounds to the nearest integer, ties toward zero), which gives
// N(r) <= N(b)/2 for the norm N(x+yi) = x^2 + y^2.

struct GaussInt {
  mpz_class re, im;
  bool operator==(const GaussInt&) const = default;
};

class GaussianRing {
 public:
  using Elem = GaussInt;

  RingDescriptor descriptor() const { return {RingDescriptor::Kind::gauss, 0}; }
  bool operator==(const GaussianRing&) const = default;

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  bool is_zero(const Elem& a) const { return sgn(a.re) == 0 && sgn(a.im) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return {mpz_class(a.re + b.re), mpz_class(a.im + b.im)}; }
  Elem sub(const Elem& a, const Elem& b) const { return {mpz_class(a.re - b.re), mpz_class(a.im - b.im)}; }
  Elem neg(const Elem& a) const { return {mpz_class(-a.re), mpz_class(-a.im)}; }

  Elem mul(const Elem& a, const Elem& b) const {
    return {mpz_class(a.re * b.re - a.im * b.im), mpz_class(a.re * b.im + a.im * b.re)};
  }

  mpz_class norm(const Elem& a) const { return mpz_class(a.re * a.re + a.im * a.im); }

  DivResult<Elem> euclid_div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) fail(Errc::division_by_zero, "Gaussian division by zero");
    // a/b = a * conj(b) / N(b); round both coordinates.
    mpz_class x(a.re * b.re + a.im * b.im);
    mpz_class y(a.im * b.re - a.re * b.im);
    mpz_class n = norm(b);
    Elem q{round_nearest(x, n), round_nearest(y, n)};
    Elem r = sub(a, mul(b, q));
    return {q, r};
  }

  UnitPart<Elem> canonical_associate(const Elem& a) const {
    if (is_zero(a)) return {one(), zero()};
    // Rotate by i until re > 0, im >= 0 (the quarter-plane is a fundamental
    // domain for multiplication by i); then a = (a/c) * c with a/c a unit.
    Elem c = a;
    for (int k = 0; k < 3 && !(sgn(c.re) > 0 && sgn(c.im) >= 0); ++k) {
      c = Elem{mpz_class(-c.im), c.re};  // c *= i
    }
    return {exact_unit_quotient(a, c), c};
  }

  bool is_unit(const Elem& a) const { return norm(a) == 1; }

  Elem unit_inverse(const Elem& a) const {
    if (!is_unit(a)) fail(Errc::not_a_unit, "Gaussian integer is not a unit");
    return {a.re, mpz_class(-a.im)};  // conjugate of a unit
  }

 private:
  // Nearest integer to x/n for n > 0, ties toward zero.
  static mpz_class round_nearest(const mpz_class& x, const mpz_class& n) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (2 * abs(r) > n) q += sgn(r);
    return q;
  }

  // a / c where c is a known associate of a (quotient is a unit).
  Elem exact_unit_quotient(const Elem& a, const Elem& c) const {
    mpz_class n = norm(c);
    mpz_class x((a.re * c.re + a.im * c.im) / n);
    mpz_class y((a.im * c.re - a.re * c.im) / n);
    return {x, y};
  }
};

// ---------------------------------------------------------------------------
// F_p[x]: dense coefficient vectors, low degree first, no trailing zeros,
// residues in [0, p). The modulus must be a prime below 2^31 so coefficient
// products fit in uint64.

struct PolyFp {
  std::vector<std::uint64_t> c;
  bool operator==(const PolyFp&) const = default;
};

class PolyModRing {
 public:
  using Elem = PolyFp;

  explicit PolyModRing(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t(1) << 31) || !is_prime(p)) {
      fail(Errc::parse_error, "polymod modulus must be a prime below 2^31");
    }
  }

  std::uint64_t modulus() const { return p_; }
  RingDescriptor descriptor() const { return {RingDescriptor::Kind::polymod, p_}; }
  bool operator==(const PolyModRing& o) const { return p_ == o.p_; }

  Elem zero() const { return {}; }
  Elem one() const { return {{1}}; }
  bool is_zero(const Elem& a) const { return a.c.empty(); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      std::uint64_t s = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
      r.c[i] = s >= p_ ? s - p_ : s;
    }
    trim(r);
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  Elem neg(const Elem& a) const {
    Elem r = a;
    for (auto& v : r.c) v = v == 0 ? 0 : p_ - v;
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    Elem r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p_;
      }
    }
    trim(r);
    return r;
  }

  DivResult<Elem> euclid_div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) fail(Errc::division_by_zero, "polynomial division by zero");
    if (a.c.size() < b.c.size()) return {zero(), a};
    Elem rem = a;
    Elem quot;
    quot.c.assign(a.c.size() - b.c.size() + 1, 0);
    std::uint64_t inv_lead = mod_inverse(b.c.back());
    for (std::size_t k = quot.c.size(); k-- > 0;) {
      std::uint64_t coef = rem.c[k + b.c.size() - 1] * inv_lead % p_;
      quot.c[k] = coef;
      if (coef == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        std::uint64_t t = coef * b.c[j] % p_;
        std::uint64_t& dst = rem.c[k + j];
        dst = dst >= t ? dst - t : dst + p_ - t;
      }
    }
    rem.c.resize(b.c.size() - 1);
    trim(rem);
    trim(quot);
    return {quot, rem};
  }

  UnitPart<Elem> canonical_associate(const Elem& a) const {
    if (is_zero(a)) return {one(), zero()};
    std::uint64_t lead = a.c.back();
    if (lead == 1) return {one(), a};
    Elem monic = a;
    std::uint64_t inv = mod_inverse(lead);
    for (auto& v : monic.c) v = v * inv % p_;
    return {Elem{{lead}}, monic};
  }

  bool is_unit(const Elem& a) const { return a.c.size() == 1; }

  Elem unit_inverse(const Elem& a) const {
    if (!is_unit(a)) fail(Errc::not_a_unit, "polynomial is not a unit");
    return Elem{{mod_inverse(a.c[0])}};
  }

 private:
  std::uint64_t p_;

  static bool is_prime(std::uint64_t p) {
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
      if (p % d == 0) return false;
    }
    return true;
  }

  void trim(Elem& a) const {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  }

  std::uint64_t mod_inverse(std::uint64_t a) const {
    // Extended Euclid over int64; p_ < 2^31 keeps everything in range.
    std::int64_t t = 0, nt = 1, r = std::int64_t(p_), nr = std::int64_t(a % p_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) fail(Errc::not_a_unit, "no inverse modulo p");
    return std::uint64_t(t < 0 ? t + std::int64_t(p_) : t);
  }
};

// ---------------------------------------------------------------------------
// Generic Euclidean-domain helpers.

// Quotient with the remainder known to vanish.
template <class R>
typename R::Elem exact_div(const R& ring, const typename R::Elem& a,
                           const typename R::Elem& b) {
  auto d = ring.euclid_div(a, b);
  if (!ring.is_zero(d.rem)) fail(Errc::internal, "inexact division");
  return d.quot;
}

// Iterative extended Euclid. The returned g is the canonical associate of the
// gcd and satisfies g == a*x + b*y exactly.
template <class R>
ExtGcd<typename R::Elem> ext_gcd(const R& ring, const typename R::Elem& a,
                                 const typename R::Elem& b) {
  using E = typename R::Elem;
  if (ring.is_zero(a) && ring.is_zero(b)) {
    fail(Errc::both_zero, "ext_gcd requires a nonzero argument");
  }
  E r0 = a, r1 = b;
  E x0 = ring.one(), x1 = ring.zero();
  E y0 = ring.zero(), y1 = ring.one();
  while (!ring.is_zero(r1)) {
    auto d = ring.euclid_div(r0, r1);
    E r2 = d.rem;
    E x2 = ring.sub(x0, ring.mul(d.quot, x1));
    E y2 = ring.sub(y0, ring.mul(d.quot, y1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  auto un = ring.canonical_associate(r0);
  E vinv = ring.unit_inverse(un.unit);
  return {un.canonical, ring.mul(vinv, x0), ring.mul(vinv, y0)};
}

// gcd without Bezout coefficients; gcd(0, 0) is 0 so it folds over lists.
template <class R>
typename R::Elem gcd(const R& ring, const typename R::Elem& a,
                     const typename R::Elem& b) {
  using E = typename R::Elem;
  E r0 = a, r1 = b;
  while (!ring.is_zero(r1)) {
    E r2 = ring.euclid_div(r0, r1).rem;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return ring.canonical_associate(r0).canonical;
}

template <class R>
typename R::Elem lcm(const R& ring, const typename R::Elem& a,
                     const typename R::Elem& b) {
  if (ring.is_zero(a) || ring.is_zero(b)) return ring.zero();
  auto g = gcd(ring, a, b);
  auto m = ring.mul(a, exact_div(ring, b, g));
  return ring.canonical_associate(m).canonical;
}

}  // namespace idemfact
