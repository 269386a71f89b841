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

// Field of fractions over any of the Euclidean domains. Fractions are kept
// reduced (gcd(num, den) canonical) with a canonical-associate denominator,
// so structural equality is field equality. FractionField models the same
// ring concept as the base domains, which lets the generic elimination
// routines run unchanged over fractions.

#pragma once

#include <utility>

#include "idemfact/errors.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

template <class R>
struct Frac {
  typename R::Elem num, den;
  bool operator==(const Frac&) const = default;
};

template <class R>
class FractionField {
 public:
  using Base = R;
  using Elem = Frac<R>;

  explicit FractionField(R base) : base_(std::move(base)) {}

  const R& base() const { return base_; }
  bool operator==(const FractionField& o) const { return base_ == o.base_; }

  // Reduce and normalize so the denominator is canonical (1 over a field).
  Elem make(const typename R::Elem& num, const typename R::Elem& den) const {
    if (base_.is_zero(den)) fail(Errc::division_by_zero, "fraction with zero denominator");
    if (base_.is_zero(num)) return {base_.zero(), base_.one()};
    auto g = gcd(base_, num, den);
    auto n = exact_div(base_, num, g);
    auto d = exact_div(base_, den, g);
    auto un = base_.canonical_associate(d);
    auto vinv = base_.unit_inverse(un.unit);
    return {base_.mul(n, vinv), un.canonical};
  }

  Elem from_base(const typename R::Elem& a) const { return {a, base_.one()}; }

  Elem zero() const { return {base_.zero(), base_.one()}; }
  Elem one() const { return {base_.one(), base_.one()}; }
  bool is_zero(const Elem& a) const { return base_.is_zero(a.num); }

  Elem add(const Elem& a, const Elem& b) const {
    return make(base_.add(base_.mul(a.num, b.den), base_.mul(b.num, a.den)),
                base_.mul(a.den, b.den));
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  Elem neg(const Elem& a) const { return {base_.neg(a.num), a.den}; }

  Elem mul(const Elem& a, const Elem& b) const {
    return make(base_.mul(a.num, b.num), base_.mul(a.den, b.den));
  }

  Elem div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) fail(Errc::division_by_zero, "fraction division by zero");
    return make(base_.mul(a.num, b.den), base_.mul(a.den, b.num));
  }

  DivResult<Elem> euclid_div(const Elem& a, const Elem& b) const {
    return {div(a, b), zero()};
  }

  UnitPart<Elem> canonical_associate(const Elem& a) const {
    if (is_zero(a)) return {one(), zero()};
    return {a, one()};
  }

  bool is_unit(const Elem& a) const { return !is_zero(a); }

  Elem unit_inverse(const Elem& a) const {
    if (is_zero(a)) fail(Errc::not_a_unit, "zero fraction is not a unit");
    return make(a.den, a.num);
  }

 private:
  R base_;
};

}  // namespace idemfact
