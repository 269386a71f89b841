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

// Deterministic instance generation.  The PRNG is splitmix64 and the draw
// order is pinned (documented per ring below) so that identical (ring, size,
// seed, bound) always produce identical matrices, across platforms.

#ifndef IDEMFACT_GEN_HPP
#define IDEMFACT_GEN_HPP

#include <cstdint>

#include "idemfact/errors.hpp"
#include "idemfact/matrix.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// One draw per element.  integer: (next mod (2m+1)) - m, i.e. [-m, m].
inline mpz_class draw_element(const IntegerRing&, SplitMix64& g,
                              std::uint64_t bound) {
  const std::uint64_t v = g.next() % (2 * bound + 1);
  return mpz_class(static_cast<long>(static_cast<std::int64_t>(v) -
                                     static_cast<std::int64_t>(bound)));
}

// rational: numerator by the integer scheme, then denominator (next mod m)+1.
inline mpq_class draw_element(const RationalRing&, SplitMix64& g,
                              std::uint64_t bound) {
  const mpz_class num = draw_element(IntegerRing{}, g, bound);
  const std::uint64_t den = g.next() % bound + 1;
  mpq_class q(num, mpz_class(static_cast<unsigned long>(den)));
  q.canonicalize();
  return q;
}

// gauss: real part by the integer scheme, then imaginary part.
inline GaussInt draw_element(const GaussianRing&, SplitMix64& g,
                             std::uint64_t bound) {
  mpz_class re = draw_element(IntegerRing{}, g, bound);
  mpz_class im = draw_element(IntegerRing{}, g, bound);
  return {std::move(re), std::move(im)};
}

// polymod: m+1 residues (degree <= m) low-to-high, each next mod p; trailing
// zeros trimmed after all m+1 draws so the draw count is constant.
inline PolyFp draw_element(const PolyModRing& ring, SplitMix64& g,
                           std::uint64_t bound) {
  PolyFp v;
  for (std::uint64_t k = 0; k <= bound; ++k)
    v.c.push_back(g.next() % ring.modulus());
  while (!v.c.empty() && v.c.back() == 0) v.c.pop_back();
  return v;
}

// Fills row-major: row 0 left to right, then row 1, ...
template <class R>
Matrix<R> draw_matrix(const R& ring, SplitMix64& g, std::size_t rows,
                      std::size_t cols, std::uint64_t bound) {
  Matrix<R> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = draw_element(ring, g, bound);
  return m;
}

// Singular n x n matrix as a thin product (n x (n-1)) * ((n-1) x n); the left
// factor is drawn first, both row-major.  n = 1 yields the zero matrix.
template <class R>
Matrix<R> gen_singular(const R& ring, std::size_t n, std::uint64_t seed,
                       std::uint64_t bound) {
  if (n == 0) fail(Errc::parse_error, "size must be at least 1");
  if (bound == 0) fail(Errc::parse_error, "bound must be at least 1");
  SplitMix64 g(seed);
  if (n == 1) return Matrix<R>(ring, 1, 1);
  Matrix<R> a = draw_matrix(ring, g, n, n - 1, bound);
  Matrix<R> b = draw_matrix(ring, g, n - 1, n, bound);
  return mat_mul(a, b);
}

}  // namespace idemfact

#endif  // IDEMFACT_GEN_HPP
