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

#ifndef IDEMFACT_CERTIFY_HPP
#define IDEMFACT_CERTIFY_HPP

#include <string>
#include <vector>

#include "idemfact/matrix.hpp"

namespace idemfact {

// A factorization claim: target == factors[0] * factors[1] * ... and every
// factor is idempotent.  The algorithm tag records which routine produced it.
template <typename R>
struct Certificate {
  Matrix<R> target;
  std::vector<Matrix<R>> factors;
  std::string algorithm;
};

struct Verdict {
  bool ok = false;
  std::string reason;
};

// Checks a certificate using only multiplication and equality.  An empty
// factor list certifies the identity matrix and nothing else.
template <typename R>
Verdict verify_certificate(const Certificate<R>& cert) {
  const auto& t = cert.target;
  if (t.rows() != t.cols()) return {false, "target is not square"};
  const int n = t.rows();
  for (std::size_t k = 0; k < cert.factors.size(); ++k) {
    const auto& f = cert.factors[k];
    if (!(f.ring() == t.ring()))
      return {false, "factor " + std::to_string(k) + " uses a different ring"};
    if (f.rows() != n || f.cols() != n)
      return {false, "factor " + std::to_string(k) + " has wrong shape"};
    if (!is_idempotent(f))
      return {false, "factor " + std::to_string(k) + " is not idempotent"};
  }
  Matrix<R> prod = Matrix<R>::identity(t.ring(), n);
  for (const auto& f : cert.factors) prod = mat_mul(prod, f);
  if (!(prod == t)) return {false, "product of factors differs from target"};
  return {true, ""};
}

}  // namespace idemfact

#endif  // IDEMFACT_CERTIFY_HPP
