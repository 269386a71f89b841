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

#pragma once

#include <stdexcept>
#include <string>

namespace idemfact {

// Failure categories surfaced by the library. The CLI maps parse_error to
// exit code 65 and every other category to exit code 2.
enum class Errc {
  division_by_zero,
  ring_mismatch,
  both_zero,
  shape_mismatch,
  not_square,
  not_singular,
  not_unimodular,
  not_idempotent,
  not_a_unit,
  not_coprime,
  bad_chain,
  bad_length,
  not_normalized,
  not_invertible,
  size_too_small,
  parse_error,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::both_zero: return "BothZero";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_square: return "NotSquare";
    case Errc::not_singular: return "NotSingular";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::bad_chain: return "BadChain";
    case Errc::bad_length: return "BadLength";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::size_too_small: return "SizeTooSmall";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace idemfact
