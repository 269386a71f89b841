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

// JSON serialization for ring descriptors, elements, matrices, and
// certificates.  Output is canonical: nlohmann's default object storage is an
// ordered std::map, so dump() emits sorted keys with no whitespace; element
// encodings are fixed per ring.  Parsing is strict and reports parse_error on
// any malformed input.

#ifndef IDEMFACT_JSON_IO_HPP
#define IDEMFACT_JSON_IO_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <utility>

#include <json.hpp>

#include "idemfact/certify.hpp"
#include "idemfact/errors.hpp"
#include "idemfact/matrix.hpp"
#include "idemfact/rings.hpp"

namespace idemfact {

using json = nlohmann::json;

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

inline std::string canonical_dump(const json& j) { return j.dump(); }

namespace detail {

inline const json& get_field(const json& j, const char* key, const char* ctx) {
  if (!j.is_object())
    fail(Errc::parse_error, std::string(ctx) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(Errc::parse_error, std::string(ctx) + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string get_string(const json& j, const char* ctx) {
  if (!j.is_string())
    fail(Errc::parse_error, std::string(ctx) + ": expected a string");
  return j.get<std::string>();
}

// Accepts either of nlohmann's integer storage types so matrices built in
// memory round-trip the same as ones re-parsed from text.
inline std::uint64_t get_uint(const json& j, const char* ctx) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  fail(Errc::parse_error, std::string(ctx) + ": expected a nonnegative integer");
}

inline std::size_t get_size(const json& j, const char* ctx) {
  const std::uint64_t v = get_uint(j, ctx);
  if (v == 0)
    fail(Errc::parse_error, std::string(ctx) + ": expected a positive integer");
  return static_cast<std::size_t>(v);
}

// Strict decimal string: '-'? digit+.  No whitespace, no '+' sign; canonical
// output never produces either.
inline mpz_class parse_bigint(const std::string& s, const char* ctx) {
  std::size_t start = 0;
  if (start < s.size() && s[start] == '-') ++start;
  if (start == s.size())
    fail(Errc::parse_error, std::string(ctx) + ": empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      fail(Errc::parse_error,
           std::string(ctx) + ": bad integer literal \"" + s + "\"");
  }
  return mpz_class(s, 10);
}

inline std::uint64_t parse_residue(const std::string& s, std::uint64_t p,
                                   const char* ctx) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 10);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail(Errc::parse_error,
         std::string(ctx) + ": bad residue literal \"" + s + "\"");
  if (v >= p)
    fail(Errc::parse_error,
         std::string(ctx) + ": residue " + s + " not reduced mod " +
             std::to_string(p));
  return v;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Ring descriptors.

inline json descriptor_to_json(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::integer:
      return json{{"kind", "integer"}};
    case RingDescriptor::Kind::rational:
      return json{{"kind", "rational"}};
    case RingDescriptor::Kind::gauss:
      return json{{"kind", "gauss"}};
    case RingDescriptor::Kind::polymod:
      return json{{"kind", "polymod"}, {"p", d.modulus}};
  }
  fail(Errc::internal, "unknown ring kind");
}

inline RingDescriptor descriptor_from_json(const json& j) {
  const std::string kind =
      detail::get_string(detail::get_field(j, "kind", "ring"), "ring.kind");
  if (kind == "integer") return {RingDescriptor::Kind::integer, 0};
  if (kind == "rational") return {RingDescriptor::Kind::rational, 0};
  if (kind == "gauss") return {RingDescriptor::Kind::gauss, 0};
  if (kind == "polymod") {
    return {RingDescriptor::Kind::polymod,
            detail::get_uint(detail::get_field(j, "p", "ring"), "ring.p")};
  }
  fail(Errc::parse_error, "ring.kind: unknown kind \"" + kind + "\"");
}

// Invokes f with a concrete ring instance matching the descriptor.  The
// PolyModRing constructor validates the modulus.
template <class F>
decltype(auto) with_ring(const RingDescriptor& d, F&& f) {
  switch (d.kind) {
    case RingDescriptor::Kind::integer:
      return std::forward<F>(f)(IntegerRing{});
    case RingDescriptor::Kind::rational:
      return std::forward<F>(f)(RationalRing{});
    case RingDescriptor::Kind::gauss:
      return std::forward<F>(f)(GaussianRing{});
    case RingDescriptor::Kind::polymod:
      return std::forward<F>(f)(PolyModRing{d.modulus});
  }
  fail(Errc::internal, "unknown ring kind");
}

// --------------------------------------------------------------------------
// Elements.  integer: "-12"; rational: "3/4" or "3"; gauss: ["re","im"];
// polymod: ["c0","c1",...] low degree first, [] for zero.

inline json element_to_json(const IntegerRing&, const mpz_class& v) {
  return v.get_str();
}

inline mpz_class element_from_json(const IntegerRing&, const json& j) {
  return detail::parse_bigint(detail::get_string(j, "integer entry"),
                              "integer entry");
}

inline json element_to_json(const RationalRing&, const mpq_class& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline mpq_class element_from_json(const RationalRing&, const json& j) {
  const std::string s = detail::get_string(j, "rational entry");
  const auto slash = s.find('/');
  mpz_class num, den;
  if (slash == std::string::npos) {
    num = detail::parse_bigint(s, "rational entry");
    den = 1;
  } else {
    num = detail::parse_bigint(s.substr(0, slash), "rational entry");
    den = detail::parse_bigint(s.substr(slash + 1), "rational entry");
    if (den == 0) fail(Errc::parse_error, "rational entry: zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline json element_to_json(const GaussianRing&, const GaussInt& v) {
  return json::array({v.re.get_str(), v.im.get_str()});
}

inline GaussInt element_from_json(const GaussianRing&, const json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(Errc::parse_error, "gauss entry: expected [re, im]");
  return {detail::parse_bigint(detail::get_string(j[0], "gauss entry"),
                               "gauss re"),
          detail::parse_bigint(detail::get_string(j[1], "gauss entry"),
                               "gauss im")};
}

inline json element_to_json(const PolyModRing&, const PolyFp& v) {
  json a = json::array();
  for (std::uint64_t c : v.c) a.push_back(std::to_string(c));
  return a;
}

inline PolyFp element_from_json(const PolyModRing& ring, const json& j) {
  if (!j.is_array())
    fail(Errc::parse_error, "polymod entry: expected a coefficient array");
  PolyFp v;
  for (const auto& c : j) {
    v.c.push_back(detail::parse_residue(detail::get_string(c, "polymod entry"),
                                        ring.modulus(), "polymod entry"));
  }
  while (!v.c.empty() && v.c.back() == 0) v.c.pop_back();
  return v;
}

// --------------------------------------------------------------------------
// Matrices: {"cols": m, "entries": [flat row-major], "ring": ..., "rows": n}.

template <class R>
json matrix_to_json(const Matrix<R>& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      entries.push_back(element_to_json(m.ring(), m(i, j)));
  return json{{"ring", descriptor_to_json(m.ring().descriptor())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

template <class R>
Matrix<R> matrix_from_json(const R& ring, const json& j) {
  const RingDescriptor d =
      descriptor_from_json(detail::get_field(j, "ring", "matrix"));
  if (!(d == ring.descriptor()))
    fail(Errc::parse_error, "matrix: ring tag does not match expected ring");
  const std::size_t rows =
      detail::get_size(detail::get_field(j, "rows", "matrix"), "matrix.rows");
  const std::size_t cols =
      detail::get_size(detail::get_field(j, "cols", "matrix"), "matrix.cols");
  if (rows > 1000000 || cols > 1000000)
    fail(Errc::parse_error, "matrix dimensions out of range");
  const json& entries = detail::get_field(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows * cols)
    fail(Errc::parse_error, "matrix.entries: expected rows*cols entries");
  Matrix<R> m(ring, static_cast<int>(rows), static_cast<int>(cols));
  std::size_t k = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c)
      m(i, c) = element_from_json(ring, entries[k++]);
  return m;
}

// --------------------------------------------------------------------------
// Certificates: {"factors": [...], "meta": {"algorithm": s, "count": k},
//                "ring": ..., "target": <matrix>}.

template <class R>
json certificate_to_json(const Certificate<R>& c) {
  json factors = json::array();
  for (const auto& f : c.factors) factors.push_back(matrix_to_json(f));
  return json{{"ring", descriptor_to_json(c.target.ring().descriptor())},
              {"target", matrix_to_json(c.target)},
              {"factors", std::move(factors)},
              {"meta", json{{"algorithm", c.algorithm},
                            {"count", c.factors.size()}}}};
}

template <class R>
Certificate<R> certificate_from_json(const R& ring, const json& j) {
  const RingDescriptor d =
      descriptor_from_json(detail::get_field(j, "ring", "certificate"));
  if (!(d == ring.descriptor()))
    fail(Errc::parse_error, "certificate: ring tag does not match expected ring");
  Certificate<R> c{matrix_from_json(ring, detail::get_field(j, "target",
                                                            "certificate")),
                   {},
                   ""};
  const json& factors = detail::get_field(j, "factors", "certificate");
  if (!factors.is_array())
    fail(Errc::parse_error, "certificate.factors: expected an array");
  for (const auto& f : factors) c.factors.push_back(matrix_from_json(ring, f));
  const json& meta = detail::get_field(j, "meta", "certificate");
  c.algorithm = detail::get_string(
      detail::get_field(meta, "algorithm", "certificate.meta"),
      "certificate.meta.algorithm");
  const json& count = detail::get_field(meta, "count", "certificate.meta");
  if (detail::get_uint(count, "certificate.meta.count") != c.factors.size())
    fail(Errc::parse_error,
         "certificate.meta.count: does not match the factor list");
  return c;
}

}  // namespace idemfact

#endif  // IDEMFACT_JSON_IO_HPP
