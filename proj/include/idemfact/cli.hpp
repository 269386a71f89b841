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

// Command-line front end.  run_command is stream-parameterized so tests can
// drive it in-process.  Exit codes: 0 success, 1 invalid certificate,
// 2 domain error (NotSingular, NotCoprime, ...), 64 usage, 65 parse error,
// 70 unexpected internal failure.

#ifndef IDEMFACT_CLI_HPP
#define IDEMFACT_CLI_HPP

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "idemfact/certify.hpp"
#include "idemfact/errors.hpp"
#include "idemfact/ge.hpp"
#include "idemfact/gen.hpp"
#include "idemfact/ipn.hpp"
#include "idemfact/json_io.hpp"

namespace idemfact::cli {

namespace detail {

inline std::string read_all(std::istream& s) {
  std::ostringstream o;
  o << s.rdbuf();
  return o.str();
}

inline std::string slurp_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) fail(Errc::parse_error, "cannot open input file " + path);
  return read_all(f);
}

inline void write_output(const std::string& path, std::ostream& out,
                         const std::string& text) {
  if (path == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) fail(Errc::parse_error, "cannot open output file " + path);
  f << text << "\n";
}

// IDEMFACT_MAX_SIZE; nullopt means the variable is set but malformed.
inline std::optional<std::size_t> max_size_cap() {
  const char* v = std::getenv("IDEMFACT_MAX_SIZE");
  if (!v) return std::size_t{64};
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(v, v + std::string_view(v).size(), n, 10);
  if (ec != std::errc{} || *ptr != '\0' || n == 0) return std::nullopt;
  return static_cast<std::size_t>(n);
}

// Pre-parse check on a matrix object so an oversized input is rejected as a
// parse error before any entries are materialized.
inline void require_size_within(const json& jm, std::size_t cap) {
  const std::size_t r = idemfact::detail::get_size(
      idemfact::detail::get_field(jm, "rows", "matrix"), "matrix.rows");
  const std::size_t c = idemfact::detail::get_size(
      idemfact::detail::get_field(jm, "cols", "matrix"), "matrix.cols");
  if (r > cap || c > cap)
    fail(Errc::parse_error, "matrix size exceeds IDEMFACT_MAX_SIZE (" +
                                std::to_string(cap) + ")");
}

// --ring flag: integer | rational | gauss | polymod:<p>.
inline std::optional<RingDescriptor> parse_ring_flag(const std::string& s) {
  if (s == "integer") return RingDescriptor{RingDescriptor::Kind::integer, 0};
  if (s == "rational") return RingDescriptor{RingDescriptor::Kind::rational, 0};
  if (s == "gauss") return RingDescriptor{RingDescriptor::Kind::gauss, 0};
  if (s.rfind("polymod:", 0) == 0) {
    const std::string_view digits = std::string_view(s).substr(8);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p, 10);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    try {
      PolyModRing check{p};
    } catch (const Error&) {
      return std::nullopt;
    }
    return RingDescriptor{RingDescriptor::Kind::polymod, p};
  }
  return std::nullopt;
}

// --strategy flag: euclid | unit-shift:<x>.  The shift is an element literal:
// bare text for integer/rational entries, JSON for array-encoded rings.
template <class R>
GE2Strategy<R> parse_strategy_flag(const R& ring, const std::string& s) {
  using Kind = typename GE2Strategy<R>::Kind;
  if (s == "euclid") return {Kind::euclid, ring.zero()};
  if (s.rfind("unit-shift:", 0) != 0)
    fail(Errc::parse_error, "strategy must be euclid or unit-shift:<x>");
  const std::string lit = s.substr(11);
  json j;
  try {
    j = json::parse(lit);
  } catch (const json::exception&) {
    j = lit;  // bare literal like 3 or -2/5
  }
  if (j.is_number_integer()) j = std::to_string(j.get<std::int64_t>());
  return {Kind::unit_shift, element_from_json(ring, j)};
}

template <class R>
json ge_factor_to_json(const R& ring, const GEFactor<R>& f) {
  using Kind = typename GEFactor<R>::Kind;
  switch (f.kind) {
    case Kind::elementary:
      return json{{"kind", "elementary"},
                  {"i", f.i},
                  {"j", f.j},
                  {"coef", element_to_json(ring, f.c)}};
    case Kind::swap:
      return json{{"kind", "swap"}, {"i", f.i}, {"j", f.j}};
    case Kind::diag_units: {
      json units = json::array();
      for (const auto& u : f.units) units.push_back(element_to_json(ring, u));
      return json{{"kind", "diag-units"}, {"units", std::move(units)}};
    }
  }
  fail(Errc::internal, "unknown GE factor kind");
}

}  // namespace detail

// Runs one subcommand.  args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::istream& in,
                       std::ostream& out, std::ostream& err) {
  CLI::App app{"exact factorization of singular matrices into idempotents",
               "idemfact"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path = "-";
  std::string ring_flag = "integer";
  std::string strategy_flag = "euclid";
  std::uint64_t seed = 0;
  std::uint64_t bound = 9;
  std::uint64_t size = 0;
  std::uint64_t count = 25;

  auto* factor_cmd =
      app.add_subcommand("factor", "factor a singular matrix into idempotents");
  factor_cmd->add_option("--in", in_path, "matrix JSON path or - for stdin");
  factor_cmd->add_option("--out", out_path, "certificate path or - for stdout");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("--in", in_path, "certificate path or - for stdin");

  auto* ge2_cmd = app.add_subcommand(
      "ge2", "decompose an invertible 2x2 matrix into row-operation factors");
  ge2_cmd->add_option("--in", in_path, "matrix JSON path or - for stdin");
  ge2_cmd->add_option("--out", out_path, "factor list path or - for stdout");
  ge2_cmd->add_option("--strategy", strategy_flag, "euclid | unit-shift:<x>");

  auto* gen_cmd =
      app.add_subcommand("gen", "emit a reproducible singular matrix");
  gen_cmd->add_option("--ring", ring_flag,
                      "integer | rational | gauss | polymod:<p>")
      ->required();
  gen_cmd->add_option("--size", size, "matrix dimension n")->required();
  gen_cmd->add_option("--seed", seed, "PRNG seed");
  gen_cmd->add_option("--bound", bound, "entry magnitude / degree bound");
  gen_cmd->add_option("--out", out_path, "matrix path or - for stdout");

  auto* bench_cmd =
      app.add_subcommand("bench", "time factor+verify over generated batches");
  bench_cmd->add_option("--ring", ring_flag,
                        "integer | rational | gauss | polymod:<p>");
  bench_cmd->add_option("--size", size, "largest dimension (runs n = 2..size)");
  bench_cmd->add_option("--seed", seed, "PRNG seed");
  bench_cmd->add_option("--bound", bound, "entry magnitude / degree bound");
  bench_cmd->add_option("--count", count, "instances per dimension");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  const auto cap = detail::max_size_cap();
  if (!cap) {
    err << "usage error: IDEMFACT_MAX_SIZE must be a positive integer\n";
    return 64;
  }

  try {
    if (factor_cmd->parsed()) {
      const json j = parse_json_text(detail::slurp_input(in_path, in));
      const RingDescriptor d = descriptor_from_json(
          idemfact::detail::get_field(j, "ring", "matrix"));
      return with_ring(d, [&](auto ring) -> int {
        detail::require_size_within(j, *cap);
        auto m = matrix_from_json(ring, j);
        if (m.rows() != m.cols())
          fail(Errc::not_square, "factor requires a square matrix");
        using R = std::decay_t<decltype(ring)>;
        Certificate<R> cert{m, factor_singular(m), "idempotent-product"};
        detail::write_output(out_path, out,
                             canonical_dump(certificate_to_json(cert)));
        return 0;
      });
    }

    if (verify_cmd->parsed()) {
      const json j = parse_json_text(detail::slurp_input(in_path, in));
      const RingDescriptor d = descriptor_from_json(
          idemfact::detail::get_field(j, "ring", "certificate"));
      return with_ring(d, [&](auto ring) -> int {
        detail::require_size_within(
            idemfact::detail::get_field(j, "target", "certificate"), *cap);
        const json& factors =
            idemfact::detail::get_field(j, "factors", "certificate");
        if (factors.is_array())
          for (const auto& f : factors) detail::require_size_within(f, *cap);
        auto cert = certificate_from_json(ring, j);
        Verdict v = verify_certificate(cert);
        if (v.ok) {
          out << "valid\n";
          return 0;
        }
        out << "invalid: " << v.reason << "\n";
        return 1;
      });
    }

    if (ge2_cmd->parsed()) {
      const json j = parse_json_text(detail::slurp_input(in_path, in));
      const RingDescriptor d = descriptor_from_json(
          idemfact::detail::get_field(j, "ring", "matrix"));
      return with_ring(d, [&](auto ring) -> int {
        detail::require_size_within(j, *cap);
        auto m = matrix_from_json(ring, j);
        if (m.rows() != 2 || m.cols() != 2)
          fail(Errc::shape_mismatch, "ge2 requires a 2x2 matrix");
        using R = std::decay_t<decltype(ring)>;
        GE2Strategy<R> strategy;
        try {
          strategy = detail::parse_strategy_flag(ring, strategy_flag);
        } catch (const Error& e) {
          err << "usage error: " << e.what() << "\n";
          return 64;
        }
        auto factors = ge2_decompose(m, strategy);
        json jf = json::array();
        for (const auto& f : factors)
          jf.push_back(detail::ge_factor_to_json(ring, f));
        const json result{
            {"ring", descriptor_to_json(ring.descriptor())},
            {"strategy", strategy_flag == "euclid" ? "euclid" : "unit-shift"},
            {"factors", std::move(jf)}};
        detail::write_output(out_path, out, canonical_dump(result));
        return 0;
      });
    }

    if (gen_cmd->parsed()) {
      const auto d = detail::parse_ring_flag(ring_flag);
      if (!d) {
        err << "usage error: bad --ring value " << ring_flag << "\n";
        return 64;
      }
      if (size == 0 || size > *cap) {
        err << "usage error: --size must be in [1, " << *cap << "]\n";
        return 64;
      }
      if (bound == 0) {
        err << "usage error: --bound must be at least 1\n";
        return 64;
      }
      return with_ring(*d, [&](auto ring) -> int {
        auto m = gen_singular(ring, static_cast<std::size_t>(size), seed, bound);
        detail::write_output(out_path, out, canonical_dump(matrix_to_json(m)));
        return 0;
      });
    }

    if (bench_cmd->parsed()) {
      const auto d = detail::parse_ring_flag(ring_flag);
      if (!d) {
        err << "usage error: bad --ring value " << ring_flag << "\n";
        return 64;
      }
      if (size == 0) size = 5;
      if (size < 2 || size > *cap) {
        err << "usage error: --size must be in [2, " << *cap << "]\n";
        return 64;
      }
      if (bound == 0 || count == 0) {
        err << "usage error: --bound and --count must be at least 1\n";
        return 64;
      }
      return with_ring(*d, [&](auto ring) -> int {
        using R = std::decay_t<decltype(ring)>;
        out << "n count mean_factors mean_ms\n";
        SplitMix64 seeder(seed);
        for (std::size_t n = 2; n <= size; ++n) {
          std::uint64_t total_factors = 0;
          double total_ms = 0.0;
          for (std::uint64_t k = 0; k < count; ++k) {
            auto m = gen_singular(ring, n, seeder.next(), bound);
            const auto t0 = std::chrono::steady_clock::now();
            Certificate<R> cert{m, factor_singular(m), "idempotent-product"};
            Verdict v = verify_certificate(cert);
            const auto t1 = std::chrono::steady_clock::now();
            if (!v.ok)
              fail(Errc::internal, "generated certificate failed to verify: " +
                                       v.reason);
            total_factors += cert.factors.size();
            total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
          }
          const double denom = static_cast<double>(count);
          out << n << " " << count << " " << std::fixed << std::setprecision(1)
              << static_cast<double>(total_factors) / denom << " "
              << std::setprecision(3) << total_ms / denom << "\n";
        }
        return 0;
      });
    }

    err << "usage error: no subcommand selected\n";
    return 64;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::parse_error ? 65 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
}

}  // namespace idemfact::cli

#endif  // IDEMFACT_CLI_HPP
