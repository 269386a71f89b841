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

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "idemfact/cli.hpp"
#include "oracles.hpp"

using namespace idemfact;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Scoped override of IDEMFACT_MAX_SIZE.
struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value)
      ::setenv("IDEMFACT_MAX_SIZE", value, 1);
    else
      ::unsetenv("IDEMFACT_MAX_SIZE");
  }
  ~EnvGuard() { ::unsetenv("IDEMFACT_MAX_SIZE"); }
};

const std::string kSingular2 =
    R"({"cols":2,"entries":["5","3","0","0"],"ring":{"kind":"integer"},"rows":2})";
const std::string kInvertible2 =
    R"({"cols":2,"entries":["2","1","1","1"],"ring":{"kind":"integer"},"rows":2})";

std::string strip_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("factor emits a verifiable certificate") {
  auto f = run({"factor", "--in", "-"}, kSingular2);
  REQUIRE(f.code == 0);
  REQUIRE(f.err.empty());

  auto j = parse_json_text(f.out);
  REQUIRE(j["meta"]["count"] == 2);
  REQUIRE(j["meta"]["algorithm"] == "idempotent-product");

  auto v = run({"verify", "--in", "-"}, f.out);
  REQUIRE(v.code == 0);
  REQUIRE(v.out == "valid\n");
}

TEST_CASE("factor works across rings") {
  for (const std::string ring : {"integer", "rational", "gauss", "polymod:5"}) {
    auto g = run({"gen", "--ring", ring, "--size", "3", "--seed", "11"});
    REQUIRE(g.code == 0);
    auto f = run({"factor", "--in", "-"}, g.out);
    REQUIRE(f.code == 0);
    auto v = run({"verify", "--in", "-"}, f.out);
    REQUIRE(v.code == 0);
  }
}

TEST_CASE("factor rejects nonsingular input with a named error") {
  auto f = run({"factor", "--in", "-"}, kInvertible2);
  REQUIRE(f.code == 2);
  REQUIRE(f.err.find("NotSingular") != std::string::npos);

  auto ns = run({"factor", "--in", "-"},
                R"({"cols":3,"entries":["1","2","3","4","5","6"],"ring":{"kind":"integer"},"rows":2})");
  REQUIRE(ns.code == 2);
  REQUIRE(ns.err.find("NotSquare") != std::string::npos);
}

TEST_CASE("verify flags tampered certificates") {
  auto f = run({"factor", "--in", "-"}, kSingular2);
  auto j = parse_json_text(f.out);

  SECTION("mutated factor entry") {
    j["factors"][0]["entries"][0] = "7";
    auto v = run({"verify", "--in", "-"}, j.dump());
    REQUIRE(v.code == 1);
    REQUIRE(v.out.rfind("invalid:", 0) == 0);
  }
  SECTION("mutated target entry") {
    j["target"]["entries"][1] = "99";
    auto v = run({"verify", "--in", "-"}, j.dump());
    REQUIRE(v.code == 1);
  }
  SECTION("mismatched ring tags") {
    j["ring"]["kind"] = "rational";
    auto v = run({"verify", "--in", "-"}, j.dump());
    REQUIRE(v.code == 65);
  }
  SECTION("count out of sync") {
    j["meta"]["count"] = 5;
    auto v = run({"verify", "--in", "-"}, j.dump());
    REQUIRE(v.code == 65);
  }
}

TEST_CASE("gen is deterministic and singular") {
  auto a = run({"gen", "--ring", "integer", "--size", "4", "--seed", "42",
                "--bound", "9"});
  auto b = run({"gen", "--ring", "integer", "--size", "4", "--seed", "42",
                "--bound", "9"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);

  auto c = run({"gen", "--ring", "integer", "--size", "4", "--seed", "43",
                "--bound", "9"});
  REQUIRE(c.out != a.out);

  IntegerRing z;
  auto m = matrix_from_json(z, parse_json_text(a.out));
  REQUIRE(m.rows() == 4);
  REQUIRE(z.is_zero(det_bareiss(m)));

  GaussianRing zi;
  auto g = run({"gen", "--ring", "gauss", "--size", "3", "--seed", "7"});
  REQUIRE(zi.is_zero(det_bareiss(matrix_from_json(zi, parse_json_text(g.out)))));

  PolyModRing p5{5};
  auto p = run({"gen", "--ring", "polymod:5", "--size", "3", "--seed", "7"});
  REQUIRE(p5.is_zero(det_bareiss(matrix_from_json(p5, parse_json_text(p.out)))));
}

TEST_CASE("ge2 prints a row-operation decomposition") {
  auto r = run({"ge2", "--in", "-"}, kInvertible2);
  REQUIRE(r.code == 0);
  auto j = parse_json_text(r.out);
  REQUIRE(j["strategy"] == "euclid");
  REQUIRE(j["factors"].is_array());
  REQUIRE(j["factors"].size() == 4);
  REQUIRE(j["factors"][0]["kind"] == "swap");

  auto again = run({"ge2", "--in", "-"}, kInvertible2);
  REQUIRE(again.out == r.out);

  auto shifted = run({"ge2", "--in", "-", "--strategy", "unit-shift:-1"},
                     kInvertible2);
  REQUIRE(shifted.code == 0);
  REQUIRE(parse_json_text(shifted.out)["strategy"] == "unit-shift");

  // shift that fails to produce a unit surfaces as a domain error
  auto bad_shift = run({"ge2", "--in", "-", "--strategy", "unit-shift:0"},
                       kInvertible2);
  REQUIRE(bad_shift.code == 2);

  auto singular = run({"ge2", "--in", "-"}, kSingular2);
  REQUIRE(singular.code == 2);

  auto wrong_shape = run(
      {"ge2", "--in", "-"},
      R"({"cols":1,"entries":["1"],"ring":{"kind":"integer"},"rows":1})");
  REQUIRE(wrong_shape.code == 2);
  REQUIRE(wrong_shape.err.find("ShapeMismatch") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
  REQUIRE(run({}).code == 64);
  REQUIRE(run({"frobnicate"}).code == 64);
  REQUIRE(run({"gen", "--ring", "integer"}).code == 64);  // missing --size
  REQUIRE(run({"gen", "--ring", "quaternion", "--size", "3"}).code == 64);
  REQUIRE(run({"gen", "--ring", "polymod:6", "--size", "3"}).code == 64);
  REQUIRE(run({"gen", "--ring", "polymod:x", "--size", "3"}).code == 64);
  REQUIRE(run({"gen", "--ring", "integer", "--size", "0"}).code == 64);
  REQUIRE(run({"gen", "--ring", "integer", "--size", "80"}).code == 64);
  REQUIRE(run({"ge2", "--in", "-", "--strategy", "sideways"}, kInvertible2).code ==
          64);
  REQUIRE(run({"bench", "--ring", "integer", "--size", "1"}).code == 64);
}

TEST_CASE("size cap comes from the environment") {
  {
    EnvGuard env("abc");
    auto r = run({"gen", "--ring", "integer", "--size", "3"});
    REQUIRE(r.code == 64);
    REQUIRE(r.err.find("IDEMFACT_MAX_SIZE") != std::string::npos);
  }
  {
    EnvGuard env("2");
    auto tall = run({"factor", "--in", "-"},
                    R"({"cols":3,"entries":["0","0","0","0","0","0","0","0","0"],"ring":{"kind":"integer"},"rows":3})");
    REQUIRE(tall.code == 65);
    REQUIRE(tall.err.find("IDEMFACT_MAX_SIZE") != std::string::npos);
  }
  {
    EnvGuard env("100");
    auto r = run({"gen", "--ring", "integer", "--size", "80", "--seed", "1"});
    REQUIRE(r.code == 0);
  }
}

TEST_CASE("parse errors exit 65") {
  REQUIRE(run({"factor", "--in", "-"}, "{\"rows\":").code == 65);
  REQUIRE(run({"factor", "--in", "/nonexistent/input.json"}).code == 65);
  REQUIRE(run({"verify", "--in", "-"}, "[]").code == 65);
  auto r = run({"factor", "--in", "-"},
               R"({"cols":2,"entries":["5","3","0"],"ring":{"kind":"integer"},"rows":2})");
  REQUIRE(r.code == 65);
  REQUIRE(r.err.find("ParseError") != std::string::npos);
}

TEST_CASE("file input and output") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "idemfact-cli-test";
  fs::create_directories(dir);
  const auto mat = (dir / "m.json").string();
  const auto cert = (dir / "c.json").string();

  {
    std::ofstream f(mat);
    f << kSingular2;
  }
  REQUIRE(run({"factor", "--in", mat, "--out", cert}).code == 0);
  REQUIRE(run({"verify", "--in", cert}).code == 0);

  std::ifstream f(cert);
  std::stringstream buf;
  buf << f.rdbuf();
  auto piped = run({"factor", "--in", "-"}, kSingular2);
  REQUIRE(strip_newline(buf.str()) == strip_newline(piped.out));

  fs::remove_all(dir);
}

TEST_CASE("bench prints a table") {
  auto r = run({"bench", "--ring", "integer", "--size", "3", "--count", "2",
                "--seed", "7"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.rfind("n count mean_factors mean_ms\n", 0) == 0);
  // header plus one row each for n = 2 and n = 3
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  REQUIRE(lines == 3);
  REQUIRE(r.out.find("\n2 2 ") != std::string::npos);
  REQUIRE(r.out.find("\n3 2 ") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  REQUIRE(run({"--help"}).code == 0);
  auto r = run({"factor", "--help"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("factor") != std::string::npos);
}
