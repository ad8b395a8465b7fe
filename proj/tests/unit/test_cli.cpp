// Copyright 2026 The x0n Authors
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

#include <sstream>
#include <string>

#include "cli.hpp"
#include "doctest.h"
#include "x0n/error.hpp"

using x0n::ErrorCode;
using x0n::InitialTerm;
using x0n::Rational;
using x0n::RootOfUnity;
using x0n::cli::parse_initial_term;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const x0n::Error& e) {
    return e.code();
  }
  FAIL("expected an x0n::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("term grammar") {
  CHECK(parse_initial_term("x") == InitialTerm(RootOfUnity(), Rational(1)));
  CHECK(parse_initial_term(" -x ") == InitialTerm(RootOfUnity(2, 1), Rational(1)));
  CHECK(parse_initial_term("i*x^2") == InitialTerm(RootOfUnity(4, 1), Rational(2)));
  CHECK(parse_initial_term("-i*x^2") == InitialTerm(RootOfUnity(4, 3), Rational(2)));
  CHECK(parse_initial_term("zeta_3*x^(5/3)") == InitialTerm(RootOfUnity(3, 1), Rational(5, 3)));
  CHECK(parse_initial_term("zeta_6^2*x^(1/3)") == InitialTerm(RootOfUnity(3, 1), Rational(1, 3)));
  CHECK(parse_initial_term("zeta_5^-1 * x") == InitialTerm(RootOfUnity(5, 4), Rational(1)));
  CHECK(parse_initial_term("1*x^(3/4)") == InitialTerm(RootOfUnity(), Rational(3, 4)));
  CHECK(parse_initial_term("x^(4/2)") == InitialTerm(RootOfUnity(), Rational(2)));
}

TEST_CASE("term errors") {
  CHECK(code_of([] { parse_initial_term("x^0"); }) == ErrorCode::NonPositiveExponent);
  CHECK(code_of([] { parse_initial_term("x^(-1/2)"); }) == ErrorCode::NonPositiveExponent);
  CHECK(code_of([] { parse_initial_term("0*x"); }) == ErrorCode::ZeroConstant);
  CHECK(code_of([] { parse_initial_term("2*x"); }) == ErrorCode::NotRootOfUnity);
  CHECK(code_of([] { parse_initial_term("x^(1/0)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_initial_term("y"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_initial_term("x^2 + x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_initial_term("zeta_0*x"); }) == ErrorCode::ParseError);
  try {
    parse_initial_term("x^(1/0)");
  } catch (const x0n::Error& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("rendering round-trips") {
  for (const char* text : {"x", "-x", "x^2", "zeta_4*x^2", "zeta_4^3*x^(1/2)", "-x^(1/3)", "x^(3/4)",
                           "zeta_3*x^(5/3)", "zeta_5*x", "zeta_12^5*x^(7/6)"}) {
    CAPTURE(text);
    const auto t = parse_initial_term(text);
    CHECK(parse_initial_term(x0n::cli::render_initial_term(t)) == t);
  }
  CHECK(x0n::cli::render_initial_term(parse_initial_term("-x^(1/3)")) == "-x^(1/3)");
}

TEST_CASE("expand JSON") {
  std::ostringstream out;
  x0n::cli::cmd_expand(parse_initial_term("x"), 3, true, out);
  CHECK(out.str() ==
        R"({"level":1,"c":{"order":1,"exponent":0},"q":"1","ramification":1,"precision":"1+8",)"
        R"("terms":[{"exp":"1","coeff":{"conductor":1,"coords":["1"]}}]})"
        "\n");

  const auto j = x0n::cli::expansion_json(x0n::puiseux_x0n(parse_initial_term("x^2"), 4));
  CHECK(j["level"] == 2);
  CHECK(j["precision"] == "2+16");
  CHECK(j["terms"][0]["exp"] == "2");
  CHECK(j["terms"][1]["exp"] == "3");
  CHECK(j["terms"][1]["coeff"]["coords"][0] == "1488");

  const auto z = x0n::cli::expansion_json(x0n::puiseux_x0n(parse_initial_term("zeta_3*x^(5/3)"), 2));
  CHECK(z["level"] == 15);
  CHECK(z["q"] == "5/3");
  CHECK(z["ramification"] == 3);
  CHECK(z["precision"] == "5/3+4/3");
  CHECK(z["terms"][0]["exp"] == "5/3");
  CHECK(z["terms"][0]["coeff"]["conductor"] == 3);
  CHECK(z["terms"][0]["coeff"]["coords"].size() == 2U);

  const auto none = x0n::cli::expansion_json(x0n::puiseux_x0n(parse_initial_term("zeta_17*x"), 1));
  CHECK(none["level"].is_null());
}

TEST_CASE("other commands") {
  std::ostringstream level;
  x0n::cli::cmd_infer_level(parse_initial_term("i*x^2"), 256, level);
  CHECK(level.str().find("32") != std::string::npos);
  CHECK(code_of([] {
          std::ostringstream o;
          x0n::cli::cmd_infer_level(parse_initial_term("i*x^2"), 16, o);
        }) == ErrorCode::LevelNotFound);

  std::ostringstream verify;
  CHECK_NOTHROW(x0n::cli::cmd_verify(parse_initial_term("zeta_3*x^(5/3)"), 3, verify));

  std::ostringstream check;
  CHECK_NOTHROW(x0n::cli::cmd_oracle_check(2, 5, 20, check));

  std::ostringstream phi;
  x0n::cli::cmd_phi(2, phi);
  const auto j = nlohmann::json::parse(phi.str());
  REQUIRE(j.is_array());
  CHECK(j.size() == 11U);
  for (const auto& e : j) {
    CHECK(e.contains("exp_x1"));
    CHECK(e.contains("exp_x2"));
    CHECK(e["coefficient"].is_string());
  }

  std::ostringstream bench;
  x0n::cli::cmd_bench({16, 32}, bench);
  std::istringstream lines(bench.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "size,horner_ms,brent_kung_ms");
  std::getline(lines, line);
  CHECK(line.starts_with("16,"));
  std::getline(lines, line);
  CHECK(line.starts_with("32,"));
  CHECK(code_of([] { (void)x0n::cli::bench_composition({32, 16}); }) == ErrorCode::InvalidArgument);
}

}  // TEST_SUITE
