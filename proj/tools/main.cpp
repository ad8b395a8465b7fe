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

// x0n: Puiseux expansions at cusps of X_0(N).
//
// Exit status is 0 on success, 2 for usage errors, and otherwise the numeric
// value of the x0n::ErrorCode that stopped the command.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"
#include "x0n/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Puiseux expansions at cusps of X_0(N)", "x0n"};
  app.require_subcommand(1);

  std::string term;
  int steps = 0;
  bool json = false;
  std::int64_t cap = x0n::kDefaultLevelCap;
  std::int64_t level = 0;
  std::size_t q_order = 0;
  std::vector<std::size_t> sizes;

  auto* expand = app.add_subcommand("expand", "expand h from its initial term");
  expand->add_option("--term", term, "initial term, e.g. zeta_3*x^(5/3)")->required();
  expand->add_option("--steps", steps, "Newton steps k")->required()->check(CLI::NonNegativeNumber);
  expand->add_flag("--json", json, "emit JSON");

  auto* infer = app.add_subcommand("infer-level", "find N from the initial term");
  infer->add_option("--term", term, "initial term")->required();
  infer->add_option("--cap", cap, "largest N searched")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check the residual of an expansion");
  verify->add_option("--term", term, "initial term")->required();
  verify->add_option("--steps", steps, "Newton steps k")->required()->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle-check", "compare the x^N expansion with q-expansions");
  oracle->add_option("--level", level, "N")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--steps", steps, "Newton steps k")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--q-order", q_order, "compare mod q^M")->required()->check(CLI::Range(2, 1 << 20));

  auto* phi = app.add_subcommand("phi", "reconstruct the modular polynomial");
  phi->add_option("--level", level, "N (2 or 3)")->required()->check(CLI::IsMember({2, 3}));

  auto* bench = app.add_subcommand("bench", "time Horner against Brent-Kung composition");
  bench->add_option("--sizes", sizes, "ascending term counts")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(x0n::ErrorCode::InvalidArgument);
  }

  try {
    namespace cli = x0n::cli;
    if (*expand) {
      cli::cmd_expand(cli::parse_initial_term(term), steps, json, std::cout);
    } else if (*infer) {
      cli::cmd_infer_level(cli::parse_initial_term(term), cap, std::cout);
    } else if (*verify) {
      cli::cmd_verify(cli::parse_initial_term(term), steps, std::cout);
    } else if (*oracle) {
      cli::cmd_oracle_check(level, steps, q_order, std::cout);
    } else if (*phi) {
      cli::cmd_phi(level, std::cout);
    } else if (*bench) {
      cli::cmd_bench(sizes, std::cout);
    }
  } catch (const x0n::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  }
  return 0;
}
