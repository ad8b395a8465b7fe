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

// Command implementations behind the x0n executable. Each cmd_* writes its
// report to `out` and throws x0n::Error on failure; main() maps the error
// code to the process exit status.

#ifndef X0N_TOOLS_CLI_HPP
#define X0N_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "x0n/oracle.hpp"
#include "x0n/puiseux.hpp"
#include "x0n/solver.hpp"

namespace x0n::cli {

// Grammar, whitespace ignored:
//   term  := [sign] [coef '*'] 'x' ['^' exp]
//   coef  := integer | 'i' | 'zeta_' M ['^' S]
//   exp   := integer | '(' integer ['/' integer] ')'
// A leading '-' multiplies the constant by -1. The only integer constants
// accepted are 1 and -1 (0 gives ZeroConstant, others NotRootOfUnity).
InitialTerm parse_initial_term(std::string_view text);

// Inverse of parse_initial_term: "x", "-x^(1/3)", "zeta_3*x^(5/3)", ...
std::string render_initial_term(const InitialTerm& t);

nlohmann::ordered_json coefficient_json(const CyclotomicNumber& c);
nlohmann::ordered_json expansion_json(const ExpansionResult& r);
nlohmann::ordered_json phi_json(const ModularPolynomial& phi);

void cmd_expand(const InitialTerm& t, int steps, bool json, std::ostream& out);
void cmd_infer_level(const InitialTerm& t, std::int64_t cap, std::ostream& out);
// Throws OracleMismatch when the residual is not small enough.
void cmd_verify(const InitialTerm& t, int steps, std::ostream& out);
// Throws OracleMismatch when h(x(q)) and x(q^N) differ.
void cmd_oracle_check(std::int64_t level, int steps, std::size_t q_order, std::ostream& out);
void cmd_phi(std::int64_t level, std::ostream& out);

struct BenchRow {
  std::size_t size = 0;
  double horner_ms = 0;
  double brent_kung_ms = 0;
};

// Times G(h0) mod x^size with both composition algorithms, h0 the
// expansion at x^2 cut to `size` terms. Sizes must be ascending and >= 4.
std::vector<BenchRow> bench_composition(const std::vector<std::size_t>& sizes);
void cmd_bench(const std::vector<std::size_t>& sizes, std::ostream& out);

}  // namespace x0n::cli

#endif  // X0N_TOOLS_CLI_HPP
