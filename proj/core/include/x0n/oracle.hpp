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

// Independent checks built from q-expansions.
//
// The nome expansion of 1/j comes from E4 and the discriminant only, so the
// checks here share no code path with the differential equation used by
// the solver beyond basic series arithmetic.

#ifndef X0N_ORACLE_HPP
#define X0N_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "x0n/series.hpp"
#include "x0n/solver.hpp"

namespace x0n {

// 1/j = q prod(1 - q^n)^24 / E4^3 mod q^M, E4 = 1 + 240 sum sigma_3(n) q^n.
// Requires M >= 2.
RatSeries j_inverse_qexp(std::size_t M);

struct CuspCheckReport {
  std::int64_t N = 1;
  int steps = 0;
  std::size_t q_order = 0;
  // h(x(q)) and x(q^N), both mod q^q_order.
  RatSeries composed;
  RatSeries expected;
  std::vector<std::size_t> mismatches;

  bool equal() const { return mismatches.empty(); }
};

// Expands h at T = x^N with k steps and compares h(x(q)) with x(q^N) mod q^M.
// Throws InsufficientPrecision unless N + 2^k >= M.
CuspCheckReport infinity_cusp_check(std::int64_t N, int k, std::size_t M);

// The N + 1 expansions with initial terms x^N and zeta_N^s x^(1/N).
// Throws NotPrime.
std::vector<ExpansionResult> cusp_expansions_prime(std::int64_t N, int k);

// phi_N(X1, X2) with integer coefficients; coefficient(a, b) multiplies
// X1^a X2^b where X1 = j(tau), X2 = j(N tau).
struct ModularPolynomial {
  Level N;
  std::map<std::pair<int, int>, mpz_class> coefficients;

  mpz_class coefficient(int a, int b) const;
  int degree_x1() const;
  int degree_x2() const;
  bool is_symmetric() const;

  friend bool operator==(const ModularPolynomial&, const ModularPolynomial&) = default;
};

// phi_N from q-expansions alone: the kernel of the linear map sending the
// coefficients c_ab (0 <= a, b <= N + 1) to sum c_ab j(tau)^a j(N tau)^b,
// normalized to a primitive integer vector with positive X1^(N+1)
// coefficient.
ModularPolynomial phi_from_q_expansions(std::int64_t N);

// phi_N for N in {2, 3} from the product of (Y - 1/h) over all cusp
// expansions, cross-checked against phi_from_q_expansions. Throws NotPrime,
// InvalidArgument for other primes, PrecisionTooLow, OracleMismatch.
ModularPolynomial phi_reconstruct_prime(std::int64_t N);

}  // namespace x0n

#endif  // X0N_ORACLE_HPP
