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

// Puiseux expansions at the cusps of X_0(N).
//
// For an initial term T = c x^q there is exactly one Puiseux series
// h = T (1 + ...) with q G(h) = h' G. puiseux_x0n finds it by Newton
// iteration: each step doubles the relative precision a, starting from
// a = 1/d. infer_level recovers the N with P_N(x, h) = 0 from T alone.

#ifndef X0N_SOLVER_HPP
#define X0N_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "x0n/puiseux.hpp"
#include "x0n/rational.hpp"

namespace x0n {

struct Level {
  std::int64_t N = 1;

  friend bool operator==(const Level&, const Level&) = default;
  friend auto operator<=>(const Level&, const Level&) = default;
};

inline constexpr std::int64_t kDefaultLevelCap = 256;

struct ExpansionResult {
  PuiseuxSeries h;
  InitialTerm T;
  // Absent when no composition with product <= kDefaultLevelCap reaches T.
  std::optional<Level> level;
  int steps = 0;
  Precision precision;
};

// One Newton step: h0 known to relative precision a (so mod x^(q + a)) goes
// to h0 + eps known mod x^(q + 2a), with
//   eps = W * integral(R / (W G)),  W = h0' G,  R = q G(h0) - W.
PuiseuxSeries newton_step(const PuiseuxSeries& h0, const Rational& q, const Precision& a);

// k Newton steps from the seed c x^q; the result has precision 2^k / d.
ExpansionResult puiseux_x0n(const InitialTerm& T, int k);

// Smallest N (shortest composition first, then smallest product) such that T
// is a composition of the monomial maps x^p and zeta_p^s x^(1/p), p prime,
// with N the product of the primes used. Throws LevelNotFound when every
// composition reaching T needs N > cap.
Level infer_level(const InitialTerm& T, std::int64_t cap = kDefaultLevelCap);

}  // namespace x0n

#endif  // X0N_SOLVER_HPP
