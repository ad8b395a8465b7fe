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

#include "x0n/solver.hpp"

#include <algorithm>
#include <utility>

#include "x0n/error.hpp"
#include "x0n/modfun.hpp"

namespace x0n {

PuiseuxSeries newton_step(const PuiseuxSeries& h0, const Rational& q, const Precision& a) {
  const std::int64_t d = h0.ramification();
  const Rational nq = q * Rational(d);
  if (!nq.is_integer()) {
    throw Error(ErrorCode::RamificationMismatch, "exponent " + q.to_string() + " is not on the lattice (1/" +
                                                     std::to_string(d) + ")Z");
  }
  const std::int64_t n = nq.to_int64();
  const std::int64_t end = a.u_order(q, d);
  const std::int64_t target = end + (end - n);

  const PuiseuxSeries h = h0.truncated(end).as_polynomial(target);

  const auto x_order = static_cast<std::size_t>((target + d - 1) / d + 1);
  const auto g = PuiseuxSeries::from_x_series(series_G(x_order), h.field(), d);
  const auto outer_order = static_cast<std::size_t>(target / n + 1);
  const auto g_of_h = outer_substitute(series_G(std::max<std::size_t>(2, outer_order)), h, target);

  const PuiseuxSeries w = x_derivative(h) * g;
  const PuiseuxSeries r = g_of_h.scaled(q) - w;
  const PuiseuxSeries eps = w * x_integrate(r * (w * g).inverse());
  return (h + eps).truncated(target);
}

ExpansionResult puiseux_x0n(const InitialTerm& T, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "step count must be non-negative");
  PuiseuxSeries h = from_initial_term(T);
  Precision a{Rational(1) / Rational(T.d())};
  for (int i = 0; i < k; ++i) {
    h = newton_step(h, T.q(), a);
    a.a = a.a * Rational(2);
  }
  std::optional<Level> level;
  try {
    level = infer_level(T);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LevelNotFound) throw;
  }
  return ExpansionResult{std::move(h), T, level, k, a};
}

}  // namespace x0n
