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

// Power series attached to the Hauptmodul x = 1/j of X(1).
//
// With F = 2F1(1/12, 5/12; 1; 1728x) and E = x sqrt(1 - 1728x), the
// logarithmic derivative of the nome is q'/q = 1/G with G = E F^2, so
// x(q^N) = h(x(q)) turns into the first order equation N G(h) = h' G(x).

#ifndef X0N_MODFUN_HPP
#define X0N_MODFUN_HPP

#include <cstddef>

#include "x0n/puiseux.hpp"
#include "x0n/rational.hpp"
#include "x0n/series.hpp"

namespace x0n {

// 2F1(1/12, 5/12; 1; 1728x) mod x^M, integer coefficients 1, 60, 39780, ...
RatSeries series_F(std::size_t M);

// x sqrt(1 - 1728x) mod x^M. Requires M >= 2.
RatSeries series_E(std::size_t M);

// E F^2 mod x^M = x - 744x^2 - 393768x^3 - ...  Requires M >= 2.
// Results are cached; repeated calls at or below the largest order computed
// so far only copy.
RatSeries series_G(std::size_t M);

// q G(h) - h' G(x), the defect of h as a solution, known to the end of h.
PuiseuxSeries relation_residual(const PuiseuxSeries& h, const Rational& q);

}  // namespace x0n

#endif  // X0N_MODFUN_HPP
