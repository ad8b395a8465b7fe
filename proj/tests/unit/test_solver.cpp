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

#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "x0n/error.hpp"
#include "x0n/modfun.hpp"
#include "x0n/solver.hpp"

using x0n::CyclotomicNumber;
using x0n::InitialTerm;
using x0n::Precision;
using x0n::PuiseuxSeries;
using x0n::Rational;
using x0n::RootOfUnity;

namespace {

// x-adic order of the residual, or its truncation when it vanishes there.
Rational residual_order(const PuiseuxSeries& h, const Rational& q) {
  const auto r = x0n::relation_residual(h, q);
  const auto v = r.u_valuation();
  return Rational(v ? *v : r.end()) / Rational(r.ramification());
}

std::vector<InitialTerm> example_terms() {
  return {
      InitialTerm(RootOfUnity(), Rational(1)),
      InitialTerm(RootOfUnity(2, 1), Rational(1)),
      InitialTerm(RootOfUnity(4, 1), Rational(2)),
      InitialTerm(RootOfUnity(4, 1), Rational(1, 2)),
      InitialTerm(RootOfUnity(2, 1), Rational(1, 3)),
      InitialTerm(RootOfUnity(), Rational(3, 4)),
      InitialTerm(RootOfUnity(), Rational(5, 3)),
      InitialTerm(RootOfUnity(3, 1), Rational(5, 3)),
      InitialTerm(RootOfUnity(5, 1), Rational(1)),
  };
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("the identity is a fixed point") {
  const auto x = x0n::from_initial_term(InitialTerm(RootOfUnity(), Rational(1)));
  const auto h = x0n::newton_step(x, Rational(1), Precision{Rational(1)});
  CHECK(h.end() == 3);
  CHECK(h == PuiseuxSeries::monomial(CyclotomicNumber::rational(Rational(1)), 1, 1, 3));

  const auto r = x0n::puiseux_x0n(InitialTerm(RootOfUnity(), Rational(1)), 5);
  CHECK(r.h == PuiseuxSeries::monomial(CyclotomicNumber::rational(Rational(1)), 1, 1, 33));
  CHECK(r.precision == Precision{Rational(32)});
  CHECK(r.level == x0n::Level{1});
}

TEST_CASE("one step from x^2") {
  const auto seed = x0n::from_initial_term(InitialTerm(RootOfUnity(), Rational(2)));
  const auto h = x0n::newton_step(seed, Rational(2), Precision{Rational(1)});
  CHECK(h.end() == 4);
  CHECK(h.coefficient(2).rational_value() == Rational(1));
  CHECK(h.coefficient(3).rational_value() == Rational(1488));
}

TEST_CASE("one step from zeta_3 x^(5/3)") {
  const InitialTerm t(RootOfUnity(3, 1), Rational(5, 3));
  const auto h = x0n::newton_step(x0n::from_initial_term(t), t.q(), Precision{Rational(1, 3)});
  CHECK(h.truncation() == Rational(7, 3));
  CHECK(residual_order(h, t.q()) >= Rational(7, 3));
}

TEST_CASE("k = 0 returns the seed") {
  const InitialTerm t(RootOfUnity(4, 1), Rational(1, 2));
  const auto r = x0n::puiseux_x0n(t, 0);
  CHECK(r.h == x0n::from_initial_term(t));
  CHECK(r.precision == Precision{Rational(1, 2)});
  CHECK(r.steps == 0);
}

TEST_CASE("infinity cusps agree with the q-expansion oracle") {
  for (long N : {2L, 3L}) {
    CAPTURE(N);
    const auto r = x0n::puiseux_x0n(InitialTerm(RootOfUnity(), Rational(N)), 4);
    const auto expected = oracle::infinity_cusp_expansion(N, static_cast<std::size_t>(N + 16));
    REQUIRE(r.h.end() == N + 16);
    for (long e = 0; e < N + 16; ++e) {
      CHECK(r.h.coefficient(e).rational_value() == Rational(expected[static_cast<std::size_t>(e)]));
    }
  }
}

TEST_CASE("T = -x has integer coefficients") {
  const auto r = x0n::puiseux_x0n(InitialTerm(RootOfUnity(2, 1), Rational(1)), 3);
  CHECK(r.level == x0n::Level{4});
  CHECK(r.h.conductor() <= 2);
  CHECK(r.h.coefficient(1).rational_value() == Rational(-1));
  for (std::int64_t e = 1; e < r.h.end(); ++e) {
    const auto c = r.h.coefficient(e);
    for (const auto& x : c.coords()) CHECK(x.is_integer());
  }
  CHECK_FALSE(r.h.coefficient(2).is_zero());
}

TEST_CASE("precision doubles and earlier iterates are prefixes") {
  for (const auto& t : example_terms()) {
    CAPTURE(t);
    auto previous = x0n::puiseux_x0n(t, 0);
    for (int k = 1; k <= 5; ++k) {
      const auto r = x0n::puiseux_x0n(t, k);
      CHECK(r.precision.a == Rational(1 << k) / Rational(t.d()));
      CHECK(r.h.truncation() == t.q() + r.precision.a);
      CHECK(residual_order(r.h, t.q()) >= r.h.truncation());
      CHECK(r.h.truncated(previous.h.end()) == previous.h);
      CHECK(x0n::valuation(r.h) == t.q());
      previous = r;
    }
  }
}

TEST_CASE("coefficients lie in Z[c, 1/d]") {
  for (const auto& t : example_terms()) {
    CAPTURE(t);
    const auto r = x0n::puiseux_x0n(t, 5);
    const mpz_class d(t.d());
    for (const auto& c : r.h.coeffs()) {
      for (const auto& x : c.coords()) {
        mpz_class den = x.den();
        mpz_class g;
        do {
          mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
          if (g > 1) den /= g;
        } while (g > 1);
        CHECK(den == 1);
      }
    }
  }
}

}  // TEST_SUITE
