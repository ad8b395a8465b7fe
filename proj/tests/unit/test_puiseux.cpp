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

#include "doctest.h"
#include "helpers.hpp"
#include "x0n/error.hpp"
#include "x0n/modfun.hpp"
#include "x0n/puiseux.hpp"

using x0n::CyclotomicField;
using x0n::CyclotomicNumber;
using x0n::ErrorCode;
using x0n::InitialTerm;
using x0n::PuiseuxSeries;
using x0n::Rational;
using x0n::RootOfUnity;

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

CyclotomicNumber one() { return CyclotomicNumber::rational(Rational(1)); }

}  // namespace

TEST_SUITE("puiseux") {

TEST_CASE("initial terms and precision") {
  CHECK(code_of([] { InitialTerm(RootOfUnity(), Rational(0)); }) == ErrorCode::NonPositiveExponent);
  const InitialTerm t(RootOfUnity(3, 1), Rational(5, 3));
  CHECK(t.n() == 5);
  CHECK(t.d() == 3);
  const x0n::Precision a{Rational(1, 3)};
  CHECK(a.u_order(t.q(), t.d()) == 6);
  CHECK(x0n::Precision::from_u_order(6, t.q(), t.d()) == a);
  CHECK(code_of([&] { (void)x0n::Precision{Rational(1, 2)}.u_order(t.q(), t.d()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("seeds") {
  const auto x = x0n::from_initial_term(InitialTerm(RootOfUnity(), Rational(1)));
  CHECK(x.ramification() == 1);
  CHECK(x.u_valuation() == 1);
  CHECK(x.truncation() == Rational(2));

  const auto x2 = x0n::from_initial_term(InitialTerm(RootOfUnity(), Rational(2)));
  CHECK(x2.u_valuation() == 2);
  CHECK(x2.truncation() == Rational(3));

  const auto z = x0n::from_initial_term(InitialTerm(RootOfUnity(3, 1), Rational(5, 3)));
  CHECK(z.ramification() == 3);
  CHECK(z.conductor() == 3);
  CHECK(z.coefficient(5) == testing::cyc(3, {0, 1}));
  CHECK(z.truncation() == Rational(2));
  CHECK(x0n::valuation(z) == Rational(5, 3));
}

TEST_CASE("derivative") {
  const auto x2 = PuiseuxSeries::monomial(one(), 1, 2, 6);
  const auto d = x0n::x_derivative(x2);
  CHECK(d.coefficient(1) == CyclotomicNumber::rational(Rational(2)));
  CHECK(d.end() == 5);

  const auto z = PuiseuxSeries::monomial(testing::cyc(3, {0, 1}), 3, 5, 9);
  const auto dz = x0n::x_derivative(z);
  CHECK(dz.coefficient(2) == testing::cyc(3, {0, 1}) * Rational(5, 3));
  CHECK(dz.truncation() == Rational(2));

  const auto c = PuiseuxSeries::monomial(one(), 1, 0, 4);
  CHECK(x0n::x_derivative(c).is_zero_to_end());
}

TEST_CASE("integration") {
  const auto two_x = PuiseuxSeries::monomial(CyclotomicNumber::rational(Rational(2)), 1, 1, 4);
  CHECK(x0n::x_integrate(two_x) == PuiseuxSeries::monomial(one(), 1, 2, 5));
  const auto inv_sqrt = PuiseuxSeries::monomial(one(), 2, -1, 3);
  CHECK(x0n::x_integrate(inv_sqrt) == PuiseuxSeries::monomial(CyclotomicNumber::rational(Rational(2)), 2, 1, 5));
  const auto inv = PuiseuxSeries::monomial(one(), 1, -1, 2);
  CHECK(code_of([&] { (void)x0n::x_integrate(inv); }) == ErrorCode::LogarithmicTerm);
}

TEST_CASE("products track the tight truncation") {
  // (x + O(x^3)) (x^2 + O(x^4)) = x^3 + O(x^5)
  const auto a = PuiseuxSeries::monomial(one(), 1, 1, 3);
  const auto b = PuiseuxSeries::monomial(one(), 1, 2, 4);
  const auto p = a * b;
  CHECK(p.end() == 5);
  CHECK(p.u_valuation() == 3);
  CHECK(x0n::valuation(p) == x0n::valuation(a) + x0n::valuation(b));
  const auto inv = a.inverse();
  CHECK(inv.u_valuation() == -1);
  CHECK(inv.end() == 1);
  CHECK(code_of([] { (void)(PuiseuxSeries::monomial(one(), 1, 1, 3) * PuiseuxSeries::monomial(one(), 2, 1, 3)); }) ==
        ErrorCode::RamificationMismatch);
  CHECK(code_of([] { (void)x0n::valuation(PuiseuxSeries::zero(CyclotomicField::get(1), 1, 4)); }) ==
        ErrorCode::ZeroSeries);
}

TEST_CASE("outer substitution") {
  const auto field = CyclotomicField::get(1);
  const auto x = PuiseuxSeries::monomial(one(), 1, 1, 3);
  const auto gx = x0n::outer_substitute(x0n::series_G(3), x, 3);
  CHECK(gx == PuiseuxSeries::from_x_series(x0n::series_G(3), field, 1));

  const auto x2 = PuiseuxSeries::monomial(one(), 1, 2, 5).as_polynomial(5);
  const auto gx2 = x0n::outer_substitute(x0n::series_G(3), x2, 5);
  CHECK(gx2.end() == 5);
  CHECK(gx2.coefficient(2) == one());
  CHECK(gx2.coefficient(3).is_zero());
  CHECK(gx2.coefficient(4) == CyclotomicNumber::rational(Rational(-744)));

  const auto p = PuiseuxSeries(field, 2, 1, testing::Random(5).cyc_series(field, 9).coeffs());
  const auto id = x0n::outer_substitute(testing::rat_series({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), p, p.end());
  CHECK(id == p.truncated(p.end()).as_polynomial(p.end()));
  CHECK(x0n::valuation(x0n::outer_substitute(x0n::series_G(11), p, p.end())) == x0n::valuation(p));

  CHECK(code_of([&] { (void)x0n::outer_substitute(x0n::series_G(2), x2, 5); }) == ErrorCode::InsufficientOuterOrder);
  const auto unit = PuiseuxSeries::monomial(one(), 1, 0, 3);
  CHECK(code_of([&] { (void)x0n::outer_substitute(x0n::series_G(3), unit, 3); }) == ErrorCode::InnerNotSmall);
}

TEST_CASE("ramification and conductor lifts") {
  const auto z = PuiseuxSeries::monomial(testing::cyc(3, {0, 1}), 3, 5, 7);
  const auto z6 = z.with_ramification(6).lifted(6);
  CHECK(z6.ramification() == 6);
  CHECK(z6.conductor() == 6);
  CHECK(x0n::valuation(z6) == Rational(5, 3));
  CHECK(z6.truncation() == z.truncation());
  CHECK(code_of([&] { (void)z.with_ramification(4); }) == ErrorCode::RamificationMismatch);
}

TEST_CASE("derivative then integral is the identity without constant term") {
  const auto field = CyclotomicField::get(4);
  auto coeffs = testing::Random(9).cyc_series(field, 12).coeffs();
  const PuiseuxSeries p(field, 4, 1, coeffs);
  CHECK(x0n::x_integrate(x0n::x_derivative(p)) == p);
}

}  // TEST_SUITE
