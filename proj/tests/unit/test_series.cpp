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

#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "x0n/error.hpp"
#include "x0n/int_poly.hpp"
#include "x0n/modfun.hpp"
#include "x0n/series.hpp"

using x0n::ErrorCode;
using x0n::MulAlgorithm;
using x0n::RatSeries;
using x0n::Rational;
using testing::rat_series;

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

constexpr MulAlgorithm kAlgorithms[] = {MulAlgorithm::Automatic, MulAlgorithm::Schoolbook, MulAlgorithm::Karatsuba,
                                        MulAlgorithm::Kronecker};

}  // namespace

TEST_SUITE("series") {

TEST_CASE("multiplication") {
  for (const auto algo : kAlgorithms) {
    CHECK(x0n::ts_mul(rat_series({1, 1, 0}), rat_series({1, -1, 0}), 3, algo) == rat_series({1, 0, -1}));
    const auto f = rat_series({1, 60, 39780});
    CHECK(x0n::ts_mul(f, f, 3, algo) == testing::from_poly(oracle::mul(testing::to_poly(f), testing::to_poly(f), 3)));
    CHECK(x0n::ts_mul(f, RatSeries::constant(Rational(1), 3), 3, algo) == f);
  }
  CHECK(x0n::ts_mul(rat_series({1, 60, 39780}), rat_series({1, 60, 39780}), 3) == rat_series({1, 120, 83160}));
  CHECK(code_of([] { (void)x0n::ts_mul(rat_series({1, 2}), rat_series({1, 2, 3}), 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("multiplication over Q(zeta_12) matches schoolbook at every size") {
  testing::Random rng(12);
  const auto field = x0n::CyclotomicField::get(12);
  for (std::size_t n : {1, 2, 5, 31, 32, 33, 70}) {
    const auto a = rng.cyc_series(field, n);
    const auto b = rng.cyc_series(field, n);
    const auto ref = x0n::ts_mul(a, b, n, MulAlgorithm::Schoolbook);
    CHECK(x0n::ts_mul(a, b, n, MulAlgorithm::Karatsuba) == ref);
    CHECK(x0n::ts_mul(a, b, n, MulAlgorithm::Kronecker) == ref);
    CHECK(x0n::ts_mul(a, b, n) == ref);
  }
}

TEST_CASE("Kronecker convolution handles signs and carries") {
  const std::vector<mpz_class> a{mpz_class("-123456789012345678901234567890"), 0, 7, -1};
  const std::vector<mpz_class> b{-1, mpz_class("98765432109876543210"), -3};
  const auto c = x0n::detail::kronecker_convolve(a, b, 6);
  std::vector<mpz_class> ref(6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i + j < 6) ref[i + j] += a[i] * b[j];
    }
  }
  CHECK(c == ref);
}

TEST_CASE("inversion") {
  CHECK(x0n::ts_invert(rat_series({1, -1, 0, 0}), 4) == rat_series({1, 1, 1, 1}));
  const auto inv = x0n::ts_invert(rat_series({1, 744, 0}), 3);
  CHECK(inv == testing::from_poly(oracle::inverse({1, 744}, 3)));
  CHECK(inv[2] == Rational(553536));
  CHECK(x0n::ts_invert(rat_series({2, 0}), 2) == RatSeries({Rational(1, 2), Rational(0)}));
  CHECK(code_of([] { (void)x0n::ts_invert(rat_series({0, 1}), 2); }) == ErrorCode::NonUnitLeadingCoefficient);
}

TEST_CASE("square root") {
  CHECK(x0n::ts_sqrt_one_plus(rat_series({1, 0, 0, 0}), 4) == rat_series({1, 0, 0, 0}));
  const auto s = x0n::ts_sqrt_one_plus(rat_series({1, -1728, 0}), 3);
  const auto e = oracle::e_series(4);
  CHECK(s == testing::from_poly({e[1], e[2], e[3]}));
  CHECK(s == rat_series({1, -864, -373248}));
  CHECK(x0n::ts_sqrt_one_plus(rat_series({1, 2, 1}), 3) == rat_series({1, 1, 0}));
  CHECK(code_of([] { (void)x0n::ts_sqrt_one_plus(rat_series({4, 1}), 2); }) == ErrorCode::BadConstantTerm);
}

TEST_CASE("derivative") {
  CHECK(x0n::ts_derivative(rat_series({5, 1, 3, 4})) == rat_series({1, 6, 12}));
}

TEST_CASE("Horner composition") {
  CHECK(x0n::ts_compose_horner(rat_series({1, 1, 1}), rat_series({0, 0, 1, 0, 0}), 5) == rat_series({1, 0, 1, 0, 1}));
  const auto a = rat_series({3, -1, 4, 1, -5});
  CHECK(x0n::ts_compose_horner(a, rat_series({0, 1, 0, 0, 0}), 5) == a);
  const auto geometric = rat_series({1, 1, 1, 1});
  CHECK(x0n::ts_compose_horner(geometric, rat_series({0, 1, 1, 0}), 4) ==
        testing::from_poly(oracle::compose({1, 1, 1, 1}, {0, 1, 1, 0}, 4)));
  CHECK(x0n::ts_compose_horner(geometric, rat_series({0, 1, 1, 0}), 4) == rat_series({1, 1, 2, 3}));
  CHECK(code_of([] { (void)x0n::ts_compose_horner(rat_series({1, 1}), rat_series({1, 1}), 2); }) ==
        ErrorCode::InnerNotSmall);
}

TEST_CASE("composition order follows the outer length and inner valuation") {
  // A known mod u^3 at B = u^2: terms up to u^4 are determined, u^6 is not.
  const auto r = x0n::ts_compose_horner(rat_series({1, 1, 1}), rat_series({0, 0, 1, 0, 0, 0, 0, 0}), 8);
  CHECK(r.order() == 6);
  CHECK(x0n::ts_compose_brent_kung(rat_series({1, 1, 1}), rat_series({0, 0, 1, 0, 0, 0, 0, 0}), 8).order() == 6);
}

TEST_CASE("Brent-Kung composition") {
  const auto g = x0n::series_G(5);
  const auto b = rat_series({0, 0, 1, 1488, 0});
  CHECK(x0n::ts_compose_brent_kung(g, b, 5) == x0n::ts_compose_horner(g, b, 5));
  CHECK(x0n::ts_compose_brent_kung(g, b, 5) == testing::from_poly(oracle::compose(testing::to_poly(g), {0, 0, 1, 1488, 0}, 5)));
  CHECK(x0n::ts_compose_brent_kung(rat_series({7, 0, 0}), rat_series({0, 1, 1}), 3) == rat_series({7, 0, 0}));
  testing::Random rng(7);
  for (std::size_t n = 1; n <= 64; n += 9) {
    const auto a = rng.rat_series(n);
    const auto c = rng.rat_series(n, true);
    CHECK(x0n::ts_compose_brent_kung(a, c, n) == x0n::ts_compose_horner(a, c, n));
  }
}

TEST_CASE("lift_series embeds coefficients") {
  const auto lifted = x0n::lift_series(rat_series({1, 2}), x0n::CyclotomicField::get(5));
  CHECK(lifted[1] == x0n::CyclotomicNumber(x0n::CyclotomicField::get(5), Rational(2)));
}

}  // TEST_SUITE
