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

#ifndef X0N_TESTS_HELPERS_HPP
#define X0N_TESTS_HELPERS_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "x0n/cyclotomic.hpp"
#include "x0n/puiseux.hpp"
#include "x0n/rational.hpp"
#include "x0n/series.hpp"

namespace testing {

inline x0n::RatSeries rat_series(std::initializer_list<long> c) {
  std::vector<x0n::Rational> v;
  for (long x : c) v.emplace_back(x);
  return x0n::RatSeries(std::move(v));
}

inline x0n::RatSeries from_poly(const oracle::Poly& p) {
  std::vector<x0n::Rational> v;
  for (const auto& x : p) v.emplace_back(x);
  return x0n::RatSeries(std::move(v));
}

inline oracle::Poly to_poly(const x0n::RatSeries& s) {
  oracle::Poly p;
  for (const auto& x : s.coeffs()) p.push_back(x.value());
  return p;
}

inline x0n::CyclotomicNumber cyc(std::int64_t m, std::initializer_list<long> coords) {
  std::vector<x0n::Rational> v;
  for (long x : coords) v.emplace_back(x);
  return x0n::CyclotomicNumber(x0n::CyclotomicField::get(m), std::move(v));
}

// x-exponent r of a Puiseux series as a u-exponent.
inline x0n::CyclotomicNumber coefficient_at(const x0n::PuiseuxSeries& p, const x0n::Rational& r) {
  return p.coefficient((r * x0n::Rational(p.ramification())).to_int64());
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  x0n::Rational rational() {
    const long den = integer(1, 9);
    return x0n::Rational(integer(-30, 30)) / x0n::Rational(den);
  }

  x0n::CyclotomicNumber cyclotomic(const x0n::FieldPtr& field) {
    std::vector<x0n::Rational> v;
    for (std::size_t i = 0; i < field->degree(); ++i) v.push_back(rational());
    return x0n::CyclotomicNumber(field, std::move(v));
  }

  x0n::RatSeries rat_series(std::size_t order, bool zero_constant = false) {
    std::vector<x0n::Rational> v;
    for (std::size_t i = 0; i < order; ++i) v.push_back(rational());
    if (zero_constant) v[0] = x0n::Rational(0);
    return x0n::RatSeries(std::move(v));
  }

  x0n::CycSeries cyc_series(const x0n::FieldPtr& field, std::size_t order, bool zero_constant = false) {
    std::vector<x0n::CyclotomicNumber> v;
    for (std::size_t i = 0; i < order; ++i) v.push_back(cyclotomic(field));
    if (zero_constant) v[0] = x0n::CyclotomicNumber(field);
    return x0n::CycSeries(std::move(v));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing

#endif  // X0N_TESTS_HELPERS_HPP
