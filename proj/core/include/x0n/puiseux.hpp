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

// Ramified series in x with exponents in (1/d)Z.
//
// A PuiseuxSeries is stored in the local parameter u = x^(1/d): coefficient i
// of coeffs() multiplies u^(start() + i), and everything from u^end() on is
// unknown. A series that is zero up to its end keeps that end, so "zero to
// order x^a" and "nothing known" stay distinguishable.

#ifndef X0N_PUISEUX_HPP
#define X0N_PUISEUX_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "x0n/cyclotomic.hpp"
#include "x0n/rational.hpp"
#include "x0n/series.hpp"

namespace x0n {

// The initial term c * x^q of a cusp expansion, with c a root of unity and
// q > 0.
class InitialTerm {
 public:
  InitialTerm(RootOfUnity c, Rational q);

  const RootOfUnity& c() const { return c_; }
  const Rational& q() const { return q_; }
  std::int64_t n() const { return q_.num().get_si(); }
  std::int64_t d() const { return q_.den().get_si(); }

  friend bool operator==(const InitialTerm&, const InitialTerm&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const InitialTerm& t) { return os << t.to_string(); }

 private:
  RootOfUnity c_;
  Rational q_;
};

// Relative precision a: h = c x^q (1 + ...) with the unit factor known
// modulo x^a, i.e. h known modulo x^(q + a).
struct Precision {
  Rational a;

  // u-exponent up to which h is known, n + d a.
  std::int64_t u_order(const Rational& q, std::int64_t d) const;
  static Precision from_u_order(std::int64_t end, const Rational& q, std::int64_t d);

  friend bool operator==(const Precision&, const Precision&) = default;
};

class PuiseuxSeries {
 public:
  PuiseuxSeries(FieldPtr field, std::int64_t ramification, std::int64_t start, std::vector<CyclotomicNumber> coeffs);

  // 0 + O(u^end).
  static PuiseuxSeries zero(FieldPtr field, std::int64_t ramification, std::int64_t end);
  // c u^e + O(u^end).
  static PuiseuxSeries monomial(const CyclotomicNumber& c, std::int64_t ramification, std::int64_t e,
                                std::int64_t end);
  // A(x) for a power series A over Q (or Q(zeta_m)), known mod x^A.order().
  static PuiseuxSeries from_x_series(const RatSeries& a, const FieldPtr& field, std::int64_t ramification);
  static PuiseuxSeries from_x_series(const CycSeries& a, std::int64_t ramification);

  const FieldPtr& field() const { return field_; }
  std::int64_t conductor() const { return field_->conductor(); }
  std::int64_t ramification() const { return ramification_; }
  std::int64_t start() const { return start_; }
  std::int64_t end() const { return start_ + static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<CyclotomicNumber>& coeffs() const { return coeffs_; }

  // Known modulo x^truncation().
  Rational truncation() const { return Rational(end()) / Rational(ramification_); }

  // Coefficient of u^e; e must lie below end(). Exponents below start() are 0.
  CyclotomicNumber coefficient(std::int64_t e) const;

  // u-exponent of the first nonzero coefficient, nullopt when zero to end().
  std::optional<std::int64_t> u_valuation() const;
  bool is_zero_to_end() const { return !u_valuation().has_value(); }

  // Drops everything from u^end on; end must not exceed end().
  PuiseuxSeries truncated(std::int64_t end) const;
  // Treats the stored terms as an exact polynomial, read modulo u^end.
  PuiseuxSeries as_polynomial(std::int64_t end) const;
  // Same series over the lattice (1/(d k))Z for ramification d k.
  PuiseuxSeries with_ramification(std::int64_t ramification) const;
  // Coefficients embedded in Q(zeta_conductor).
  PuiseuxSeries lifted(std::int64_t conductor) const;
  // Terms below the valuation removed from storage.
  PuiseuxSeries normalized() const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries scaled(const CyclotomicNumber& c) const;
  PuiseuxSeries scaled(const Rational& c) const;
  // 1/P; requires P nonzero within its window.
  PuiseuxSeries inverse() const;

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  // End is min(v(a) + end(b), v(b) + end(a)).
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

  // Same window, same coefficients.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& p) { return os << p.to_string(); }

 private:
  FieldPtr field_;
  std::int64_t ramification_;
  std::int64_t start_;
  std::vector<CyclotomicNumber> coeffs_;
};

// Exponent (in x) of the first nonzero term. Throws ZeroSeries.
Rational valuation(const PuiseuxSeries& p);

// c u^n + O(u^(n+1)) with d = denominator(q): the seed of precision 1/d.
PuiseuxSeries from_initial_term(const InitialTerm& t);

// d/dx, termwise; the window shifts down by one x-unit.
PuiseuxSeries x_derivative(const PuiseuxSeries& p);

// Antiderivative with zero constant. Throws LogarithmicTerm on a nonzero
// x^(-1) coefficient.
PuiseuxSeries x_integrate(const PuiseuxSeries& p);

// A(P) modulo u^target_end (u = x^(1/d) of P), through Brent-Kung
// composition. Requires v(P) > 0 and every outer term that can reach the
// target: A.order() >= ceil(target_end / v_u(P)); otherwise throws
// InsufficientOuterOrder. The result end may be lower than target_end when
// P itself is not known that far.
PuiseuxSeries outer_substitute(const RatSeries& a, const PuiseuxSeries& p, std::int64_t target_end);

}  // namespace x0n

#endif  // X0N_PUISEUX_HPP
