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

#ifndef X0N_CYCLOTOMIC_HPP
#define X0N_CYCLOTOMIC_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "x0n/rational.hpp"

namespace x0n {

std::int64_t euler_phi(std::int64_t m);

// The m-th cyclotomic polynomial, coefficients listed from the constant term
// upwards. Built by exact division of x^m - 1 by Phi_e for every proper
// divisor e of m.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t m);

// A root of unity exp(2 pi i s / m), kept with m equal to its exact
// multiplicative order (so 1 is (1, 0) and -1 is (2, 1)).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t order, std::int64_t exponent);

  // exp(2 pi i t) for a rational number of turns t.
  static RootOfUnity from_turns(const Rational& turns);

  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  // s/m in [0, 1).
  Rational turns() const { return Rational(order_ == 1 ? 0 : exponent_) / Rational(order_); }

  RootOfUnity pow(std::int64_t e) const;
  // All p-th roots of this value.
  std::vector<RootOfUnity> roots(std::int64_t p) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RootOfUnity& z) {
    return os << z.to_string();
  }

 private:
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 0;
};

// Q(zeta_m) presented as Q[x] / Phi_m. Instances are immutable and shared.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::int64_t conductor);

  std::int64_t conductor() const { return conductor_; }
  std::size_t degree() const { return degree_; }
  // Phi_m, constant term first; monic of length degree() + 1.
  std::span<const long> modulus() const { return modulus_; }

  // Reduces a coefficient vector of any length modulo Phi_m in place and
  // resizes it to degree().
  void reduce(std::vector<Rational>& v) const;
  void reduce(std::vector<mpz_class>& v) const;
  // In-place reduction of a contiguous window; the first degree() entries
  // receive the result and the remainder is zeroed.
  void reduce(std::span<mpz_class> v) const;

  explicit CyclotomicField(std::int64_t conductor);

 private:
  std::int64_t conductor_;
  std::size_t degree_;
  std::vector<long> modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
class CyclotomicNumber {
 public:
  // Zero of Q.
  CyclotomicNumber();
  explicit CyclotomicNumber(FieldPtr field);
  CyclotomicNumber(FieldPtr field, const Rational& value);
  // Coordinates of any length are reduced modulo Phi_m.
  CyclotomicNumber(FieldPtr field, std::vector<Rational> coords);

  static CyclotomicNumber rational(const Rational& value) {
    return CyclotomicNumber(CyclotomicField::get(1), value);
  }

  std::int64_t conductor() const { return field_->conductor(); }
  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  const Rational& rational_value() const;

  // Image under the embedding Q(zeta_m) -> Q(zeta_n), m | n.
  CyclotomicNumber lifted(std::int64_t conductor) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a);

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.conductor() == b.conductor() && a.coords_ == b.coords_;
  }

  // "a0 + a1*z + ..." with z standing for zeta_m.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) {
    return os << x.to_string();
  }

 private:
  void require_same_field(const CyclotomicNumber& other) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

// zeta_m^s as an element of Q(zeta_conductor). Throws ConductorMismatch when
// the order of z does not divide the conductor.
CyclotomicNumber root_as_element(const RootOfUnity& z, std::int64_t conductor);

// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
// Throws DivisionByZero for u = 0.
CyclotomicNumber cyc_invert(const CyclotomicNumber& u);

// Ring interface used by the series kernel.
inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
inline CyclotomicNumber zero_like(const CyclotomicNumber& x) { return CyclotomicNumber(x.field()); }
inline CyclotomicNumber one_like(const CyclotomicNumber& x) { return CyclotomicNumber(x.field(), Rational(1)); }
inline bool same_ring(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.conductor() == b.conductor();
}
inline CyclotomicNumber inverse(const CyclotomicNumber& x) { return cyc_invert(x); }

}  // namespace x0n

#endif  // X0N_CYCLOTOMIC_HPP
