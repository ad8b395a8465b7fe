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

#include "x0n/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "x0n/error.hpp"

namespace x0n {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Quotient and remainder of a / b over Q; b must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly quot(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    const Rational c = a[k] * lead_inv;
    const std::size_t shift = k + 1 - b.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
  }
  a.resize(b.size() - 1);
  trim(a);
  return {quot, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t euler_phi(std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "euler_phi needs m >= 1");
  std::int64_t result = m;
  std::int64_t n = m;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial needs m >= 1");
  // x^m - 1
  std::vector<mpz_class> num(static_cast<std::size_t>(m) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t e = 1; e < m; ++e) {
    if (m % e != 0) continue;
    const auto div = cyclotomic_polynomial(e);
    // Exact division by a monic integer polynomial.
    std::vector<mpz_class> quot(num.size() - div.size() + 1);
    for (std::size_t k = num.size(); k-- >= div.size();) {
      const mpz_class c = num[k];
      const std::size_t shift = k + 1 - div.size();
      quot[shift] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i < div.size(); ++i) num[shift + i] -= c * div[i];
    }
    for (std::size_t i = 0; i + 1 < div.size(); ++i) {
      if (num[i] != 0) throw Error(ErrorCode::InvalidArgument, "inexact cyclotomic division");
    }
    num = std::move(quot);
  }
  return num;
}

// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(std::int64_t order, std::int64_t exponent) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
  std::int64_t s = mod_floor(exponent, order);
  const std::int64_t g = std::gcd(s, order);  // gcd(0, m) = m
  order_ = order / g;
  exponent_ = s / g;
}

RootOfUnity RootOfUnity::from_turns(const Rational& turns) {
  const Rational frac = turns - Rational(turns.floor());
  return RootOfUnity(frac.den().get_si(), frac.num().get_si());
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  const std::int64_t s = mod_floor(exponent_ * mod_floor(e, order_), order_);
  return RootOfUnity(order_, s);
}

std::vector<RootOfUnity> RootOfUnity::roots(std::int64_t p) const {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  std::vector<RootOfUnity> out;
  out.reserve(static_cast<std::size_t>(p));
  // (s + m t) / (m p) for t = 0 .. p-1
  for (std::int64_t t = 0; t < p; ++t) out.emplace_back(order_ * p, exponent_ + order_ * t);
  return out;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t m = std::lcm(a.order_, b.order_);
  return RootOfUnity(m, a.exponent_ * (m / a.order_) + b.exponent_ * (m / b.order_));
}

std::string RootOfUnity::to_string() const {
  if (order_ == 1) return "1";
  if (order_ == 2) return "-1";
  std::string s = "zeta_" + std::to_string(order_);
  if (exponent_ != 1) s += "^" + std::to_string(exponent_);
  return s;
}

// ---------------------------------------------------------------------------

CyclotomicField::CyclotomicField(std::int64_t conductor)
    : conductor_(conductor), degree_(static_cast<std::size_t>(euler_phi(conductor))) {
  for (const auto& c : cyclotomic_polynomial(conductor)) {
    if (!c.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "conductor too large");
    modulus_.push_back(c.get_si());
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::int64_t conductor) {
  if (conductor < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  // Fields are immutable once built; the registry only saves recomputing Phi_m.
  static std::mutex mutex;
  static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot = std::make_shared<const CyclotomicField>(conductor);
  return slot;
}

void CyclotomicField::reduce(std::vector<Rational>& v) const {
  for (std::size_t k = v.size(); k-- > degree_;) {
    if (v[k].is_zero()) continue;
    const Rational c = v[k];
    const std::size_t shift = k - degree_;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (modulus_[i] != 0) v[shift + i] -= c * Rational(modulus_[i]);
    }
  }
  v.resize(degree_);
}

void CyclotomicField::reduce(std::vector<mpz_class>& v) const {
  if (v.size() < degree_) {
    v.resize(degree_);
    return;
  }
  reduce(std::span<mpz_class>(v));
  v.resize(degree_);
}

void CyclotomicField::reduce(std::span<mpz_class> v) const {
  for (std::size_t k = v.size(); k-- > degree_;) {
    if (v[k] == 0) continue;
    const std::size_t shift = k - degree_;
    for (std::size_t i = 0; i < degree_; ++i) {
      const long m = modulus_[i];
      if (m > 0) {
        mpz_submul_ui(v[shift + i].get_mpz_t(), v[k].get_mpz_t(), static_cast<unsigned long>(m));
      } else if (m < 0) {
        mpz_addmul_ui(v[shift + i].get_mpz_t(), v[k].get_mpz_t(), static_cast<unsigned long>(-m));
      }
    }
    v[k] = 0;
  }
}

// ---------------------------------------------------------------------------

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(CyclotomicField::get(1)) {}

CyclotomicNumber::CyclotomicNumber(FieldPtr field)
    : field_(std::move(field)), coords_(field_->degree()) {}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, const Rational& value)
    : field_(std::move(field)), coords_(field_->degree()) {
  coords_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() < field_->degree()) {
    coords_.resize(field_->degree());
  } else {
    field_->reduce(coords_);
  }
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return false;
  }
  return true;
}

const Rational& CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "element is not rational: " + to_string());
  return coords_[0];
}

CyclotomicNumber CyclotomicNumber::lifted(std::int64_t conductor) const {
  if (conductor % this->conductor() != 0) {
    throw Error(ErrorCode::ConductorMismatch, "cannot embed Q(zeta_" + std::to_string(this->conductor()) +
                                                  ") into Q(zeta_" + std::to_string(conductor) + ")");
  }
  auto target = CyclotomicField::get(conductor);
  if (conductor == this->conductor()) return *this;
  const std::int64_t step = conductor / this->conductor();
  std::vector<Rational> out(static_cast<std::size_t>(conductor));
  for (std::size_t t = 0; t < coords_.size(); ++t) out[t * static_cast<std::size_t>(step)] = coords_[t];
  return CyclotomicNumber(std::move(target), std::move(out));
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& other) const {
  if (conductor() != other.conductor()) {
    throw Error(ErrorCode::RingMismatch, "Q(zeta_" + std::to_string(conductor()) + ") vs Q(zeta_" +
                                             std::to_string(other.conductor()) + ")");
  }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  require_same_field(rhs);
  if (coords_.size() == 1) {
    coords_[0] *= rhs.coords_[0];
    return *this;
  }
  if (rhs.is_rational()) return *this *= rhs.coords_[0];
  coords_ = mul(coords_, rhs.coords_);
  if (coords_.empty()) coords_.resize(1);
  field_->reduce(coords_);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs) {
  for (auto& c : coords_) c *= rhs;
  return *this;
}

CyclotomicNumber operator-(CyclotomicNumber a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

std::string CyclotomicNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    std::string term = coords_[i].to_string();
    if (i > 0) {
      const std::string z = i == 1 ? "z" : "z^" + std::to_string(i);
      if (coords_[i].is_one()) {
        term = z;
      } else if (coords_[i] == Rational(-1)) {
        term = "-" + z;
      } else {
        term = "(" + term + ")*" + z;
      }
    }
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

CyclotomicNumber root_as_element(const RootOfUnity& z, std::int64_t conductor) {
  if (conductor < 1 || conductor % z.order() != 0) {
    throw Error(ErrorCode::ConductorMismatch, z.to_string() + " is not in Q(zeta_" + std::to_string(conductor) + ")");
  }
  const auto e = static_cast<std::size_t>(z.exponent() * (conductor / z.order()));
  std::vector<Rational> coords(e + 1);
  coords[e] = Rational(1);
  return CyclotomicNumber(CyclotomicField::get(conductor), std::move(coords));
}

CyclotomicNumber cyc_invert(const CyclotomicNumber& u) {
  if (u.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(u.conductor()) + ")");
  if (u.coords().size() == 1) return CyclotomicNumber(u.field(), u.coords()[0].inverse());

  // Extended Euclid: maintain s_i with s_i * u == r_i (mod Phi_m).
  QPoly phi;
  for (long c : u.field()->modulus()) phi.emplace_back(c);
  QPoly r0 = phi;
  QPoly r1 = u.coords();
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_m is irreducible, so the last nonzero remainder is a constant.
  const Rational c = r1.at(0).inverse();
  for (auto& x : s1) x *= c;
  return CyclotomicNumber(u.field(), std::move(s1));
}

}  // namespace x0n
