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

#include "x0n/puiseux.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "x0n/error.hpp"

namespace x0n {
namespace {

std::size_t as_index(std::int64_t i) { return static_cast<std::size_t>(i); }

void require_compatible(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.ramification() != b.ramification()) {
    throw Error(ErrorCode::RamificationMismatch, "ramification " + std::to_string(a.ramification()) + " vs " +
                                                     std::to_string(b.ramification()));
  }
  if (a.conductor() != b.conductor()) {
    throw Error(ErrorCode::ConductorMismatch,
                "Q(zeta_" + std::to_string(a.conductor()) + ") vs Q(zeta_" + std::to_string(b.conductor()) + ")");
  }
}

// Coefficients of u^from .. u^(from + count - 1), zero below start().
std::vector<CyclotomicNumber> window(const PuiseuxSeries& p, std::int64_t from, std::int64_t count) {
  std::vector<CyclotomicNumber> out;
  out.reserve(as_index(count));
  for (std::int64_t e = from; e < from + count; ++e) out.push_back(p.coefficient(e));
  return out;
}

}  // namespace

InitialTerm::InitialTerm(RootOfUnity c, Rational q) : c_(c), q_(std::move(q)) {
  if (q_.sign() <= 0) throw Error(ErrorCode::NonPositiveExponent, "initial exponent " + q_.to_string() + " <= 0");
}

std::string InitialTerm::to_string() const {
  std::string out;
  if (c_.order() == 2) {
    out = "-";
  } else if (c_.order() > 2) {
    out = c_.to_string() + "*";
  }
  out += "x";
  if (!q_.is_one()) out += "^" + (q_.is_integer() ? q_.to_string() : "(" + q_.to_string() + ")");
  return out;
}

std::int64_t Precision::u_order(const Rational& q, std::int64_t d) const {
  const Rational end = (q + a) * Rational(d);
  if (!end.is_integer()) {
    throw Error(ErrorCode::InvalidArgument, "precision " + a.to_string() + " is not a multiple of 1/" + std::to_string(d));
  }
  return end.to_int64();
}

Precision Precision::from_u_order(std::int64_t end, const Rational& q, std::int64_t d) {
  return Precision{Rational(end) / Rational(d) - q};
}

PuiseuxSeries::PuiseuxSeries(FieldPtr field, std::int64_t ramification, std::int64_t start,
                             std::vector<CyclotomicNumber> coeffs)
    : field_(std::move(field)), ramification_(ramification), start_(start), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "Puiseux series needs a coefficient field");
  if (ramification_ < 1) throw Error(ErrorCode::InvalidArgument, "ramification must be positive");
  for (auto& c : coeffs_) {
    if (c.conductor() == field_->conductor()) continue;
    if (c.is_rational()) {
      c = CyclotomicNumber(field_, c.rational_value());
    } else {
      throw Error(ErrorCode::ConductorMismatch, "coefficient in Q(zeta_" + std::to_string(c.conductor()) +
                                                    ") for a series over Q(zeta_" +
                                                    std::to_string(field_->conductor()) + ")");
    }
  }
}

PuiseuxSeries PuiseuxSeries::zero(FieldPtr field, std::int64_t ramification, std::int64_t end) {
  return PuiseuxSeries(std::move(field), ramification, end, {});
}

PuiseuxSeries PuiseuxSeries::monomial(const CyclotomicNumber& c, std::int64_t ramification, std::int64_t e,
                                      std::int64_t end) {
  if (end <= e) return zero(c.field(), ramification, end);
  std::vector<CyclotomicNumber> coeffs(as_index(end - e), CyclotomicNumber(c.field()));
  coeffs[0] = c;
  return PuiseuxSeries(c.field(), ramification, e, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::from_x_series(const RatSeries& a, const FieldPtr& field, std::int64_t ramification) {
  return from_x_series(lift_series(a, field), ramification);
}

PuiseuxSeries PuiseuxSeries::from_x_series(const CycSeries& a, std::int64_t ramification) {
  std::vector<CyclotomicNumber> coeffs(a.order() * as_index(ramification), zero_like(a.like()));
  for (std::size_t i = 0; i < a.order(); ++i) coeffs[i * as_index(ramification)] = a[i];
  return PuiseuxSeries(a.like().field(), ramification, 0, std::move(coeffs));
}

CyclotomicNumber PuiseuxSeries::coefficient(std::int64_t e) const {
  if (e >= end()) {
    throw Error(ErrorCode::InsufficientPrecision,
                "coefficient of u^" + std::to_string(e) + " requested, series known below u^" + std::to_string(end()));
  }
  if (e < start_) return CyclotomicNumber(field_);
  return coeffs_[as_index(e - start_)];
}

std::optional<std::int64_t> PuiseuxSeries::u_valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return start_ + static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

PuiseuxSeries PuiseuxSeries::truncated(std::int64_t new_end) const {
  if (new_end > end()) {
    throw Error(ErrorCode::InsufficientPrecision,
                "cannot extend a series known below u^" + std::to_string(end()) + " to u^" + std::to_string(new_end));
  }
  if (new_end <= start_) return zero(field_, ramification_, new_end);
  return PuiseuxSeries(field_, ramification_, start_,
                       std::vector<CyclotomicNumber>(coeffs_.begin(), coeffs_.begin() + (new_end - start_)));
}

PuiseuxSeries PuiseuxSeries::as_polynomial(std::int64_t new_end) const {
  if (new_end <= end()) return truncated(new_end);
  auto coeffs = coeffs_;
  coeffs.resize(as_index(new_end - start_), CyclotomicNumber(field_));
  return PuiseuxSeries(field_, ramification_, start_, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::with_ramification(std::int64_t ramification) const {
  if (ramification < 1 || ramification % ramification_ != 0) {
    throw Error(ErrorCode::RamificationMismatch, "ramification " + std::to_string(ramification_) +
                                                     " does not divide " + std::to_string(ramification));
  }
  const std::int64_t k = ramification / ramification_;
  if (k == 1) return *this;
  std::vector<CyclotomicNumber> coeffs(coeffs_.size() * as_index(k), CyclotomicNumber(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i * as_index(k)] = coeffs_[i];
  return PuiseuxSeries(field_, ramification, start_ * k, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::lifted(std::int64_t conductor) const {
  if (conductor == this->conductor()) return *this;
  std::vector<CyclotomicNumber> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(c.lifted(conductor));
  return PuiseuxSeries(CyclotomicField::get(conductor), ramification_, start_, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::normalized() const {
  const auto v = u_valuation();
  if (!v) return zero(field_, ramification_, end());
  return PuiseuxSeries(field_, ramification_, *v,
                       std::vector<CyclotomicNumber>(coeffs_.begin() + (*v - start_), coeffs_.end()));
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  auto coeffs = coeffs_;
  for (auto& c : coeffs) c = -c;
  return PuiseuxSeries(field_, ramification_, start_, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::scaled(const CyclotomicNumber& c) const {
  const CyclotomicNumber k = c.conductor() == conductor() ? c : c.lifted(conductor());
  auto coeffs = coeffs_;
  for (auto& x : coeffs) x *= k;
  return PuiseuxSeries(field_, ramification_, start_, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::scaled(const Rational& c) const {
  auto coeffs = coeffs_;
  for (auto& x : coeffs) x *= c;
  return PuiseuxSeries(field_, ramification_, start_, std::move(coeffs));
}

PuiseuxSeries PuiseuxSeries::inverse() const {
  const auto v = u_valuation();
  if (!v) throw Error(ErrorCode::ZeroSeries, "inverse of a series that vanishes to u^" + std::to_string(end()));
  const std::int64_t length = end() - *v;
  CycSeries unit(window(*this, *v, length));
  auto inv = ts_invert(unit, as_index(length));
  return PuiseuxSeries(field_, ramification_, -*v, inv.coeffs());
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  require_compatible(a, b);
  const std::int64_t end = std::min(a.end(), b.end());
  const std::int64_t start = std::min({a.start(), b.start(), end});
  std::vector<CyclotomicNumber> coeffs;
  coeffs.reserve(as_index(end - start));
  for (std::int64_t e = start; e < end; ++e) coeffs.push_back(a.coefficient(e) + b.coefficient(e));
  return PuiseuxSeries(a.field(), a.ramification(), start, std::move(coeffs));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  require_compatible(a, b);
  const std::int64_t va = a.u_valuation().value_or(a.end());
  const std::int64_t vb = b.u_valuation().value_or(b.end());
  const std::int64_t end = std::min(va + b.end(), vb + a.end());
  const std::int64_t length = end - va - vb;
  if (length <= 0) return PuiseuxSeries::zero(a.field(), a.ramification(), end);
  CycSeries sa(window(a, va, length));
  CycSeries sb(window(b, vb, length));
  auto prod = ts_mul(sa, sb, as_index(length));
  return PuiseuxSeries(a.field(), a.ramification(), va + vb, prod.coeffs());
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.ramification() != b.ramification() || a.conductor() != b.conductor() || a.end() != b.end()) return false;
  const std::int64_t from = std::min(a.start(), b.start());
  for (std::int64_t e = from; e < a.end(); ++e) {
    if (!(a.coefficient(e) == b.coefficient(e))) return false;
  }
  return true;
}

std::string PuiseuxSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const Rational exp = Rational(start_ + static_cast<std::int64_t>(i)) / Rational(ramification_);
    os << "(" << coeffs_[i] << ")";
    if (!exp.is_zero()) os << "*x^" << (exp.is_integer() ? exp.to_string() : "(" + exp.to_string() + ")");
  }
  if (first) os << "0";
  const Rational t = truncation();
  os << " + O(x^" << (t.is_integer() ? t.to_string() : "(" + t.to_string() + ")") << ")";
  return os.str();
}

Rational valuation(const PuiseuxSeries& p) {
  const auto v = p.u_valuation();
  if (!v) throw Error(ErrorCode::ZeroSeries, "series vanishes to x^" + p.truncation().to_string());
  return Rational(*v) / Rational(p.ramification());
}

PuiseuxSeries from_initial_term(const InitialTerm& t) {
  return PuiseuxSeries::monomial(root_as_element(t.c(), t.c().order()), t.d(), t.n(), t.n() + 1);
}

PuiseuxSeries x_derivative(const PuiseuxSeries& p) {
  const std::int64_t d = p.ramification();
  auto coeffs = p.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] *= Rational(p.start() + static_cast<std::int64_t>(i)) / Rational(d);
  }
  return PuiseuxSeries(p.field(), d, p.start() - d, std::move(coeffs));
}

PuiseuxSeries x_integrate(const PuiseuxSeries& p) {
  const std::int64_t d = p.ramification();
  auto coeffs = p.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::int64_t e = p.start() + static_cast<std::int64_t>(i);
    if (e == -d) {
      if (!coeffs[i].is_zero()) {
        throw Error(ErrorCode::LogarithmicTerm, "x^-1 coefficient " + coeffs[i].to_string() + " has no antiderivative");
      }
      continue;
    }
    coeffs[i] *= Rational(d) / Rational(e + d);
  }
  return PuiseuxSeries(p.field(), d, p.start() + d, std::move(coeffs));
}

PuiseuxSeries outer_substitute(const RatSeries& a, const PuiseuxSeries& p, std::int64_t target_end) {
  const auto v = p.u_valuation();
  if (!v) throw Error(ErrorCode::ZeroSeries, "inner series vanishes to x^" + p.truncation().to_string());
  if (*v <= 0) {
    throw Error(ErrorCode::InnerNotSmall, "inner series has valuation " + valuation(p).to_string() + " <= 0");
  }
  if (target_end <= 0) throw Error(ErrorCode::InvalidArgument, "target order must be positive");
  const std::int64_t needed = (target_end + *v - 1) / *v;
  if (static_cast<std::int64_t>(a.order()) < needed) {
    throw Error(ErrorCode::InsufficientOuterOrder, "outer series of order " + std::to_string(a.order()) +
                                                       " needs order " + std::to_string(needed));
  }

  // A perturbation of P at u^end(P) moves A(P) first at
  // u^(end(P) + (k0 - 1) v), k0 the lowest positive index with a_k0 != 0.
  std::int64_t end = target_end;
  for (std::size_t k = 1; k < a.order(); ++k) {
    if (!a[k].is_zero()) {
      end = std::min(end, p.end() + static_cast<std::int64_t>(k - 1) * *v);
      break;
    }
  }

  const auto& field = p.field();
  CycSeries inner(window(p.as_polynomial(end), 0, end));
  auto composed = ts_compose_brent_kung(lift_series(a, field), inner, as_index(end));
  return PuiseuxSeries(field, p.ramification(), 0, composed.coeffs());
}

}  // namespace x0n
