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

#include "x0n/rational.hpp"

#include <cctype>
#include <limits>

#include "x0n/error.hpp"

namespace x0n {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::InnerNotSmall: return "InnerNotSmall";
    case ErrorCode::LogarithmicTerm: return "LogarithmicTerm";
    case ErrorCode::InsufficientOuterOrder: return "InsufficientOuterOrder";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::RamificationMismatch: return "RamificationMismatch";
    case ErrorCode::LevelNotFound: return "LevelNotFound";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::ZeroConstant: return "ZeroConstant";
    case ErrorCode::NotRootOfUnity: return "NotRootOfUnity";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_int(num)) throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_mpz(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError(slash + 1, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(to_mpz(num), to_mpz(den));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !num().fits_slong_p()) {
    throw Error(ErrorCode::InvalidArgument, to_string() + " does not fit a 64-bit integer");
  }
  return num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(den(), num());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational inverse(const Rational& x) { return x.inverse(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace x0n
