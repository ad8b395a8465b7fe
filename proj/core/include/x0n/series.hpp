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

// Dense truncated power series in one variable u.
//
// A TruncatedSeries of order M stands for c_0 + c_1 u + ... + c_{M-1} u^{M-1}
// + O(u^M). Every operation states the order of its result; nothing ever
// claims more known terms than its inputs support.
//
// The kernel is instantiated for Rational and CyclotomicNumber coefficients.

#ifndef X0N_SERIES_HPP
#define X0N_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "x0n/cyclotomic.hpp"
#include "x0n/error.hpp"
#include "x0n/rational.hpp"

namespace x0n {

enum class MulAlgorithm {
  Automatic,   // schoolbook below kSchoolbookCutoff terms, Kronecker above
  Schoolbook,  // quadratic, directly on ring elements
  Karatsuba,   // Karatsuba recursion on ring elements
  Kronecker,   // integer packing + one GMP multiplication
};

inline constexpr std::size_t kSchoolbookCutoff = 32;

template <class T>
class TruncatedSeries {
 public:
  using value_type = T;

  // Order equals coeffs.size(), which must be at least 1.
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "truncated series needs order >= 1");
  }

  static TruncatedSeries zero(const T& like, std::size_t order) {
    return TruncatedSeries(std::vector<T>(order, zero_like(like)));
  }
  static TruncatedSeries constant(const T& c, std::size_t order) {
    auto s = zero(c, order);
    s.coeffs_[0] = c;
    return s;
  }
  // c u^e + O(u^order); the monomial is dropped when e >= order.
  static TruncatedSeries monomial(const T& c, std::size_t e, std::size_t order) {
    auto s = zero(c, order);
    if (e < order) s.coeffs_[e] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  // Any coefficient, usable as a witness of the coefficient ring.
  const T& like() const { return coeffs_.front(); }

  // Index of the first nonzero coefficient; nullopt when zero to this order.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!is_zero(coeffs_[i])) return i;
    }
    return std::nullopt;
  }
  bool is_zero_series() const { return !valuation().has_value(); }

  TruncatedSeries truncated(std::size_t order) const {
    if (order == 0 || order > coeffs_.size()) {
      throw Error(ErrorCode::InvalidArgument, "cannot truncate order " + std::to_string(coeffs_.size()) +
                                                  " series to order " + std::to_string(order));
    }
    return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  // Reinterprets the stored coefficients as an exact polynomial and reads it
  // modulo u^order (padding with zeros).
  TruncatedSeries as_polynomial(std::size_t order) const {
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, coeffs_.size())));
    c.resize(order, zero_like(like()));
    return TruncatedSeries(std::move(c));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "u") const;
  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.to_string(); }

 private:
  std::vector<T> coeffs_;
};

template <class T>
TruncatedSeries<T> ts_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b);
template <class T>
TruncatedSeries<T> ts_sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b);
template <class T>
TruncatedSeries<T> ts_negate(const TruncatedSeries<T>& a);
template <class T>
TruncatedSeries<T> ts_scale(const TruncatedSeries<T>& a, const T& c);
template <class T>
TruncatedSeries<T> ts_scale_q(const TruncatedSeries<T>& a, const Rational& c);

// Product modulo u^M. Requires M <= min(a.order(), b.order()).
template <class T>
TruncatedSeries<T> ts_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t M,
                          MulAlgorithm algorithm = MulAlgorithm::Automatic);

// B with A * B = 1 mod u^M, by Newton iteration. Requires a unit constant
// term (NonUnitLeadingCoefficient otherwise) and M <= a.order().
template <class T>
TruncatedSeries<T> ts_invert(const TruncatedSeries<T>& a, std::size_t M);

// B with B^2 = A mod u^M and B(0) = 1. A(0) must be 1 (BadConstantTerm).
template <class T>
TruncatedSeries<T> ts_sqrt_one_plus(const TruncatedSeries<T>& a, std::size_t M);

// d/du; the result has order a.order() - 1 (a.order() must be >= 2).
template <class T>
TruncatedSeries<T> ts_derivative(const TruncatedSeries<T>& a);

// Composition A(B) with B(0) = 0 (InnerNotSmall otherwise). B must be known
// to order >= M. The result has order min(M, A.order() * v(B)).
//
// Horner evaluation; K multiplications for K outer terms.
template <class T>
TruncatedSeries<T> ts_compose_horner(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t M,
                                     MulAlgorithm algorithm = MulAlgorithm::Automatic);

// Same contract as ts_compose_horner. Brent-Kung baby-step/giant-step:
// ceil(sqrt(K)) powers of B, then Horner in B^ceil(sqrt(K)) over blocks.
template <class T>
TruncatedSeries<T> ts_compose_brent_kung(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t M);

#define X0N_SERIES_EXTERN(T)                                                                                      \
  extern template class TruncatedSeries<T>;                                                                       \
  extern template TruncatedSeries<T> ts_add(const TruncatedSeries<T>&, const TruncatedSeries<T>&);                \
  extern template TruncatedSeries<T> ts_sub(const TruncatedSeries<T>&, const TruncatedSeries<T>&);                \
  extern template TruncatedSeries<T> ts_negate(const TruncatedSeries<T>&);                                        \
  extern template TruncatedSeries<T> ts_scale(const TruncatedSeries<T>&, const T&);                               \
  extern template TruncatedSeries<T> ts_scale_q(const TruncatedSeries<T>&, const Rational&);                      \
  extern template TruncatedSeries<T> ts_mul(const TruncatedSeries<T>&, const TruncatedSeries<T>&, std::size_t,    \
                                            MulAlgorithm);                                                        \
  extern template TruncatedSeries<T> ts_invert(const TruncatedSeries<T>&, std::size_t);                           \
  extern template TruncatedSeries<T> ts_sqrt_one_plus(const TruncatedSeries<T>&, std::size_t);                    \
  extern template TruncatedSeries<T> ts_derivative(const TruncatedSeries<T>&);                                    \
  extern template TruncatedSeries<T> ts_compose_horner(const TruncatedSeries<T>&, const TruncatedSeries<T>&,      \
                                                       std::size_t, MulAlgorithm);                                \
  extern template TruncatedSeries<T> ts_compose_brent_kung(const TruncatedSeries<T>&, const TruncatedSeries<T>&,  \
                                                           std::size_t);

X0N_SERIES_EXTERN(Rational)
X0N_SERIES_EXTERN(CyclotomicNumber)

#undef X0N_SERIES_EXTERN

using RatSeries = TruncatedSeries<Rational>;
using CycSeries = TruncatedSeries<CyclotomicNumber>;

// Coefficientwise image of a Q-series in Q(zeta_m).
CycSeries lift_series(const RatSeries& s, const FieldPtr& field);

}  // namespace x0n

#endif  // X0N_SERIES_HPP
