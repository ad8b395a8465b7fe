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

#include "x0n/series.hpp"

#include <cmath>
#include <span>

#include "x0n/int_poly.hpp"

namespace x0n {

namespace {

using detail::IntPoly;

template <class T>
struct Packing;

template <>
struct Packing<Rational> {
  static IntPoly pack(std::span<const Rational> c) { return detail::to_int_poly(c); }
  static std::vector<Rational> unpack(const IntPoly& p, const Rational&) { return detail::to_rationals(p); }
  static const CyclotomicField* field(const Rational&) { return nullptr; }
};

template <>
struct Packing<CyclotomicNumber> {
  static IntPoly pack(std::span<const CyclotomicNumber> c) { return detail::to_int_poly(c); }
  static std::vector<CyclotomicNumber> unpack(const IntPoly& p, const CyclotomicNumber& like) {
    return detail::to_cyclotomics(p, like.field());
  }
  static const CyclotomicField* field(const CyclotomicNumber& like) { return like.field().get(); }
};

template <class T>
void require_same_ring(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (!same_ring(a.like(), b.like())) throw Error(ErrorCode::RingMismatch, "series over different coefficient rings");
}

// Length after dropping trailing zeros, capped at `cap`.
template <class T>
std::size_t effective_length(const std::vector<T>& c, std::size_t cap) {
  std::size_t n = std::min(c.size(), cap);
  while (n > 0 && is_zero(c[n - 1])) --n;
  return n;
}

template <class T>
std::vector<T> schoolbook(std::span<const T> a, std::span<const T> b, std::size_t M, const T& zero) {
  std::vector<T> out(M, zero);
  for (std::size_t i = 0; i < a.size() && i < M; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < M; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Full product of a and b (length a.size() + b.size() - 1).
template <class T>
std::vector<T> karatsuba(std::span<const T> a, std::span<const T> b, const T& zero) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() < kSchoolbookCutoff) return schoolbook(a, b, a.size() + b.size() - 1, zero);

  const std::size_t h = a.size() / 2;
  std::vector<T> out(a.size() + b.size() - 1, zero);
  auto add_into = [&out](const std::vector<T>& part, std::size_t shift) {
    for (std::size_t i = 0; i < part.size(); ++i) out[shift + i] += part[i];
  };
  const auto a0 = a.first(h);
  const auto a1 = a.subspan(h);
  if (b.size() <= h) {
    // Unbalanced: split only the longer operand.
    add_into(karatsuba(a0, b, zero), 0);
    add_into(karatsuba(a1, b, zero), h);
    return out;
  }
  const auto b0 = b.first(h);
  const auto b1 = b.subspan(h);
  const auto z0 = karatsuba(a0, b0, zero);
  const auto z2 = karatsuba(a1, b1, zero);
  std::vector<T> sa(a1.begin(), a1.end());
  std::vector<T> sb(b1.begin(), b1.end());
  if (sb.size() < h) sb.resize(h, zero);
  for (std::size_t i = 0; i < h; ++i) sa[i] += a0[i];
  for (std::size_t i = 0; i < h; ++i) sb[i] += b0[i];
  auto z1 = karatsuba(std::span<const T>(sa), std::span<const T>(sb), zero);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  add_into(z0, 0);
  add_into(z1, h);
  add_into(z2, 2 * h);
  return out;
}

template <class T>
TruncatedSeries<T> shifted_up(const TruncatedSeries<T>& s, std::size_t shift, std::size_t order) {
  std::vector<T> c(order, zero_like(s.like()));
  for (std::size_t i = 0; i + shift < order && i < s.order(); ++i) c[i + shift] = s[i];
  return TruncatedSeries<T>(std::move(c));
}

// B = u^v * B'; returns B' known to order `order` (requires v + order <= B.order()).
template <class T>
TruncatedSeries<T> shifted_down(const TruncatedSeries<T>& s, std::size_t shift, std::size_t order) {
  return TruncatedSeries<T>(std::vector<T>(s.coeffs().begin() + static_cast<std::ptrdiff_t>(shift),
                                           s.coeffs().begin() + static_cast<std::ptrdiff_t>(shift + order)));
}

struct CompositionPlan {
  std::size_t order;      // R: order of the result
  std::size_t valuation;  // v(B) (only meaningful when terms > 1)
  std::size_t terms;      // K: outer coefficients that influence the result
};

template <class T>
CompositionPlan plan_composition(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t M) {
  require_same_ring(a, b);
  if (M == 0) throw Error(ErrorCode::InvalidArgument, "composition order must be positive");
  if (!is_zero(b[0])) throw Error(ErrorCode::InnerNotSmall, "inner series has a nonzero constant term");
  if (b.order() < M) {
    throw Error(ErrorCode::InvalidArgument, "inner series known to order " + std::to_string(b.order()) +
                                                " < requested " + std::to_string(M));
  }
  const auto v = b.truncated(M).valuation();
  if (!v) return {M, M, 1};
  const std::size_t R = std::min(M, a.order() * *v);
  const std::size_t K = (R + *v - 1) / *v;
  return {R, *v, K};
}

}  // namespace

template <class T>
std::string TruncatedSeries<T>::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (is_zero(coeffs_[i])) continue;
    std::string c = coeffs_[i].to_string();
    if (c.find_first_of("+ ") != std::string::npos) c = "(" + c + ")";
    std::string term = i == 0 ? c : (c == "1" ? "" : (c == "-1" ? "-" : c + "*")) + var + (i == 1 ? "" : "^" + std::to_string(i));
    if (out.empty()) out = term;
    else out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
  }
  const std::string tail = "O(" + var + (coeffs_.size() == 1 ? "" : "^" + std::to_string(coeffs_.size())) + ")";
  return out.empty() ? tail : out + " + " + tail;
}

template <class T>
TruncatedSeries<T> ts_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  require_same_ring(a, b);
  const std::size_t M = std::min(a.order(), b.order());
  std::vector<T> c(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(M));
  for (std::size_t i = 0; i < M; ++i) c[i] += b[i];
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> ts_sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  require_same_ring(a, b);
  const std::size_t M = std::min(a.order(), b.order());
  std::vector<T> c(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(M));
  for (std::size_t i = 0; i < M; ++i) c[i] -= b[i];
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> ts_negate(const TruncatedSeries<T>& a) {
  std::vector<T> c = a.coeffs();
  for (auto& x : c) x = -x;
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> ts_scale(const TruncatedSeries<T>& a, const T& s) {
  std::vector<T> c = a.coeffs();
  for (auto& x : c) x *= s;
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> ts_scale_q(const TruncatedSeries<T>& a, const Rational& s) {
  std::vector<T> c = a.coeffs();
  for (auto& x : c) x *= s;
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> ts_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t M,
                          MulAlgorithm algorithm) {
  require_same_ring(a, b);
  if (M == 0 || M > a.order() || M > b.order()) {
    throw Error(ErrorCode::InvalidArgument, "product order " + std::to_string(M) + " exceeds operand orders " +
                                                std::to_string(a.order()) + ", " + std::to_string(b.order()));
  }
  const T zero = zero_like(a.like());
  const std::size_t la = effective_length(a.coeffs(), M);
  const std::size_t lb = effective_length(b.coeffs(), M);
  if (la == 0 || lb == 0) return TruncatedSeries<T>::zero(a.like(), M);
  const std::span<const T> sa(a.coeffs().data(), la);
  const std::span<const T> sb(b.coeffs().data(), lb);

  switch (algorithm) {
    case MulAlgorithm::Schoolbook:
      return TruncatedSeries<T>(schoolbook(sa, sb, M, zero));
    case MulAlgorithm::Karatsuba: {
      auto c = karatsuba(sa, sb, zero);
      c.resize(M, zero);
      return TruncatedSeries<T>(std::move(c));
    }
    case MulAlgorithm::Kronecker:
    case MulAlgorithm::Automatic:
      break;
  }
  const auto method = (algorithm == MulAlgorithm::Automatic && std::min(la, lb) < kSchoolbookCutoff)
                          ? detail::IntMulMethod::Schoolbook
                          : detail::IntMulMethod::Kronecker;
  const IntPoly pa = Packing<T>::pack(sa);
  const IntPoly pb = Packing<T>::pack(sb);
  const IntPoly pc = detail::int_poly_mul(pa, pb, M, Packing<T>::field(a.like()), method);
  return TruncatedSeries<T>(Packing<T>::unpack(pc, a.like()));
}

template <class T>
TruncatedSeries<T> ts_invert(const TruncatedSeries<T>& a, std::size_t M) {
  if (M == 0 || M > a.order()) throw Error(ErrorCode::InvalidArgument, "inverse order exceeds operand order");
  if (is_zero(a[0])) throw Error(ErrorCode::NonUnitLeadingCoefficient, "constant term is zero");
  auto inv = TruncatedSeries<T>::constant(inverse(a[0]), 1);
  const auto one = one_like(a.like());
  std::size_t n = 1;
  while (n < M) {
    const std::size_t next = std::min(2 * n, M);
    // inv <- inv + inv * (1 - a * inv), all mod u^next
    const auto ext = inv.as_polynomial(next);
    auto err = ts_negate(ts_mul(a.truncated(next), ext, next));
    auto c = err.coeffs();
    c[0] += one;
    const auto corr = ts_mul(ext, TruncatedSeries<T>(std::move(c)), next);
    inv = ts_add(ext, corr);
    n = next;
  }
  return inv;
}

template <class T>
TruncatedSeries<T> ts_sqrt_one_plus(const TruncatedSeries<T>& a, std::size_t M) {
  if (M == 0 || M > a.order()) throw Error(ErrorCode::InvalidArgument, "square root order exceeds operand order");
  if (a[0] != one_like(a.like())) {
    throw Error(ErrorCode::BadConstantTerm, "square root needs constant term 1, got " + a[0].to_string());
  }
  const Rational half(1, 2);
  auto root = TruncatedSeries<T>::constant(one_like(a.like()), 1);
  std::size_t n = 1;
  while (n < M) {
    const std::size_t next = std::min(2 * n, M);
    // root <- (root + a / root) / 2
    const auto ext = root.as_polynomial(next);
    const auto quotient = ts_mul(a.truncated(next), ts_invert(ext, next), next);
    root = ts_scale_q(ts_add(ext, quotient), half);
    n = next;
  }
  return root;
}

template <class T>
TruncatedSeries<T> ts_derivative(const TruncatedSeries<T>& a) {
  if (a.order() < 2) throw Error(ErrorCode::InvalidArgument, "derivative needs order >= 2");
  std::vector<T> c;
  c.reserve(a.order() - 1);
  for (std::size_t i = 1; i < a.order(); ++i) c.push_back(a[i] * Rational(static_cast<long>(i)));
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> ts_compose_horner(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t M,
                                     MulAlgorithm algorithm) {
  const auto plan = plan_composition(a, b, M);
  const std::size_t R = plan.order;
  if (plan.terms <= 1) return TruncatedSeries<T>::constant(a[0], R);
  const std::size_t v = plan.valuation;
  const std::size_t K = plan.terms;
  // r_k = a_k + B r_{k+1} is only needed mod u^(R - k v).
  const auto reduced_b = shifted_down(b, v, R - v);
  auto r = TruncatedSeries<T>::constant(a[K - 1], R - (K - 1) * v);
  for (std::size_t k = K - 1; k-- > 0;) {
    const std::size_t len = R - k * v;
    const std::size_t inner = len - v;
    auto prod = ts_mul(reduced_b.truncated(inner), r.truncated(inner), inner, algorithm);
    auto next = shifted_up(prod, v, len);
    auto c = next.coeffs();
    c[0] += a[k];
    r = TruncatedSeries<T>(std::move(c));
  }
  return r;
}

template <class T>
TruncatedSeries<T> ts_compose_brent_kung(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t M) {
  const auto plan = plan_composition(a, b, M);
  const std::size_t R = plan.order;
  if (plan.terms <= 1) return TruncatedSeries<T>::constant(a[0], R);
  const std::size_t v = plan.valuation;
  const std::size_t K = plan.terms;
  const auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(K))));
  const std::size_t blocks = (K + m - 1) / m;

  // Baby steps B^0 .. B^(m-1), plus the giant step B^m.
  const auto base = b.truncated(R);
  std::vector<TruncatedSeries<T>> powers;
  powers.reserve(m + 1);
  powers.push_back(TruncatedSeries<T>::constant(one_like(a.like()), R));
  powers.push_back(base);
  for (std::size_t j = 2; j <= m; ++j) powers.push_back(ts_mul(powers.back(), base, R));

  std::vector<IntPoly> packed;
  packed.reserve(m);
  for (std::size_t j = 0; j < m; ++j) packed.push_back(Packing<T>::pack(powers[j].coeffs()));
  detail::unify_denominators(packed);
  const CyclotomicField* field = Packing<T>::field(a.like());

  // Block i contributes C_i(B) (B^m)^i, so C_i is needed mod u^(R - i m v).
  auto block = [&](std::size_t i) {
    const std::size_t lo = i * m;
    const std::size_t hi = std::min(K, lo + m);
    const IntPoly scalars = Packing<T>::pack(std::span<const T>(a.coeffs().data() + lo, hi - lo));
    const std::size_t len = R - lo * v;
    return TruncatedSeries<T>(Packing<T>::unpack(detail::int_poly_combine(scalars, packed, len, field), a.like()));
  };

  const std::size_t giant_shift = m * v;
  const auto giant = giant_shift < R ? shifted_down(powers[m], giant_shift, R - giant_shift)
                                     : TruncatedSeries<T>::zero(a.like(), 1);
  auto result = block(blocks - 1);
  for (std::size_t i = blocks - 1; i-- > 0;) {
    const std::size_t len = R - i * m * v;
    const std::size_t inner = len - giant_shift;
    auto prod = ts_mul(giant.truncated(inner), result.truncated(inner), inner);
    result = ts_add(block(i), shifted_up(prod, giant_shift, len));
  }
  return result;
}

CycSeries lift_series(const RatSeries& s, const FieldPtr& field) {
  std::vector<CyclotomicNumber> c;
  c.reserve(s.order());
  for (const auto& x : s.coeffs()) c.emplace_back(field, x);
  return CycSeries(std::move(c));
}

#define X0N_SERIES_INSTANTIATE(T)                                                                                 \
  template class TruncatedSeries<T>;                                                                              \
  template TruncatedSeries<T> ts_add(const TruncatedSeries<T>&, const TruncatedSeries<T>&);                       \
  template TruncatedSeries<T> ts_sub(const TruncatedSeries<T>&, const TruncatedSeries<T>&);                       \
  template TruncatedSeries<T> ts_negate(const TruncatedSeries<T>&);                                               \
  template TruncatedSeries<T> ts_scale(const TruncatedSeries<T>&, const T&);                                      \
  template TruncatedSeries<T> ts_scale_q(const TruncatedSeries<T>&, const Rational&);                             \
  template TruncatedSeries<T> ts_mul(const TruncatedSeries<T>&, const TruncatedSeries<T>&, std::size_t,           \
                                     MulAlgorithm);                                                               \
  template TruncatedSeries<T> ts_invert(const TruncatedSeries<T>&, std::size_t);                                  \
  template TruncatedSeries<T> ts_sqrt_one_plus(const TruncatedSeries<T>&, std::size_t);                           \
  template TruncatedSeries<T> ts_derivative(const TruncatedSeries<T>&);                                           \
  template TruncatedSeries<T> ts_compose_horner(const TruncatedSeries<T>&, const TruncatedSeries<T>&,             \
                                                std::size_t, MulAlgorithm);                                       \
  template TruncatedSeries<T> ts_compose_brent_kung(const TruncatedSeries<T>&, const TruncatedSeries<T>&,         \
                                                    std::size_t);

X0N_SERIES_INSTANTIATE(Rational)
X0N_SERIES_INSTANTIATE(CyclotomicNumber)

}  // namespace x0n
