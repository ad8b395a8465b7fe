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

#include "x0n/oracle.hpp"

#include <algorithm>
#include <optional>

#include "x0n/error.hpp"
#include "x0n/puiseux.hpp"

namespace x0n {
namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

// prod_{n >= 1} (1 - q^n) mod q^L, Euler's function.
std::vector<Rational> euler_product(std::size_t L) {
  std::vector<Rational> p(L);
  p[0] = Rational(1);
  for (std::size_t n = 1; n < L; ++n) {
    for (std::size_t i = L - 1; i >= n; --i) p[i] -= p[i - n];
  }
  return p;
}

RatSeries power(const RatSeries& s, unsigned e, std::size_t M) {
  auto result = RatSeries::constant(Rational(1), M);
  auto base = s.truncated(M);
  while (e > 0) {
    if (e & 1U) result = ts_mul(result, base, M);
    e >>= 1U;
    if (e > 0) base = ts_mul(base, base, M);
  }
  return result;
}

// s(q^N) mod q^M.
RatSeries dilate(const RatSeries& s, std::int64_t N, std::size_t M) {
  std::vector<Rational> c(M);
  const auto step = static_cast<std::size_t>(N);
  for (std::size_t i = 0; i * step < M; ++i) c[i * step] = s[i];
  return RatSeries(std::move(c));
}

void require_prime(std::int64_t N) {
  if (!is_prime(N)) throw Error(ErrorCode::NotPrime, std::to_string(N) + " is not prime");
}

// Kernel of a rational matrix; one vector per free column.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Rational> v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RatSeries j_inverse_qexp(std::size_t M) {
  if (M < 2) throw Error(ErrorCode::InvalidArgument, "1/j needs order >= 2");
  const std::size_t L = M - 1;
  const auto delta = power(RatSeries(euler_product(L)), 24, L);
  std::vector<Rational> e4(L);
  e4[0] = Rational(1);
  for (std::size_t n = 1; n < L; ++n) {
    mpz_class sigma = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k == 0) sigma += mpz_class(static_cast<unsigned long>(k)) * k * k;
    }
    e4[n] = Rational(mpz_class(240 * sigma));
  }
  const auto e4_cubed = power(RatSeries(std::move(e4)), 3, L);
  const auto quotient = ts_mul(delta, ts_invert(e4_cubed, L), L);
  std::vector<Rational> c{Rational(0)};
  c.insert(c.end(), quotient.coeffs().begin(), quotient.coeffs().end());
  return RatSeries(std::move(c));
}

CuspCheckReport infinity_cusp_check(std::int64_t N, int k, std::size_t M) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  if (k < 0 || k > 60) throw Error(ErrorCode::InvalidArgument, "step count out of range");
  if (M < 2) throw Error(ErrorCode::InvalidArgument, "q-order must be >= 2");
  const std::int64_t known = N + (std::int64_t{1} << k);
  if (known < static_cast<std::int64_t>(M)) {
    throw Error(ErrorCode::InsufficientPrecision, "h known mod x^" + std::to_string(known) + " cannot fix q^" +
                                                      std::to_string(M));
  }
  const auto result = puiseux_x0n(InitialTerm(RootOfUnity(), Rational(N)), k);
  std::vector<Rational> hc;
  hc.reserve(M);
  for (std::size_t e = 0; e < M; ++e) hc.push_back(result.h.coefficient(static_cast<std::int64_t>(e)).rational_value());

  const auto x = j_inverse_qexp(M);
  const std::size_t short_order = std::max<std::size_t>(2, (M + static_cast<std::size_t>(N) - 1) / static_cast<std::size_t>(N) + 1);
  CuspCheckReport report{N, k, M, ts_compose_horner(RatSeries(std::move(hc)), x, M),
                         dilate(j_inverse_qexp(short_order), N, M), {}};
  for (std::size_t i = 0; i < M; ++i) {
    if (report.composed[i] != report.expected[i]) report.mismatches.push_back(i);
  }
  return report;
}

std::vector<ExpansionResult> cusp_expansions_prime(std::int64_t N, int k) {
  require_prime(N);
  std::vector<ExpansionResult> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  out.push_back(puiseux_x0n(InitialTerm(RootOfUnity(), Rational(N)), k));
  for (std::int64_t s = 0; s < N; ++s) {
    out.push_back(puiseux_x0n(InitialTerm(RootOfUnity(N, s), Rational(1) / Rational(N)), k));
  }
  return out;
}

mpz_class ModularPolynomial::coefficient(int a, int b) const {
  const auto it = coefficients.find({a, b});
  return it == coefficients.end() ? mpz_class(0) : it->second;
}

int ModularPolynomial::degree_x1() const {
  int d = -1;
  for (const auto& [ab, c] : coefficients) d = std::max(d, ab.first);
  return d;
}

int ModularPolynomial::degree_x2() const {
  int d = -1;
  for (const auto& [ab, c] : coefficients) d = std::max(d, ab.second);
  return d;
}

bool ModularPolynomial::is_symmetric() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [&](const auto& entry) { return coefficient(entry.first.second, entry.first.first) == entry.second; });
}

ModularPolynomial phi_from_q_expansions(std::int64_t N) {
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "level must be >= 2");
  const int top = static_cast<int>(N) + 1;
  const std::size_t cols = static_cast<std::size_t>(top + 1) * static_cast<std::size_t>(top + 1);
  const std::size_t rows = cols + 32;
  const std::int64_t pole = static_cast<std::int64_t>(top) * top;

  // j(tau) = q^-1 J(q) with J = (x / q)^-1.
  const auto x = j_inverse_qexp(rows + 1);
  const auto J = ts_invert(RatSeries(std::vector<Rational>(x.coeffs().begin() + 1, x.coeffs().end())), rows);
  const auto JN = dilate(J, N, rows);

  std::vector<RatSeries> ja{RatSeries::constant(Rational(1), rows)};
  std::vector<RatSeries> jb{RatSeries::constant(Rational(1), rows)};
  for (int i = 1; i <= top; ++i) {
    ja.push_back(ts_mul(ja.back(), J, rows));
    jb.push_back(ts_mul(jb.back(), JN, rows));
  }

  std::vector<std::vector<Rational>> matrix(rows, std::vector<Rational>(cols));
  std::vector<std::pair<int, int>> monomials;
  for (int a = 0; a <= top; ++a) {
    for (int b = 0; b <= top; ++b) {
      const auto prod = ts_mul(ja[static_cast<std::size_t>(a)], jb[static_cast<std::size_t>(b)], rows);
      const std::int64_t shift = a + N * b;
      const std::size_t col = monomials.size();
      // Row e holds the coefficient of q^(e - pole).
      for (std::size_t e = 0; e < rows; ++e) {
        const std::int64_t t = static_cast<std::int64_t>(e) - pole + shift;
        if (t >= 0 && t < static_cast<std::int64_t>(rows)) matrix[e][col] = prod[static_cast<std::size_t>(t)];
      }
      monomials.emplace_back(a, b);
    }
  }

  const auto kernel = nullspace(std::move(matrix), cols);
  if (kernel.size() != 1) {
    throw Error(ErrorCode::OracleMismatch, "q-expansion relation space has dimension " + std::to_string(kernel.size()));
  }
  mpz_class den = 1;
  for (const auto& c : kernel[0]) den = lcm(den, c.den());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& c : kernel[0]) {
    ints.push_back(c.num() * (den / c.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  ModularPolynomial phi{Level{N}, {}};
  const auto lead = std::find(monomials.begin(), monomials.end(), std::pair<int, int>{top, 0}) - monomials.begin();
  if (sgn(ints[static_cast<std::size_t>(lead)]) < 0) g = -g;
  for (std::size_t i = 0; i < ints.size(); ++i) {
    if (sgn(ints[i]) != 0) phi.coefficients[monomials[i]] = ints[i] / g;
  }
  return phi;
}

ModularPolynomial phi_reconstruct_prime(std::int64_t N) {
  require_prime(N);
  if (N > 3) throw Error(ErrorCode::InvalidArgument, "reconstruction is implemented for N = 2 and N = 3");
  const int top = static_cast<int>(N) + 1;

  std::optional<std::vector<PuiseuxSeries>> symmetric;
  for (int k = 1; k <= 12 && !symmetric; ++k) {
    // Coefficients of prod (Y - w) below the leading 1, lowest degree first.
    std::vector<PuiseuxSeries> p;
    for (const auto& r : cusp_expansions_prime(N, k)) {
      const auto w = r.h.with_ramification(N).lifted(N).inverse();
      if (p.empty()) {
        p.push_back(-w);
        continue;
      }
      std::vector<PuiseuxSeries> next{-(w * p[0])};
      for (std::size_t j = 1; j < p.size(); ++j) next.push_back(p[j - 1] - w * p[j]);
      next.push_back(p.back() - w);
      p = std::move(next);
    }
    const bool enough = std::all_of(p.begin(), p.end(), [](const PuiseuxSeries& s) { return s.truncation() >= Rational(2); });
    if (enough) symmetric = std::move(p);
  }
  if (!symmetric) throw Error(ErrorCode::PrecisionTooLow, "symmetric functions not resolved within 12 steps");

  ModularPolynomial phi{Level{N}, {}};
  phi.coefficients[{0, top}] = 1;
  for (std::size_t j = 0; j < symmetric->size(); ++j) {
    // p_j multiplies Y^j, so it is (-1)^r e_r with r = N + 1 - j.
    const auto& s = (*symmetric)[j];
    for (std::int64_t e = s.start(); e < s.end(); ++e) {
      const auto c = s.coefficient(e);
      if (c.is_zero()) continue;
      if (e % N != 0 || e > 0 || -e / N > top || !c.is_rational()) {
        throw Error(ErrorCode::PrecisionTooLow, "symmetric function has a stray term at x^" +
                                                    (Rational(e) / Rational(N)).to_string());
      }
      if (!c.rational_value().is_integer()) {
        throw Error(ErrorCode::OracleMismatch, "non-integral coefficient " + c.to_string());
      }
      phi.coefficients[{static_cast<int>(-e / N), static_cast<int>(j)}] = c.rational_value().num();
    }
  }

  const auto oracle = phi_from_q_expansions(N);
  if (!(oracle == phi)) throw Error(ErrorCode::OracleMismatch, "phi_" + std::to_string(N) + " disagrees with q-expansion oracle");
  return phi;
}

}  // namespace x0n
