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

// Slow reference computations for the test suite.
//
// Everything here works on plain std::vector<mpq_class> with schoolbook
// loops and never calls into x0n, so a bug in the library kernels cannot
// hide itself by agreeing with its own oracle.

#ifndef X0N_TESTS_ORACLES_HPP
#define X0N_TESTS_ORACLES_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Poly = std::vector<mpq_class>;

inline Poly mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Poly mul(const Poly& a, const Poly& b) { return mul(a, b, a.size() + b.size() - 1); }

// Long division a / b for b | a exactly.
inline Poly divexact(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  return q;
}

inline Poly cyclotomic(long m) {
  Poly num(static_cast<std::size_t>(m) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (long e = 1; e < m; ++e) {
    if (m % e == 0) num = divexact(num, cyclotomic(e));
  }
  return num;
}

// 1/a mod x^n by the recurrence a_0 b_k = -sum_{j>=1} a_j b_{k-j}.
inline Poly inverse(const Poly& a, std::size_t n) {
  Poly b(n);
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * b[k - j];
    b[k] = -s / a[0];
  }
  return b;
}

inline Poly power(const Poly& a, unsigned e, std::size_t n) {
  Poly r(n);
  r[0] = 1;
  for (unsigned i = 0; i < e; ++i) r = mul(r, a, n);
  return r;
}

// a(b) mod x^n, b(0) = 0, by summing a_i b^i term by term.
inline Poly compose(const Poly& a, const Poly& b, std::size_t n) {
  Poly r(n);
  Poly p(n);
  p[0] = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) r[k] += a[i] * p[k];
    p = mul(p, b, n);
  }
  return r;
}

// Pochhammer (a)_k.
inline mpq_class rising(const mpq_class& a, std::size_t k) {
  mpq_class r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= a + static_cast<long>(i);
  return r;
}

// 2F1(1/12, 5/12; 1; 1728x) from the closed-form coefficients.
inline Poly hypergeometric_f(std::size_t n) {
  Poly f(n);
  mpq_class factorial = 1;
  mpq_class scale = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      factorial *= static_cast<long>(k);
      scale *= 1728;
    }
    f[k] = rising(mpq_class(1, 12), k) * rising(mpq_class(5, 12), k) / (factorial * factorial) * scale;
  }
  return f;
}

// x sqrt(1 - 1728x) through binomial(1/2, k) (-1728)^k.
inline Poly e_series(std::size_t n) {
  Poly e(n);
  mpq_class binom = 1;
  mpq_class scale = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    e[k + 1] = binom * scale;
    binom = binom * (mpq_class(1, 2) - static_cast<long>(k)) / static_cast<long>(k + 1);
    scale *= -1728;
  }
  return e;
}

inline Poly g_series(std::size_t n) {
  const Poly f = hypergeometric_f(n);
  return mul(e_series(n), mul(f, f, n), n);
}

// 1/j = q prod(1 - q^n)^24 / E4^3, everything by schoolbook loops.
inline Poly j_inverse(std::size_t n) {
  const std::size_t L = n - 1;
  Poly eta(L);
  eta[0] = 1;
  for (std::size_t k = 1; k < L; ++k) {
    Poly factor(k + 1);
    factor[0] = 1;
    factor[k] = -1;
    eta = mul(eta, factor, L);
  }
  Poly e4(L);
  e4[0] = 1;
  for (std::size_t k = 1; k < L; ++k) {
    mpz_class s = 0;
    for (std::size_t d = 1; d <= k; ++d) {
      if (k % d == 0) s += mpz_class(static_cast<unsigned long>(d * d * d));
    }
    e4[k] = 240 * s;
  }
  const Poly quotient = mul(power(eta, 24, L), inverse(power(e4, 3, L), L), L);
  Poly out(n);
  for (std::size_t k = 0; k < L; ++k) out[k + 1] = quotient[k];
  return out;
}

// Compositional inverse of a = x + ..., by fixing one coefficient at a time.
inline Poly reversion(const Poly& a, std::size_t n) {
  Poly r(n);
  r[1] = 1;
  for (std::size_t k = 2; k < n; ++k) {
    const Poly c = compose(a, r, k + 1);
    r[k] = -c[k];
  }
  return r;
}

// The expansion of x(q^N) in terms of x = x(q): x(q^N) composed with the
// inverse of x(q), mod x^n.
inline Poly infinity_cusp_expansion(long N, std::size_t n) {
  const Poly x = j_inverse(n);
  Poly xN(n);
  for (std::size_t k = 0; k * static_cast<std::size_t>(N) < n; ++k) xN[k * static_cast<std::size_t>(N)] = x[k];
  return compose(xN, reversion(x, n), n);
}

}  // namespace oracle

#endif  // X0N_TESTS_ORACLES_HPP
