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

#include "x0n/modfun.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <vector>

#include "x0n/error.hpp"

namespace x0n {
namespace {

std::mutex g_cache_mutex;
std::optional<RatSeries> g_cache;

void require_order_two(std::size_t M, const char* what) {
  if (M < 2) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs order >= 2");
}

}  // namespace

RatSeries series_F(std::size_t M) {
  if (M == 0) throw Error(ErrorCode::InvalidArgument, "F needs order >= 1");
  // f_{k+1} / f_k = 1728 (k + 1/12)(k + 5/12) / (k + 1)^2 = 12 (12k + 1)(12k + 5) / (k + 1)^2
  std::vector<Rational> c;
  c.reserve(M);
  mpz_class f = 1;
  for (std::size_t k = 0; k < M; ++k) {
    c.emplace_back(f);
    const mpz_class kk = static_cast<unsigned long>(k);
    f *= 12 * (12 * kk + 1) * (12 * kk + 5);
    mpz_class den = (kk + 1) * (kk + 1);
    mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), den.get_mpz_t());
  }
  return RatSeries(std::move(c));
}

RatSeries series_E(std::size_t M) {
  require_order_two(M, "E");
  std::vector<Rational> a(M - 1);
  a[0] = Rational(1);
  if (M > 2) a[1] = Rational(-1728);
  auto root = ts_sqrt_one_plus(RatSeries(std::move(a)), M - 1);
  std::vector<Rational> c;
  c.reserve(M);
  c.emplace_back(0);
  c.insert(c.end(), root.coeffs().begin(), root.coeffs().end());
  return RatSeries(std::move(c));
}

RatSeries series_G(std::size_t M) {
  require_order_two(M, "G");
  {
    std::lock_guard lock(g_cache_mutex);
    if (g_cache && g_cache->order() >= M) return g_cache->truncated(M);
  }
  const auto f = series_F(M);
  const auto g = ts_mul(series_E(M), ts_mul(f, f, M), M);
  std::lock_guard lock(g_cache_mutex);
  if (!g_cache || g_cache->order() < M) g_cache = g;
  return g;
}

PuiseuxSeries relation_residual(const PuiseuxSeries& h, const Rational& q) {
  const auto v = h.u_valuation();
  if (!v) throw Error(ErrorCode::ZeroSeries, "residual of a series that vanishes to its end");
  const std::int64_t d = h.ramification();
  const std::int64_t end = h.end();
  const std::int64_t x_order = (end + d - 1) / d + 1;
  const auto g = series_G(static_cast<std::size_t>(std::max<std::int64_t>(2, x_order)));
  const std::size_t outer_order = static_cast<std::size_t>((end + *v - 1) / *v) + 1;
  const auto g_of_h = outer_substitute(series_G(std::max<std::size_t>(2, outer_order)), h, end);
  const auto g_of_x = PuiseuxSeries::from_x_series(g, h.field(), d);
  return g_of_h.scaled(q) - x_derivative(h) * g_of_x;
}

}  // namespace x0n
