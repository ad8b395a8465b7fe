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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "x0n/modfun.hpp"
#include "x0n/puiseux.hpp"
#include "x0n/series.hpp"
#include "x0n/solver.hpp"

namespace {

using x0n::InitialTerm;
using x0n::MulAlgorithm;
using x0n::RatSeries;
using x0n::Rational;
using x0n::RootOfUnity;

// The x^2 cusp expansion as a plain series in x, cut to n terms.
RatSeries cusp_series(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) + 2 < n) ++k;
  const auto h = x0n::puiseux_x0n(InitialTerm(RootOfUnity(), Rational(2)), k).h;
  std::vector<Rational> c;
  for (std::size_t e = 0; e < n; ++e) c.push_back(h.coefficient(static_cast<std::int64_t>(e)).rational_value());
  return RatSeries(std::move(c));
}

void BM_Mul(benchmark::State& state, MulAlgorithm algorithm) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = x0n::series_G(n);
  const auto b = x0n::series_F(n);
  for (auto _ : state) benchmark::DoNotOptimize(x0n::ts_mul(a, b, n, algorithm));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Mul, schoolbook, MulAlgorithm::Schoolbook)->RangeMultiplier(2)->Range(16, 512);
BENCHMARK_CAPTURE(BM_Mul, karatsuba, MulAlgorithm::Karatsuba)->RangeMultiplier(2)->Range(16, 512);
BENCHMARK_CAPTURE(BM_Mul, kronecker, MulAlgorithm::Kronecker)->RangeMultiplier(2)->Range(16, 2048);

void BM_Invert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = x0n::series_F(n);
  for (auto _ : state) benchmark::DoNotOptimize(x0n::ts_invert(f, n));
}
BENCHMARK(BM_Invert)->RangeMultiplier(2)->Range(64, 2048);

void BM_ComposeHorner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inner = cusp_series(n);
  const auto outer = x0n::series_G(n / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(x0n::ts_compose_horner(outer, inner, n));
}
BENCHMARK(BM_ComposeHorner)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_ComposeBrentKung(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inner = cusp_series(n);
  const auto outer = x0n::series_G(n / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(x0n::ts_compose_brent_kung(outer, inner, n));
}
BENCHMARK(BM_ComposeBrentKung)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_NewtonStep(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const InitialTerm t(RootOfUnity(), Rational(2));
  const auto r = x0n::puiseux_x0n(t, k);
  for (auto _ : state) benchmark::DoNotOptimize(x0n::newton_step(r.h, t.q(), r.precision));
}
BENCHMARK(BM_NewtonStep)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_NewtonStepRamified(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const InitialTerm t(RootOfUnity(3, 1), Rational(5, 3));
  const auto r = x0n::puiseux_x0n(t, k);
  for (auto _ : state) benchmark::DoNotOptimize(x0n::newton_step(r.h, t.q(), r.precision));
}
BENCHMARK(BM_NewtonStepRamified)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
