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

// Level inference by breadth-first search over monomial compositions.
//
// A monomial c x^q with c = exp(2 pi i theta) is tracked as the pair
// (theta mod 1, q). Applying a generator on the left acts as
//   x^p                  : (theta, q) -> (p theta, p q)
//   zeta_p^t x^(1/p)     : (theta, q) -> ((theta + t) / p, q / p)
// where the second line runs over all p branches of c^(1/p).

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "x0n/error.hpp"
#include "x0n/solver.hpp"

namespace x0n {
namespace {

using State = std::pair<Rational, Rational>;  // (turns in [0, 1), exponent)

Rational mod_one(const Rational& t) { return t - Rational(t.floor()); }

std::vector<std::int64_t> primes_up_to(std::int64_t cap) {
  std::vector<std::int64_t> out;
  std::vector<bool> composite(static_cast<std::size_t>(cap) + 1, false);
  for (std::int64_t p = 2; p <= cap; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t m = p * p; m <= cap; m += p) composite[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

}  // namespace

Level infer_level(const InitialTerm& T, std::int64_t cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "level cap must be positive");
  const State target{T.c().turns(), T.q()};
  const State identity{Rational(0), Rational(1)};
  if (target == identity) return Level{1};

  const auto primes = primes_up_to(cap);
  std::set<State> seen{identity};
  std::map<State, std::int64_t> frontier{{identity, 1}};

  while (!frontier.empty()) {
    std::map<State, std::int64_t> next;
    auto offer = [&](State s, std::int64_t n) {
      if (seen.contains(s)) return;
      auto [it, inserted] = next.try_emplace(std::move(s), n);
      if (!inserted && n < it->second) it->second = n;
    };
    for (const auto& [state, n] : frontier) {
      const auto& [theta, q] = state;
      for (const std::int64_t p : primes) {
        if (n * p > cap) break;
        const Rational rp(p);
        offer({mod_one(theta * rp), q * rp}, n * p);
        for (std::int64_t t = 0; t < p; ++t) offer({(theta + Rational(t)) / rp, q / rp}, n * p);
      }
    }
    if (const auto hit = next.find(target); hit != next.end()) return Level{hit->second};
    for (const auto& entry : next) seen.insert(entry.first);
    frontier = std::move(next);
  }
  throw Error(ErrorCode::LevelNotFound, "no composition with level <= " + std::to_string(cap) + " reaches " +
                                            T.to_string());
}

}  // namespace x0n
