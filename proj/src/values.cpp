// Copyright 2026 The pfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfg/values.hpp"

#include "pfg/errors.hpp"
#include "pfg/restriction.hpp"

namespace pfg {

namespace {

Rational factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

}  // namespace

PayoffVector shapley(const TuGame& v) {
  const int n = v.player_count();
  if (n == 0) throw DomainError("Shapley value of the empty game");

  std::vector<Rational> weight(n);
  const Rational n_fact = factorial(n);
  for (int s = 0; s < n; ++s) weight[s] = factorial(s) * factorial(n - s - 1) / n_fact;

  const auto worth = v.worths();
  std::vector<Rational> out(n);
  for (int k = 0; k < n; ++k) {
    const std::uint32_t bit = 1U << k;
    for (std::uint32_t local = 0; local < worth.size(); ++local) {
      if ((local & bit) != 0) continue;
      out[k] += weight[std::popcount(local)] * (worth[local | bit] - worth[local]);
    }
  }
  return PayoffVector(v.players(), std::move(out));
}

TuGame average_game(const TuxGame& w) {
  const Coalition players = w.players();
  std::vector<Rational> avg(std::size_t{1} << players.size());
  const auto worths = w.worths();
  w.layout().for_each([&](std::size_t index, Coalition s, std::span<const Coalition> blocks) {
    if (s.empty() || worths[index].is_zero()) return;
    avg[compress(s, players)] += ewens_weight(blocks) * worths[index];
  });
  return TuGame(players, std::move(avg));
}

TuGame auxiliary_game(const TuxGame& w) {
  const Coalition players = w.players();
  return TuGame::from_function(players, [&](Coalition s) { return restrict_set(w, players - s).grand(); });
}

PayoffVector mpw(const TuxGame& w) {
  if (w.player_count() == 0) throw DomainError("MPW value of the empty game");
  return shapley(average_game(w));
}

PayoffVector externality_free_value(const TuxGame& w) {
  if (w.player_count() == 0) throw DomainError("externality-free value of the empty game");
  const Coalition players = w.players();
  const TuGame v = TuGame::from_function(players, [&](Coalition s) {
    std::vector<Coalition> singletons;
    (players - s).for_each([&](PlayerId j) { singletons.push_back(Coalition::singleton(j)); });
    return w.at(s, singletons);
  });
  return shapley(v);
}

SolutionConcept mpw_solution() { return SolutionConcept("mpw", [](const TuxGame& w) { return mpw(w); }); }

SolutionConcept externality_free_solution() {
  return SolutionConcept("ext-free", [](const TuxGame& w) { return externality_free_value(w); });
}

TuSolutionConcept shapley_solution() {
  return TuSolutionConcept("shapley", [](const TuGame& v) { return shapley(v); });
}

}  // namespace pfg
