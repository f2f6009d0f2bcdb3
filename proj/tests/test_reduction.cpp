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

#include <doctest.h>

#include "helpers.hpp"
#include "pfg/errors.hpp"
#include "pfg/generators.hpp"
#include "pfg/reduction.hpp"
#include "pfg/restriction.hpp"
#include "pfg/values.hpp"

using namespace pfg;
using namespace testing;

namespace {

const Coalition kRest{1, 2};

std::vector<TuxGame> seeded_games(int count, std::uint64_t base, int max_n = 5) {
  std::vector<TuxGame> out;
  for (int k = 0; k < count; ++k) {
    const int n = 2 + k % (max_n - 1);
    out.push_back(random_tux_game(n, base + static_cast<std::uint64_t>(k)));
  }
  return out;
}

}  // namespace

TEST_CASE("Sobolev reduction of the public goods game") {
  const TuxGame r = sobolev_reduce_tux(maskin_public_goods(), 0, mpw_solution());
  CHECK(r.players() == kRest);
  CHECK(r(Coalition{1}, part({{2}})) == Rational(9, 2));
  CHECK(r(Coalition{2}, part({{1}})) == Rational(5));
  CHECK(r.grand() == Rational(33, 2));
  CHECK(mpw(r) == payoffs(kRest, {8, Rational(17, 2)}));
}

TEST_CASE("HM reduction of the public goods game") {
  const TuxGame r = hm_reduce_tux(maskin_public_goods(), 0, mpw_solution());
  CHECK(r(Coalition{1}, part({{2}})) == Rational(6));
  CHECK(r(Coalition{2}, part({{1}})) == Rational(13, 2));
  CHECK(r.grand() == Rational(33, 2));
  CHECK(mpw(r) == payoffs(kRest, {8, Rational(17, 2)}));
}

TEST_CASE("TU Sobolev reduction boundary values") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TuGame v = random_tu_game(4, seed);
    const TuGame r = sobolev_reduce_tu(v, 1, shapley_solution());
    CHECK(r(Coalition()) == Rational(0));
    CHECK(r.grand() == v.grand() - shapley(v)[1]);
    // the Shapley value is Sobolev consistent
    const PayoffVector x = shapley(v);
    const PayoffVector y = shapley(r);
    r.players().for_each([&](PlayerId i) { CHECK(y[i] == x[i]); });
  }
}

TEST_CASE("TU HM reduction: boundary values and consistency of the Shapley value") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const TuGame v = random_tu_game(n, 40 + seed);
    const PlayerId j = static_cast<PlayerId>(seed % static_cast<std::uint64_t>(n));
    const TuGame r = hm_reduce_tu(v, j, shapley_solution());
    CHECK(r(Coalition()) == Rational(0));
    CHECK(r.grand() == v.grand() - shapley(v)[j]);
    const PayoffVector x = shapley(v);
    const PayoffVector y = shapley(r);
    r.players().for_each([&](PlayerId i) { CHECK(y[i] == x[i]); });
  }
}

TEST_CASE("averaging commutes with Sobolev reduction") {
  auto games = seeded_games(20, 1000);
  games.push_back(maskin_public_goods());
  for (const TuxGame& w : games) {
    w.players().for_each([&](PlayerId j) {
      CHECK(average_game(sobolev_reduce_tux(w, j, mpw_solution())) ==
            sobolev_reduce_tu(average_game(w), j, shapley_solution()));
    });
  }
}

TEST_CASE("averaging commutes with HM reduction") {
  auto games = seeded_games(20, 2000);
  games.push_back(maskin_public_goods());
  for (const TuxGame& w : games) {
    w.players().for_each([&](PlayerId j) {
      CHECK(average_game(hm_reduce_tux(w, j, mpw_solution())) ==
            hm_reduce_tu(average_game(w), j, shapley_solution()));
    });
  }
}

TEST_CASE("set HM reduction by one player is the single reduction") {
  for (const SolutionConcept& phi : {mpw_solution(), SolutionConcept::egalitarian(), externality_free_solution()}) {
    for (const TuxGame& w : seeded_games(12, 3000)) {
      w.players().for_each([&](PlayerId j) {
        CHECK(set_hm_reduce_tux(w, Coalition::singleton(j), phi) == hm_reduce_tux(w, j, phi));
      });
    }
  }
}

TEST_CASE("set HM reduction down to one player") {
  for (const TuxGame& w : seeded_games(10, 4000)) {
    const PayoffVector x = mpw(w);
    w.players().for_each([&](PlayerId i) {
      const TuxGame r = set_hm_reduce_tux(w, w.players().without(i), mpw_solution());
      CHECK(r.grand() == w.grand() - (x.total() - x[i]));
    });
  }
}

TEST_CASE("set HM reduction with T empty is the identity") {
  const TuxGame w = random_tux_game(3, 77);
  CHECK(set_hm_reduce_tux(w, Coalition(), SolutionConcept::egalitarian()) == w);
}

TEST_CASE("HM reduction and player removal can be swapped") {
  for (const SolutionConcept& phi : {mpw_solution(), SolutionConcept::egalitarian()}) {
    for (const TuxGame& w : seeded_games(12, 5000)) {
      const Coalition players = w.players();
      const std::uint32_t count = 1U << players.size();
      for (std::uint32_t t = 1; t + 1 < count; ++t) {
        const Coalition removed = expand(t, players);
        const Coalition left = players - removed;
        const std::uint32_t sub_count = 1U << left.size();
        for (std::uint32_t s = 1; s + 1 < sub_count; ++s) {
          const Coalition dropped = expand(s, left);
          CHECK(restrict_set(set_hm_reduce_tux(w, removed, phi), dropped) ==
                set_hm_reduce_tux(restrict_set(w, dropped), removed, phi));
        }
      }
    }
  }
}

TEST_CASE("for MPW, set HM reduction equals iterated single reductions") {
  for (const TuxGame& w : seeded_games(15, 6000, 4)) {
    const auto ids = w.players().members();
    if (ids.size() < 3) continue;
    const TuxGame step = hm_reduce_tux(hm_reduce_tux(w, ids[0], mpw_solution()), ids[1], mpw_solution());
    CHECK(step == set_hm_reduce_tux(w, Coalition{ids[0], ids[1]}, mpw_solution()));
  }
}

TEST_CASE("the restriction lattice is path independent") {
  const TuxGame w = random_tux_game(4, 8);
  RestrictionLattice lattice(w);
  CHECK(lattice.restricted_to(Coalition{1, 3}) == restrict_one(restrict_one(w, 2), 0));
  CHECK(lattice.restricted_to(w.players()) == w);
  CHECK_THROWS_AS(lattice.restricted_to(Coalition{5}), DomainError);
}

TEST_CASE("reduction errors") {
  const TuxGame w = random_tux_game(3, 1);
  CHECK_THROWS_AS(hm_reduce_tux(w, 5, mpw_solution()), DomainError);
  CHECK_THROWS_AS(sobolev_reduce_tux(random_tux_game(1, 1), 0, mpw_solution()), SizeError);
  CHECK_THROWS_AS(set_hm_reduce_tux(w, w.players(), mpw_solution()), SizeError);
  CHECK_THROWS_AS(set_hm_reduce_tux(w, Coalition{0, 4}, mpw_solution()), DomainError);
}
