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
#include "oracles.hpp"
#include "pfg/errors.hpp"
#include "pfg/generators.hpp"
#include "pfg/restriction.hpp"
#include "pfg/values.hpp"

using namespace pfg;
using namespace testing;

TEST_CASE("Shapley value basics") {
  const TuGame glove = TuGame::from_function(Coalition{0, 1}, [](Coalition s) { return Rational(s.size() == 2 ? 1 : 0); });
  const PayoffVector x = shapley(glove);
  CHECK(x[0] == Rational(1, 2));
  CHECK(x[1] == Rational(1, 2));
  CHECK_THROWS_AS(shapley(TuGame()), DomainError);
}

TEST_CASE("Shapley value of a Dirac TU game matches the permutation formula") {
  const TuGame d = dirac_tu(Coalition::first(3), Coalition{0});
  const auto ref = oracle::shapley(oracle::tu_table(d), 0b111);
  const PayoffVector x = shapley(d);
  // {0} alone: player 0 gains 1 when first, the player after 0 loses 1
  CHECK(x[0] == Rational(1, 3));
  CHECK(x[1] == Rational(-1, 6));
  for (PlayerId i = 0; i < 3; ++i) CHECK(x[i] == ref.at(i));
}

TEST_CASE("Shapley value agrees with the permutation oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const TuGame v = random_tu_game(n, seed);
    const auto ref = oracle::shapley(oracle::tu_table(v), v.players().bits());
    const PayoffVector x = shapley(v);
    v.players().for_each([&](PlayerId i) { CHECK(x[i] == ref.at(i)); });
  }
}

TEST_CASE("average game of the public goods game") {
  const TuGame v = average_game(maskin_public_goods());
  CHECK(v(Coalition{0}) == Rational(9, 2));
  CHECK(v.grand() == Rational(24));
  const PayoffVector x = shapley(v);
  CHECK(x == payoffs(Coalition::first(3), {Rational(15, 2), 8, Rational(17, 2)}));
}

TEST_CASE("average game agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const TuxGame w = random_tux_game(n, seed);
    CHECK(oracle::tu_table(average_game(w)) == oracle::average(oracle::table_of(w), w.players().bits()));
  }
}

TEST_CASE("average and auxiliary games of scaled Dirac games") {
  for (int n = 1; n <= 4; ++n) {
    const Coalition players = Coalition::first(n);
    for (const EmbeddedCoalition& e : enumerate_embedded(players)) {
      if (e.coalition.empty()) continue;
      const TuxGame d = scaled_dirac(players, e.coalition, e.outside);
      CHECK(average_game(d) == dirac_tu(players, e.coalition));
      CHECK(auxiliary_game(d) == dirac_tu(players, e.coalition));
    }
  }
}

TEST_CASE("auxiliary game equals the average game") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const TuxGame w = random_tux_game(n, 400 + seed);
    const TuGame aux = auxiliary_game(w);
    CHECK(aux.grand() == w.grand());
    CHECK(aux == average_game(w));
    CHECK(shapley(aux) == mpw(w));
  }
}

TEST_CASE("MPW value") {
  const PayoffVector x = mpw(maskin_public_goods());
  CHECK(x == payoffs(Coalition::first(3), {Rational(15, 2), 8, Rational(17, 2)}));
  const PayoffVector zero = mpw(null_game(Coalition::first(4)));
  for (const Rational& y : zero.values()) CHECK(y.is_zero());
  CHECK_THROWS_AS(mpw(TuxGame()), DomainError);
}

TEST_CASE("MPW agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const TuxGame w = random_tux_game(n, 500 + seed);
    const auto ref = oracle::mpw(oracle::table_of(w), w.players().bits());
    const PayoffVector x = mpw(w);
    w.players().for_each([&](PlayerId i) { CHECK(x[i] == ref.at(i)); });
  }
}

TEST_CASE("externality-free value") {
  // outsiders kept as singletons: v({i}) = 0, v({1,2}) = 12, v({1,3}) = 13,
  // v({2,3}) = 14, v(N) = 24
  const TuxGame pg = maskin_public_goods();
  const PayoffVector x = externality_free_value(pg);
  std::map<oracle::Mask, Rational> v{{0b000, 0}, {0b001, 0}, {0b010, 0}, {0b100, 0},
                                     {0b011, 12}, {0b101, 13}, {0b110, 14}, {0b111, 24}};
  const auto ref = oracle::shapley(v, 0b111);
  for (PlayerId i = 0; i < 3; ++i) CHECK(x[i] == ref.at(i));
  CHECK(x == payoffs(Coalition::first(3), {Rational(15, 2), 8, Rational(17, 2)}));
  // (43/6, 44/6, 45/6) is sometimes quoted for this game; it is not efficient.
  CHECK(Rational(43, 6) + Rational(44, 6) + Rational(45, 6) != pg.grand());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TuGame v = random_tu_game(4, seed);
    const TuxGame w = tu_to_tux(v);
    CHECK(externality_free_value(w) == mpw(w));
    CHECK(externality_free_value(w) == shapley(v));
  }
  const PayoffVector zero = externality_free_value(null_game(Coalition::first(3)));
  for (const Rational& y : zero.values()) CHECK(y.is_zero());
}

TEST_CASE("MPW is efficient, linear and symmetric") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const TuxGame a = random_tux_game(n, 600 + seed);
    const TuxGame b = random_tux_game(n, 700 + seed);
    CHECK(mpw(a).total() == a.grand());
    const std::vector<TuxGame> games{a, b};
    const std::vector<Rational> coeffs{Rational(3), Rational(-1, 2)};
    const PayoffVector mixed = mpw(linear_combine(games, coeffs));
    const PayoffVector xa = mpw(a);
    const PayoffVector xb = mpw(b);
    a.players().for_each([&](PlayerId i) { CHECK(mixed[i] == Rational(3) * xa[i] - Rational(1, 2) * xb[i]); });
  }
  // Cournot firms are symmetric
  const PayoffVector c = mpw(cournot_game(4));
  for (PlayerId i = 0; i < 4; ++i) CHECK(c[i] == Rational(1, 16));
}

TEST_CASE("named solutions") {
  CHECK(mpw_solution().name() == "mpw");
  CHECK(externality_free_solution().name() == "ext-free");
  const TuGame v = random_tu_game(3, 1);
  CHECK(shapley_solution()(v) == shapley(v));
}
