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

#include "pfg/generators.hpp"

#include <random>

#include "pfg/errors.hpp"

namespace pfg {

TuxGame cournot_game(int n, const Rational& scale) {
  if (n < 2 || n > universe_cap()) {
    throw SizeError("Cournot game needs 2 <= n <= " + std::to_string(universe_cap()) + ", got " + std::to_string(n));
  }
  if (scale.sign() <= 0) throw DomainError("Cournot scale must be positive");
  return TuxGame::from_function(Coalition::first(n), [&](Coalition, std::span<const Coalition> outside) {
    const long cartels_plus_one = static_cast<long>(outside.size()) + 2;
    return scale / Rational(cartels_plus_one * cartels_plus_one);
  });
}

TuxGame maskin_public_goods() {
  const Coalition players = Coalition::first(3);
  return TuxGame::from_function(players, [&](Coalition s, std::span<const Coalition> outside) -> Rational {
    switch (s.size()) {
      case 1:
        return outside.size() == 1 ? 9 : 0;
      case 2:
        if (s == Coalition{0, 1}) return 12;
        if (s == Coalition{0, 2}) return 13;
        return 14;
      default:
        return 24;
    }
  });
}

namespace {

void require_random_size(int n) {
  if (n < 1 || n > universe_cap()) {
    throw SizeError("random games need 1 <= n <= " + std::to_string(universe_cap()) + ", got " + std::to_string(n));
  }
}

}  // namespace

TuxGame random_tux_game(int n, std::uint64_t seed, int magnitude) {
  require_random_size(n);
  if (magnitude < 0) throw DomainError("magnitude must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-magnitude, magnitude);
  return TuxGame::from_function(Coalition::first(n),
                                [&](Coalition, std::span<const Coalition>) { return Rational(draw(rng)); });
}

TuGame random_tu_game(int n, std::uint64_t seed, int magnitude) {
  require_random_size(n);
  if (magnitude < 0) throw DomainError("magnitude must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-magnitude, magnitude);
  return TuGame::from_function(Coalition::first(n), [&](Coalition) { return Rational(draw(rng)); });
}

}  // namespace pfg
