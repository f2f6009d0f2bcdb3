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

#ifndef PFG_GENERATORS_HPP
#define PFG_GENERATORS_HPP

#include <cstdint>

#include "pfg/game.hpp"

namespace pfg {

/// Cournot oligopoly with n symmetric firms on players {0..n-1}: with |pi|
/// cartels in equilibrium every cartel earns scale / (|pi| + 1)^2, so
/// w(S, rho) = scale / (|rho| + 2)^2. `scale` plays the role of (A - c)^2.
TuxGame cournot_game(int n, const Rational& scale = Rational(1));

/// Three-player public goods game on players {0, 1, 2}:
///   w({i}, {{j},{k}}) = 0, w({i}, {{j,k}}) = 9,
///   w({0,1}, .) = 12, w({0,2}, .) = 13, w({1,2}, .) = 14, w(N, {}) = 24.
TuxGame maskin_public_goods();

/// Integer worths uniform in [-magnitude, magnitude] for every nonempty-S
/// embedded coalition of {0..n-1}; deterministic in (n, seed).
TuxGame random_tux_game(int n, std::uint64_t seed, int magnitude = 20);

/// TU analogue of random_tux_game.
TuGame random_tu_game(int n, std::uint64_t seed, int magnitude = 20);

}  // namespace pfg

#endif  // PFG_GENERATORS_HPP
