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

#ifndef PFG_TESTS_HELPERS_HPP
#define PFG_TESTS_HELPERS_HPP

#include <initializer_list>
#include <map>
#include <vector>

#include "pfg/combinatorics.hpp"
#include "pfg/game.hpp"

namespace testing {

using namespace pfg;

inline Partition part(std::initializer_list<Coalition> bs) { return Partition(std::vector<Coalition>(bs)); }

inline EmbeddedCoalition ec(Coalition s, std::initializer_list<Coalition> bs = {}) { return {s, part(bs)}; }

// The three-player public goods game written out entry by entry (players
// 0, 1, 2 are labelled 1, 2, 3 in files).
inline std::map<EmbeddedCoalition, Rational> public_goods_entries() {
  std::map<EmbeddedCoalition, Rational> e;
  e[ec({0}, {{1, 2}})] = 9;
  e[ec({1}, {{0, 2}})] = 9;
  e[ec({2}, {{0, 1}})] = 9;
  e[ec({0}, {{1}, {2}})] = 0;
  e[ec({1}, {{0}, {2}})] = 0;
  e[ec({2}, {{0}, {1}})] = 0;
  e[ec({0, 1}, {{2}})] = 12;
  e[ec({0, 2}, {{1}})] = 13;
  e[ec({1, 2}, {{0}})] = 14;
  e[ec({0, 1, 2})] = 24;
  return e;
}

inline PayoffVector payoffs(Coalition players, std::vector<Rational> values) {
  return PayoffVector(players, std::move(values));
}

}  // namespace testing

#endif  // PFG_TESTS_HELPERS_HPP
