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

#include "pfg/restriction.hpp"

#include <array>

#include "pfg/errors.hpp"

namespace pfg {

TuxGame restrict_one(const TuxGame& w, PlayerId i) {
  const Coalition players = w.players();
  if (!players.contains(i)) {
    throw DomainError("cannot remove player " + std::to_string(i) + " from a game over " + to_string(players));
  }
  const Coalition rest = players.without(i);
  const Coalition alone = Coalition::singleton(i);
  const int n = players.size();

  TuxGame shape(rest);
  std::vector<Rational> worths(shape.layout().size());
  std::array<Coalition, kHardCap + 1> augmented;
  shape.layout().for_each([&](std::size_t index, Coalition s, std::span<const Coalition> blocks) {
    if (s.empty()) return;
    const std::size_t k = blocks.size();
    std::copy(blocks.begin(), blocks.end(), augmented.begin());

    augmented[k] = alone;
    Rational sum = w.at(s, std::span<const Coalition>(augmented.data(), k + 1));
    for (std::size_t b = 0; b < k; ++b) {
      augmented[b] = blocks[b] | alone;
      sum += Rational(blocks[b].size()) * w.at(s, std::span<const Coalition>(augmented.data(), k));
      augmented[b] = blocks[b];
    }
    worths[index] = sum / Rational(n - s.size());
  });
  return TuxGame(rest, std::move(worths));
}

TuxGame restrict_set(const TuxGame& w, Coalition removed) {
  if (!removed.subset_of(w.players())) {
    throw DomainError("cannot remove " + to_string(removed) + " from a game over " + to_string(w.players()));
  }
  TuxGame out = w;
  removed.for_each([&](PlayerId i) { out = restrict_one(out, i); });
  return out;
}

Rational restrict_direct(const TuxGame& w, Coalition removed, const EmbeddedCoalition& target) {
  if (!removed.subset_of(w.players())) {
    throw DomainError("cannot remove " + to_string(removed) + " from a game over " + to_string(w.players()));
  }
  const Coalition rest = w.players() - removed;
  const Coalition r = target.coalition;
  if (!r.subset_of(rest) || target.outside.ground() != rest - r) {
    throw DomainError("target is not an embedded coalition of " + to_string(rest));
  }
  if (r.empty()) return Rational();

  const Rational rho_weight = ewens_weight(target.outside);
  Rational sum;
  for_each_partition(w.players() - r, [&](std::span<const Coalition> tau) {
    std::vector<Coalition> projected;
    projected.reserve(tau.size());
    for (Coalition b : tau) {
      if (Coalition kept = b - removed; !kept.empty()) projected.push_back(kept);
    }
    if (Partition(std::move(projected)) != target.outside) return;
    sum += ewens_weight(tau) * w.at(r, tau);
  });
  return sum / rho_weight;
}

TuGame remove_from_tu(const TuGame& v, PlayerId i) {
  if (!v.players().contains(i)) {
    throw DomainError("cannot remove player " + std::to_string(i) + " from a game over " + to_string(v.players()));
  }
  return restrict_tu(v, v.players().without(i));
}

TuGame restrict_tu(const TuGame& v, Coalition keep) {
  if (!keep.subset_of(v.players())) {
    throw DomainError(to_string(keep) + " is not a coalition of " + to_string(v.players()));
  }
  return TuGame::from_function(keep, [&v](Coalition s) { return v(s); });
}

}  // namespace pfg
