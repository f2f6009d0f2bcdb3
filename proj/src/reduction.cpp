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

#include "pfg/reduction.hpp"

#include "pfg/errors.hpp"
#include "pfg/restriction.hpp"

namespace pfg {

namespace {

void require_reducible(Coalition players, PlayerId j) {
  if (players.size() < 2) throw SizeError("reduced games need at least two players");
  if (!players.contains(j)) {
    throw DomainError("player " + std::to_string(j) + " is not in " + to_string(players));
  }
}

}  // namespace

RestrictionLattice::RestrictionLattice(TuxGame w) : top_(std::move(w)) {}

const TuxGame& RestrictionLattice::restricted_to(Coalition keep) {
  if (!keep.subset_of(top_.players())) {
    throw DomainError(to_string(keep) + " is not a coalition of " + to_string(top_.players()));
  }
  if (keep == top_.players()) return top_;
  if (auto it = cache_.find(keep.bits()); it != cache_.end()) return it->second;

  // restrict_set removes in ascending order, so the last removal is the
  // largest removed player.
  const Coalition removed = top_.players() - keep;
  const PlayerId last = 31 - std::countl_zero(removed.bits());
  TuxGame sub = restrict_one(restricted_to(keep.with(last)), last);
  return cache_.emplace(keep.bits(), std::move(sub)).first->second;
}

SubgameFamily::SubgameFamily(TuxGame w, SolutionConcept phi) : lattice_(std::move(w)), phi_(std::move(phi)) {}

const PayoffVector& SubgameFamily::payoff(Coalition keep) {
  if (auto it = payoffs_.find(keep.bits()); it != payoffs_.end()) return it->second;
  PayoffVector x = phi_(lattice_.restricted_to(keep));
  return payoffs_.emplace(keep.bits(), std::move(x)).first->second;
}

TuGame sobolev_reduce_tu(const TuGame& v, PlayerId j, const TuSolutionConcept& phi) {
  require_reducible(v.players(), j);
  const Rational phi_j = phi(v)[j];
  const Rational others(v.player_count() - 1);
  return TuGame::from_function(v.players().without(j), [&](Coalition s) {
    const Rational share = Rational(s.size()) / others;
    return share * (v(s.with(j)) - phi_j) + (Rational(1) - share) * v(s);
  });
}

TuxGame sobolev_reduce_tux(const TuxGame& w, PlayerId j, const SolutionConcept& phi) {
  require_reducible(w.players(), j);
  return sobolev_reduce_tux(w, j, phi(w)[j]);
}

TuxGame sobolev_reduce_tux(const TuxGame& w, PlayerId j, const Rational& payoff_j) {
  require_reducible(w.players(), j);
  const TuxGame sub = restrict_one(w, j);
  const Rational others(w.player_count() - 1);
  const auto sub_worths = sub.worths();
  return TuxGame::from_function(sub.players(), [&](Coalition s, std::span<const Coalition> blocks) {
    const Rational share = Rational(s.size()) / others;
    const Rational& apart = sub_worths[sub.layout().index_of(s, blocks)];
    return share * (w.at(s.with(j), blocks) - payoff_j) + (Rational(1) - share) * apart;
  });
}

TuGame hm_reduce_tu(const TuGame& v, PlayerId j, const TuSolutionConcept& phi) {
  require_reducible(v.players(), j);
  return TuGame::from_function(v.players().without(j), [&](Coalition s) {
    const Coalition with_j = s.with(j);
    return v(with_j) - phi(restrict_tu(v, with_j))[j];
  });
}

TuxGame hm_reduce_tux(const TuxGame& w, PlayerId j, const SolutionConcept& phi) {
  SubgameFamily family(w, phi);
  return hm_reduce_tux(family, j);
}

TuxGame hm_reduce_tux(SubgameFamily& family, PlayerId j) {
  const TuxGame& w = family.game();
  require_reducible(w.players(), j);
  return TuxGame::from_function(w.players().without(j), [&](Coalition s, std::span<const Coalition> blocks) {
    const Coalition with_j = s.with(j);
    return w.at(with_j, blocks) - family.payoff(with_j)[j];
  });
}

TuxGame set_hm_reduce_tux(const TuxGame& w, Coalition removed, const SolutionConcept& phi) {
  SubgameFamily family(w, phi);
  return set_hm_reduce_tux(family, removed);
}

TuxGame set_hm_reduce_tux(SubgameFamily& family, Coalition removed) {
  const TuxGame& w = family.game();
  if (!removed.subset_of(w.players())) {
    throw DomainError("cannot reduce " + to_string(removed) + " from a game over " + to_string(w.players()));
  }
  if (removed == w.players()) throw SizeError("set reduction must keep at least one player");

  return TuxGame::from_function(w.players() - removed, [&](Coalition s, std::span<const Coalition> blocks) {
    const Coalition with_t = s | removed;
    const PayoffVector& paid = family.payoff(with_t);
    Rational value = w.at(with_t, blocks);
    removed.for_each([&](PlayerId j) { value -= paid[j]; });
    return value;
  });
}

}  // namespace pfg
