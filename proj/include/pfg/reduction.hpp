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

#ifndef PFG_REDUCTION_HPP
#define PFG_REDUCTION_HPP

#include <map>

#include "pfg/game.hpp"

namespace pfg {

/// All restrictions w_{-(N \ K)} of one game, built on demand by removing
/// one player from an already cached parent. The removal order matches
/// restrict_set, so results are identical to it. Not thread-safe.
class RestrictionLattice {
 public:
  explicit RestrictionLattice(TuxGame w);

  const TuxGame& game() const { return top_; }
  /// The subgame on `keep`; DomainError unless keep lies in the player set.
  const TuxGame& restricted_to(Coalition keep);

 private:
  TuxGame top_;
  std::map<Coalition::Mask, TuxGame> cache_;
};

/// A restriction lattice together with a solution's payoffs on each subgame.
/// Shared by the HM reductions and the consistency checkers so that each
/// subgame is restricted and solved once.
class SubgameFamily {
 public:
  SubgameFamily(TuxGame w, SolutionConcept phi);

  const TuxGame& game() const { return lattice_.game(); }
  const SolutionConcept& solution() const { return phi_; }
  const TuxGame& restricted_to(Coalition keep) { return lattice_.restricted_to(keep); }
  /// phi(w_{-(N \ keep)}).
  const PayoffVector& payoff(Coalition keep);

 private:
  RestrictionLattice lattice_;
  SolutionConcept phi_;
  std::map<Coalition::Mask, PayoffVector> payoffs_;
};

/// Sobolev reduced TU game:
///   v_{-j}(S) = s/(n-1) (v(S+j) - phi_j(v)) + (1 - s/(n-1)) v(S).
TuGame sobolev_reduce_tu(const TuGame& v, PlayerId j, const TuSolutionConcept& phi);

/// Sobolev reduced TUX game; the "stay apart" term uses the restriction
/// w_{-j} instead of w.
TuxGame sobolev_reduce_tux(const TuxGame& w, PlayerId j, const SolutionConcept& phi);
/// Same, with player j's payoff supplied directly.
TuxGame sobolev_reduce_tux(const TuxGame& w, PlayerId j, const Rational& payoff_j);

/// Hart-Mas-Colell reduced TU game: v_{-j}(S) = v(S+j) - phi_j(v|_{S+j}).
/// The S = {} entry is 0.
TuGame hm_reduce_tu(const TuGame& v, PlayerId j, const TuSolutionConcept& phi);

/// Hart-Mas-Colell reduced TUX game:
///   w_{-j}(S, pi) = w(S+j, pi) - phi_j(w_{-(N \ (S+j))}),
/// with S = {} entries set to 0.
TuxGame hm_reduce_tux(const TuxGame& w, PlayerId j, const SolutionConcept& phi);
TuxGame hm_reduce_tux(SubgameFamily& family, PlayerId j);

/// Reduction removing a whole coalition T at once:
///   w_{-T}(S, pi) = w(S u T, pi) - sum_{j in T} phi_j(w_{-(N \ (S u T))}).
/// T must be a proper subset of the player set.
TuxGame set_hm_reduce_tux(const TuxGame& w, Coalition removed, const SolutionConcept& phi);
TuxGame set_hm_reduce_tux(SubgameFamily& family, Coalition removed);

}  // namespace pfg

#endif  // PFG_REDUCTION_HPP
