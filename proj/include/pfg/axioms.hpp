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

#ifndef PFG_AXIOMS_HPP
#define PFG_AXIOMS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfg/game.hpp"

namespace pfg {

/// One failed instance of an axiom: the players (and removed coalition, where
/// the axiom quantifies over one) together with both sides of the equation.
struct Violation {
  std::vector<PlayerId> players;
  Coalition coalition;
  Rational lhs;
  Rational rhs;
};

struct AxiomReport {
  std::string axiom;
  std::shared_ptr<const TuxGame> game;
  /// Number of equations evaluated.
  std::size_t checks = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// EF^X: sum_i phi_i(w) = w(N, {}).
AxiomReport check_efficiency(const SolutionConcept& phi, const TuxGame& w);

/// BC^X: phi_i(w) - phi_i(w_{-j}) = phi_j(w) - phi_j(w_{-i}) for all i < j.
/// Violations list (i, j) with lhs and rhs as written.
AxiomReport check_balanced_contributions(const SolutionConcept& phi, const TuxGame& w);

/// SC^X: phi_i(w) = phi_i(sobolev_reduce_tux(w, j, phi)) for all i != j.
AxiomReport check_sobolev_consistency(const SolutionConcept& phi, const TuxGame& w);

/// HMC^X (single removals) or SHMC^X (every T not containing i).
AxiomReport check_hm_consistency(const SolutionConcept& phi, const TuxGame& w, bool set_variant);

/// 2S^X on a two-player game; SizeError for any other size.
AxiomReport check_two_standardness(const SolutionConcept& phi, const TuxGame& w);
/// 2S^X on every two-player restriction of w (w itself when n = 2).
AxiomReport check_two_standardness_on_restrictions(const SolutionConcept& phi, const TuxGame& w);

/// The payoff forced by EF^X and BC^X, by recursion over the restrictions
/// of w: n phi_i(w) = sum_j (phi_i(w_{-j}) - phi_j(w_{-i})) + w(N, {}).
PayoffVector reconstruct_bc_ef(const TuxGame& w);

/// The payoff forced by EF^X, 2S^X and SC^X.
///
/// For n >= 3 the Sobolev reduced game is affine in the unknown payoff x of
/// the removed player. Solving the (n-1)-player reduced games at x = 0 and
/// x = 1 identifies the affine payoff map for two different pivots; the two
/// maps must agree on each other's pivot, which fixes x. (Efficiency alone
/// does not: the reduced game's grand worth is w(N, {}) - x, which makes the
/// efficiency equation an identity in x.)
PayoffVector reconstruct_sobolev(const TuxGame& w);
/// Same, with the top-level pivot and partner chosen explicitly.
PayoffVector reconstruct_sobolev(const TuxGame& w, PlayerId pivot, PlayerId partner);

/// The payoff forced by 2S^X and HMC^X: pairwise payoff differences from the
/// two-player set-reduced games, closed by efficiency.
PayoffVector reconstruct_hm_2s(const TuxGame& w);

}  // namespace pfg

#endif  // PFG_AXIOMS_HPP
