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

#include "pfg/axioms.hpp"

#include <map>

#include "pfg/errors.hpp"
#include "pfg/reduction.hpp"
#include "pfg/restriction.hpp"

namespace pfg {

namespace {

AxiomReport start_report(std::string axiom, const TuxGame& w) {
  AxiomReport r;
  r.axiom = std::move(axiom);
  r.game = std::make_shared<const TuxGame>(w);
  return r;
}

void record(AxiomReport& report, std::vector<PlayerId> players, Coalition coalition, const Rational& lhs,
            const Rational& rhs) {
  ++report.checks;
  if (lhs != rhs) report.violations.push_back({std::move(players), coalition, lhs, rhs});
}

// Worth of ({i}, {{k}}) in a two-player game.
const Rational& stand_alone(const TuxGame& w, PlayerId i, PlayerId k) {
  const Coalition other = Coalition::singleton(k);
  return w.at(Coalition::singleton(i), std::span<const Coalition>(&other, 1));
}

Rational two_standard_share(const TuxGame& w, PlayerId i, PlayerId k) {
  const Rational& own = stand_alone(w, i, k);
  return own + (w.grand() - stand_alone(w, k, i) - own) / Rational(2);
}

PayoffVector two_standard(const TuxGame& w) {
  const auto ids = w.players().members();
  PayoffVector x(w.players());
  x[ids[0]] = two_standard_share(w, ids[0], ids[1]);
  x[ids[1]] = two_standard_share(w, ids[1], ids[0]);
  return x;
}

void check_two_player(AxiomReport& report, const SolutionConcept& phi, const TuxGame& w) {
  const auto ids = w.players().members();
  const PayoffVector x = phi(w);
  for (int a = 0; a < 2; ++a) {
    const PlayerId i = ids[a];
    const PlayerId k = ids[1 - a];
    record(report, {i, k}, Coalition(), x[i], two_standard_share(w, i, k));
  }
}

}  // namespace

AxiomReport check_efficiency(const SolutionConcept& phi, const TuxGame& w) {
  AxiomReport report = start_report("EF^X", w);
  if (w.player_count() == 0) return report;
  record(report, {}, w.players(), phi(w).total(), w.grand());
  return report;
}

AxiomReport check_balanced_contributions(const SolutionConcept& phi, const TuxGame& w) {
  AxiomReport report = start_report("BC^X", w);
  if (w.player_count() < 2) return report;
  SubgameFamily family(w, phi);
  const Coalition players = w.players();
  const PayoffVector& x = family.payoff(players);
  const auto ids = players.members();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const PlayerId i = ids[a];
      const PlayerId j = ids[b];
      const Rational lhs = x[i] - family.payoff(players.without(j))[i];
      const Rational rhs = x[j] - family.payoff(players.without(i))[j];
      record(report, {i, j}, Coalition(), lhs, rhs);
    }
  }
  return report;
}

AxiomReport check_sobolev_consistency(const SolutionConcept& phi, const TuxGame& w) {
  AxiomReport report = start_report("SC^X", w);
  if (w.player_count() < 2) return report;
  const PayoffVector x = phi(w);
  w.players().for_each([&](PlayerId j) {
    const PayoffVector y = phi(sobolev_reduce_tux(w, j, x[j]));
    w.players().without(j).for_each([&](PlayerId i) { record(report, {i, j}, Coalition::singleton(j), x[i], y[i]); });
  });
  return report;
}

AxiomReport check_hm_consistency(const SolutionConcept& phi, const TuxGame& w, bool set_variant) {
  AxiomReport report = start_report(set_variant ? "SHMC^X" : "HMC^X", w);
  if (w.player_count() < 2) return report;
  SubgameFamily family(w, phi);
  const Coalition players = w.players();
  const PayoffVector& x = family.payoff(players);

  auto check_removal = [&](Coalition removed) {
    const PayoffVector y = phi(set_variant ? set_hm_reduce_tux(family, removed)
                                           : hm_reduce_tux(family, removed.min()));
    (players - removed).for_each([&](PlayerId i) {
      std::vector<PlayerId> who{i};
      removed.for_each([&](PlayerId j) { who.push_back(j); });
      record(report, std::move(who), removed, x[i], y[i]);
    });
  };

  if (set_variant) {
    // Every T with a player outside it, T = {} included.
    const std::uint32_t count = 1U << players.size();
    for (std::uint32_t local = 0; local + 1 < count; ++local) check_removal(expand(local, players));
  } else {
    players.for_each([&](PlayerId j) { check_removal(Coalition::singleton(j)); });
  }
  return report;
}

AxiomReport check_two_standardness(const SolutionConcept& phi, const TuxGame& w) {
  if (w.player_count() != 2) {
    throw SizeError("2-standardness applies to two-player games, got " + std::to_string(w.player_count()));
  }
  AxiomReport report = start_report("2S^X", w);
  check_two_player(report, phi, w);
  return report;
}

AxiomReport check_two_standardness_on_restrictions(const SolutionConcept& phi, const TuxGame& w) {
  if (w.player_count() < 2) throw SizeError("2-standardness needs at least two players");
  AxiomReport report = start_report("2S^X", w);
  RestrictionLattice lattice(w);
  const auto ids = w.players().members();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      check_two_player(report, phi, lattice.restricted_to(Coalition{ids[a], ids[b]}));
    }
  }
  return report;
}

namespace {

class BalancedSolver {
 public:
  explicit BalancedSolver(const TuxGame& w) : lattice_(w) {}

  const PayoffVector& solve(Coalition keep) {
    if (auto it = memo_.find(keep.bits()); it != memo_.end()) return it->second;
    const TuxGame& g = lattice_.restricted_to(keep);
    const int n = keep.size();
    PayoffVector x(keep);
    if (n == 1) {
      x[keep.min()] = g.grand();
    } else {
      keep.for_each([&](PlayerId i) {
        Rational sum = g.grand();
        keep.without(i).for_each([&](PlayerId j) {
          sum += solve(keep.without(j))[i];
          sum -= solve(keep.without(i))[j];
        });
        x[i] = sum / Rational(n);
      });
    }
    return memo_.emplace(keep.bits(), std::move(x)).first->second;
  }

 private:
  RestrictionLattice lattice_;
  std::map<Coalition::Mask, PayoffVector> memo_;
};

class HmSolver {
 public:
  explicit HmSolver(const TuxGame& w) : lattice_(w) {}

  const PayoffVector& solve(Coalition keep) {
    if (auto it = memo_.find(keep.bits()); it != memo_.end()) return it->second;
    const TuxGame& g = lattice_.restricted_to(keep);
    const int n = keep.size();
    PayoffVector x(keep);
    if (n == 1) {
      x[keep.min()] = g.grand();
    } else if (n == 2) {
      x = two_standard(g);
    } else {
      // phi_i - phi_k equals the difference of the stand-alone worths in the
      // two-player game left after set-reducing everyone but i and k.
      auto reduced_stand_alone = [&](PlayerId i, PlayerId k) {
        const Coalition outside = Coalition::singleton(k);
        Rational value = g.at(keep.without(k), std::span<const Coalition>(&outside, 1));
        const PayoffVector& sub = solve(keep.without(k));
        keep.without(i).without(k).for_each([&](PlayerId j) { value -= sub[j]; });
        return value;
      };
      keep.for_each([&](PlayerId i) {
        Rational sum = g.grand();
        keep.without(i).for_each([&](PlayerId k) { sum += reduced_stand_alone(i, k) - reduced_stand_alone(k, i); });
        x[i] = sum / Rational(n);
      });
    }
    return memo_.emplace(keep.bits(), std::move(x)).first->second;
  }

 private:
  RestrictionLattice lattice_;
  std::map<Coalition::Mask, PayoffVector> memo_;
};

// Affine payoff map of the (n-1) remaining players as a function of the
// pivot's payoff: payoff_i(x) = offset_i + slope_i * x.
struct AffineMap {
  PayoffVector offset;
  PayoffVector slope;
};

PayoffVector solve_sobolev(const TuxGame& w, PlayerId pivot, PlayerId partner);

AffineMap sobolev_map(const TuxGame& w, PlayerId pivot) {
  const TuxGame at_zero = sobolev_reduce_tux(w, pivot, Rational(0));
  const TuxGame at_one = sobolev_reduce_tux(w, pivot, Rational(1));
  const auto ids = at_zero.players().members();
  AffineMap map{solve_sobolev(at_zero, ids[0], ids[1]), PayoffVector(at_zero.players())};
  const PayoffVector y1 = solve_sobolev(at_one, ids[0], ids[1]);
  at_zero.players().for_each([&](PlayerId i) { map.slope[i] = y1[i] - map.offset[i]; });
  return map;
}

PayoffVector solve_sobolev(const TuxGame& w, PlayerId pivot, PlayerId partner) {
  const int n = w.player_count();
  if (n == 1) {
    PayoffVector x(w.players());
    x[w.players().min()] = w.grand();
    return x;
  }
  if (n == 2) return two_standard(w);

  const AffineMap by_pivot = sobolev_map(w, pivot);
  const AffineMap by_partner = sobolev_map(w, partner);
  // x_pivot = a + b x_partner and x_partner = c + d x_pivot.
  const Rational& a = by_partner.offset[pivot];
  const Rational& b = by_partner.slope[pivot];
  const Rational& c = by_pivot.offset[partner];
  const Rational& d = by_pivot.slope[partner];
  const Rational det = Rational(1) - b * d;
  if (det.is_zero()) throw InternalError("degenerate Sobolev closure for " + std::to_string(n) + " players");
  const Rational x_pivot = (a + b * c) / det;

  PayoffVector x(w.players());
  x[pivot] = x_pivot;
  w.players().without(pivot).for_each([&](PlayerId i) { x[i] = by_pivot.offset[i] + by_pivot.slope[i] * x_pivot; });
  if (x.total() != w.grand()) throw InternalError("Sobolev reconstruction is not efficient");
  return x;
}

}  // namespace

PayoffVector reconstruct_bc_ef(const TuxGame& w) {
  if (w.player_count() == 0) throw DomainError("reconstruction needs at least one player");
  BalancedSolver solver(w);
  return solver.solve(w.players());
}

PayoffVector reconstruct_sobolev(const TuxGame& w) {
  if (w.player_count() == 0) throw DomainError("reconstruction needs at least one player");
  const auto ids = w.players().members();
  return ids.size() < 3 ? solve_sobolev(w, ids[0], ids[0]) : solve_sobolev(w, ids[0], ids[1]);
}

PayoffVector reconstruct_sobolev(const TuxGame& w, PlayerId pivot, PlayerId partner) {
  if (w.player_count() < 3) return reconstruct_sobolev(w);
  if (!w.players().contains(pivot) || !w.players().contains(partner) || pivot == partner) {
    throw DomainError("pivot and partner must be two distinct players of the game");
  }
  return solve_sobolev(w, pivot, partner);
}

PayoffVector reconstruct_hm_2s(const TuxGame& w) {
  if (w.player_count() == 0) throw DomainError("reconstruction needs at least one player");
  HmSolver solver(w);
  return solver.solve(w.players());
}

}  // namespace pfg
