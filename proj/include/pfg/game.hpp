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

#ifndef PFG_GAME_HPP
#define PFG_GAME_HPP

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfg/combinatorics.hpp"
#include "pfg/layout.hpp"
#include "pfg/rational.hpp"

namespace pfg {

/// Transferable-utility game: a worth for every coalition of the player set,
/// with v({}) = 0.
class TuGame {
 public:
  /// The null game on `players`.
  explicit TuGame(Coalition players = Coalition());
  /// `worths` is indexed by compress(S, players).
  TuGame(Coalition players, std::vector<Rational> worths);

  template <typename F>
  static TuGame from_function(Coalition players, F&& worth) {
    TuGame g(players);
    for (std::uint32_t local = 1; local < g.worth_.size(); ++local) g.worth_[local] = worth(expand(local, players));
    return g;
  }

  Coalition players() const { return players_; }
  int player_count() const { return players_.size(); }
  /// DomainError unless s is a subset of the player set.
  const Rational& operator()(Coalition s) const;
  const Rational& grand() const { return worth_.back(); }
  std::span<const Rational> worths() const { return worth_; }

  friend bool operator==(const TuGame&, const TuGame&) = default;

 private:
  Coalition players_;
  std::vector<Rational> worth_;
};

/// Game with externalities in partition function form: a worth for every
/// embedded coalition (S, pi), with w({}, pi) = 0.
///
/// Worths are stored densely in EmbeddedLayout order, S = {} entries
/// included, so equality of games is plain vector equality.
class TuxGame {
 public:
  /// The null game on `players`.
  explicit TuxGame(Coalition players = Coalition());
  /// `worths` in layout order; S = {} entries must be zero.
  TuxGame(Coalition players, std::vector<Rational> worths);

  /// worth(Coalition s, std::span<const Coalition> outside_blocks).
  template <typename F>
  static TuxGame from_function(Coalition players, F&& worth) {
    TuxGame g(players);
    g.layout_->for_each([&](std::size_t index, Coalition s, std::span<const Coalition> blocks) {
      if (!s.empty()) g.worth_[index] = worth(s, blocks);
    });
    return g;
  }

  Coalition players() const { return players_; }
  int player_count() const { return players_.size(); }
  const EmbeddedLayout& layout() const { return *layout_; }

  /// Validating lookup.
  const Rational& operator()(const EmbeddedCoalition& e) const { return worth_[layout_->index_of(e)]; }
  const Rational& operator()(Coalition s, const Partition& outside) const;
  /// Unvalidated lookup for inner loops; blocks may be in any order.
  const Rational& at(Coalition s, std::span<const Coalition> blocks) const {
    return worth_[layout_->index_of(s, blocks)];
  }
  /// w(N, {}).
  const Rational& grand() const { return worth_.back(); }
  std::span<const Rational> worths() const { return worth_; }

  friend bool operator==(const TuxGame& a, const TuxGame& b) {
    return a.players_ == b.players_ && a.worth_ == b.worth_;
  }

 private:
  Coalition players_;
  std::shared_ptr<const EmbeddedLayout> layout_;
  std::vector<Rational> worth_;
};

/// One payoff per player of a game.
class PayoffVector {
 public:
  explicit PayoffVector(Coalition players = Coalition());
  PayoffVector(Coalition players, std::vector<Rational> values);

  Coalition players() const { return players_; }
  /// DomainError if i is not a player.
  const Rational& operator[](PlayerId i) const;
  Rational& operator[](PlayerId i);
  /// Payoffs in ascending player order.
  std::span<const Rational> values() const { return values_; }
  Rational total() const;

  friend bool operator==(const PayoffVector&, const PayoffVector&) = default;

 private:
  std::size_t slot(PlayerId i) const;

  Coalition players_;
  std::vector<Rational> values_;
};

std::string to_string(const PayoffVector& x, int offset = 0);

/// A rule assigning a payoff vector to every game within the cap.
class SolutionConcept {
 public:
  using Rule = std::function<PayoffVector(const TuxGame&)>;

  SolutionConcept(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }
  /// Evaluates the rule; InternalError if it returns payoffs for the wrong
  /// player set.
  PayoffVector operator()(const TuxGame& w) const;

  /// Pays w(N, {}) / n to everyone.
  static SolutionConcept egalitarian();
  /// Looks up a table of (game, payoffs) pairs; CoverageError for any game
  /// outside the table.
  static SolutionConcept tabulated(std::string name, std::vector<std::pair<TuxGame, PayoffVector>> table);

 private:
  std::string name_;
  Rule rule_;
};

/// The TU counterpart of SolutionConcept.
class TuSolutionConcept {
 public:
  using Rule = std::function<PayoffVector(const TuGame&)>;

  TuSolutionConcept(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }
  PayoffVector operator()(const TuGame& v) const;

 private:
  std::string name_;
  Rule rule_;
};

struct BuildOptions {
  /// Fill missing entries with 0 and demote nonzero S = {} entries to
  /// warnings instead of failing.
  bool allow_missing = false;
};

/// Builds a game from explicit entries.
///
/// Entries keyed outside E(N) raise DomainError. Entries with S = {} are
/// forced to zero: a nonzero one is an error in strict mode and a warning
/// (appended to `warnings`) otherwise. Missing nonempty-S entries raise
/// CompletenessError in strict mode and become zero otherwise.
TuxGame make_tux_game(Coalition players, const std::map<EmbeddedCoalition, Rational>& entries,
                      BuildOptions options = {}, std::vector<std::string>* warnings = nullptr);

TuxGame null_game(Coalition players);

/// delta_{T,tau}: worth 1 / p*(tau) at (T, tau), zero elsewhere.
TuxGame scaled_dirac(Coalition players, Coalition t, const Partition& tau);

/// Worth 1 at T, zero elsewhere.
TuGame dirac_tu(Coalition players, Coalition t);

/// Coefficients of w in the scaled Dirac basis: c(T,tau) = w(T,tau) p*(tau),
/// in layout order (S = {} entries are zero).
std::vector<Rational> decompose(const TuxGame& w);
/// Inverse of decompose.
TuxGame recombine(Coalition players, std::span<const Rational> coefficients);

bool is_externality_free(const TuxGame& w);

/// w(S, pi) = v(S) for every pi.
TuxGame tu_to_tux(const TuGame& v);

/// sum_k coeffs[k] * games[k]; all games must share one player set.
TuxGame linear_combine(std::span<const TuxGame> games, std::span<const Rational> coeffs);

}  // namespace pfg

#endif  // PFG_GAME_HPP
