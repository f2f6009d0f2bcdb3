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

#include "pfg/game.hpp"

#include <algorithm>
#include <sstream>

#include "pfg/errors.hpp"

namespace pfg {

TuGame::TuGame(Coalition players) : players_(players) {
  require_within_cap(players);
  worth_.assign(std::size_t{1} << players.size(), Rational());
}

TuGame::TuGame(Coalition players, std::vector<Rational> worths) : players_(players), worth_(std::move(worths)) {
  require_within_cap(players);
  if (worth_.size() != (std::size_t{1} << players.size())) {
    throw DomainError("TU game on " + to_string(players) + " needs " +
                      std::to_string(std::size_t{1} << players.size()) + " worths");
  }
  if (!worth_.front().is_zero()) throw DomainError("the empty coalition must have worth 0");
}

const Rational& TuGame::operator()(Coalition s) const {
  if (!s.subset_of(players_)) {
    throw DomainError(to_string(s) + " is not a coalition of " + to_string(players_));
  }
  return worth_[compress(s, players_)];
}

TuxGame::TuxGame(Coalition players) : players_(players), layout_(EmbeddedLayout::for_players(players)) {
  worth_.assign(layout_->size(), Rational());
}

TuxGame::TuxGame(Coalition players, std::vector<Rational> worths)
    : players_(players), layout_(EmbeddedLayout::for_players(players)), worth_(std::move(worths)) {
  if (worth_.size() != layout_->size()) {
    throw DomainError("TUX game on " + to_string(players) + " needs " + std::to_string(layout_->size()) +
                      " worths, got " + std::to_string(worth_.size()));
  }
  // S = {} entries come first: B(n) of them.
  const std::size_t empties = bell_number(players.size());
  for (std::size_t k = 0; k < empties; ++k) {
    if (!worth_[k].is_zero()) throw DomainError("embedded coalitions with S = {} must have worth 0");
  }
}

const Rational& TuxGame::operator()(Coalition s, const Partition& outside) const {
  return (*this)(EmbeddedCoalition{s, outside});
}

PayoffVector::PayoffVector(Coalition players) : players_(players), values_(players.size()) {}

PayoffVector::PayoffVector(Coalition players, std::vector<Rational> values)
    : players_(players), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(players.size())) {
    throw DomainError("payoff vector size does not match its player set");
  }
}

std::size_t PayoffVector::slot(PlayerId i) const {
  if (!players_.contains(i)) {
    throw DomainError("player " + std::to_string(i) + " has no payoff in a vector over " + to_string(players_));
  }
  return static_cast<std::size_t>(std::popcount(players_.bits() & ((Coalition::Mask{1} << i) - 1)));
}

const Rational& PayoffVector::operator[](PlayerId i) const { return values_[slot(i)]; }

Rational& PayoffVector::operator[](PlayerId i) { return values_[slot(i)]; }

Rational PayoffVector::total() const {
  Rational sum;
  for (const Rational& x : values_) sum += x;
  return sum;
}

std::string to_string(const PayoffVector& x, int offset) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  x.players().for_each([&](PlayerId i) {
    if (!first) os << ", ";
    os << i + offset << ": " << x[i];
    first = false;
  });
  os << ')';
  return os.str();
}

PayoffVector SolutionConcept::operator()(const TuxGame& w) const {
  PayoffVector x = rule_(w);
  if (x.players() != w.players()) {
    throw InternalError("solution '" + name_ + "' returned payoffs for " + to_string(x.players()) +
                        " on a game over " + to_string(w.players()));
  }
  return x;
}

SolutionConcept SolutionConcept::egalitarian() {
  return SolutionConcept("egalitarian", [](const TuxGame& w) {
    const int n = w.player_count();
    if (n == 0) return PayoffVector();
    const Rational share = w.grand() / Rational(n);
    return PayoffVector(w.players(), std::vector<Rational>(n, share));
  });
}

SolutionConcept SolutionConcept::tabulated(std::string name, std::vector<std::pair<TuxGame, PayoffVector>> table) {
  auto shared = std::make_shared<const std::vector<std::pair<TuxGame, PayoffVector>>>(std::move(table));
  std::string label = name;
  return SolutionConcept(std::move(name), [shared, label](const TuxGame& w) {
    for (const auto& [game, payoff] : *shared) {
      if (game == w) return payoff;
    }
    throw CoverageError("solution '" + label + "' is not tabulated for a game over " + to_string(w.players()));
  });
}

PayoffVector TuSolutionConcept::operator()(const TuGame& v) const {
  PayoffVector x = rule_(v);
  if (x.players() != v.players()) {
    throw InternalError("solution '" + name_ + "' returned payoffs for the wrong player set");
  }
  return x;
}

TuxGame make_tux_game(Coalition players, const std::map<EmbeddedCoalition, Rational>& entries,
                      BuildOptions options, std::vector<std::string>* warnings) {
  TuxGame shape(players);
  const EmbeddedLayout& layout = shape.layout();
  std::vector<Rational> worths(layout.size());
  std::vector<bool> seen(layout.size(), false);

  for (const auto& [e, value] : entries) {
    const std::size_t index = layout.index_of(e);
    seen[index] = true;
    if (e.coalition.empty()) {
      if (!value.is_zero()) {
        const std::string msg = "worth " + value.str() + " of ({}, " + to_string(e.outside) + ") forced to 0";
        if (!options.allow_missing) throw DomainError(msg);
        if (warnings != nullptr) warnings->push_back(msg);
      }
      continue;
    }
    worths[index] = value;
  }

  const std::size_t empties = bell_number(players.size());
  for (std::size_t index = empties; index < layout.size(); ++index) {
    if (seen[index] || options.allow_missing) continue;
    const EmbeddedCoalition e = layout.entry(index);
    throw CompletenessError("missing worth for (" + to_string(e.coalition) + ", " + to_string(e.outside) + ")");
  }
  return TuxGame(players, std::move(worths));
}

TuxGame null_game(Coalition players) { return TuxGame(players); }

TuxGame scaled_dirac(Coalition players, Coalition t, const Partition& tau) {
  if (t.empty()) throw DomainError("scaled Dirac games need a nonempty coalition");
  TuxGame shape(players);
  std::vector<Rational> worths(shape.layout().size());
  worths[shape.layout().index_of(EmbeddedCoalition{t, tau})] = Rational(1) / ewens_weight(tau);
  return TuxGame(players, std::move(worths));
}

TuGame dirac_tu(Coalition players, Coalition t) {
  if (!t.subset_of(players)) throw DomainError(to_string(t) + " is not a coalition of " + to_string(players));
  return TuGame::from_function(players, [t](Coalition s) { return Rational(s == t ? 1 : 0); });
}

std::vector<Rational> decompose(const TuxGame& w) {
  std::vector<Rational> c(w.layout().size());
  const auto worths = w.worths();
  w.layout().for_each([&](std::size_t index, Coalition s, std::span<const Coalition> blocks) {
    if (!s.empty()) c[index] = worths[index] * ewens_weight(blocks);
  });
  return c;
}

TuxGame recombine(Coalition players, std::span<const Rational> coefficients) {
  // Each scaled Dirac game contributes c / p*(tau) at its own entry only.
  TuxGame shape(players);
  if (coefficients.size() != shape.layout().size()) throw DomainError("coefficient count mismatch");
  std::vector<Rational> worths(coefficients.size());
  shape.layout().for_each([&](std::size_t index, Coalition s, std::span<const Coalition> blocks) {
    if (s.empty()) {
      if (!coefficients[index].is_zero()) throw DomainError("no basis game for S = {}");
      return;
    }
    worths[index] = coefficients[index] / ewens_weight(blocks);
  });
  return TuxGame(players, std::move(worths));
}

bool is_externality_free(const TuxGame& w) {
  const auto worths = w.worths();
  for (Coalition s : w.layout().coalitions()) {
    const std::size_t first = w.layout().offset_of(s);
    const std::size_t count = bell_number(w.player_count() - s.size());
    for (std::size_t k = 1; k < count; ++k) {
      if (worths[first + k] != worths[first]) return false;
    }
  }
  return true;
}

TuxGame tu_to_tux(const TuGame& v) {
  return TuxGame::from_function(v.players(), [&v](Coalition s, std::span<const Coalition>) { return v(s); });
}

TuxGame linear_combine(std::span<const TuxGame> games, std::span<const Rational> coeffs) {
  if (games.empty()) throw DomainError("linear combination of no games");
  if (games.size() != coeffs.size()) throw DomainError("game and coefficient counts differ");
  const Coalition players = games.front().players();
  std::vector<Rational> worths(games.front().layout().size());
  for (std::size_t g = 0; g < games.size(); ++g) {
    if (games[g].players() != players) throw DomainError("linear combination of games on different player sets");
    if (coeffs[g].is_zero()) continue;
    const auto src = games[g].worths();
    for (std::size_t k = 0; k < worths.size(); ++k) worths[k] += coeffs[g] * src[k];
  }
  return TuxGame(players, std::move(worths));
}

}  // namespace pfg
