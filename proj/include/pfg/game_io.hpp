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

#ifndef PFG_GAME_IO_HPP
#define PFG_GAME_IO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pfg/game.hpp"

namespace pfg {

/// A game plus display labels; labels[i] names player i of the universe.
struct LabeledTuxGame {
  std::vector<std::string> labels;
  TuxGame game;
};

struct LabeledTuGame {
  std::vector<std::string> labels;
  TuGame game;
};

using LabeledGame = std::variant<LabeledTuxGame, LabeledTuGame>;

struct ParseOptions {
  bool allow_missing = false;
};

/// Parses the line-oriented game format:
///
///   # comment
///   game tux                      (or: game tu)
///   players a b c
///   {a,b} | {c} = 12              (TUX: coalition | outside partition = worth)
///   {a} | {b}{c} = 0
///   {a,b,c} | - = 24              ('-' is the empty partition)
///   {a,b} = 7/2                   (TU: coalition = worth)
///
/// Worths are integers, exact decimals or p/q. Players get indices in the
/// order they are listed. Errors: ParseError (with line) for syntax,
/// duplicates and unknown labels; CompletenessError for missing entries
/// unless allow_missing; SizeError beyond the universe cap.
LabeledGame parse_game(std::string_view text, ParseOptions options = {},
                       std::vector<std::string>* warnings = nullptr);

/// Canonical text: entries in layout order, S = {} entries omitted,
/// worths in lowest terms.
std::string serialize_game(const LabeledTuxGame& g);
std::string serialize_game(const LabeledTuGame& g);
std::string serialize_game(const LabeledGame& g);

/// "1", "2", ..., "n".
std::vector<std::string> default_labels(int n);

std::string format_coalition(Coalition s, const std::vector<std::string>& labels);
/// "{a}{b,c}", or "-" for the empty partition.
std::string format_partition(std::span<const Coalition> blocks, const std::vector<std::string>& labels);

}  // namespace pfg

#endif  // PFG_GAME_IO_HPP
