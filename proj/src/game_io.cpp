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

#include "pfg/game_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "pfg/errors.hpp"

namespace pfg {

namespace {

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])) != 0) ++k;
    const std::size_t start = k;
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])) == 0) ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line, const std::map<std::string, PlayerId, std::less<>>& ids)
      : text_(text), line_(line), ids_(ids) {}

  Coalition coalition() {
    skip_space();
    expect('{');
    Coalition out;
    skip_space();
    if (peek() == '}') {
      ++pos_;
      return out;
    }
    while (true) {
      skip_space();
      const PlayerId i = label();
      if (out.contains(i)) fail("player listed twice in a coalition");
      out = out.with(i);
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return out;
    }
  }

  std::vector<Coalition> partition() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return {};
    }
    std::vector<Coalition> blocks;
    while (true) {
      skip_space();
      if (peek() != '{') break;
      Coalition b = coalition();
      if (b.empty()) fail("partition blocks must be nonempty");
      blocks.push_back(b);
    }
    if (blocks.empty()) fail("expected a partition ('{...}' blocks or '-')");
    return blocks;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Rational value() {
    skip_space();
    const std::string_view rest = trim(text_.substr(pos_));
    pos_ = text_.size();
    if (rest.empty()) fail("missing worth");
    try {
      return Rational::parse(rest);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  PlayerId label() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a player label");
    const std::string_view name = text_.substr(start, pos_ - start);
    auto it = ids_.find(name);
    if (it == ids_.end()) fail("unknown player label '" + std::string(name) + "'");
    return it->second;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const std::map<std::string, PlayerId, std::less<>>& ids_;
};

std::string describe(const EmbeddedCoalition& e, const std::vector<std::string>& labels) {
  return "(" + format_coalition(e.coalition, labels) + ", " + format_partition(e.outside.blocks(), labels) + ")";
}

}  // namespace

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string format_coalition(Coalition s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](PlayerId i) {
    if (!first) out += ',';
    out += labels.at(static_cast<std::size_t>(i));
    first = false;
  });
  return out + "}";
}

std::string format_partition(std::span<const Coalition> blocks, const std::vector<std::string>& labels) {
  if (blocks.empty()) return "-";
  std::string out;
  for (Coalition b : blocks) out += format_coalition(b, labels);
  return out;
}

LabeledGame parse_game(std::string_view text, ParseOptions options, std::vector<std::string>* warnings) {
  std::optional<bool> is_tux;
  std::optional<std::vector<std::string>> labels;
  std::map<std::string, PlayerId, std::less<>> ids;
  Coalition players;

  struct Entry {
    std::size_t line;
    Rational value;
  };
  std::map<EmbeddedCoalition, Entry> tux_entries;
  std::map<Coalition::Mask, Entry> tu_entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!is_tux) {
      const auto words = split_words(line);
      if (words.size() != 2 || words[0] != "game" || (words[1] != "tux" && words[1] != "tu")) {
        throw ParseError(line_no, "expected 'game tux' or 'game tu'");
      }
      is_tux = words[1] == "tux";
      continue;
    }
    if (!labels) {
      const auto words = split_words(line);
      if (words.empty() || words[0] != "players") throw ParseError(line_no, "expected 'players <label> ...'");
      labels.emplace();
      for (std::size_t k = 1; k < words.size(); ++k) {
        const std::string_view w = words[k];
        if (!std::all_of(w.begin(), w.end(), is_label_char)) {
          throw ParseError(line_no, "invalid player label '" + std::string(w) + "'");
        }
        if (ids.count(w) != 0) throw ParseError(line_no, "duplicate player label '" + std::string(w) + "'");
        if (static_cast<int>(labels->size()) >= universe_cap()) {
          throw SizeError("game lists more than " + std::to_string(universe_cap()) + " players");
        }
        ids.emplace(std::string(w), static_cast<PlayerId>(labels->size()));
        labels->emplace_back(w);
      }
      players = Coalition::first(static_cast<int>(labels->size()));
      continue;
    }

    LineParser p(line, line_no, ids);
    const Coalition s = p.coalition();
    if (*is_tux) {
      p.expect('|');
      std::vector<Coalition> blocks = p.partition();
      p.expect('=');
      Rational value = p.value();
      Coalition covered = s;
      for (Coalition b : blocks) {
        if (!covered.disjoint(b)) p.fail("coalition and outside blocks overlap");
        covered = covered | b;
      }
      if (covered != players) p.fail("coalition and outside partition must cover every player exactly once");
      EmbeddedCoalition e{s, Partition(std::move(blocks))};
      if (tux_entries.count(e) != 0) p.fail("duplicate entry " + describe(e, *labels));
      tux_entries.emplace(std::move(e), Entry{line_no, std::move(value)});
    } else {
      p.expect('=');
      Rational value = p.value();
      if (tu_entries.count(s.bits()) != 0) p.fail("duplicate entry " + format_coalition(s, *labels));
      tu_entries.emplace(s.bits(), Entry{line_no, std::move(value)});
    }
  }
  if (!is_tux) throw ParseError(line_no, "empty game file");
  if (!labels) throw ParseError(line_no, "missing 'players' line");

  auto empty_coalition_worth = [&](const Entry& entry, const std::string& what) {
    if (entry.value.is_zero()) return;
    const std::string msg = "worth " + entry.value.str() + " of " + what + " forced to 0";
    if (!options.allow_missing) throw ParseError(entry.line, msg + " (the empty coalition has worth 0)");
    if (warnings != nullptr) warnings->push_back("line " + std::to_string(entry.line) + ": " + msg);
  };

  if (*is_tux) {
    TuxGame shape(players);
    const EmbeddedLayout& layout = shape.layout();
    std::vector<Rational> worths(layout.size());
    std::vector<bool> seen(layout.size(), false);
    for (const auto& [e, entry] : tux_entries) {
      if (e.coalition.empty()) {
        empty_coalition_worth(entry, describe(e, *labels));
        continue;
      }
      const std::size_t index = layout.index_of(e);
      worths[index] = entry.value;
      seen[index] = true;
    }
    if (!options.allow_missing) {
      for (std::size_t index = bell_number(players.size()); index < layout.size(); ++index) {
        if (!seen[index]) throw CompletenessError("missing worth for " + describe(layout.entry(index), *labels));
      }
    }
    return LabeledTuxGame{*labels, TuxGame(players, std::move(worths))};
  }

  std::vector<Rational> worths(std::size_t{1} << players.size());
  for (const auto& [bits, entry] : tu_entries) {
    const Coalition s(bits);
    if (s.empty()) {
      empty_coalition_worth(entry, "{}");
      continue;
    }
    worths[compress(s, players)] = entry.value;
  }
  if (!options.allow_missing) {
    for (std::uint32_t local = 1; local < worths.size(); ++local) {
      if (tu_entries.count(expand(local, players).bits()) == 0) {
        throw CompletenessError("missing worth for " + format_coalition(expand(local, players), *labels));
      }
    }
  }
  return LabeledTuGame{*labels, TuGame(players, std::move(worths))};
}

namespace {

std::string players_line(Coalition players, const std::vector<std::string>& labels) {
  std::string out = "players";
  players.for_each([&](PlayerId i) { out += " " + labels.at(static_cast<std::size_t>(i)); });
  return out;
}

}  // namespace

std::string serialize_game(const LabeledTuxGame& g) {
  std::ostringstream os;
  os << "game tux\n" << players_line(g.game.players(), g.labels) << '\n';
  const auto worths = g.game.worths();
  g.game.layout().for_each([&](std::size_t index, Coalition s, std::span<const Coalition> blocks) {
    if (s.empty()) return;
    os << format_coalition(s, g.labels) << " | " << format_partition(blocks, g.labels) << " = " << worths[index]
       << '\n';
  });
  return os.str();
}

std::string serialize_game(const LabeledTuGame& g) {
  std::ostringstream os;
  const Coalition players = g.game.players();
  os << "game tu\n" << players_line(players, g.labels) << '\n';
  std::vector<Coalition> order;
  for (std::uint32_t local = 1; local < (1U << players.size()); ++local) order.push_back(expand(local, players));
  std::sort(order.begin(), order.end(), coalition_order_less);
  for (Coalition s : order) os << format_coalition(s, g.labels) << " = " << g.game(s) << '\n';
  return os.str();
}

std::string serialize_game(const LabeledGame& g) {
  return std::visit([](const auto& game) { return serialize_game(game); }, g);
}

}  // namespace pfg
