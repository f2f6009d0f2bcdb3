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

#include "pfg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pfg/axioms.hpp"
#include "pfg/errors.hpp"
#include "pfg/game_io.hpp"
#include "pfg/generators.hpp"
#include "pfg/reduction.hpp"
#include "pfg/restriction.hpp"
#include "pfg/values.hpp"

namespace pfg {

namespace {

struct Settings {
  std::string format = "text";
  bool allow_missing = false;
  int cap = kDefaultCap;
};

// Input game lifted to TUX form; `from_tu` remembers whether outputs of a
// TU input should be written back as TU games.
struct Input {
  std::vector<std::string> labels;
  TuxGame game;
  bool from_tu = false;
  std::optional<TuGame> tu;
};

class Session {
 public:
  Session(const Settings& settings, std::istream& in, std::ostream& out, std::ostream& err)
      : settings_(settings), in_(in), out_(out), err_(err) {}

  bool machine() const { return settings_.format == "machine"; }

  Input load(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw DomainError("cannot open '" + path + "'");
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    std::vector<std::string> warnings;
    LabeledGame parsed = parse_game(text, ParseOptions{settings_.allow_missing}, &warnings);
    for (const auto& w : warnings) err_ << "warning: " << w << '\n';
    if (auto* tux = std::get_if<LabeledTuxGame>(&parsed)) return Input{tux->labels, tux->game, false, std::nullopt};
    auto& tu = std::get<LabeledTuGame>(parsed);
    return Input{tu.labels, tu_to_tux(tu.game), true, tu.game};
  }

  void emit_game(const Input& input, const TuxGame& game) {
    if (input.from_tu && is_externality_free(game)) {
      out_ << serialize_game(LabeledTuGame{input.labels, average_game(game)});
    } else {
      out_ << serialize_game(LabeledTuxGame{input.labels, game});
    }
  }

  void emit_payoffs(const std::string& value, const std::vector<std::string>& labels, const PayoffVector& x) {
    if (!machine()) out_ << "value " << value << '\n';
    x.players().for_each([&](PlayerId i) {
      const std::string& label = labels.at(static_cast<std::size_t>(i));
      if (machine()) {
        out_ << "player=" << label << " value=" << x[i] << '\n';
      } else {
        out_ << "  " << label << "  " << x[i] << '\n';
      }
    });
  }

  Coalition parse_labels(const Input& input, const std::vector<std::string>& names) {
    Coalition out;
    for (const auto& name : names) {
      auto it = std::find(input.labels.begin(), input.labels.end(), name);
      if (it == input.labels.end()) throw DomainError("unknown player label '" + name + "'");
      const auto i = static_cast<PlayerId>(it - input.labels.begin());
      if (!input.game.players().contains(i)) throw DomainError("player '" + name + "' is not in the game");
      out = out.with(i);
    }
    return out;
  }

  std::ostream& out() { return out_; }

 private:
  const Settings& settings_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

SolutionConcept solution_named(const std::string& name) {
  if (name == "mpw") return mpw_solution();
  if (name == "ext-free") return externality_free_solution();
  if (name == "egalitarian") return SolutionConcept::egalitarian();
  throw DomainError("unknown solution '" + name + "'");
}

std::string axiom_key(const std::string& axiom) {
  if (axiom == "EF^X") return "ef";
  if (axiom == "BC^X") return "bc";
  if (axiom == "SC^X") return "sc";
  if (axiom == "HMC^X") return "hmc";
  if (axiom == "SHMC^X") return "shmc";
  return "2s";
}

std::string format_players(const std::vector<PlayerId>& players, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < players.size(); ++k) {
    if (k > 0) out += ',';
    out += labels.at(static_cast<std::size_t>(players[k]));
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for cooperative games with externalities", "pfg"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--allow-missing", settings.allow_missing, "Treat missing worths as 0");
  app.add_option("--cap", settings.cap, "Universe cap on player count")->check(CLI::Range(1, kHardCap));

  std::string file;
  std::string value = "mpw";
  std::vector<std::string> remove;
  std::string method = "hm";
  std::vector<std::string> axioms;

  auto* solve = app.add_subcommand("solve", "Compute a payoff vector");
  solve->add_option("file", file, "Game file ('-' for stdin)")->required();
  solve->add_option("--value", value, "mpw | ext-free | shapley")
      ->check(CLI::IsMember({"mpw", "ext-free", "shapley"}));

  auto* avg = app.add_subcommand("avg", "Print the Ewens average TU game");
  avg->add_option("file", file, "Game file ('-' for stdin)")->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "Remove players (subgame)");
  restrict_cmd->add_option("file", file, "Game file ('-' for stdin)")->required();
  restrict_cmd->add_option("--remove", remove, "Players to remove")->delimiter(',')->required();

  auto* reduce = app.add_subcommand("reduce", "Build a reduced game");
  reduce->add_option("file", file, "Game file ('-' for stdin)")->required();
  reduce->add_option("--method", method, "sobolev | hm | set-hm")
      ->check(CLI::IsMember({"sobolev", "hm", "set-hm"}));
  reduce->add_option("--remove", remove, "Players to remove")->delimiter(',')->required();
  reduce->add_option("--value", value, "mpw | ext-free | egalitarian")
      ->check(CLI::IsMember({"mpw", "ext-free", "egalitarian"}));

  auto* check = app.add_subcommand("check", "Check axioms for a solution on a game");
  check->add_option("file", file, "Game file ('-' for stdin)")->required();
  check->add_option("--axioms", axioms, "ef,bc,sc,hmc,shmc,2s")
      ->delimiter(',')
      ->check(CLI::IsMember({"ef", "bc", "sc", "hmc", "shmc", "2s"}));
  check->add_option("--value", value, "mpw | ext-free | egalitarian")
      ->check(CLI::IsMember({"mpw", "ext-free", "egalitarian"}));

  int gen_n = 4;
  std::string gen_scale = "1";
  std::uint64_t gen_seed = 0;
  int gen_magnitude = 20;
  auto* gen = app.add_subcommand("gen", "Generate a game");
  gen->require_subcommand(1);
  auto* gen_cournot = gen->add_subcommand("cournot", "Symmetric Cournot oligopoly");
  gen_cournot->add_option("--n", gen_n, "Number of firms");
  gen_cournot->add_option("--scale", gen_scale, "(A - c)^2");
  gen->add_subcommand("maskin", "Three-player public goods game");
  auto* gen_random = gen->add_subcommand("random", "Random integer worths");
  gen_random->add_option("--n", gen_n, "Number of players");
  gen_random->add_option("--seed", gen_seed, "Seed");
  gen_random->add_option("--magnitude", gen_magnitude, "Worths lie in [-m, m]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    set_universe_cap(settings.cap);
    Session session(settings, in, out, err);

    if (solve->parsed()) {
      const Input input = session.load(file);
      PayoffVector x;
      if (value == "shapley") {
        if (input.tu) {
          x = shapley(*input.tu);
        } else {
          if (!is_externality_free(input.game)) {
            throw DomainError("the Shapley value needs a TU game or an externality-free TUX game");
          }
          x = shapley(average_game(input.game));
        }
      } else {
        x = solution_named(value)(input.game);
      }
      session.emit_payoffs(value, input.labels, x);
      return kExitOk;
    }

    if (avg->parsed()) {
      const Input input = session.load(file);
      out << serialize_game(LabeledTuGame{input.labels, average_game(input.game)});
      return kExitOk;
    }

    if (restrict_cmd->parsed()) {
      const Input input = session.load(file);
      session.emit_game(input, restrict_set(input.game, session.parse_labels(input, remove)));
      return kExitOk;
    }

    if (reduce->parsed()) {
      const Input input = session.load(file);
      const Coalition removed = session.parse_labels(input, remove);
      const SolutionConcept phi = solution_named(value);
      if (method == "set-hm") {
        session.emit_game(input, set_hm_reduce_tux(input.game, removed, phi));
        return kExitOk;
      }
      if (removed.size() != 1) throw DomainError("--method " + method + " removes exactly one player");
      const TuxGame reduced = method == "sobolev" ? sobolev_reduce_tux(input.game, removed.min(), phi)
                                                  : hm_reduce_tux(input.game, removed.min(), phi);
      session.emit_game(input, reduced);
      return kExitOk;
    }

    if (check->parsed()) {
      const Input input = session.load(file);
      const SolutionConcept phi = solution_named(value);
      const bool defaulted = axioms.empty();
      if (defaulted) axioms = {"ef", "bc", "sc", "hmc", "shmc", "2s"};
      bool all_pass = true;
      for (const auto& name : axioms) {
        AxiomReport report;
        if (name == "ef") {
          report = check_efficiency(phi, input.game);
        } else if (name == "bc") {
          report = check_balanced_contributions(phi, input.game);
        } else if (name == "sc") {
          report = check_sobolev_consistency(phi, input.game);
        } else if (name == "hmc" || name == "shmc") {
          report = check_hm_consistency(phi, input.game, name == "shmc");
        } else {
          if (defaulted && input.game.player_count() < 2) continue;
          report = check_two_standardness_on_restrictions(phi, input.game);
        }
        all_pass = all_pass && report.passed();
        const std::string key = axiom_key(report.axiom);
        if (session.machine()) {
          out << "axiom=" << key << " result=" << (report.passed() ? "pass" : "fail") << '\n';
        } else {
          out << report.axiom << "  " << (report.passed() ? "pass" : "FAIL") << "  (" << report.checks
              << " checked, " << report.violations.size() << " violated)\n";
        }
        for (const Violation& v : report.violations) {
          if (session.machine()) {
            out << "violation axiom=" << key << " players=" << format_players(v.players, input.labels)
                << " coalition=" << format_coalition(v.coalition, input.labels) << " lhs=" << v.lhs
                << " rhs=" << v.rhs << '\n';
          } else {
            out << "    players " << format_players(v.players, input.labels) << "  removed "
                << format_coalition(v.coalition, input.labels) << "  lhs " << v.lhs << "  rhs " << v.rhs << '\n';
          }
        }
      }
      return all_pass ? kExitOk : kExitViolation;
    }

    if (gen->parsed()) {
      TuxGame game;
      if (gen_cournot->parsed()) {
        game = cournot_game(gen_n, Rational::parse(gen_scale));
      } else if (gen_random->parsed()) {
        game = random_tux_game(gen_n, gen_seed, gen_magnitude);
      } else {
        game = maskin_public_goods();
      }
      out << serialize_game(LabeledTuxGame{default_labels(game.player_count()), game});
      return kExitOk;
    }
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSize;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace pfg
