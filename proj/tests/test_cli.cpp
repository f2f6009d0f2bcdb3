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

#include <doctest.h>

#include <sstream>

#include "pfg/cli.hpp"
#include "pfg/game_io.hpp"
#include "pfg/generators.hpp"

using namespace pfg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "pfg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string public_goods() { return serialize_game(LabeledTuxGame{default_labels(3), maskin_public_goods()}); }

}  // namespace

TEST_CASE("gen + solve") {
  const Run gen = run({"gen", "maskin"});
  CHECK(gen.code == kExitOk);
  CHECK(gen.out == public_goods());

  const Run solved = run({"--format", "machine", "solve", "-", "--value", "mpw"}, gen.out);
  CHECK(solved.code == kExitOk);
  CHECK(solved.out == "player=1 value=15/2\nplayer=2 value=8\nplayer=3 value=17/2\n");

  const Run ef = run({"--format", "machine", "solve", "-", "--value", "ext-free"}, gen.out);
  CHECK(ef.out == "player=1 value=15/2\nplayer=2 value=8\nplayer=3 value=17/2\n");
}

TEST_CASE("Shapley needs a TU or externality-free game") {
  CHECK(run({"solve", "-", "--value", "shapley"}, public_goods()).code == kExitInput);
  const Run tu = run({"--format", "machine", "solve", "-", "--value", "shapley"},
                     "game tu\nplayers a b\n{a} = 0\n{b} = 0\n{a,b} = 1\n");
  CHECK(tu.code == kExitOk);
  CHECK(tu.out == "player=a value=1/2\nplayer=b value=1/2\n");
}

TEST_CASE("restrict and reduce") {
  const Run r = run({"restrict", "-", "--remove", "1"}, public_goods());
  CHECK(r.code == kExitOk);
  CHECK(r.out == "game tux\nplayers 2 3\n{2} | {3} = 9/2\n{3} | {2} = 9/2\n{2,3} | - = 14\n");

  const Run so = run({"reduce", "-", "--method", "sobolev", "--remove", "1", "--value", "mpw"}, public_goods());
  CHECK(so.out == "game tux\nplayers 2 3\n{2} | {3} = 9/2\n{3} | {2} = 5\n{2,3} | - = 33/2\n");

  const Run hm = run({"reduce", "-", "--method", "hm", "--remove", "1"}, public_goods());
  CHECK(hm.out == "game tux\nplayers 2 3\n{2} | {3} = 6\n{3} | {2} = 13/2\n{2,3} | - = 33/2\n");

  const Run set = run({"reduce", "-", "--method", "set-hm", "--remove", "1,2"}, public_goods());
  CHECK(set.code == kExitOk);
  CHECK(set.out == "game tux\nplayers 3\n{3} | - = 17/2\n");

  CHECK(run({"reduce", "-", "--method", "hm", "--remove", "1,2"}, public_goods()).code == kExitInput);
  CHECK(run({"restrict", "-", "--remove", "9"}, public_goods()).code == kExitInput);
}

TEST_CASE("TU input stays TU") {
  const std::string v = "game tu\nplayers a b c\n{a} = 1\n{b} = 2\n{c} = 3\n{a,b} = 4\n{a,c} = 5\n{b,c} = 6\n{a,b,c} = 9\n";
  const Run r = run({"restrict", "-", "--remove", "b"}, v);
  CHECK(r.out == "game tu\nplayers a c\n{a} = 1\n{c} = 3\n{a,c} = 5\n");
  const Run avg = run({"avg", "-"}, public_goods());
  CHECK(avg.out == "game tu\nplayers 1 2 3\n{1} = 9/2\n{2} = 9/2\n{3} = 9/2\n{1,2} = 12\n{1,3} = 13\n{2,3} = 14\n{1,2,3} = 24\n");
}

TEST_CASE("check") {
  const Run ok = run({"--format", "machine", "check", "-", "--axioms", "ef,bc,sc,hmc,shmc", "--value", "mpw"},
                     public_goods());
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "axiom=ef result=pass\naxiom=bc result=pass\naxiom=sc result=pass\naxiom=hmc result=pass\n"
                  "axiom=shmc result=pass\n");

  const Run bad = run({"--format", "machine", "check", "-", "--axioms", "bc", "--value", "egalitarian"}, public_goods());
  CHECK(bad.code == kExitViolation);
  CHECK(bad.out.find("axiom=bc result=fail\n") == 0);
  CHECK(bad.out.find("violation axiom=bc players=1,2 coalition={} lhs=3/2 rhs=1\n") != std::string::npos);

  const Run two = run({"check", "-", "--axioms", "2s"}, public_goods());
  CHECK(two.code == kExitOk);
  CHECK(two.out.find("2S^X  pass") == 0);
}

TEST_CASE("gen cournot and random") {
  const Run c = run({"gen", "cournot", "--n", "4", "--scale", "1"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("{1,2,3,4} | - = 1/4\n") != std::string::npos);
  const Run a = run({"gen", "random", "--n", "4", "--seed", "7", "--magnitude", "20"});
  const Run b = run({"gen", "random", "--n", "4", "--seed", "7", "--magnitude", "20"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(run({"gen", "cournot", "--n", "1"}).code == kExitSize);
}

TEST_CASE("input errors and exit codes") {
  CHECK(run({"solve", "/nonexistent/game.txt"}).code == kExitInput);
  CHECK(run({"solve", "-"}, "game tux\nplayers a\n{a} | - = x\n").code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"solve", "-", "--value", "banana"}, public_goods()).code == kExitInput);

  std::string missing = public_goods();
  missing.erase(missing.find("{1,2} | {3} = 12\n"), 17);
  const Run strict = run({"solve", "-"}, missing);
  CHECK(strict.code == kExitInput);
  CHECK(strict.err.find("({1,2}, {3})") != std::string::npos);
  CHECK(run({"--allow-missing", "solve", "-"}, missing).code == kExitOk);

  std::string many = "game tux\nplayers";
  for (int k = 0; k < 11; ++k) many += " p" + std::to_string(k);
  CHECK(run({"solve", "-"}, many + "\n").code == kExitSize);
}

TEST_CASE("warnings go to stderr") {
  const Run r = run({"--allow-missing", "solve", "-"}, public_goods() + "{} | {1,2,3} = 1\n");
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("warning:") == 0);
}

TEST_CASE("help exits cleanly") {
  const Run h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("solve") != std::string::npos);
}
