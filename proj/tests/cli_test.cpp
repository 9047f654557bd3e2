// Copyright 2026 The kgeodetic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kgeodetic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KGEODETIC_TEST_DATA) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("check-k on Z_6 with odd generators") {
  auto r = run({"check-k", "--group", data("cyclic6-oddgens.grp"), "--radius", "2", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "k-geodetic: true (min k = 3)\n");
  r = run({"check-k", "--group", data("cyclic6-oddgens.grp"), "--k", "2", "--expect", "true"});
  CHECK(r.code == 1);
  CHECK(first_line(r.out) == "k-geodetic: false (min k = 3)");
  r = run({"check-k", "--group", data("cyclic6-oddgens.grp"), "--k", "2", "--expect", "false"});
  CHECK(r.code == 0);
}

TEST_CASE("min-k on the Petersen graph") {
  auto r = run({"min-k", "--graph", data("petersen.g")});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "min k = 1");
}

TEST_CASE("word-tool") {
  CHECK(run({"word-tool", "primitive-root", "abab"}).out == "ab ^ 2\n");
  CHECK(run({"word-tool", "solve", "ab", "ba", "b"}).out == "s = a\nt = b\nq = 0\n");
  CHECK(run({"word-tool", "commute", "abab", "ab"}).out == "ab\n");
  CHECK(run({"word-tool", "reduce", "abb'a"}).out == "aa\n");
  CHECK(run({"word-tool", "factors", "abab", "2"}).out == "ab\nba\n");
  CHECK(run({"word-tool", "commute", "ab", "ba"}).code == 2);
  CHECK(run({"word-tool", "frobnicate", "ab"}).code == 2);
  CHECK(run({"word-tool", "primitive-root", "1"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"min-k", "--bogus"}).code == 2);
  CHECK(run({"min-k"}).code == 2);
  CHECK(run({"min-k", "--graph", data("missing.g")}).code == 2);
  CHECK(run({"min-k", "--graph", data("petersen.g"), "--group", data("z4.grp")}).code == 2);
  CHECK(run({"check-k", "--graph", data("petersen.g"), "--k", "1", "--expect", "maybe"}).code == 2);
  auto r = run({"ball", "--group", data("free2.grp"), "--radius", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices: 39365") != std::string::npos);
}

TEST_CASE("ball budget from the environment") {
  setenv("GEODETIC_BALL_BUDGET", "100", 1);
  auto r = run({"ball", "--group", data("free2.grp"), "--radius", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("budget") != std::string::npos);
  setenv("GEODETIC_BALL_BUDGET", "lots", 1);
  CHECK(run({"ball", "--group", data("free2.grp")}).code == 2);
  unsetenv("GEODETIC_BALL_BUDGET");
  CHECK(run({"ball", "--group", data("free2.grp")}).code == 0);
}

TEST_CASE("forbidden and automaton") {
  auto r = run({"forbidden", "--group", data("z4.grp"), "--e", "3", "--check-len", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "forbidden e=3\naa'\na'a\naaa\na'a'a'\nlocally excluding up to length 3: true\n");
  r = run({"automaton", "--group", data("z2z2.grp"), "--e", "2"});
  CHECK(first_line(r.out) == "automaton states=4 live=3 start=0 dead=3");
}

TEST_CASE("automaton DOT has four nodes") {
  std::string path = "automaton_test.dot";
  auto r = run({"automaton", "--group", data("z2z2.grp"), "--e", "2", "--dot", path});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string dot = ss.str();
  std::size_t nodes = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("shape=") != std::string::npos) ++nodes;
  }
  CHECK(nodes == 4);
}

TEST_CASE("powers and centraliser") {
  auto r = run({"powers", "--group", data("z2z2.grp"), "--radius", "16", "--word", "ab"});
  CHECK(r.code == 0);
  CHECK(r.out.find("stabilized n_star=0 t=1 s=ab q=0") != std::string::npos);
  r = run({"centraliser", "--group", data("free2.grp"), "--element", "a"});
  CHECK(first_line(r.out) == "centraliser of a in ball of radius 4: 9 of 161 elements");
  r = run({"powers", "--group", data("z4.grp"), "--word", "a"});
  CHECK(r.code == 2);
}

TEST_CASE("geometry commands") {
  auto r = run({"bigons", "--graph", data("c4.g")});
  CHECK(r.out.find("summary bigons=2 non_degenerate=2 distinct_non_degenerate=1") == r.out.find("summary"));
  r = run({"ladders", "--graph", data("petersen.g"), "--k", "1", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("height_violations=0 close_violations=0") != std::string::npos);
  r = run({"triangles", "--graph", data("c4.g")});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary triangles=") != std::string::npos);
}

TEST_CASE("export-dot") {
  auto r = run({"export-dot", "--graph", data("c4.g")});
  CHECK(r.out == "graph \"G\" {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n");
  r = run({"export-dot", "--graph", data("empty.g")});
  CHECK(r.out == "graph \"G\" {\n}\n");
}

TEST_CASE("identical invocations give identical output") {
  std::vector<std::string> args{"ladders", "--group", data("z2z2.grp"), "--k", "1", "--m", "2"};
  CHECK(run(args).out == run(args).out);
}
