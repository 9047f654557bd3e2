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

#include <sstream>

#include "kgeodetic/dot.hpp"
#include "kgeodetic/error.hpp"
#include "kgeodetic/graph_io.hpp"
#include "kgeodetic/group.hpp"
#include "kgeodetic/group_io.hpp"
#include "oracles.hpp"

using namespace kgeodetic;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no ParseError");
  return 0;
}

}  // namespace

TEST_CASE("graph text round trip") {
  Graph g = parse_graph("# comment\ngraph 4\ne 0 1\ne 1 2  # trailing comment\n\ne 2 3\ne 3 0\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  std::ostringstream out;
  write_graph(out, g);
  Graph h = parse_graph(out.str());
  CHECK(h.edge_count() == 4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      CHECK(g.adjacent(u, v) == h.adjacent(u, v));
    }
  }
}

TEST_CASE("graph parse errors carry line numbers") {
  CHECK(parse_error_line("graph 3\ne 0 1\nx 1 2\n") == 3);
  CHECK(parse_error_line("graph 3\ne 0 1 2\n") == 2);
  CHECK(parse_error_line("e 0 1\n") == 1);
  CHECK(parse_error_line("graph 3\ngraph 3\n") == 2);
  CHECK(parse_error_line("graph 3\ne 0 3\n") == 2);
  CHECK(parse_error_line("graph 3\n\ne 1 1\n") == 3);
  CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError);
}

TEST_CASE("graph files from the test data") {
  Graph p = read_graph_file(KGEODETIC_TEST_DATA "/petersen.g");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK_THROWS_AS(read_graph_file(KGEODETIC_TEST_DATA "/missing.g"), ParseError);
}

TEST_CASE("DOT export") {
  CHECK(to_dot(build_graph({}, 0)) == "graph \"G\" {\n}\n");
  std::vector<Edge> edges{{0, 1}};
  CHECK(to_dot(build_graph(edges, 2)) == "graph \"G\" {\n  0;\n  1;\n  0 -- 1;\n}\n");
  CHECK(dot_quote("a\"b") == "\"a\\\"b\"");
}

TEST_CASE("DOT export of a K_{2,2} ball labels elements and generators") {
  GroupFile f = parse_group("group product cyclic 2 cyclic 2\n");
  CayleyBall ball = cayley_ball(f.spec, f.gens, 2);
  DotOptions opts;
  opts.label_names = ball.gens().alphabet().labels();
  std::string dot = to_dot(ball.graph(), opts);
  CHECK(dot.find("0 [label=\"(0,0)\"]") != std::string::npos);
  CHECK(dot.find("3 [label=\"(1,1)\"]") != std::string::npos);
  CHECK(dot.find("0 -- 1 [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("0 -- 2 [label=\"b\"]") != std::string::npos);
  CHECK(is_complete_bipartite(ball.graph()) == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("group files") {
  GroupFile z6 = read_group_file(KGEODETIC_TEST_DATA "/cyclic6-oddgens.grp");
  CHECK(z6.spec.order() == std::uint64_t{6});
  CHECK(z6.gens.size() == 3);
  CHECK(z6.radius == std::size_t{2});
  CHECK(z6.gens.alphabet().label(2) == "a'");
  CHECK(z6.gens.inverse(0) == 2);
  CHECK(z6.gens.inverse(1) == 1);

  GroupFile plain = parse_group("group plain Z=1 factors=2,3\n");
  CHECK(plain.spec.kind() == GroupSpec::Kind::plain);
  CHECK(plain.gens.size() == 5);  // a a' b c c'
  CHECK_FALSE(plain.spec.order());

  GroupFile prod = parse_group("group product cyclic 0 cyclic 2\ngen x tuple 1 0\ngen X tuple -1 0\ngen t tuple 0 1\n");
  CHECK(prod.gens.size() == 3);
  CHECK(prod.spec.format(prod.gens.element(0)) == "(1,0)");

  GroupFile table = parse_group("group table 3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(table.spec.order() == std::uint64_t{3});
  CHECK(table.gens.size() == 2);
}

TEST_CASE("group file errors") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_group(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return SIZE_MAX;
  };
  CHECK(line_of("group cyclic 4\nfoo\n") == 2);
  CHECK(line_of("group cyclic 4\ngroup cyclic 4\n") == 2);
  CHECK(line_of("group moebius 4\n") == 1);
  CHECK(line_of("group table 2\n0 1\n1 1\n") == 1);
  CHECK(line_of("group table 2\n0 1\n") == 2);
  CHECK(line_of("group cyclic 4\nball R=x\n") == 2);
  CHECK(line_of("gen a pow 1\n") != SIZE_MAX);
  // Not inverse-closed: a without a^-1.
  CHECK_THROWS_WITH_AS(parse_group("group cyclic 5\ngen a pow 1\n"),
                       doctest::Contains("not inverse-closed"), ParseError);
  CHECK_THROWS_WITH_AS(parse_group("group cyclic 5\ngen a pow 0\n"),
                       doctest::Contains("identity"), ParseError);
}

TEST_CASE("element expressions") {
  GroupSpec p = GroupSpec::product({GroupSpec::cyclic(0), GroupSpec::plain(1, {2})});
  Element e = parse_element(p, "tuple 3 (syl 0 2 1 1)");
  CHECK(p.format(e) == "(3,a^2b)");
  CHECK(parse_element(p, "id") == p.identity());
  CHECK_THROWS_AS(parse_element(p, "pow 2"), ParseError);
  CHECK_THROWS_AS(parse_element(GroupSpec::cyclic(3), "pow 1 2"), ParseError);
}
