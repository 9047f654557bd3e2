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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "kgeodetic/dot.hpp"
#include "kgeodetic/error.hpp"
#include "kgeodetic/geometry.hpp"
#include "kgeodetic/graph.hpp"
#include "kgeodetic/graph_io.hpp"
#include "kgeodetic/group.hpp"
#include "kgeodetic/group_io.hpp"
#include "kgeodetic/lang.hpp"
#include "kgeodetic/words.hpp"

namespace kgeodetic::cli {

namespace {

struct Options {
  std::string group;
  std::string graph;
  std::optional<std::size_t> radius;
  std::uint64_t k = 1;
  std::size_t m = 1;
  std::size_t e = 2;
  std::size_t nmax = 8;
  std::size_t scope_pairs = 2000;
  std::size_t scope_geodesics = 50;
  std::uint64_t seed = 0x5eed;
  std::string expect;
  std::string dot;
  std::string word;
  std::string element;
  std::string forbidden;
  std::optional<std::size_t> check_len;
  bool verbose = false;
  std::vector<std::string> rest;
};

std::size_t ball_budget() {
  const char* env = std::getenv("GEODETIC_BALL_BUDGET");
  if (env == nullptr || *env == '\0') {
    return kDefaultBallBudget;
  }
  std::string s(env);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != s.size() || v == 0) {
    throw InvalidArgument("GEODETIC_BALL_BUDGET must be a positive integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

std::optional<bool> parse_expect(const std::string& s) {
  if (s.empty()) {
    return std::nullopt;
  }
  if (s == "true" || s == "1" || s == "yes") {
    return true;
  }
  if (s == "false" || s == "0" || s == "no") {
    return false;
  }
  throw InvalidArgument("--expect takes true or false, got '" + s + "'");
}

// Either a Cayley ball or a plain graph, as selected by --group / --graph.
struct Host {
  std::optional<CayleyBall> ball;
  std::optional<Graph> graph;

  const Graph& g() const { return ball ? ball->graph() : *graph; }
  PairFilter filter() const { return ball ? ball->trusted_filter() : PairFilter{}; }
};

CayleyBall load_ball(const Options& o) {
  if (o.group.empty()) {
    throw InvalidArgument("this command needs --group FILE");
  }
  GroupFile file = read_group_file(o.group, o.seed);
  std::optional<std::size_t> r = o.radius ? o.radius : file.radius;
  if (!r) {
    throw InvalidArgument("no radius: pass --radius or add 'ball R=<r>' to " + o.group);
  }
  return cayley_ball(file.spec, file.gens, *r, ball_budget());
}

Host load_host(const Options& o) {
  if (o.group.empty() == o.graph.empty()) {
    throw InvalidArgument("pass exactly one of --group FILE and --graph FILE");
  }
  Host h;
  if (!o.graph.empty()) {
    h.graph = read_graph_file(o.graph);
  } else {
    h.ball = load_ball(o);
  }
  return h;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) {
    throw InvalidArgument("cannot write " + path);
  }
  f << text;
}

std::string host_dot(const Host& h) {
  DotOptions opts;
  if (h.ball) {
    opts.name = "ball";
    opts.label_names = h.ball->gens().alphabet().labels();
  }
  return to_dot(h.g(), opts);
}

std::string vertex_name(const Host& h, Vertex v) {
  if (h.ball) {
    return h.ball->spec().format(h.ball->element(v));
  }
  return std::to_string(v);
}

int cmd_ball(const Options& o, std::ostream& out) {
  CayleyBall ball = load_ball(o);
  out << "group: " << ball.spec().describe() << '\n';
  out << "generators:";
  for (const auto& gen : ball.gens().gens()) {
    out << ' ' << gen.label << '=' << ball.spec().format(gen.element);
  }
  out << '\n';
  out << "radius: " << ball.radius() << '\n';
  out << "vertices: " << ball.size() << '\n';
  out << "edges: " << ball.graph().edge_count() << '\n';
  out << "complete: " << (ball.complete() ? "true" : "false") << '\n';
  std::map<Dist, std::size_t> spheres;
  for (Dist d : ball.norms()) {
    ++spheres[d];
  }
  for (const auto& [d, c] : spheres) {
    out << "sphere " << d << ": " << c << '\n';
  }
  if (o.verbose) {
    for (Vertex v = 0; v < ball.size(); ++v) {
      out << "vertex " << v << " element=" << ball.spec().format(ball.element(v))
          << " norm=" << ball.norm(v) << '\n';
    }
  }
  if (!o.dot.empty()) {
    Host h;
    h.ball = std::move(ball);
    write_file(o.dot, host_dot(h));
  }
  return kExitOk;
}

int cmd_check_k(const Options& o, std::ostream& out) {
  auto expect = parse_expect(o.expect);
  if (o.k == 0) {
    throw InvalidArgument("--k must be at least 1");
  }
  Host h = load_host(o);
  KGeodeticCheck check = is_k_geodetic(h.g(), o.k, h.filter());
  GeodeticWitness w = min_geodetic_k(h.g(), h.filter());
  out << "k-geodetic: " << (check.holds ? "true" : "false") << " (min k = " << w.k << ")\n";
  if (check.counterexample) {
    auto [u, v] = *check.counterexample;
    out << "counterexample: " << vertex_name(h, u) << " " << vertex_name(h, v) << '\n';
  }
  if (o.verbose) {
    out << "witness: " << vertex_name(h, w.u) << " " << vertex_name(h, w.v)
        << " distance=" << w.distance << '\n';
    if (h.ball && !h.ball->complete()) {
      out << "note: only pairs with |u| + |v| <= " << h.ball->radius() << " were examined\n";
    }
  }
  if (expect && *expect != check.holds) {
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_min_k(const Options& o, std::ostream& out) {
  Host h = load_host(o);
  GeodeticWitness w = min_geodetic_k(h.g(), h.filter());
  out << "min k = " << w.k << '\n';
  out << "witness: " << vertex_name(h, w.u) << " " << vertex_name(h, w.v)
      << " distance=" << w.distance << '\n';
  if (auto parts = is_complete_bipartite(h.g()); parts && o.verbose) {
    out << "complete bipartite: K_{" << parts->first << "," << parts->second << "}\n";
  }
  return kExitOk;
}

PairScope pair_scope(const Options& o, const Host& h) {
  PairScope s;
  s.max_pairs = o.scope_pairs;
  s.max_geodesics = o.scope_geodesics;
  s.filter = h.filter();
  return s;
}

int cmd_ladders(const Options& o, std::ostream& out) {
  Host h = load_host(o);
  LadderSearch s = find_ladders(h.g(), o.m, o.k, pair_scope(o, h));
  write_ladder_report(out, s);
  return s.height_violations + s.close_violations == 0 ? kExitOk : kExitNegative;
}

int cmd_bigons(const Options& o, std::ostream& out) {
  Host h = load_host(o);
  write_bigon_report(out, enumerate_bigons(h.g(), pair_scope(o, h)));
  return kExitOk;
}

int cmd_triangles(const Options& o, std::ostream& out) {
  Host h = load_host(o);
  TriangleScope s;
  s.max_triples = o.scope_pairs;
  s.max_geodesics = o.scope_geodesics;
  s.filter = h.filter();
  write_triangle_report(out, enumerate_triangles(h.g(), s));
  return kExitOk;
}

ForbiddenSet load_forbidden(const Options& o, const CayleyBall& ball) {
  if (o.forbidden.empty()) {
    return minimal_forbidden_factors(ball, o.e);
  }
  std::ifstream f(o.forbidden);
  if (!f) {
    throw InvalidArgument("cannot open " + o.forbidden);
  }
  return parse_forbidden(f, ball.gens().alphabet());
}

int cmd_forbidden(const Options& o, std::ostream& out) {
  CayleyBall ball = load_ball(o);
  ForbiddenSet f = minimal_forbidden_factors(ball, o.e);
  write_forbidden(out, f, ball.gens().alphabet());
  if (o.check_len) {
    ExclusionCheck c = check_locally_excluding(ball, f, *o.check_len);
    out << "locally excluding up to length " << *o.check_len << ": "
        << (c.holds ? "true" : "false") << '\n';
    if (c.counterexample) {
      out << "counterexample: " << ball.gens().alphabet().format(*c.counterexample) << " ("
          << (c.counterexample_geodesic ? "geodesic with a forbidden factor"
                                        : "non-geodesic without a forbidden factor")
          << ")\n";
    }
    return c.holds ? kExitOk : kExitNegative;
  }
  return kExitOk;
}

int cmd_automaton(const Options& o, std::ostream& out) {
  CayleyBall ball = load_ball(o);
  const Alphabet& alphabet = ball.gens().alphabet();
  ForbiddenSet f = load_forbidden(o, ball);
  FactorAutomaton a = build_factor_automaton(f, alphabet.size());
  write_transition_table(out, a, alphabet);
  if (!o.dot.empty()) {
    write_file(o.dot, automaton_to_dot(a, alphabet));
  }
  return kExitOk;
}

int cmd_powers(const Options& o, std::ostream& out) {
  if (o.word.empty()) {
    throw InvalidArgument("powers needs --word W");
  }
  CayleyBall ball = load_ball(o);
  const Alphabet& alphabet = ball.gens().alphabet();
  PowerLanguageReport r = power_language(ball, alphabet.parse(o.word), o.nmax);
  write_power_report(out, r, alphabet, o.verbose);
  return kExitOk;
}

int cmd_centraliser(const Options& o, std::ostream& out) {
  if (o.element.empty()) {
    throw InvalidArgument("centraliser needs --element W");
  }
  CayleyBall ball = load_ball(o);
  Element g = word_to_element(ball.spec(), ball.gens(), ball.gens().alphabet().parse(o.element));
  std::vector<Element> c = centraliser_in_ball(ball, g);
  out << "centraliser of " << ball.spec().format(g) << " in ball of radius " << ball.radius()
      << ": " << c.size() << " of " << ball.size() << " elements\n";
  for (const auto& h : c) {
    out << ball.spec().format(h) << '\n';
  }
  return kExitOk;
}

int cmd_word_tool(const Options& o, std::ostream& out) {
  const auto& a = o.rest;
  if (a.empty()) {
    throw InvalidArgument("word-tool needs an operation: primitive-root, factors, solve, commute, reduce");
  }
  Alphabet alphabet = Alphabet::symbolic("abcdefghijklmnopqrstuvwxyz");
  auto need = [&](std::size_t n) {
    if (a.size() != n + 1) {
      throw InvalidArgument("word-tool " + a[0] + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  const std::string& op = a[0];
  if (op == "primitive-root") {
    need(1);
    PrimitiveRoot r = primitive_root(alphabet.parse(a[1]));
    out << alphabet.format(r.root) << " ^ " << r.exponent << '\n';
  } else if (op == "factors") {
    need(2);
    std::size_t len = 0;
    try {
      len = std::stoul(a[2]);
    } catch (const std::logic_error&) {
      throw InvalidArgument("factor length must be a nonnegative integer");
    }
    for (const auto& f : factors_of_length(alphabet.parse(a[1]), len)) {
      out << alphabet.format(f) << '\n';
    }
  } else if (op == "solve") {
    need(3);
    LSDecomposition d = solve_zx_eq_yz(alphabet.parse(a[1]), alphabet.parse(a[2]), alphabet.parse(a[3]));
    out << "s = " << alphabet.format(d.s) << '\n';
    out << "t = " << alphabet.format(d.t) << '\n';
    out << "q = " << d.q << '\n';
  } else if (op == "commute") {
    need(2);
    out << alphabet.format(commuting_common_root(alphabet.parse(a[1]), alphabet.parse(a[2]))) << '\n';
  } else if (op == "reduce") {
    need(1);
    out << alphabet.format(free_reduce(alphabet.parse(a[1]), alphabet)) << '\n';
  } else {
    throw InvalidArgument("unknown word-tool operation '" + op + "'");
  }
  return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  Host h = load_host(o);
  std::string text = host_dot(h);
  if (o.dot.empty()) {
    out << text;
  } else {
    write_file(o.dot, text);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic counting and geodesic languages of graphs and Cayley balls", "kgeodetic"};
  app.require_subcommand(1);
  Options o;

  auto host = [&](CLI::App* sub, bool graph_allowed) {
    sub->add_option("--group", o.group, "group file");
    if (graph_allowed) {
      sub->add_option("--graph", o.graph, "graph file");
    }
    sub->add_option("--radius", o.radius, "ball radius");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_flag("--verbose", o.verbose, "extra prose");
  };
  auto scope = [&](CLI::App* sub) {
    sub->add_option("--scope-pairs", o.scope_pairs, "maximum endpoint pairs or triples");
    sub->add_option("--scope-geodesics", o.scope_geodesics, "maximum geodesics per pair");
  };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = fn;
    return sub;
  };

  auto* ball = add("ball", "build a Cayley ball and summarize it", cmd_ball);
  host(ball, false);
  ball->add_option("--dot", o.dot, "write the ball as DOT");

  auto* check = add("check-k", "decide k-geodeticity", cmd_check_k);
  host(check, true);
  check->add_option("--k", o.k, "k")->required();
  check->add_option("--expect", o.expect, "expected answer; exit 1 on mismatch");

  auto* mink = add("min-k", "smallest k for which the graph is k-geodetic", cmd_min_k);
  host(mink, true);

  auto* ladders = add("ladders", "search for ladder-like structures", cmd_ladders);
  host(ladders, true);
  scope(ladders);
  ladders->add_option("--m", o.m, "width m");
  ladders->add_option("--k", o.k, "k for the bounds");

  auto* bigons = add("bigons", "enumerate geodesic bigons", cmd_bigons);
  host(bigons, true);
  scope(bigons);

  auto* triangles = add("triangles", "enumerate geodesic triangles", cmd_triangles);
  host(triangles, true);
  scope(triangles);

  auto* forbidden = add("forbidden", "minimal forbidden factors of the geodesic language", cmd_forbidden);
  host(forbidden, false);
  forbidden->add_option("--e", o.e, "maximum factor length");
  forbidden->add_option("--check-len", o.check_len, "also check local exclusion up to this length");

  auto* automaton = add("automaton", "factor-excluding automaton", cmd_automaton);
  host(automaton, false);
  automaton->add_option("--e", o.e, "maximum factor length");
  automaton->add_option("--forbidden", o.forbidden, "read the forbidden set from FILE");
  automaton->add_option("--dot", o.dot, "write the automaton as DOT");

  auto* powers = add("powers", "geodesic languages of powers of an element", cmd_powers);
  host(powers, false);
  powers->add_option("--word", o.word, "word for g")->required();
  powers->add_option("--nmax", o.nmax, "largest power");

  auto* cent = add("centraliser", "centraliser of an element within the ball", cmd_centraliser);
  host(cent, false);
  cent->add_option("--element", o.element, "word for g")->required();

  auto* words = add("word-tool", "combinatorics on words", cmd_word_tool);
  words->add_option("args", o.rest, "operation and words")->required();

  auto* dot = add("export-dot", "print a graph or ball as DOT", cmd_export_dot);
  host(dot, true);
  dot->add_option("--dot", o.dot, "write to FILE instead of standard output");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  for (const auto& [sub, fn] : handlers) {
    if (!sub->parsed()) {
      continue;
    }
    try {
      return fn(o, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return kExitInput;
}

}  // namespace kgeodetic::cli
