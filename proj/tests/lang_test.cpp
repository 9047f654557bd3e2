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

#include <random>
#include <sstream>

#include "kgeodetic/error.hpp"
#include "kgeodetic/lang.hpp"
#include "oracles.hpp"

using namespace kgeodetic;

namespace {

CayleyBall ball_of(const GroupSpec& spec, std::size_t r) { return cayley_ball(spec, standard_generators(spec), r); }

std::vector<Word> parse_all(const Alphabet& a, std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* s : ws) out.push_back(a.parse(s));
  return out;
}

}  // namespace

TEST_CASE("is_geodesic_word") {
  CayleyBall f2 = ball_of(GroupSpec::plain(2, {}), 4);
  const Alphabet& a = f2.gens().alphabet();
  CHECK(is_geodesic_word(f2, Word{}));
  CHECK_FALSE(is_geodesic_word(f2, a.parse("aa'")));
  CHECK_FALSE(is_geodesic_word(f2, a.parse("abb'")));
  CHECK(is_geodesic_word(f2, a.parse("ab'ab")));
  CHECK(is_geodesic_word(f2, a.parse("ab'a")));
  CHECK_THROWS_AS(is_geodesic_word(f2, a.parse("aaaaa")), InvalidArgument);

  CayleyBall z4 = ball_of(GroupSpec::cyclic(4), 4);
  const Alphabet& b = z4.gens().alphabet();
  CHECK(is_geodesic_word(z4, b.parse("aa")));
  CHECK_FALSE(is_geodesic_word(z4, b.parse("aaa")));
}

TEST_CASE("minimal forbidden factors of standard examples") {
  CayleyBall f2 = ball_of(GroupSpec::plain(2, {}), 8);
  const Alphabet& a = f2.gens().alphabet();
  CHECK(minimal_forbidden_factors(f2, 2).words == parse_all(a, {"aa'", "a'a", "bb'", "b'b"}));
  CHECK(minimal_forbidden_factors(f2, 3).words.size() == 4);

  CayleyBall d = ball_of(GroupSpec::plain(0, {2, 2}), 8);
  CHECK(minimal_forbidden_factors(d, 2).words == parse_all(d.gens().alphabet(), {"aa", "bb"}));

  CayleyBall z4 = ball_of(GroupSpec::cyclic(4), 4);
  CHECK(minimal_forbidden_factors(z4, 3).words == parse_all(z4.gens().alphabet(), {"aa'", "a'a", "aaa", "a'a'a'"}));
  CHECK(minimal_forbidden_factors(z4, 0).words.empty());
  CHECK_THROWS_AS(minimal_forbidden_factors(z4, 5), InvalidArgument);
}

TEST_CASE("property: forbidden factors are minimal non-geodesics") {
  CayleyBall g = ball_of(GroupSpec::plain(1, {3}), 5);
  ForbiddenSet f = minimal_forbidden_factors(g, 4);
  CHECK_FALSE(f.words.empty());
  for (const auto& w : f.words) {
    CHECK_FALSE(is_geodesic_word(g, w));
    CHECK(is_geodesic_word(g, w.prefix(w.size() - 1)));
    CHECK(is_geodesic_word(g, w.suffix(w.size() - 1)));
  }
}

TEST_CASE("forbidden set text round trip") {
  Alphabet a = Alphabet::symbolic("ab");
  ForbiddenSet f{2, parse_all(a, {"aa'", "a'a", "bb'"})};
  std::ostringstream out;
  write_forbidden(out, f, a);
  CHECK(out.str() == "forbidden e=2\naa'\na'a\nbb'\n");
  std::istringstream in(out.str());
  ForbiddenSet g = parse_forbidden(in, a);
  CHECK(g.e == 2);
  CHECK(g.words == f.words);
  std::istringstream bad("forbidden e=1\naa\n");
  CHECK_THROWS_AS(parse_forbidden(bad, a), ParseError);
  std::istringstream headless("aa\n");
  CHECK_THROWS_AS(parse_forbidden(headless, a), ParseError);
}

TEST_CASE("factor automaton examples") {
  Alphabet ab = Alphabet::plain("ab");
  FactorAutomaton a = build_factor_automaton({2, parse_all(ab, {"aa", "bb"})}, 2);
  CHECK(a.live_states() == 3);
  CHECK(a.states == 4);
  CHECK(a.count_accepted(5) == 2);
  CHECK(a.accepts(ab.parse("abab")));
  CHECK_FALSE(a.accepts(ab.parse("abba")));

  FactorAutomaton all = build_factor_automaton({0, {}}, 2);
  CHECK(all.live_states() == 1);
  CHECK(all.count_accepted(6) == 64);

  FactorAutomaton no_a = build_factor_automaton({1, parse_all(ab, {"a"})}, 2);
  CHECK(no_a.accepts(ab.parse("bbb")));
  CHECK_FALSE(no_a.accepts(ab.parse("bab")));
  CHECK(no_a.count_accepted(4) == 1);

  FactorAutomaton none = build_factor_automaton({0, {Word{}}}, 2);
  CHECK(none.start == none.dead);
  CHECK_FALSE(none.accepts(Word{}));

  CHECK_THROWS_AS(build_factor_automaton({1, {Word{5}}}, 2), InvalidArgument);
}

TEST_CASE("automaton exports") {
  Alphabet ab = Alphabet::plain("ab");
  FactorAutomaton a = build_factor_automaton({2, parse_all(ab, {"aa", "bb"})}, 2);
  std::ostringstream table;
  write_transition_table(table, a, ab);
  CHECK(table.str() ==
        "automaton states=4 live=3 start=0 dead=3\n"
        "0 a -> 1\n0 b -> 2\n1 a -> 3\n1 b -> 2\n2 a -> 1\n2 b -> 3\n3 a -> 3\n3 b -> 3\n");
  std::string dot = automaton_to_dot(a, ab);
  CHECK(dot.find("digraph \"A\" {") == 0);
  CHECK(dot.find("3 [label=\"dead\", shape=box]") != std::string::npos);
  CHECK(dot.find("3 -> 3 [label=\"a,b\"]") != std::string::npos);
}

TEST_CASE("property: automaton acceptance equals factor scanning") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t letters = 2 + rng() % 3;
    ForbiddenSet f{3, {}};
    std::size_t count = rng() % 4;
    for (std::size_t i = 0; i < count; ++i) {
      Word w;
      std::size_t len = 1 + rng() % 3;
      for (std::size_t j = 0; j < len; ++j) w.letters.push_back(static_cast<Letter>(rng() % letters));
      f.words.push_back(w);
    }
    FactorAutomaton a = build_factor_automaton(f, letters);
    for (std::size_t len = 0; len <= 6; ++len) {
      Count accepted = 0;
      for (const auto& w : oracle::all_words(letters, len)) {
        bool expected = !oracle::has_factor(w, f.words);
        CHECK(a.accepts(w) == expected);
        accepted += expected;
      }
      CHECK(a.count_accepted(len) == accepted);
    }
  }
}

TEST_CASE("check_locally_excluding") {
  CayleyBall f2 = ball_of(GroupSpec::plain(2, {}), 7);
  ExclusionCheck c = check_locally_excluding(f2, minimal_forbidden_factors(f2, 2), 6);
  CHECK(c.holds);
  CHECK(c.words_checked > 1);

  CayleyBall d = ball_of(GroupSpec::plain(0, {2, 2}), 8);
  const Alphabet& a = d.gens().alphabet();
  CHECK(check_locally_excluding(d, {2, parse_all(a, {"aa", "bb"})}, 8).holds);
  ExclusionCheck bad = check_locally_excluding(d, {2, parse_all(a, {"aa"})}, 2);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample);
  CHECK(*bad.counterexample == a.parse("bb"));
  CHECK_FALSE(bad.counterexample_geodesic);

  ExclusionCheck over = check_locally_excluding(d, {2, parse_all(a, {"aa", "bb", "ab"})}, 3);
  CHECK_FALSE(over.holds);
  CHECK(*over.counterexample == a.parse("ab"));
  CHECK(over.counterexample_geodesic);
  CHECK_THROWS_AS(check_locally_excluding(d, {2, {}}, 9), InvalidArgument);
}

TEST_CASE("Z x Z_2 is not locally excluding with short factors") {
  GroupSpec p = GroupSpec::product({GroupSpec::cyclic(0), GroupSpec::cyclic(2)});
  CayleyBall ball = ball_of(p, 6);
  ForbiddenSet f = minimal_forbidden_factors(ball, 3);
  ExclusionCheck c = check_locally_excluding(ball, f, 5);
  CHECK_FALSE(c.holds);
}

TEST_CASE("power languages") {
  CayleyBall z = ball_of(GroupSpec::cyclic(0), 8);
  const Alphabet& a = z.gens().alphabet();
  PowerLanguageReport r = power_language(z, a.parse("a"), 8);
  REQUIRE(r.stabilization);
  CHECK(r.stabilization->n_star == 0);
  CHECK(r.stabilization->t.empty());
  CHECK(r.stabilization->s == a.parse("a"));
  CHECK(r.stabilization->q == 0);
  CHECK(r.stabilization->confirmations == 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(r.languages[n] == std::vector<Word>{power(a.parse("a"), n)});
    CHECK(reconstruct(*r.stabilization, n) == r.languages[n]);
  }
  CHECK_FALSE(r.multiplicity_growing);
  CHECK_THROWS_AS(power_language(z, a.parse("a"), 9), OutsideBall);
  CHECK_THROWS_AS(power_language(z, a.parse("aa'"), 3), InvalidArgument);

  CayleyBall z6 = ball_of(GroupSpec::cyclic(6), 3);
  CHECK_THROWS_AS(power_language(z6, z6.gens().alphabet().parse("a"), 2), InvalidArgument);
}

TEST_CASE("power languages with a nontrivial prefix") {
  // In Z * Z_2 the powers of a b a' are a b^n a' collapsing; use g = ab.
  GroupSpec g = GroupSpec::plain(1, {2});
  CayleyBall ball = ball_of(g, 12);
  const Alphabet& a = ball.gens().alphabet();
  PowerLanguageReport r = power_language(ball, a.parse("ab"), 5);
  REQUIRE(r.stabilization);
  for (std::size_t n = r.stabilization->n_star; n <= 5; ++n) CHECK(reconstruct(*r.stabilization, n) == r.languages[n]);

  // Conjugate of a: b a^n b.
  PowerLanguageReport c = power_language(ball, a.parse("bab"), 8);
  REQUIRE(c.stabilization);
  CHECK(c.stabilization->alpha_set == std::vector<Word>{a.parse("b")});
  CHECK(c.stabilization->gamma_set == std::vector<Word>{a.parse("b")});
  for (std::size_t n = c.stabilization->n_star; n <= 8; ++n) CHECK(reconstruct(*c.stabilization, n) == c.languages[n]);
}

TEST_CASE("Z x Z_2 power multiplicities grow") {
  GroupSpec p = GroupSpec::product({GroupSpec::cyclic(0), GroupSpec::cyclic(2)});
  CayleyBall ball = ball_of(p, 14);
  const Alphabet& a = ball.gens().alphabet();
  PowerLanguageReport r = power_language(ball, a.parse("ab"), 6);
  for (std::size_t n = 1; n <= 6; n += 2) CHECK(r.languages[n].size() == n + 1);
  CHECK(r.multiplicity_growing);
  CHECK_FALSE(r.stabilization);
  std::ostringstream out;
  write_power_report(out, r, a);
  CHECK(out.str().find("not stabilized within n_max=6") != std::string::npos);
}

TEST_CASE("centralisers in balls") {
  GroupSpec f2 = GroupSpec::plain(2, {});
  CayleyBall ball = ball_of(f2, 4);
  Element a = f2.plain_element({{0, 1}});
  auto c = centraliser_in_ball(ball, a);
  CHECK(c.size() == 9);
  for (const auto& h : c) {
    auto syl = f2.format(h);
    CHECK(syl.find('b') == std::string::npos);
  }
  CHECK(centraliser_in_ball(ball, f2.identity()).size() == ball.size());
  CHECK_THROWS_AS(centraliser_in_ball(ball, f2.plain_element({{0, 5}})), OutsideBall);

  GroupSpec p = GroupSpec::product({GroupSpec::cyclic(0), GroupSpec::cyclic(2)});
  CayleyBall pb = ball_of(p, 4);
  Element g = p.product_element({p.factors()[0].cyclic_element(1), p.factors()[1].identity()});
  CHECK(centraliser_in_ball(pb, g).size() == pb.size());
}
