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

#include "kgeodetic/error.hpp"
#include "kgeodetic/words.hpp"
#include "oracles.hpp"

using namespace kgeodetic;

namespace {

const Alphabet kAb = Alphabet::plain("ab");
const Alphabet kSym = Alphabet::symbolic("ab");

Word w(std::string_view s) { return kAb.parse(s); }

}  // namespace

TEST_CASE("word basics") {
  Word x = w("abba");
  CHECK(x.prefix(2) == w("ab"));
  CHECK(x.suffix(3) == w("bba"));
  CHECK(x.slice(1, 3) == w("bb"));
  CHECK(power(w("ab"), 3) == w("ababab"));
  CHECK(power(w("ab"), 0).empty());
  CHECK(shortlex_less(w("b"), w("aa")));
  CHECK(shortlex_less(w("ab"), w("ba")));
  CHECK_FALSE(shortlex_less(w("ab"), w("ab")));
}

TEST_CASE("alphabets parse and format") {
  CHECK(kSym.size() == 4);
  CHECK(kSym.label(1) == "a'");
  CHECK(kSym.inverse(0) == 1);
  Word u = kSym.parse("ab'a'");
  CHECK(u == Word{0, 3, 1});
  CHECK(kSym.format(u) == "ab'a'");
  CHECK(kSym.parse("1").empty());
  CHECK(kSym.format(Word{}) == "1");
  CHECK_THROWS_AS(kSym.parse("abc"), ParseError);
  CHECK_FALSE(kAb.has_involution());
  CHECK_THROWS_AS(Alphabet({"x", "y"}, {1, 1}), InvalidArgument);
}

TEST_CASE("factors") {
  CHECK(factors_of_length(w("abab"), 2) == std::set<Word>{w("ab"), w("ba")});
  CHECK(is_factor(Word{}, w("ab")));
  CHECK(is_factor(Word{}, Word{}));
  CHECK_FALSE(is_factor(w("aa"), w("aba")));
  CHECK(is_factor(w("ba"), w("aba")));
  CHECK(factors_of_length(w("ab"), 3).empty());
}

TEST_CASE("primitive roots") {
  auto r = primitive_root(w("abab"));
  CHECK(r.root == w("ab"));
  CHECK(r.exponent == 2);
  r = primitive_root(w("aaa"));
  CHECK(r.root == w("a"));
  CHECK(r.exponent == 3);
  CHECK(is_primitive(w("aab")));
  CHECK_FALSE(is_primitive(w("abaaba")));
  CHECK_THROWS_AS(primitive_root(Word{}), InvalidArgument);
}

TEST_CASE("property: primitive_root matches the divisor scan") {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const auto& x : oracle::all_words(2, len)) {
      auto r = primitive_root(x);
      auto [root, e] = oracle::divisor_scan_root(x);
      CHECK(r.root == root);
      CHECK(r.exponent == e);
      CHECK(power(r.root, r.exponent) == x);
    }
  }
}

TEST_CASE("solve_zx_eq_yz") {
  auto d = solve_zx_eq_yz(w("ab"), w("ba"), w("b"));
  CHECK(d.s == w("a"));
  CHECK(d.t == w("b"));
  CHECK(d.q == 0);
  d = solve_zx_eq_yz(w("ab"), w("ab"), w("ab"));
  CHECK(d.s == w("ab"));
  CHECK(d.t.empty());
  CHECK(d.q == 1);
  d = solve_zx_eq_yz(w("ab"), w("ba"), w("babab"));
  CHECK(d.s == w("a"));
  CHECK(d.t == w("b"));
  CHECK(d.q == 2);
  // x = y periodic: the witness with the largest q is returned.
  d = solve_zx_eq_yz(w("aa"), w("aa"), w("aaaaa"));
  CHECK(d.q == 2);
  CHECK(d.t == w("a"));
  CHECK(d.s == w("a"));
  CHECK_THROWS_AS(solve_zx_eq_yz(w("ab"), w("ab"), w("b")), InvalidArgument);
  CHECK_THROWS_AS(solve_zx_eq_yz(Word{}, Word{}, w("b")), InvalidArgument);
}

TEST_CASE("property: solve_zx_eq_yz reconstructs generated instances with maximal q") {
  std::mt19937_64 rng(8);
  auto random_word = [&](std::size_t max) {
    Word out;
    std::size_t n = rng() % (max + 1);
    for (std::size_t i = 0; i < n; ++i) out.letters.push_back(static_cast<Letter>(rng() % 2));
    return out;
  };
  for (int i = 0; i < 300; ++i) {
    Word s = random_word(4);
    Word t = random_word(4);
    if (s.empty() && t.empty()) continue;
    std::size_t q = rng() % 4;
    Word x = s + t, y = t + s, z = power(t + s, q) + t;
    auto d = solve_zx_eq_yz(x, y, z);
    CHECK(d.s + d.t == x);
    CHECK(d.t + d.s == y);
    CHECK(power(d.t + d.s, d.q) + d.t == z);
    CHECK(d.q == z.size() / x.size());
  }
}

TEST_CASE("commuting_common_root") {
  CHECK(commuting_common_root(w("abab"), w("ab")) == w("ab"));
  CHECK(commuting_common_root(w("aa"), w("aaa")) == w("a"));
  CHECK_THROWS_AS(commuting_common_root(w("ab"), w("ba")), InvalidArgument);
  CHECK_THROWS_AS(commuting_common_root(Word{}, w("a")), InvalidArgument);
}

TEST_CASE("property: commuting pairs match brute force") {
  std::vector<Word> words;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const auto& x : oracle::all_words(2, len)) words.push_back(x);
  }
  for (const auto& x : words) {
    for (const auto& y : words) {
      bool commute = x + y == y + x;
      auto brute = oracle::brute_common_root(x, y);
      CHECK(commute == brute.has_value());
      if (commute) {
        CHECK(commuting_common_root(x, y) == *brute);
        CHECK(commuting_common_root(y, x) == *brute);
      }
    }
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(kSym.parse("aa'"), kSym).empty());
  CHECK(free_reduce(kSym.parse("abb'a"), kSym) == kSym.parse("aa"));
  CHECK(free_reduce(kSym.parse("ab'ab"), kSym) == kSym.parse("ab'ab"));
  CHECK(free_reduce(kSym.parse("ab'ba'"), kSym).empty());
  CHECK(formal_inverse(kSym.parse("ab'"), kSym) == kSym.parse("ba'"));
  CHECK_THROWS_AS(free_reduce(w("ab"), kAb), InvalidArgument);
}

TEST_CASE("property: free_reduce is idempotent and never lengthens") {
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& x : oracle::all_words(4, len)) {
      Word r = free_reduce(x, kSym);
      CHECK(r.size() <= x.size());
      CHECK(free_reduce(r, kSym) == r);
      for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i + 1] != kSym.inverse(r[i]));
      CHECK(free_reduce(x + formal_inverse(x, kSym), kSym).empty());
    }
  }
}
