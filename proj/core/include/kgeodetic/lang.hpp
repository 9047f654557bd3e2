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

// Geodesic languages of Cayley balls.

#ifndef KGEODETIC_LANG_HPP_
#define KGEODETIC_LANG_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kgeodetic/graph.hpp"
#include "kgeodetic/group.hpp"
#include "kgeodetic/words.hpp"

namespace kgeodetic {

// Decided for |w| <= radius only; longer words throw InvalidArgument.
bool is_geodesic_word(const CayleyBall& ball, const Word& w);

struct ForbiddenSet {
  std::size_t e = 0;
  std::vector<Word> words;  // shortlex order
};

// Non-geodesic words of length <= e whose proper factors are all geodesic.
ForbiddenSet minimal_forbidden_factors(const CayleyBall& ball, std::size_t e);

void write_forbidden(std::ostream& out, const ForbiddenSet& f, const Alphabet& alphabet);
ForbiddenSet parse_forbidden(std::istream& in, const Alphabet& alphabet);

// Complete DFA for the words with no factor in F. Live states are numbered
// first; the dead state is last.
struct FactorAutomaton {
  std::size_t alphabet_size = 0;
  std::size_t states = 0;
  std::size_t start = 0;
  std::size_t dead = 0;
  std::vector<std::size_t> delta;  // delta[state * alphabet_size + letter]

  std::size_t next(std::size_t state, Letter l) const { return delta.at(state * alphabet_size + l); }
  std::size_t live_states() const noexcept { return states - 1; }
  bool accepts(const Word& w) const;
  Count count_accepted(std::size_t length) const;
};

FactorAutomaton build_factor_automaton(const ForbiddenSet& f, std::size_t alphabet_size);

void write_transition_table(std::ostream& out, const FactorAutomaton& a, const Alphabet& alphabet);
std::string automaton_to_dot(const FactorAutomaton& a, const Alphabet& alphabet,
                             const std::string& name = "A");

struct ExclusionCheck {
  bool holds = true;
  std::optional<Word> counterexample;
  bool counterexample_geodesic = false;
  std::size_t words_checked = 0;
};

ExclusionCheck check_locally_excluding(const CayleyBall& ball, const ForbiddenSet& f,
                                       std::size_t test_len);

struct Stabilization {
  std::size_t n_star = 0;
  std::vector<Word> alpha_set;
  std::vector<Word> gamma_set;
  Word t;
  Word s;
  std::size_t q = 0;
  std::size_t confirmations = 0;  // observed n > n_star reproduced
};

struct PowerLanguageReport {
  Word g_word;
  std::vector<std::vector<Word>> languages;  // L_0 .. L_nmax, lex order
  std::vector<std::size_t> lengths;
  bool truncated = false;
  std::optional<Stabilization> stabilization;
  bool multiplicity_growing = false;

  std::size_t max_multiplicity() const;
};

inline constexpr std::size_t kDefaultLanguageLimit = 100000;

// Throws InvalidArgument when g has finite order, OutsideBall when some
// power up to n_max is not in the ball.
PowerLanguageReport power_language(const CayleyBall& ball, const Word& g_word, std::size_t n_max,
                                   std::size_t limit = kDefaultLanguageLimit);

// {alpha (ts)^(q+c) t gamma}, sorted.
std::vector<Word> reconstruct(const Stabilization& st, std::size_t n);

void write_power_report(std::ostream& out, const PowerLanguageReport& r, const Alphabet& alphabet,
                        bool verbose = false);

// C_G(g) intersected with the ball, in vertex order.
std::vector<Element> centraliser_in_ball(const CayleyBall& ball, const Element& g);

}  // namespace kgeodetic

#endif  // KGEODETIC_LANG_HPP_
