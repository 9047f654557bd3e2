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

// Words over finite alphabets and the combinatorics used on geodesic
// languages: factors, primitive roots and the two classical equations
// zx = yz and xy = yx.

#ifndef KGEODETIC_WORDS_HPP_
#define KGEODETIC_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgeodetic {

using Letter = std::uint32_t;

// A finite sequence of letter ids. Compared letterwise (lexicographic);
// use shortlex_less for length-first ordering.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word slice(std::size_t begin, std::size_t end) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

Word operator+(const Word& a, const Word& b);
Word power(const Word& w, std::size_t n);

// Shortlex: shorter first, then lexicographic.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

// Letter names plus an optional formal-inverse involution.
//
// Labels are rendered verbatim and parsed by longest match, so a label set
// {a, a'} reads "aa'a" as a, a', a.
class Alphabet {
 public:
  Alphabet() = default;
  // Without an involution.
  explicit Alphabet(std::vector<std::string> labels);
  // inverse[l] is the formal inverse of l; must be an involution.
  Alphabet(std::vector<std::string> labels, std::vector<Letter> inverse);

  // One letter per character c plus its inverse "c'" (c, c', d, d', ...).
  static Alphabet symbolic(std::string_view chars);
  // Letters named by single characters, no involution.
  static Alphabet plain(std::string_view chars);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Letter l) const { return labels_.at(l); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_involution() const noexcept { return !inverse_.empty(); }
  Letter inverse(Letter l) const;
  std::optional<Letter> find(std::string_view label) const;

  // Throws ParseError on text that does not tokenize into labels.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Letter> inverse_;
};

// Contiguous factor test; the empty word is a factor of every word.
bool is_factor(const Word& u, const Word& w);
std::set<Word> factors_of_length(const Word& w, std::size_t length);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

// w = root^exponent with root primitive. Throws InvalidArgument on λ.
PrimitiveRoot primitive_root(const Word& w);
bool is_primitive(const Word& w);

// Witness of zx = yz: x = st, y = ts, z = (ts)^q t.
struct LSDecomposition {
  Word s;
  Word t;
  std::size_t q = 0;
};

// Solves zx = yz for nonempty x. Returns the witness with maximal q, i.e.
// |t| = |z| mod |x|. Throws InvalidArgument if x is empty or the equation
// fails as words.
LSDecomposition solve_zx_eq_yz(const Word& x, const Word& y, const Word& z);

// The primitive u with x, y in u^+. Throws InvalidArgument unless x, y are
// nonempty and xy = yx.
Word commuting_common_root(const Word& x, const Word& y);

// Cancels adjacent letter/inverse pairs until none remain.
Word free_reduce(const Word& w, const Alphabet& alphabet);

Word formal_inverse(const Word& w, const Alphabet& alphabet);

}  // namespace kgeodetic

#endif  // KGEODETIC_WORDS_HPP_
