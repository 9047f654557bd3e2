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

// Concrete groups with decidable canonical forms and their Cayley-graph
// balls.
//
// Four spec variants are supported: cyclic groups (order 0 meaning Z),
// finite groups given by a multiplication table, direct products, and plain
// groups (free products of copies of Z and finite cyclic groups). Elements
// carry a canonical integer code, so equality of codes is equality in the
// group.

#ifndef KGEODETIC_GROUP_HPP_
#define KGEODETIC_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgeodetic/graph.hpp"
#include "kgeodetic/words.hpp"

namespace kgeodetic {

// Canonical element code. Layout depends on the owning spec:
//   cyclic   {residue}              (any integer for Z)
//   table    {index}
//   product  {len_0, code_0..., len_1, code_1..., ...}
//   plain    {factor_0, exp_0, factor_1, exp_1, ...}  reduced, alternating
struct Element {
  std::vector<std::int64_t> code;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

// One syllable f^e of a plain-group normal form.
struct Syllable {
  std::size_t factor;
  std::int64_t exponent;
};

class GroupSpec {
 public:
  enum class Kind { cyclic, table, product, plain };

  // n == 0 gives the infinite cyclic group.
  static GroupSpec cyclic(std::uint64_t n);
  // mult[i][j] = i * j. Identity and inverses are verified exhaustively;
  // associativity exhaustively up to 64 elements, otherwise on 1000 random
  // triples drawn from `seed`.
  static GroupSpec table(const std::vector<std::vector<std::uint32_t>>& mult,
                         std::uint64_t seed = 0x5eed);
  static GroupSpec product(std::vector<GroupSpec> factors);
  // Free product of `free_rank` copies of Z followed by Z_o for each o in
  // `orders` (each o >= 2). Factor i < free_rank is free.
  static GroupSpec plain(std::size_t free_rank, std::vector<std::uint64_t> orders);

  Kind kind() const noexcept;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, std::int64_t n) const;
  bool is_identity(const Element& a) const { return a == identity(); }

  // True iff `a` is a well-formed canonical element of this spec.
  bool contains(const Element& a) const;

  // Group order; nullopt for infinite groups.
  std::optional<std::uint64_t> order() const;
  // Element order; nullopt for infinite order.
  std::optional<std::uint64_t> element_order(const Element& a) const;

  // Element constructors. Inputs are reduced to canonical form; invalid
  // input throws InvalidArgument.
  Element cyclic_element(std::int64_t exponent) const;
  Element table_element(std::uint32_t index) const;
  Element product_element(const std::vector<Element>& components) const;
  Element plain_element(const std::vector<Syllable>& syllables) const;

  // Components of a product element.
  std::vector<Element> components(const Element& a) const;
  const std::vector<GroupSpec>& factors() const;

  std::size_t free_rank() const;
  const std::vector<std::uint64_t>& finite_orders() const;

  // Human-readable normal form: "3" for cyclic, "g2" for tables, "(2,1)"
  // for products and syllables such as "ab^-1c^2" for plain groups.
  std::string format(const Element& a) const;
  std::string describe() const;

  struct Impl;

 private:
  explicit GroupSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Generator {
  std::string label;
  Element element;
};

// Finite inverse-closed generating set. Letter i of alphabet() is gens()[i].
class GenSet {
 public:
  const std::vector<Generator>& gens() const noexcept { return gens_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Element& element(Letter l) const { return gens_.at(l).element; }
  Letter inverse(Letter l) const { return alphabet_.inverse(l); }

 private:
  friend GenSet validate_genset(const GroupSpec&, std::vector<Generator>);
  std::vector<Generator> gens_;
  Alphabet alphabet_;
};

// Computes the inverse pairing. Throws InvalidArgument when S contains the
// identity, a foreign element, a repeated label or element, or is not
// inverse-closed. Generation is not checked.
GenSet validate_genset(const GroupSpec& spec, std::vector<Generator> gens);

// The natural generating set: a, a' for a cyclic group or free factor (just a
// when a = a'); every nontrivial power of a finite factor of a plain group;
// all nonidentity elements of a table. Products take the union of their
// factors' sets, one letter run per factor.
GenSet standard_generators(const GroupSpec& spec);

// Left-to-right evaluation; λ evaluates to the identity.
Element word_to_element(const GroupSpec& spec, const GenSet& gens, const Word& w);

inline constexpr std::size_t kDefaultBallBudget = 1'000'000;

// Induced subgraph of Cay(G, S) on the elements of norm <= radius.
//
// Exactness: for vertices u, v with norm(u) + norm(v) <= radius every group
// geodesic between them lies inside the ball, so ball distances and geodesic
// counts for such pairs are those of the Cayley graph. When complete() the
// ball is the whole group and every pair is exact.
class CayleyBall {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const GroupSpec& spec() const noexcept { return spec_; }
  const GenSet& gens() const noexcept { return gens_; }
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const Element& element(Vertex v) const { return elements_.at(v); }
  std::optional<Vertex> vertex(const Element& e) const;
  Dist norm(Vertex v) const { return norm_.at(v); }
  const std::vector<Dist>& norms() const noexcept { return norm_; }

  // No generator leads outside the ball.
  bool complete() const noexcept { return complete_; }
  // Fraction of the group reached, for finite groups.
  std::optional<double> reached_fraction() const;

  bool trusted(Vertex u, Vertex v) const {
    return complete_ || norm_[u] + norm_[v] <= radius_;
  }
  PairFilter trusted_filter() const;

  // v * s when it lies in the ball.
  std::optional<Vertex> step(Vertex v, Letter s) const;
  // End vertex of the path spelled by w from `start`; nullopt if it leaves
  // the ball.
  std::optional<Vertex> walk(const Word& w, Vertex start = 0) const;
  // Vertex path spelled by w from `start`. Throws OutsideBall if it leaves.
  PathSeq path_of(const Word& w, Vertex start = 0) const;
  // Label sequence of a walk in the ball graph.
  Word word_of(const PathSeq& p) const;

 private:
  friend CayleyBall cayley_ball(const GroupSpec&, const GenSet&, std::size_t, std::size_t);

  CayleyBall(GroupSpec spec, GenSet gens) : spec_(std::move(spec)), gens_(std::move(gens)) {}

  GroupSpec spec_;
  GenSet gens_;
  std::size_t radius_ = 0;
  Graph graph_;
  std::vector<Element> elements_;
  std::vector<Dist> norm_;
  std::unordered_map<Element, Vertex, ElementHash> index_;
  // step_[v * |S| + s], kNoVertex when outside.
  std::vector<Vertex> step_;
  bool complete_ = false;
};

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Breadth-first closure of the identity under S up to word length `radius`.
// Vertex 0 is the identity and vertices are numbered in BFS order, letters
// tried in alphabet order. Throws BudgetExceeded past `budget` vertices.
CayleyBall cayley_ball(const GroupSpec& spec, const GenSet& gens, std::size_t radius,
                       std::size_t budget = kDefaultBallBudget);

// |g|_{G,S}. Throws OutsideBall when g is not in the ball.
Dist element_norm(const CayleyBall& ball, const Element& g);

}  // namespace kgeodetic

#endif  // KGEODETIC_GROUP_HPP_
