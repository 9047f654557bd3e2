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

// Geometry of geodesic pairs: fellow travelling, the m-apart / m-close
// counters, ladder-like structures and their explicit height bound, the
// path-shortening construction for k + 1 equal-length walks, and geodesic
// bigon / triangle enumeration.

#ifndef KGEODETIC_GEOMETRY_HPP_
#define KGEODETIC_GEOMETRY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kgeodetic/graph.hpp"
#include "kgeodetic/group.hpp"

namespace kgeodetic {

// BFS rows computed on first use. Not thread-safe; use one per thread.
class DistanceCache {
 public:
  explicit DistanceCache(const Graph& g) : g_(&g), rows_(g.vertex_count()) {}

  std::span<const Dist> row(Vertex source);
  Dist operator()(Vertex u, Vertex v) { return row(u)[v]; }
  const Graph& graph() const noexcept { return *g_; }

 private:
  const Graph* g_;
  std::vector<std::vector<Dist>> rows_;
};

// Both filters must admit a pair; an empty filter admits everything.
PairFilter both(PairFilter a, PairFilter b);

// The sequence p(0), ..., p(len), p(len), ... of length n + 1. Not a walk:
// only used for synchronised distance sampling.
std::vector<Vertex> pad(const PathSeq& p, std::size_t n);

// Smallest m such that the two walks m-fellow travel (shorter one padded).
// Throws Unreachable when sampled vertices lie in different components.
Dist fellow_travel_bound(const Graph& g, const PathSeq& a, const PathSeq& b);

struct PairStats {
  std::vector<Dist> distances;  // d_i = d(gamma1(i), gamma2(i))
  std::size_t m = 1;
  std::size_t apart = 0;  // a_m: indices with d_i == m
  std::size_t close = 0;  // c_m: indices with 1 <= d_i <= m
  bool asynchronously_disjoint = false;
  bool co_travelling = false;
  bool synchronously_co_travelling = false;
};

// Counters and flags for two walks of equal length. Throws InvalidArgument
// on a length mismatch or m == 0.
PairStats pair_stats(const Graph& g, const PathSeq& a, const PathSeq& b, std::size_t m);
PairStats pair_stats(DistanceCache& dist, const PathSeq& a, const PathSeq& b, std::size_t m);

// A(m, k) = m * k * prod_{i=2}^{2m+1} (ik + 1).
Count ladder_bound_A(std::uint64_t m, std::uint64_t k);
// m * A(m, k): an upper bound on how often asynchronously disjoint geodesics
// can be m-close in a k-geodetic graph. Not tight.
Count close_bound_C(std::uint64_t m, std::uint64_t k);

// Which vertex pairs a search visits. Pairs are taken in (distance, u, v)
// order with u < v unless listed explicitly.
struct PairScope {
  std::size_t max_pairs = 2000;
  std::size_t max_geodesics = 50;
  std::optional<std::size_t> max_length;
  std::optional<std::vector<std::pair<Vertex, Vertex>>> pairs;
  // Admits endpoint pairs and every synchronised pair whose distance is read.
  PairFilter filter;
  // Cap on geodesic pairs compared by find_ladders.
  std::size_t max_candidates = 2'000'000;
};

struct LadderReport {
  PathSeq gamma_x;
  PathSeq gamma_y;
  std::size_t width = 0;
  std::size_t height = 0;  // a_m
  std::size_t close = 0;   // c_m
  Count bound;             // A(m, k)
  bool within_bound = true;
};

struct LadderSearch {
  std::vector<LadderReport> ladders;
  std::size_t m = 1;
  std::uint64_t k = 1;
  Count bound;        // A(m, k)
  Count close_bound;  // C(m, k)
  std::size_t endpoint_pairs = 0;
  std::size_t geodesics = 0;
  std::size_t candidates = 0;
  std::size_t disjoint_pairs = 0;
  std::size_t skipped = 0;  // candidates touching an untrusted pair
  std::size_t max_height = 0;
  std::size_t max_close = 0;
  std::size_t height_violations = 0;
  std::size_t close_violations = 0;
  bool exhausted = false;  // some cap cut the search short
};

// Searches pairs of equal-length geodesics drawn from the scoped endpoint
// pairs (second path in both orientations) for asynchronously disjoint pairs.
// Every such pair with a_m >= 1 is reported as a ladder. Throws
// InvalidArgument if some scoped pair has more than k geodesics.
LadderSearch find_ladders(const Graph& g, std::size_t m, std::uint64_t k, const PairScope& scope);
// Same search restricted to trusted pairs of the ball.
LadderSearch find_ladders(const CayleyBall& ball, std::size_t m, std::uint64_t k,
                          PairScope scope);

// Given >= k + 1 distinct walks u -> v of common length n, at least one of
// them non-geodesic, splices a geodesic prefix into the first non-geodesic
// walk and returns a u -> v walk of length n - 1 or n - 2.
PathSeq shorten_paths(const Graph& g, std::span<const PathSeq> paths, std::uint64_t k);

struct Bigon {
  PathSeq alpha;
  PathSeq beta;
  bool degenerate = false;
  std::size_t length() const { return alpha.length(); }
};

struct BigonSearch {
  std::vector<Bigon> bigons;
  std::size_t non_degenerate = 0;
  // Non-degenerate bigons counted once per underlying edge set.
  std::size_t distinct_non_degenerate = 0;
  std::optional<std::size_t> max_non_degenerate_length;
  std::size_t skipped = 0;
  bool exhausted = false;
};

// All bigons formed by two distinct geodesics between a scoped pair.
BigonSearch enumerate_bigons(const Graph& g, const PairScope& scope);
BigonSearch enumerate_bigons(const CayleyBall& ball, PairScope scope);

struct Triangle {
  PathSeq alpha;  // x -> y
  PathSeq beta;   // y -> z
  PathSeq gamma;  // z -> x
  bool degenerate = false;
};

struct TriangleScope {
  std::size_t max_triples = 2000;
  std::size_t max_geodesics = 8;
  std::optional<std::size_t> max_length;
  std::optional<std::vector<std::array<Vertex, 3>>> triples;
  PairFilter filter;
  std::size_t max_triangles = 200'000;
};

struct TriangleSearch {
  std::vector<Triangle> triangles;
  std::size_t non_degenerate = 0;
  std::optional<std::size_t> max_non_degenerate_side;
  std::size_t skipped = 0;
  bool exhausted = false;
};

// Non-degenerate iff every side has length >= 1 and the vertex sets
// alpha[1..], beta[1..], gamma[1..] are pairwise disjoint.
bool triangle_degenerate(const PathSeq& alpha, const PathSeq& beta, const PathSeq& gamma);

// Triangles on scoped corner triples x < y < z (or the listed triples).
TriangleSearch enumerate_triangles(const Graph& g, const TriangleScope& scope);
TriangleSearch enumerate_triangles(const CayleyBall& ball, TriangleScope scope);

// Report lines, one record per finding.
void write_ladder_report(std::ostream& out, const LadderSearch& search);
void write_bigon_report(std::ostream& out, const BigonSearch& search);
void write_triangle_report(std::ostream& out, const TriangleSearch& search);

}  // namespace kgeodetic

#endif  // KGEODETIC_GEOMETRY_HPP_
