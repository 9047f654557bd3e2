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

// Finite simple undirected graphs and the geodesic machinery built on them:
// breadth-first geodesic DAGs, exact or saturating geodesic counts, ordered
// geodesic enumeration and k-geodeticity decisions.

#ifndef KGEODETIC_GRAPH_HPP_
#define KGEODETIC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kgeodetic {

using Vertex = std::uint32_t;
using Dist = std::uint32_t;
using Label = std::uint32_t;
using Count = boost::multiprecision::cpp_int;

inline constexpr Dist kUnreached = std::numeric_limits<Dist>::max();

// Unordered vertex pair used for edge lists.
using Edge = std::pair<Vertex, Vertex>;

// Directed, labelled half of an undirected edge.
struct Arc {
  Vertex from;
  Vertex to;
  Label label;
};

// Immutable simple undirected graph stored as sorted adjacency (CSR).
//
// Every undirected edge {u, v} appears as the arc u -> v and the arc v -> u.
// Labelled graphs (Cayley balls) carry one label per arc, so the two arcs of
// an edge may carry different labels (a generator and its inverse).
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbours(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  // Connectivity is computed once at construction.
  bool connected() const noexcept { return connected_; }

  bool has_vertex_labels() const noexcept { return !vertex_labels_.empty(); }
  const std::string& vertex_label(Vertex v) const { return vertex_labels_.at(v); }

  bool has_arc_labels() const noexcept { return !arc_labels_.empty(); }
  // Labels parallel to neighbours(v).
  std::span<const Label> arc_labels(Vertex v) const {
    return {arc_labels_.data() + offsets_[v], arc_labels_.data() + offsets_[v + 1]};
  }
  std::optional<Label> arc_label(Vertex from, Vertex to) const;

  bool valid(Vertex v) const noexcept { return v < vertex_count(); }

 private:
  friend Graph build_graph(std::span<const Edge>, std::size_t);
  friend Graph build_labelled_graph(std::size_t, std::span<const Arc>, std::vector<std::string>);
  friend Graph with_vertex_labels(const Graph&, std::vector<std::string>);

  void finish();

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Label> arc_labels_;
  std::vector<std::string> vertex_labels_;
  bool connected_ = true;
};

// Builds a graph from unordered pairs; duplicates are merged.
// Throws InvalidArgument on self-loops or out-of-range ids.
Graph build_graph(std::span<const Edge> edges, std::size_t vertex_count);

// Builds a labelled graph from directed arcs. Each arc u -> v must be matched
// by some arc v -> u; a repeated arc must repeat its label. `vertex_labels` is
// either empty or holds one string per vertex.
Graph build_labelled_graph(std::size_t vertex_count, std::span<const Arc> arcs,
                           std::vector<std::string> vertex_labels = {});

// Attaches display labels to an existing graph.
Graph with_vertex_labels(const Graph& g, std::vector<std::string> labels);

// A walk v_0 .. v_n. Repeated vertices are allowed.
struct PathSeq {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  Vertex operator[](std::size_t i) const { return vertices[i]; }

  friend auto operator<=>(const PathSeq&, const PathSeq&) = default;
};

PathSeq reversed(const PathSeq& p);

// True iff p is nonempty and consecutive vertices are adjacent in g.
bool is_walk(const Graph& g, const PathSeq& p);

// True iff p is a walk whose length equals the distance between its ends.
bool is_geodesic(const Graph& g, const PathSeq& p);

// Shortest-path DAG rooted at `source`.
//
// counts[v] is the number of geodesics source -> v. With a cap, counts are
// clamped to the cap, so counts[v] == *cap means "at least cap".
struct GeodesicDag {
  Vertex source = 0;
  std::vector<Dist> dist;
  std::vector<std::vector<Vertex>> preds;
  std::vector<Count> counts;
  std::optional<Count> cap;

  bool reached(Vertex v) const { return dist[v] != kUnreached; }
  bool saturated(Vertex v) const { return cap && counts[v] >= *cap; }
};

GeodesicDag bfs_dag(const Graph& g, Vertex source, std::optional<Count> cap = std::nullopt);

// Plain BFS distances without predecessor bookkeeping.
std::vector<Dist> bfs_distances(const Graph& g, Vertex source);

// Number of geodesics u -> v (1 when u == v). Throws Unreachable when v is
// not reachable from u.
Count count_geodesics(const Graph& g, Vertex u, Vertex v,
                      std::optional<Count> cap = std::nullopt);

struct GeodesicList {
  std::vector<PathSeq> paths;
  bool truncated = false;
};

// Geodesics u -> v in lexicographic vertex order, at most `limit` of them.
GeodesicList enumerate_geodesics(const Graph& g, Vertex u, Vertex v, std::size_t limit);

// Same, reusing a precomputed BFS distance row rooted at v.
GeodesicList enumerate_geodesics(const Graph& g, Vertex u, Vertex v, std::size_t limit,
                                 std::span<const Dist> dist_to_v);

// Admits a vertex pair into a pair-level search. Empty means "all pairs".
using PairFilter = std::function<bool(Vertex, Vertex)>;

struct GeodeticWitness {
  Count k;
  Vertex u = 0;
  Vertex v = 0;
  Dist distance = 0;
};

// Maximum geodesic count over admitted pairs u <= v. Among maximising pairs
// the witness is the first in (distance, u, v) order. With a cap, throws
// CountSaturated once any count reaches it.
GeodeticWitness min_geodetic_k(const Graph& g, const PairFilter& filter = {},
                               std::optional<Count> cap = std::nullopt);

struct KGeodeticCheck {
  bool holds = true;
  std::optional<std::pair<Vertex, Vertex>> counterexample;
};

// Counts saturate at k + 1. The counterexample is the first violating pair in
// (distance, u, v) order.
KGeodeticCheck is_k_geodetic(const Graph& g, std::uint64_t k, const PairFilter& filter = {});

// Part sizes (smaller first) when g is a complete bipartite graph with both
// parts nonempty.
std::optional<std::pair<std::size_t, std::size_t>> is_complete_bipartite(const Graph& g);

}  // namespace kgeodetic

#endif  // KGEODETIC_GRAPH_HPP_
