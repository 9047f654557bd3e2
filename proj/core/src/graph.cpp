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

#include "kgeodetic/graph.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "kgeodetic/error.hpp"

namespace kgeodetic {

namespace {

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Label> Graph::arc_label(Vertex from, Vertex to) const {
  if (!has_arc_labels()) {
    return std::nullopt;
  }
  auto nb = neighbours(from);
  auto it = std::lower_bound(nb.begin(), nb.end(), to);
  if (it == nb.end() || *it != to) {
    return std::nullopt;
  }
  return arc_labels(from)[static_cast<std::size_t>(it - nb.begin())];
}

void Graph::finish() {
  std::size_t n = vertex_count();
  if (n == 0) {
    connected_ = true;
    return;
  }
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbours(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  connected_ = reached == n;
}

Graph build_graph(std::span<const Edge> edges, std::size_t vertex_count) {
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge " + pair_str(u, v) + " references a vertex outside [0, " +
                            std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.reserve(vertex_count + 1);
  g.offsets_.push_back(0);
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.targets_.insert(g.targets_.end(), row.begin(), row.end());
    g.offsets_.push_back(g.targets_.size());
  }
  g.finish();
  return g;
}

Graph build_labelled_graph(std::size_t vertex_count, std::span<const Arc> arcs,
                           std::vector<std::string> vertex_labels) {
  if (!vertex_labels.empty() && vertex_labels.size() != vertex_count) {
    throw InvalidArgument("vertex label count does not match vertex count");
  }
  std::vector<std::vector<std::pair<Vertex, Label>>> adj(vertex_count);
  for (const Arc& a : arcs) {
    if (a.from >= vertex_count || a.to >= vertex_count) {
      throw InvalidArgument("arc " + pair_str(a.from, a.to) + " references a vertex out of range");
    }
    if (a.from == a.to) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(a.from));
    }
    adj[a.from].emplace_back(a.to, a.label);
  }
  Graph g;
  g.offsets_.reserve(vertex_count + 1);
  g.offsets_.push_back(0);
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    auto last = std::unique(row.begin(), row.end());
    row.erase(last, row.end());
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].first == row[i - 1].first) {
        throw InvalidArgument("arc " + pair_str(row[i].first, row[i].first) +
                              " carries two different labels");
      }
    }
    for (auto [to, label] : row) {
      g.targets_.push_back(to);
      g.arc_labels_.push_back(label);
    }
    g.offsets_.push_back(g.targets_.size());
  }
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (!g.adjacent(v, u)) {
        throw InvalidArgument("arc " + pair_str(u, v) + " has no reverse arc");
      }
    }
  }
  g.vertex_labels_ = std::move(vertex_labels);
  g.finish();
  return g;
}

Graph with_vertex_labels(const Graph& g, std::vector<std::string> labels) {
  if (labels.size() != g.vertex_count()) {
    throw InvalidArgument("vertex label count does not match vertex count");
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count() * 2);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nb = g.neighbours(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      arcs.push_back({u, nb[i], g.has_arc_labels() ? g.arc_labels(u)[i] : 0});
    }
  }
  Graph out = build_labelled_graph(g.vertex_count(), arcs, std::move(labels));
  if (!g.has_arc_labels()) {
    // Arc labels were placeholders; drop them again.
    out.arc_labels_.clear();
  }
  return out;
}

PathSeq reversed(const PathSeq& p) {
  return PathSeq{{p.vertices.rbegin(), p.vertices.rend()}};
}

bool is_walk(const Graph& g, const PathSeq& p) {
  if (p.vertices.empty()) {
    return false;
  }
  for (Vertex v : p.vertices) {
    if (!g.valid(v)) {
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) {
      return false;
    }
  }
  return true;
}

bool is_geodesic(const Graph& g, const PathSeq& p) {
  if (!is_walk(g, p)) {
    return false;
  }
  return bfs_distances(g, p.front())[p.back()] == p.length();
}

std::vector<Dist> bfs_distances(const Graph& g, Vertex source) {
  if (!g.valid(source)) {
    throw InvalidArgument("source vertex " + std::to_string(source) + " out of range");
  }
  std::vector<Dist> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

GeodesicDag bfs_dag(const Graph& g, Vertex source, std::optional<Count> cap) {
  if (!g.valid(source)) {
    throw InvalidArgument("source vertex " + std::to_string(source) + " out of range");
  }
  if (cap && *cap < 1) {
    throw InvalidArgument("count cap must be at least 1");
  }
  std::size_t n = g.vertex_count();
  GeodesicDag dag;
  dag.source = source;
  dag.dist.assign(n, kUnreached);
  dag.preds.assign(n, {});
  dag.counts.assign(n, Count(0));
  dag.cap = cap;

  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(source);
  dag.dist[source] = 0;
  dag.counts[source] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      if (dag.dist[w] == kUnreached) {
        dag.dist[w] = dag.dist[v] + 1;
        queue.push_back(w);
      }
      if (dag.dist[w] == dag.dist[v] + 1) {
        dag.preds[w].push_back(v);
        dag.counts[w] += dag.counts[v];
        if (cap && dag.counts[w] > *cap) {
          dag.counts[w] = *cap;
        }
      }
    }
  }
  // BFS visits v in distance order, so counts[v] is final before any w with
  // dist[w] = dist[v] + 1 reads it.
  for (auto& p : dag.preds) {
    std::sort(p.begin(), p.end());
  }
  return dag;
}

Count count_geodesics(const Graph& g, Vertex u, Vertex v, std::optional<Count> cap) {
  if (!g.valid(v)) {
    throw InvalidArgument("target vertex " + std::to_string(v) + " out of range");
  }
  GeodesicDag dag = bfs_dag(g, u, cap);
  if (!dag.reached(v)) {
    throw Unreachable("vertex " + std::to_string(v) + " is unreachable from " + std::to_string(u));
  }
  return dag.counts[v];
}

GeodesicList enumerate_geodesics(const Graph& g, Vertex u, Vertex v, std::size_t limit,
                                 std::span<const Dist> dist_to_v) {
  if (limit == 0) {
    throw InvalidArgument("geodesic enumeration limit must be at least 1");
  }
  if (!g.valid(u) || !g.valid(v)) {
    throw InvalidArgument("vertex out of range in geodesic enumeration");
  }
  if (dist_to_v[u] == kUnreached) {
    throw Unreachable("vertex " + std::to_string(v) + " is unreachable from " + std::to_string(u));
  }
  GeodesicList out;
  std::vector<Vertex> path{u};
  // Each frame holds the next neighbour index to try at that depth.
  std::vector<std::size_t> next{0};
  while (!next.empty()) {
    Vertex cur = path.back();
    if (cur == v) {
      if (out.paths.size() == limit) {
        out.truncated = true;
        break;
      }
      out.paths.push_back(PathSeq{path});
      next.pop_back();
      path.pop_back();
      continue;
    }
    auto nb = g.neighbours(cur);
    std::size_t& i = next.back();
    while (i < nb.size() && dist_to_v[nb[i]] + 1 != dist_to_v[cur]) {
      ++i;
    }
    if (i == nb.size()) {
      next.pop_back();
      path.pop_back();
      continue;
    }
    path.push_back(nb[i]);
    ++i;
    next.push_back(0);
  }
  return out;
}

GeodesicList enumerate_geodesics(const Graph& g, Vertex u, Vertex v, std::size_t limit) {
  if (!g.valid(v)) {
    throw InvalidArgument("vertex out of range in geodesic enumeration");
  }
  auto dist = bfs_distances(g, v);
  return enumerate_geodesics(g, u, v, limit, dist);
}

namespace {

// Visits admitted pairs u <= v with their capped geodesic counts.
template <class Visit>
void for_each_pair_count(const Graph& g, const PairFilter& filter, std::optional<Count> cap,
                         Visit&& visit) {
  if (!g.connected()) {
    throw InvalidArgument("graph is not connected");
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    GeodesicDag dag = bfs_dag(g, u, cap);
    for (Vertex v = u; v < g.vertex_count(); ++v) {
      if (filter && !filter(u, v)) {
        continue;
      }
      visit(u, v, dag.dist[v], dag.counts[v]);
    }
  }
}

}  // namespace

GeodeticWitness min_geodetic_k(const Graph& g, const PairFilter& filter, std::optional<Count> cap) {
  if (g.vertex_count() == 0) {
    throw InvalidArgument("min_geodetic_k needs a nonempty graph");
  }
  std::optional<GeodeticWitness> best;
  for_each_pair_count(g, filter, cap, [&](Vertex u, Vertex v, Dist d, const Count& c) {
    if (cap && c >= *cap) {
      throw CountSaturated("k at least " + cap->str() + " (pair " + pair_str(u, v) + ")");
    }
    if (!best || c > best->k ||
        (c == best->k && std::tie(d, u, v) < std::tie(best->distance, best->u, best->v))) {
      best = GeodeticWitness{c, u, v, d};
    }
  });
  if (!best) {
    throw InvalidArgument("pair filter admits no vertex pair");
  }
  return *best;
}

KGeodeticCheck is_k_geodetic(const Graph& g, std::uint64_t k, const PairFilter& filter) {
  if (k == 0) {
    throw InvalidArgument("k must be at least 1");
  }
  KGeodeticCheck out;
  std::optional<std::tuple<Dist, Vertex, Vertex>> first;
  Count limit = Count(k) + 1;
  for_each_pair_count(g, filter, limit, [&](Vertex u, Vertex v, Dist d, const Count& c) {
    if (c > k && (!first || std::tie(d, u, v) < *first)) {
      first = std::tuple{d, u, v};
    }
  });
  if (first) {
    out.holds = false;
    out.counterexample = std::pair{std::get<1>(*first), std::get<2>(*first)};
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> is_complete_bipartite(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n < 2 || !g.connected()) {
    return std::nullopt;
  }
  std::vector<int> colour(n, -1);
  std::vector<Vertex> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      if (colour[w] == -1) {
        colour[w] = 1 - colour[v];
        queue.push_back(w);
      } else if (colour[w] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  std::size_t a = static_cast<std::size_t>(std::count(colour.begin(), colour.end(), 0));
  std::size_t b = n - a;
  // Bipartite with a*b edges is complete bipartite.
  if (g.edge_count() != a * b) {
    return std::nullopt;
  }
  return std::pair{std::min(a, b), std::max(a, b)};
}

}  // namespace kgeodetic
