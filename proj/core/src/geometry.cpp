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

#include "kgeodetic/geometry.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>

#include "kgeodetic/error.hpp"

namespace kgeodetic {

std::span<const Dist> DistanceCache::row(Vertex source) {
  auto& r = rows_.at(source);
  if (r.empty()) {
    r = bfs_distances(*g_, source);
  }
  return r;
}

PairFilter both(PairFilter a, PairFilter b) {
  if (!a) {
    return b;
  }
  if (!b) {
    return a;
  }
  return [a = std::move(a), b = std::move(b)](Vertex u, Vertex v) { return a(u, v) && b(u, v); };
}

std::vector<Vertex> pad(const PathSeq& p, std::size_t n) {
  if (p.vertices.empty()) {
    throw InvalidArgument("cannot pad an empty path");
  }
  if (n < p.length()) {
    throw InvalidArgument("pad target shorter than the path");
  }
  std::vector<Vertex> out = p.vertices;
  out.resize(n + 1, p.back());
  return out;
}

Dist fellow_travel_bound(const Graph& g, const PathSeq& a, const PathSeq& b) {
  if (!is_walk(g, a) || !is_walk(g, b)) {
    throw InvalidArgument("fellow_travel_bound needs two walks in the graph");
  }
  std::size_t n = std::max(a.length(), b.length());
  auto pa = pad(a, n);
  auto pb = pad(b, n);
  DistanceCache dist(g);
  Dist worst = 0;
  for (std::size_t t = 0; t <= n; ++t) {
    Dist d = dist(pa[t], pb[t]);
    if (d == kUnreached) {
      throw Unreachable("walks lie in different components");
    }
    worst = std::max(worst, d);
  }
  return worst;
}

PairStats pair_stats(DistanceCache& dist, const PathSeq& a, const PathSeq& b, std::size_t m) {
  if (m == 0) {
    throw InvalidArgument("pair_stats needs m >= 1");
  }
  if (a.vertices.empty() || b.vertices.empty()) {
    throw InvalidArgument("pair_stats needs nonempty walks");
  }
  if (a.length() != b.length()) {
    throw InvalidArgument("pair_stats needs walks of equal length (" + std::to_string(a.length()) +
                          " vs " + std::to_string(b.length()) + ")");
  }
  const std::size_t n = a.length();
  PairStats s;
  s.m = m;
  s.distances.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Dist d = dist(a[i], b[i]);
    if (d == kUnreached) {
      throw Unreachable("walks lie in different components");
    }
    s.distances[i] = d;
    if (d == m) {
      ++s.apart;
    }
    if (d >= 1 && d <= m) {
      ++s.close;
    }
  }

  // Occurrences of each vertex of b: first index and multiplicity.
  std::unordered_map<Vertex, std::pair<std::size_t, std::size_t>> where;
  for (std::size_t j = 0; j <= n; ++j) {
    auto [it, fresh] = where.try_emplace(b[j], j, 0);
    ++it->second.second;
  }
  s.asynchronously_disjoint = true;
  for (std::size_t i = 0; i <= n && s.asynchronously_disjoint; ++i) {
    auto it = where.find(a[i]);
    if (it != where.end() && (it->second.second > 1 || it->second.first != i)) {
      s.asynchronously_disjoint = false;
    }
  }

  std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> steps;
  for (std::size_t j = 0; j < n; ++j) {
    steps[{b[j], b[j + 1]}].push_back(j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = steps.find({a[i], a[i + 1]});
    if (it == steps.end()) {
      continue;
    }
    s.co_travelling = true;
    if (std::find(it->second.begin(), it->second.end(), i) != it->second.end()) {
      s.synchronously_co_travelling = true;
    }
  }
  return s;
}

PairStats pair_stats(const Graph& g, const PathSeq& a, const PathSeq& b, std::size_t m) {
  if (!is_walk(g, a) || !is_walk(g, b)) {
    throw InvalidArgument("pair_stats needs two walks in the graph");
  }
  DistanceCache dist(g);
  return pair_stats(dist, a, b, m);
}

Count ladder_bound_A(std::uint64_t m, std::uint64_t k) {
  if (m == 0 || k == 0) {
    throw InvalidArgument("ladder bound needs m, k >= 1");
  }
  Count r = k;
  for (std::uint64_t i = 2; i <= 2 * m + 1; ++i) {
    r *= Count(i) * k + 1;
  }
  return Count(m) * r;
}

Count close_bound_C(std::uint64_t m, std::uint64_t k) { return Count(m) * ladder_bound_A(m, k); }

namespace {

struct ScopedPairs {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t skipped = 0;
  bool exhausted = false;
};

ScopedPairs scoped_pairs(const Graph& g, const PairScope& scope) {
  ScopedPairs out;
  if (scope.pairs) {
    for (auto [u, v] : *scope.pairs) {
      if (!g.valid(u) || !g.valid(v)) {
        throw InvalidArgument("scoped pair references a vertex out of range");
      }
      if (scope.filter && !scope.filter(u, v)) {
        ++out.skipped;
        continue;
      }
      if (out.pairs.size() == scope.max_pairs) {
        out.exhausted = true;
        break;
      }
      out.pairs.emplace_back(u, v);
    }
    return out;
  }
  // Keep the max_pairs smallest (distance, u, v) triples.
  using Key = std::tuple<Dist, Vertex, Vertex>;
  std::priority_queue<Key> best;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto row = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      Dist d = row[v];
      if (d == kUnreached || (scope.max_length && d > *scope.max_length)) {
        continue;
      }
      if (scope.filter && !scope.filter(u, v)) {
        ++out.skipped;
        continue;
      }
      Key key{d, u, v};
      if (best.size() < scope.max_pairs) {
        best.push(key);
      } else {
        out.exhausted = true;
        if (scope.max_pairs > 0 && key < best.top()) {
          best.pop();
          best.push(key);
        }
      }
    }
  }
  out.pairs.resize(best.size());
  for (std::size_t i = best.size(); i-- > 0;) {
    auto [d, u, v] = best.top();
    out.pairs[i] = {u, v};
    best.pop();
  }
  return out;
}

bool admitted(const PairFilter& filter, const PathSeq& a, const PathSeq& b) {
  if (!filter) {
    return true;
  }
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    if (!filter(a[i], b[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace

LadderSearch find_ladders(const Graph& g, std::size_t m, std::uint64_t k, const PairScope& scope) {
  if (m == 0 || k == 0) {
    throw InvalidArgument("find_ladders needs m, k >= 1");
  }
  LadderSearch out;
  out.m = m;
  out.k = k;
  out.bound = ladder_bound_A(m, k);
  out.close_bound = close_bound_C(m, k);

  ScopedPairs pairs = scoped_pairs(g, scope);
  out.exhausted = pairs.exhausted;
  out.skipped = pairs.skipped;
  out.endpoint_pairs = pairs.pairs.size();

  DistanceCache dist(g);
  std::map<std::size_t, std::vector<PathSeq>> by_length;
  for (auto [u, v] : pairs.pairs) {
    if (dist(u, v) == kUnreached || u == v) {
      continue;
    }
    GeodesicList list = enumerate_geodesics(g, u, v, scope.max_geodesics, dist.row(v));
    if ((!list.truncated && list.paths.size() > k) || (list.truncated && scope.max_geodesics > k)) {
      throw InvalidArgument("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has more than k = " + std::to_string(k) + " geodesics");
    }
    out.exhausted = out.exhausted || list.truncated;
    out.geodesics += list.paths.size();
    auto& bucket = by_length[list.paths.front().length()];
    for (auto& p : list.paths) {
      bucket.push_back(std::move(p));
    }
  }

  for (const auto& [length, pool] : by_length) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        for (int orient = 0; orient < 2; ++orient) {
          if (out.candidates == scope.max_candidates) {
            out.exhausted = true;
            return out;
          }
          ++out.candidates;
          const PathSeq& x = pool[i];
          PathSeq y = orient == 0 ? pool[j] : reversed(pool[j]);
          if (!admitted(scope.filter, x, y)) {
            ++out.skipped;
            continue;
          }
          PairStats s = pair_stats(dist, x, y, m);
          if (!s.asynchronously_disjoint) {
            continue;
          }
          ++out.disjoint_pairs;
          out.max_close = std::max(out.max_close, s.close);
          if (Count(s.close) > out.close_bound) {
            ++out.close_violations;
          }
          if (s.apart == 0) {
            continue;
          }
          LadderReport r;
          r.gamma_x = x;
          r.gamma_y = std::move(y);
          r.width = m;
          r.height = s.apart;
          r.close = s.close;
          r.bound = out.bound;
          r.within_bound = Count(s.apart) <= out.bound;
          if (!r.within_bound) {
            ++out.height_violations;
          }
          out.max_height = std::max(out.max_height, s.apart);
          out.ladders.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

LadderSearch find_ladders(const CayleyBall& ball, std::size_t m, std::uint64_t k,
                          PairScope scope) {
  scope.filter = both(std::move(scope.filter), ball.trusted_filter());
  return find_ladders(ball.graph(), m, k, scope);
}

PathSeq shorten_paths(const Graph& g, std::span<const PathSeq> paths, std::uint64_t k) {
  if (paths.size() < k + 1) {
    throw InvalidArgument("shorten_paths needs at least k + 1 = " + std::to_string(k + 1) +
                          " walks, got " + std::to_string(paths.size()));
  }
  const PathSeq& first = paths.front();
  for (const auto& p : paths) {
    if (!is_walk(g, p)) {
      throw InvalidArgument("shorten_paths input is not a walk in the graph");
    }
    if (p.front() != first.front() || p.back() != first.back()) {
      throw InvalidArgument("shorten_paths inputs do not share endpoints");
    }
    if (p.length() != first.length()) {
      throw InvalidArgument("shorten_paths inputs differ in length");
    }
  }
  std::set<PathSeq> distinct(paths.begin(), paths.end());
  if (distinct.size() != paths.size()) {
    throw InvalidArgument("shorten_paths inputs are not pairwise distinct");
  }
  const Vertex u = first.front();
  const std::size_t n = first.length();
  auto from_u = bfs_distances(g, u);
  if (from_u[first.back()] == n) {
    throw InvalidArgument("all inputs geodesic");
  }
  // All inputs share endpoints and length, so they are all non-geodesic;
  // the construction uses the first.
  const PathSeq& alpha = first;
  std::size_t i0 = 0;
  while (from_u[alpha[i0]] == i0) {
    ++i0;
  }
  Vertex pivot = alpha[i0];
  PathSeq beta = enumerate_geodesics(g, u, pivot, 1).paths.front();
  beta.vertices.insert(beta.vertices.end(), alpha.vertices.begin() + static_cast<std::ptrdiff_t>(i0 + 1),
                       alpha.vertices.end());
  if (beta.length() + 1 != n && beta.length() + 2 != n) {
    throw Error("internal error: shortened walk has unexpected length");
  }
  return beta;
}

namespace {

bool bigon_degenerate(const PathSeq& a, const PathSeq& b) {
  for (std::size_t i = 1; i + 1 < a.vertices.size(); ++i) {
    if (a[i] == b[i]) {
      return true;
    }
  }
  return false;
}

std::vector<std::pair<Vertex, Vertex>> edge_set(const PathSeq& a, const PathSeq& b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const PathSeq* p : {&a, &b}) {
    for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i) {
      edges.emplace_back(std::min((*p)[i], (*p)[i + 1]), std::max((*p)[i], (*p)[i + 1]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

BigonSearch enumerate_bigons(const Graph& g, const PairScope& scope) {
  BigonSearch out;
  ScopedPairs pairs = scoped_pairs(g, scope);
  out.exhausted = pairs.exhausted;
  out.skipped = pairs.skipped;
  DistanceCache dist(g);
  std::set<std::vector<std::pair<Vertex, Vertex>>> cycles;
  for (auto [u, v] : pairs.pairs) {
    if (u == v || dist(u, v) == kUnreached) {
      continue;
    }
    GeodesicList list = enumerate_geodesics(g, u, v, scope.max_geodesics, dist.row(v));
    out.exhausted = out.exhausted || list.truncated;
    for (std::size_t i = 0; i < list.paths.size(); ++i) {
      for (std::size_t j = i + 1; j < list.paths.size(); ++j) {
        Bigon b{list.paths[i], list.paths[j], false};
        b.degenerate = bigon_degenerate(b.alpha, b.beta);
        if (!b.degenerate) {
          ++out.non_degenerate;
          out.max_non_degenerate_length =
              std::max(out.max_non_degenerate_length.value_or(0), b.length());
          cycles.insert(edge_set(b.alpha, b.beta));
        }
        out.bigons.push_back(std::move(b));
      }
    }
  }
  out.distinct_non_degenerate = cycles.size();
  return out;
}

BigonSearch enumerate_bigons(const CayleyBall& ball, PairScope scope) {
  scope.filter = both(std::move(scope.filter), ball.trusted_filter());
  return enumerate_bigons(ball.graph(), scope);
}

bool triangle_degenerate(const PathSeq& alpha, const PathSeq& beta, const PathSeq& gamma) {
  if (alpha.length() == 0 || beta.length() == 0 || gamma.length() == 0) {
    return true;
  }
  auto tail = [](const PathSeq& p) {
    std::vector<Vertex> t(p.vertices.begin() + 1, p.vertices.end());
    std::sort(t.begin(), t.end());
    return t;
  };
  auto ta = tail(alpha);
  auto tb = tail(beta);
  auto tc = tail(gamma);
  auto meets = [](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] == y[j]) {
        return true;
      }
      x[i] < y[j] ? ++i : ++j;
    }
    return false;
  };
  return meets(ta, tb) || meets(tb, tc) || meets(ta, tc);
}

TriangleSearch enumerate_triangles(const Graph& g, const TriangleScope& scope) {
  TriangleSearch out;
  auto ok = [&](Vertex a, Vertex b) { return !scope.filter || scope.filter(a, b); };
  std::vector<std::array<Vertex, 3>> triples;
  if (scope.triples) {
    for (const auto& t : *scope.triples) {
      for (Vertex v : t) {
        if (!g.valid(v)) {
          throw InvalidArgument("scoped triple references a vertex out of range");
        }
      }
      if (!ok(t[0], t[1]) || !ok(t[1], t[2]) || !ok(t[2], t[0])) {
        ++out.skipped;
        continue;
      }
      if (triples.size() == scope.max_triples) {
        out.exhausted = true;
        break;
      }
      triples.push_back(t);
    }
  } else {
    std::size_t n = g.vertex_count();
    for (Vertex x = 0; x < n && !out.exhausted; ++x) {
      for (Vertex y = x + 1; y < n && !out.exhausted; ++y) {
        if (!ok(x, y)) {
          continue;
        }
        for (Vertex z = y + 1; z < n; ++z) {
          if (!ok(y, z) || !ok(z, x)) {
            ++out.skipped;
            continue;
          }
          if (triples.size() == scope.max_triples) {
            out.exhausted = true;
            break;
          }
          triples.push_back({x, y, z});
        }
      }
    }
  }

  DistanceCache dist(g);
  auto too_long = [&](Vertex a, Vertex b) {
    Dist d = dist(a, b);
    return d == kUnreached || (scope.max_length && d > *scope.max_length);
  };
  for (const auto& [x, y, z] : triples) {
    if (too_long(x, y) || too_long(y, z) || too_long(z, x)) {
      continue;
    }
    auto sa = enumerate_geodesics(g, x, y, scope.max_geodesics, dist.row(y));
    auto sb = enumerate_geodesics(g, y, z, scope.max_geodesics, dist.row(z));
    auto sc = enumerate_geodesics(g, z, x, scope.max_geodesics, dist.row(x));
    out.exhausted = out.exhausted || sa.truncated || sb.truncated || sc.truncated;
    for (const auto& a : sa.paths) {
      for (const auto& b : sb.paths) {
        for (const auto& c : sc.paths) {
          if (out.triangles.size() == scope.max_triangles) {
            out.exhausted = true;
            return out;
          }
          Triangle t{a, b, c, triangle_degenerate(a, b, c)};
          if (!t.degenerate) {
            ++out.non_degenerate;
            std::size_t side = std::max({a.length(), b.length(), c.length()});
            out.max_non_degenerate_side = std::max(out.max_non_degenerate_side.value_or(0), side);
          }
          out.triangles.push_back(std::move(t));
        }
      }
    }
  }
  return out;
}

TriangleSearch enumerate_triangles(const CayleyBall& ball, TriangleScope scope) {
  scope.filter = both(std::move(scope.filter), ball.trusted_filter());
  return enumerate_triangles(ball.graph(), scope);
}

namespace {

std::ostream& operator<<(std::ostream& out, const PathSeq& p) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    out << (i ? "-" : "") << p[i];
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_ladder_report(std::ostream& out, const LadderSearch& s) {
  for (const auto& r : s.ladders) {
    out << "ladder x=" << r.gamma_x.front() << "->" << r.gamma_x.back() << " y=" << r.gamma_y.front()
        << "->" << r.gamma_y.back() << " length=" << r.gamma_x.length() << " m=" << r.width
        << " height=" << r.height << " close=" << r.close << " bound=" << r.bound
        << " within_bound=" << flag(r.within_bound) << " path_x=" << r.gamma_x
        << " path_y=" << r.gamma_y << '\n';
  }
  out << "summary ladders=" << s.ladders.size() << " m=" << s.m << " k=" << s.k
      << " bound=" << s.bound << " close_bound=" << s.close_bound
      << " max_height=" << s.max_height << " max_close=" << s.max_close
      << " height_violations=" << s.height_violations
      << " close_violations=" << s.close_violations << " endpoint_pairs=" << s.endpoint_pairs
      << " geodesics=" << s.geodesics << " candidates=" << s.candidates
      << " disjoint_pairs=" << s.disjoint_pairs << " skipped=" << s.skipped
      << " exhausted=" << flag(s.exhausted) << '\n';
}

void write_bigon_report(std::ostream& out, const BigonSearch& s) {
  for (const auto& b : s.bigons) {
    out << "bigon u=" << b.alpha.front() << " v=" << b.alpha.back() << " length=" << b.length()
        << " degenerate=" << flag(b.degenerate) << " alpha=" << b.alpha << " beta=" << b.beta
        << '\n';
  }
  out << "summary bigons=" << s.bigons.size() << " non_degenerate=" << s.non_degenerate
      << " distinct_non_degenerate=" << s.distinct_non_degenerate << " max_non_degenerate_length=";
  if (s.max_non_degenerate_length) {
    out << *s.max_non_degenerate_length;
  } else {
    out << "none";
  }
  out << " skipped=" << s.skipped << " exhausted=" << flag(s.exhausted) << '\n';
}

void write_triangle_report(std::ostream& out, const TriangleSearch& s) {
  for (const auto& t : s.triangles) {
    out << "triangle x=" << t.alpha.front() << " y=" << t.beta.front() << " z=" << t.gamma.front()
        << " sides=" << t.alpha.length() << "," << t.beta.length() << "," << t.gamma.length()
        << " degenerate=" << flag(t.degenerate) << '\n';
  }
  out << "summary triangles=" << s.triangles.size() << " non_degenerate=" << s.non_degenerate
      << " max_non_degenerate_side=";
  if (s.max_non_degenerate_side) {
    out << *s.max_non_degenerate_side;
  } else {
    out << "none";
  }
  out << " skipped=" << s.skipped << " exhausted=" << flag(s.exhausted) << '\n';
}

}  // namespace kgeodetic
