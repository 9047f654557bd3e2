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

// Brute-force reference implementations used by the tests.

#ifndef KGEODETIC_TESTS_ORACLES_HPP_
#define KGEODETIC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "kgeodetic/graph.hpp"
#include "kgeodetic/group.hpp"
#include "kgeodetic/words.hpp"

namespace oracle {

using kgeodetic::Edge;
using kgeodetic::Graph;
using kgeodetic::Letter;
using kgeodetic::Vertex;
using kgeodetic::Word;

// Shortest u-v paths found by enumerating every simple path.
struct ShortestPaths {
  std::size_t length = 0;
  std::uint64_t count = 0;
};

inline ShortestPaths shortest_simple_paths(const Graph& g, Vertex u, Vertex v) {
  ShortestPaths best{SIZE_MAX, 0};
  std::vector<bool> on(g.vertex_count(), false);
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex x, std::size_t len) {
    if (x == v) {
      if (len < best.length) {
        best = {len, 1};
      } else if (len == best.length) {
        ++best.count;
      }
      return;
    }
    on[x] = true;
    for (Vertex y : g.neighbours(x)) {
      if (!on[y]) {
        dfs(y, len + 1);
      }
    }
    on[x] = false;
  };
  dfs(u, 0);
  return best;
}

// All walks of exactly `length` steps from u to v.
inline std::vector<std::vector<Vertex>> walks(const Graph& g, Vertex u, Vertex v, std::size_t length) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur{u};
  std::function<void()> rec = [&]() {
    if (cur.size() == length + 1) {
      if (cur.back() == v) {
        out.push_back(cur);
      }
      return;
    }
    for (Vertex y : g.neighbours(cur.back())) {
      cur.push_back(y);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  }
  std::bernoulli_distribution coin(extra);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return kgeodetic::build_graph(edges, n);
}

inline Graph random_tree(std::mt19937_64& rng, std::size_t n) { return random_connected_graph(rng, n, 0.0); }

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  }
  return kgeodetic::build_graph(edges, n);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
  }
  return kgeodetic::build_graph(edges, n);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) {
      edges.emplace_back(u, static_cast<Vertex>(a + v));
    }
  }
  return kgeodetic::build_graph(edges, a + b);
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return kgeodetic::build_graph(edges, 10);
}

// Every word of the given length over `letters` letters, in lex order.
inline std::vector<Word> all_words(std::size_t letters, std::size_t length) {
  std::vector<Word> out;
  Word w(std::vector<Letter>(length, 0));
  while (true) {
    out.push_back(w);
    std::size_t i = length;
    while (i > 0 && w.letters[i - 1] + 1 == letters) {
      w.letters[--i] = 0;
    }
    if (i == 0) {
      return out;
    }
    ++w.letters[i - 1];
  }
}

inline bool has_factor(const Word& w, const std::vector<Word>& f) {
  for (const auto& u : f) {
    if (kgeodetic::is_factor(u, w)) {
      return true;
    }
  }
  return false;
}

// Smallest d dividing |w| with w = (w[0, d))^(|w|/d).
inline std::pair<Word, std::size_t> divisor_scan_root(const Word& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) {
      continue;
    }
    Word u = w.prefix(d);
    if (kgeodetic::power(u, w.size() / d) == w) {
      return {u, w.size() / d};
    }
  }
  return {w, 1};
}

// Shortest u with x, y both powers of u; nullopt if none.
inline std::optional<Word> brute_common_root(const Word& x, const Word& y) {
  for (std::size_t d = 1; d <= std::min(x.size(), y.size()); ++d) {
    if (x.size() % d != 0 || y.size() % d != 0) {
      continue;
    }
    Word u = x.prefix(d);
    if (kgeodetic::power(u, x.size() / d) == x && kgeodetic::power(u, y.size() / d) == y) {
      return u;
    }
  }
  return std::nullopt;
}

// Word-length norms and geodesic counts by evaluating every word of length
// <= max_len, independent of any Cayley graph.
struct WordCensus {
  std::map<kgeodetic::Element, std::size_t> norm;
  std::map<kgeodetic::Element, std::uint64_t> geodesics;
};

inline WordCensus census(const kgeodetic::GroupSpec& spec, const kgeodetic::GenSet& gens,
                         std::size_t max_len) {
  WordCensus c;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const auto& w : all_words(gens.size(), len)) {
      auto e = kgeodetic::word_to_element(spec, gens, w);
      auto it = c.norm.find(e);
      if (it == c.norm.end()) {
        c.norm.emplace(e, len);
        c.geodesics[e] = 1;
      } else if (it->second == len) {
        ++c.geodesics[e];
      }
    }
  }
  return c;
}

}  // namespace oracle

#endif  // KGEODETIC_TESTS_ORACLES_HPP_
