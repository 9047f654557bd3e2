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

#include "kgeodetic/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "kgeodetic/error.hpp"

namespace kgeodetic {

namespace {

Vertex parse_vertex(std::istringstream& fields, std::size_t line) {
  long long value = -1;
  if (!(fields >> value) || value < 0 || value > std::numeric_limits<Vertex>::max()) {
    throw ParseError("expected a nonnegative vertex id", line);
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream fields(raw);
    std::string keyword;
    if (!(fields >> keyword)) {
      continue;
    }
    if (keyword == "graph") {
      if (vertex_count) {
        throw ParseError("duplicate graph header", line);
      }
      long long n = -1;
      if (!(fields >> n) || n < 0) {
        throw ParseError("expected 'graph <vertex_count>'", line);
      }
      vertex_count = static_cast<std::size_t>(n);
    } else if (keyword == "e") {
      if (!vertex_count) {
        throw ParseError("edge before graph header", line);
      }
      Vertex u = parse_vertex(fields, line);
      Vertex v = parse_vertex(fields, line);
      if (u >= *vertex_count || v >= *vertex_count) {
        throw ParseError("vertex id out of range", line);
      }
      if (u == v) {
        throw ParseError("self-loop", line);
      }
      edges.emplace_back(u, v);
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line);
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("trailing token '" + extra + "'", line);
    }
  }
  if (!vertex_count) {
    throw ParseError("missing 'graph <vertex_count>' header");
  }
  return build_graph(edges, *vertex_count);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open graph file '" + path + "'");
  }
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << '\n';
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (u < v) {
        out << "e " << u << ' ' << v << '\n';
      }
    }
  }
}

}  // namespace kgeodetic
