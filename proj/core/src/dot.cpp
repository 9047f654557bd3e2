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

#include "kgeodetic/dot.hpp"

#include <sstream>

namespace kgeodetic {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string to_dot(const Graph& g, const DotOptions& options) {
  std::ostringstream out;
  out << "graph " << dot_quote(options.name) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_vertex_labels()) {
      out << " [label=" << dot_quote(g.vertex_label(v)) << "]";
    }
    out << ";\n";
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nb = g.neighbours(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] < u) {
        continue;
      }
      out << "  " << u << " -- " << nb[i];
      if (options.edge_labels && g.has_arc_labels()) {
        Label l = g.arc_labels(u)[i];
        std::string name = l < options.label_names.size() ? options.label_names[l]
                                                          : std::to_string(l);
        out << " [label=" << dot_quote(name) << "]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace kgeodetic
