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

// DOT export for graphs. Automata have their own exporter in lang.hpp.

#ifndef KGEODETIC_DOT_HPP_
#define KGEODETIC_DOT_HPP_

#include <span>
#include <string>
#include <string_view>

#include "kgeodetic/graph.hpp"

namespace kgeodetic {

struct DotOptions {
  std::string name = "G";
  // Display names for arc labels, indexed by Label. When empty, labelled arcs
  // are printed with their numeric label.
  std::span<const std::string> label_names;
  bool edge_labels = true;
};

// Undirected DOT. Vertex labels are emitted when present; each undirected
// edge is printed once (u < v) with the label of its u -> v arc.
std::string to_dot(const Graph& g, const DotOptions& options = {});

// Quotes and escapes a string for use as a DOT identifier or label.
std::string dot_quote(std::string_view s);

}  // namespace kgeodetic

#endif  // KGEODETIC_DOT_HPP_
