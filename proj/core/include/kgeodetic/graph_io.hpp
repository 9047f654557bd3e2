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

#ifndef KGEODETIC_GRAPH_IO_HPP_
#define KGEODETIC_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "kgeodetic/graph.hpp"

namespace kgeodetic {

// Line-oriented graph text:
//
//   # comment
//   graph <vertex_count>
//   e <u> <v>
//
// Throws ParseError with the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);

}  // namespace kgeodetic

#endif  // KGEODETIC_GRAPH_IO_HPP_
