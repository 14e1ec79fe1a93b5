// Copyright 2026 The spreadlab Authors
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

#ifndef SPREADLAB_GRAPH_IO_H_
#define SPREADLAB_GRAPH_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spreadlab/graph.h"

namespace spreadlab {

// Edge-list text format: a header line "n m" followed by m lines "u v",
// single-space separated, '\n' terminated. Loading rejects loops and
// duplicate edges (kParseError).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// One "u v length" line per kernel edge.
void write_lengthed_multigraph(std::ostream& out, const LengthedMultiGraph& k);

// One integer per line, in vertex order.
std::vector<std::int64_t> read_values(std::istream& in);
void write_values(std::ostream& out, const std::vector<std::int64_t>& values);

// One vertex id per line.
VertexSet read_vertex_set(std::istream& in);

}  // namespace spreadlab

#endif  // SPREADLAB_GRAPH_IO_H_
