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

#include "spreadlab/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "spreadlab/errors.h"

namespace spreadlab {
namespace {

// Parses exactly `count` unsigned decimals separated by single spaces.
template <typename T>
bool parse_fields(std::string_view line, T* fields, int count) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (int i = 0; i < count; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') return false;
      ++p;
    }
    auto [next, ec] = std::from_chars(p, end, fields[i]);
    if (ec != std::errc() || next == p) return false;
    p = next;
  }
  return p == end;
}

std::string_view strip_cr(const std::string& line) {
  std::string_view view(line);
  if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
  return view;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::kParseError, "missing 'n m' header");
  }
  std::uint64_t header[2];
  if (!parse_fields(strip_cr(line), header, 2)) {
    throw Error(ErrorKind::kParseError, "malformed header '" + line + "'");
  }
  if (header[0] > kUnreachable) {
    throw Error(ErrorKind::kParseError, "vertex count too large");
  }
  std::vector<Edge> edges;
  edges.reserve(header[1]);
  for (std::uint64_t i = 0; i < header[1]; ++i) {
    if (!std::getline(in, line)) {
      throw Error(ErrorKind::kParseError,
                  "expected " + std::to_string(header[1]) + " edges, got " +
                      std::to_string(i));
    }
    std::uint32_t uv[2];
    if (!parse_fields(strip_cr(line), uv, 2)) {
      throw Error(ErrorKind::kParseError, "malformed edge line '" + line + "'");
    }
    edges.push_back({uv[0], uv[1]});
  }
  try {
    return Graph::from_edges(header[0], edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  write_edge_list(out, g);
}

void write_lengthed_multigraph(std::ostream& out, const LengthedMultiGraph& k) {
  for (const KernelEdge& e : k.edges) {
    out << e.u << ' ' << e.v << ' ' << e.length << '\n';
  }
}

std::vector<std::int64_t> read_values(std::istream& in) {
  std::vector<std::int64_t> values;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = strip_cr(line);
    if (view.empty()) continue;
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(view.data(), view.data() + view.size(), v);
    if (ec != std::errc() || next != view.data() + view.size()) {
      throw Error(ErrorKind::kParseError, "malformed value '" + line + "'");
    }
    values.push_back(v);
  }
  return values;
}

void write_values(std::ostream& out, const std::vector<std::int64_t>& values) {
  for (std::int64_t v : values) out << v << '\n';
}

VertexSet read_vertex_set(std::istream& in) {
  VertexSet s;
  for (std::int64_t v : read_values(in)) {
    if (v < 0 || v >= static_cast<std::int64_t>(kUnreachable)) {
      throw Error(ErrorKind::kParseError, "bad vertex id " + std::to_string(v));
    }
    s.push_back(static_cast<Vertex>(v));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace spreadlab
