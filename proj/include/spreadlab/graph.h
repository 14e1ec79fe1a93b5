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

#ifndef SPREADLAB_GRAPH_H_
#define SPREADLAB_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace spreadlab {

using Vertex = std::uint32_t;
// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Distance sentinel for vertices not reachable from the BFS source(s).
inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored
// normalized (u < v) and sorted; adjacency is CSR with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;

  // Throws Error(kInvalidArgument) on loops, duplicate edges or endpoints
  // outside [0, n).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  // Drops loops and collapses duplicates instead of rejecting them.
  static Graph simplified(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::size_t n, std::vector<Edge> sorted_edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<Vertex> adjacency_;
};

// Components as sorted vertex sets, largest first; equal sizes are ordered by
// their smallest vertex id.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

struct MultiSourceBfs {
  std::vector<std::uint32_t> distance;
  // Source that reached each vertex first (ties: lower source id);
  // kUnreachable when none did.
  std::vector<Vertex> nearest_source;
};
MultiSourceBfs multi_source_bfs(const Graph& g, std::span<const Vertex> sources);

// Exact, via BFS from every vertex. Throws kDisconnectedGraph.
std::uint32_t diameter(const Graph& g);
// Double-sweep lower bound: BFS from 0, then from a farthest vertex.
std::uint32_t diameter_lower_bound(const Graph& g);

// Number of edges with exactly one endpoint in s.
std::size_t edge_boundary(const Graph& g, std::span<const Vertex> s);

struct InducedSubgraph {
  Graph graph;
  // to_original[i] is the id in the parent graph of local vertex i.
  std::vector<Vertex> to_original;
};
// Local ids follow the ascending order of s.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// Copy of g with one extra edge. Throws kInvalidArgument if it exists.
Graph with_edge(const Graph& g, Vertex u, Vertex v);

// Membership mask over [0, n).
std::vector<char> membership(std::size_t n, std::span<const Vertex> s);

struct KernelEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t length = 0;
  // Host-graph vertex sequence from u to v, length + 1 entries. For a loop the
  // first and last entries are both u.
  std::vector<Vertex> path;
};

// Multigraph whose edges stand for paths of the host graph. Vertex ids are
// host ids; `vertices` lists the ones that belong to the multigraph.
struct LengthedMultiGraph {
  VertexSet vertices;
  std::vector<KernelEdge> edges;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_edges() const { return edges.size(); }
};

}  // namespace spreadlab

#endif  // SPREADLAB_GRAPH_H_
