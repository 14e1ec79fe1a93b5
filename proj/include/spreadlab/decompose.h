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

#ifndef SPREADLAB_DECOMPOSE_H_
#define SPREADLAB_DECOMPOSE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "spreadlab/graph.h"

namespace spreadlab {

// Largest component of g (ties: smallest min vertex id).
VertexSet giant_component(const Graph& g);

// Vertices surviving repeated deletion of degree <= 1 vertices.
VertexSet two_core(const Graph& h);

// Suppresses the degree-2 vertices of the core. Kernel vertices are core
// vertices with core degree >= 3; each maximal path through degree-2 core
// vertices becomes one edge carrying its length and host path. A core
// component that is a bare cycle becomes a loop at its smallest vertex.
// Throws kEmptyCore.
LengthedMultiGraph kernel(const Graph& h, const VertexSet& core);

struct PendantTree {
  VertexSet vertices;
  // Core endpoint of the unique edge joining the tree to the core.
  Vertex attachment = 0;
  // (tree vertex, core vertex).
  Edge attachment_edge;
};

// Components of h minus the core, by size descending then smallest id.
// Throws kEmptyCore.
std::vector<PendantTree> pendant_trees(const Graph& h, const VertexSet& core);

struct RootedTree {
  Vertex root = 0;
  VertexSet vertices;
};

// For each core vertex v (ascending), the tree containing v once every core
// edge is removed: v plus the pendant trees hanging at v. Throws kEmptyCore.
std::vector<RootedTree> rooted_pendant_forest(const Graph& h,
                                              const VertexSet& core);

// |E| - |V| of a connected graph. Throws kDisconnectedGraph.
std::int64_t excess(const Graph& g);

// Histogram of degrees: entry i is the number of vertices of degree i.
std::vector<std::size_t> degree_class_sizes(const Graph& g);

// For every vertex of h, the nearest core vertex (point of attachment).
// Throws kEmptyCore.
std::vector<Vertex> attachment_points(const Graph& h, const VertexSet& core);

struct Decomposition {
  // Vertex count of the graph the giant component was taken from.
  std::size_t n_total = 0;
  // Giant component in source ids; `h` is the same set relabeled to
  // 0..|H|-1 in ascending source order. Everything below uses h ids.
  VertexSet giant;
  Graph h;
  VertexSet core;
  LengthedMultiGraph kernel;
  std::vector<PendantTree> pendant_trees;
  std::vector<RootedTree> rooted_forest;
  // a(v) for each vertex of h; empty when the core is empty.
  std::vector<Vertex> attachment;
  std::int64_t excess = 0;
  // Degree histogram of the source graph.
  std::vector<std::size_t> degree_class_sizes;

  bool has_core() const { return !core.empty(); }
  std::size_t core_edges() const;
  std::int64_t core_excess() const;
  std::int64_t kernel_excess() const;
  std::size_t max_pendant_tree_size() const;
  // Kernel edge length -> number of kernel edges with that length.
  std::map<std::uint32_t, std::size_t> kernel_length_histogram() const;
};

// Full structural decomposition of the giant component of g. A tree-shaped
// giant yields an empty core and empty kernel/pendant data.
Decomposition decompose(const Graph& g);

inline constexpr double kDefaultDelta = 0.05;

struct BehaviorReport {
  double delta = kDefaultDelta;
  double eps = 0.0;
  // |V(H)|, |V(C)|, |V(K)|, excess against (2 +- d) eps n,
  // (2 +- d) eps^2 n, (4/3 +- d) eps^3 n, (2/3 +- d) eps^3 n.
  std::array<bool, 4> checks = {false, false, false, false};
  bool behaves = false;
};

// n is the vertex count of G(n, p) with p = (1 + eps) / n.
// Throws kDeltaOutOfRange unless 0 < delta < 1/10; kInvalidArgument if
// eps <= 0.
BehaviorReport behaves(const Decomposition& dec, std::size_t n, double eps,
                       double delta = kDefaultDelta);
// Same predicate on raw sizes.
BehaviorReport behaves(std::size_t giant_size, std::size_t core_size,
                       std::size_t kernel_size, std::int64_t excess,
                       std::size_t n, double eps, double delta = kDefaultDelta);

}  // namespace spreadlab

#endif  // SPREADLAB_DECOMPOSE_H_
