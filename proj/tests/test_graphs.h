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

#ifndef SPREADLAB_TESTS_TEST_GRAPHS_H_
#define SPREADLAB_TESTS_TEST_GRAPHS_H_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "spreadlab/graph.h"
#include "spreadlab/randgen.h"

namespace spreadlab::testing {

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, edges);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph edgeless(std::size_t n) { return Graph::from_edges(n, {}); }

// Hubs 0 and 1 joined by internally disjoint paths of the given lengths;
// internal vertices are numbered from 2 in path order.
inline Graph theta(const std::vector<std::size_t>& lengths) {
  std::vector<Edge> edges;
  Vertex next = 2;
  for (std::size_t len : lengths) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.push_back({std::min(prev, next), std::max(prev, next)});
      prev = next++;
    }
    edges.push_back({std::min<Vertex>(prev, 1), std::max<Vertex>(prev, 1)});
  }
  return Graph::from_edges(next, edges);
}

// C5 on 0..4 with extra vertices hanging off vertex 0 as a path 5, 6, ...
inline Graph cycle_with_tail(std::size_t tail) {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  Vertex prev = 0;
  for (std::size_t i = 0; i < tail; ++i) {
    Vertex v = static_cast<Vertex>(5 + i);
    edges.push_back({prev, v});
    prev = v;
  }
  return Graph::from_edges(5 + tail, edges);
}

// Random tree (each vertex joins a uniform earlier one, then relabeled) plus
// every other pair with probability p. Always connected.
inline Graph random_connected(Rng& rng, std::size_t n, double p) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(std::span<Vertex>(label));
  std::vector<Edge> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  auto add = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    if (has[a][b]) return;
    has[a][b] = 1;
    edges.push_back({a, b});
  };
  for (Vertex v = 1; v < n; ++v) add(label[v], label[rng.uniform(v)]);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) add(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace spreadlab::testing

#endif  // SPREADLAB_TESTS_TEST_GRAPHS_H_
