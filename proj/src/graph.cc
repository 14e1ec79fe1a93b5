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

#include "spreadlab/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "spreadlab/errors.h"

namespace spreadlab {
namespace {

std::vector<Edge> normalize(std::size_t n, std::span<const Edge> edges,
                            bool strict) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside [0," + std::to_string(n) +
                      ")");
    }
    if (e.u == e.v) {
      if (strict) {
        throw Error(ErrorKind::kInvalidArgument,
                    "self-loop at vertex " + std::to_string(e.u));
      }
      continue;
    }
    out.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(out.begin(), out.end());
  auto dup = std::adjacent_find(out.begin(), out.end());
  if (dup != out.end()) {
    if (strict) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate edge (" + std::to_string(dup->u) + "," +
                      std::to_string(dup->v) + ")");
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> sorted_edges)
    : n_(n), edges_(std::move(sorted_edges)) {
  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in this order leaves every
  // neighbor list sorted: lower neighbors arrive via the v side first.
  for (const Edge& e : edges_) adjacency_[cursor[e.v]++] = e.u;
  for (const Edge& e : edges_) adjacency_[cursor[e.u]++] = e.v;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  return Graph(n, normalize(n, edges, /*strict=*/true));
}

Graph Graph::simplified(std::size_t n, std::span<const Edge> edges) {
  return Graph(n, normalize(n, edges, /*strict=*/false));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  // Discovery order already sorts by min id, so a stable sort on size gives
  // the (size desc, min id asc) order.
  std::stable_sort(components.begin(), components.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() > b.size();
                   });
  return components;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::uint32_t d) { return d == kUnreachable; });
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.num_vertices()) {
    throw Error(ErrorKind::kOutOfRange,
                "BFS source " + std::to_string(source) + " not in graph");
  }
  Vertex src[] = {source};
  return multi_source_bfs(g, src).distance;
}

MultiSourceBfs multi_source_bfs(const Graph& g,
                                std::span<const Vertex> sources) {
  const std::size_t n = g.num_vertices();
  MultiSourceBfs out;
  out.distance.assign(n, kUnreachable);
  out.nearest_source.assign(n, kUnreachable);
  std::vector<Vertex> frontier;
  VertexSet sorted(sources.begin(), sources.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex s : sorted) {
    if (s >= n) {
      throw Error(ErrorKind::kOutOfRange,
                  "BFS source " + std::to_string(s) + " not in graph");
    }
    if (out.distance[s] == 0) continue;
    out.distance[s] = 0;
    out.nearest_source[s] = s;
    frontier.push_back(s);
  }
  std::size_t head = 0;
  while (head < frontier.size()) {
    Vertex v = frontier[head++];
    for (Vertex w : g.neighbors(v)) {
      if (out.distance[w] == kUnreachable) {
        out.distance[w] = out.distance[v] + 1;
        out.nearest_source[w] = out.nearest_source[v];
        frontier.push_back(w);
      }
    }
  }
  return out;
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (std::uint32_t d : bfs_distances(g, s)) {
      if (d == kUnreachable) {
        throw Error(ErrorKind::kDisconnectedGraph, "diameter is infinite");
      }
      best = std::max(best, d);
    }
  }
  return best;
}

std::uint32_t diameter_lower_bound(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  auto far = [&](Vertex s) {
    auto dist = bfs_distances(g, s);
    Vertex arg = s;
    for (Vertex v = 0; v < dist.size(); ++v) {
      if (dist[v] == kUnreachable) {
        throw Error(ErrorKind::kDisconnectedGraph, "diameter is infinite");
      }
      if (dist[v] > dist[arg]) arg = v;
    }
    return std::pair{arg, dist[arg]};
  };
  auto [a, unused] = far(0);
  return far(a).second;
}

std::vector<char> membership(std::size_t n, std::span<const Vertex> s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    if (v >= n) {
      throw Error(ErrorKind::kOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph");
    }
    in[v] = 1;
  }
  return in;
}

std::size_t edge_boundary(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g.num_vertices(), s);
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += (in[e.u] != in[e.v]);
  return count;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.num_vertices();
  InducedSubgraph out;
  out.to_original.assign(s.begin(), s.end());
  std::sort(out.to_original.begin(), out.to_original.end());
  out.to_original.erase(
      std::unique(out.to_original.begin(), out.to_original.end()),
      out.to_original.end());
  std::vector<Vertex> local(n, kUnreachable);
  for (Vertex i = 0; i < out.to_original.size(); ++i) {
    Vertex v = out.to_original[i];
    if (v >= n) {
      throw Error(ErrorKind::kOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph");
    }
    local[v] = i;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kUnreachable && local[e.v] != kUnreachable) {
      edges.push_back({local[e.u], local[e.v]});
    }
  }
  out.graph = Graph::from_edges(out.to_original.size(), edges);
  return out;
}

Graph with_edge(const Graph& g, Vertex u, Vertex v) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({u, v});
  return Graph::from_edges(g.num_vertices(), edges);
}

}  // namespace spreadlab
