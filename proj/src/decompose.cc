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

#include "spreadlab/decompose.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "spreadlab/errors.h"

namespace spreadlab {
namespace {

void require_core(const VertexSet& core) {
  if (core.empty()) {
    throw Error(ErrorKind::kEmptyCore, "graph has an empty 2-core");
  }
}

}  // namespace

VertexSet giant_component(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.empty()) return {};
  return std::move(comps.front());
}

VertexSet two_core(const Graph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = h.degree(v);
    if (deg[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : h.neighbors(queue[head])) {
      if (!removed[w] && --deg[w] <= 1) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexSet core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

LengthedMultiGraph kernel(const Graph& h, const VertexSet& core) {
  require_core(core);
  const std::size_t n = h.num_vertices();
  auto in_core = membership(n, core);
  std::vector<std::uint32_t> core_deg(n, 0);
  for (Vertex v : core) {
    for (Vertex w : h.neighbors(v)) core_deg[v] += in_core[w];
    if (core_deg[v] < 2) {
      throw Error(ErrorKind::kInvalidArgument,
                  "vertex " + std::to_string(v) + " has core degree < 2");
    }
  }
  // Next core vertex along a degree-2 path, coming from `prev`.
  auto step = [&](Vertex prev, Vertex cur) {
    for (Vertex w : h.neighbors(cur)) {
      if (in_core[w] && w != prev) return w;
    }
    return prev;  // unreachable for core degree 2 in a simple graph
  };

  LengthedMultiGraph k;
  std::vector<char> visited(n, 0);
  for (Vertex u : core) {
    if (core_deg[u] >= 3) k.vertices.push_back(u);
  }
  for (Vertex u : k.vertices) {
    for (Vertex w : h.neighbors(u)) {
      if (!in_core[w]) continue;
      if (core_deg[w] >= 3) {
        if (u < w) k.edges.push_back({u, w, 1, {u, w}});
        continue;
      }
      if (visited[w]) continue;
      KernelEdge e{u, u, 0, {u}};
      Vertex prev = u;
      Vertex cur = w;
      while (core_deg[cur] == 2) {
        visited[cur] = 1;
        e.path.push_back(cur);
        Vertex next = step(prev, cur);
        prev = cur;
        cur = next;
      }
      e.path.push_back(cur);
      e.v = cur;
      e.length = static_cast<std::uint32_t>(e.path.size() - 1);
      k.edges.push_back(std::move(e));
    }
  }
  // Leftover degree-2 vertices lie on cycles without kernel vertices.
  for (Vertex v : core) {
    if (core_deg[v] != 2 || visited[v]) continue;
    KernelEdge e{v, v, 0, {v}};
    visited[v] = 1;
    Vertex prev = v;
    Vertex cur = step(v, v);
    while (cur != v) {
      visited[cur] = 1;
      e.path.push_back(cur);
      Vertex next = step(prev, cur);
      prev = cur;
      cur = next;
    }
    e.path.push_back(v);
    e.length = static_cast<std::uint32_t>(e.path.size() - 1);
    k.vertices.push_back(v);
    k.edges.push_back(std::move(e));
  }
  std::sort(k.vertices.begin(), k.vertices.end());
  return k;
}

std::vector<PendantTree> pendant_trees(const Graph& h, const VertexSet& core) {
  require_core(core);
  const std::size_t n = h.num_vertices();
  auto in_core = membership(n, core);
  std::vector<char> seen(n, 0);
  std::vector<PendantTree> trees;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (in_core[start] || seen[start]) continue;
    PendantTree tree;
    int attachments = 0;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      tree.vertices.push_back(v);
      for (Vertex w : h.neighbors(v)) {
        if (in_core[w]) {
          tree.attachment = w;
          tree.attachment_edge = {v, w};
          ++attachments;
        } else if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (attachments != 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "component of h minus core at vertex " +
                      std::to_string(start) + " has " +
                      std::to_string(attachments) + " core edges");
    }
    std::sort(tree.vertices.begin(), tree.vertices.end());
    trees.push_back(std::move(tree));
  }
  std::stable_sort(trees.begin(), trees.end(),
                   [](const PendantTree& a, const PendantTree& b) {
                     return a.vertices.size() > b.vertices.size();
                   });
  return trees;
}

std::vector<RootedTree> rooted_pendant_forest(const Graph& h,
                                              const VertexSet& core) {
  auto trees = pendant_trees(h, core);
  std::vector<RootedTree> forest;
  forest.reserve(core.size());
  for (Vertex v : core) forest.push_back({v, {v}});
  for (const PendantTree& t : trees) {
    auto it = std::lower_bound(core.begin(), core.end(), t.attachment);
    auto& dst = forest[it - core.begin()].vertices;
    dst.insert(dst.end(), t.vertices.begin(), t.vertices.end());
  }
  for (RootedTree& t : forest) std::sort(t.vertices.begin(), t.vertices.end());
  return forest;
}

std::int64_t excess(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::kDisconnectedGraph, "excess needs a connected graph");
  }
  return static_cast<std::int64_t>(g.num_edges()) -
         static_cast<std::int64_t>(g.num_vertices());
}

std::vector<std::size_t> degree_class_sizes(const Graph& g) {
  std::vector<std::size_t> hist;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::size_t d = g.degree(v);
    if (hist.size() <= d) hist.resize(d + 1, 0);
    ++hist[d];
  }
  if (hist.empty()) hist.push_back(0);
  return hist;
}

std::vector<Vertex> attachment_points(const Graph& h, const VertexSet& core) {
  require_core(core);
  return multi_source_bfs(h, core).nearest_source;
}

std::size_t Decomposition::core_edges() const {
  std::size_t total = 0;
  for (const KernelEdge& e : kernel.edges) total += e.length;
  return total;
}

std::int64_t Decomposition::core_excess() const {
  return static_cast<std::int64_t>(core_edges()) -
         static_cast<std::int64_t>(core.size());
}

std::int64_t Decomposition::kernel_excess() const {
  return static_cast<std::int64_t>(kernel.num_edges()) -
         static_cast<std::int64_t>(kernel.num_vertices());
}

std::size_t Decomposition::max_pendant_tree_size() const {
  return pendant_trees.empty() ? 0 : pendant_trees.front().vertices.size();
}

std::map<std::uint32_t, std::size_t> Decomposition::kernel_length_histogram()
    const {
  std::map<std::uint32_t, std::size_t> hist;
  for (const KernelEdge& e : kernel.edges) ++hist[e.length];
  return hist;
}

Decomposition decompose(const Graph& g) {
  Decomposition dec;
  dec.n_total = g.num_vertices();
  dec.degree_class_sizes = degree_class_sizes(g);
  dec.giant = giant_component(g);
  dec.h = induced_subgraph(g, dec.giant).graph;
  if (dec.h.num_vertices() == 0) return dec;
  dec.excess = excess(dec.h);
  dec.core = two_core(dec.h);
  if (dec.core.empty()) return dec;
  dec.kernel = kernel(dec.h, dec.core);
  dec.pendant_trees = pendant_trees(dec.h, dec.core);
  dec.rooted_forest = rooted_pendant_forest(dec.h, dec.core);
  dec.attachment = attachment_points(dec.h, dec.core);
  return dec;
}

BehaviorReport behaves(std::size_t giant_size, std::size_t core_size,
                       std::size_t kernel_size, std::int64_t excess,
                       std::size_t n, double eps, double delta) {
  if (!(delta > 0.0 && delta < 0.1)) {
    throw Error(ErrorKind::kDeltaOutOfRange,
                "delta must lie in (0, 1/10), got " + std::to_string(delta));
  }
  if (!(eps > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "eps must be positive");
  }
  const double nd = static_cast<double>(n);
  auto within = [&](double value, double center, double scale) {
    return (center - delta) * scale <= value && value <= (center + delta) * scale;
  };
  BehaviorReport report;
  report.delta = delta;
  report.eps = eps;
  report.checks = {
      within(static_cast<double>(giant_size), 2.0, eps * nd),
      within(static_cast<double>(core_size), 2.0, eps * eps * nd),
      within(static_cast<double>(kernel_size), 4.0 / 3.0, eps * eps * eps * nd),
      within(static_cast<double>(excess), 2.0 / 3.0, eps * eps * eps * nd),
  };
  report.behaves = std::all_of(report.checks.begin(), report.checks.end(),
                               [](bool b) { return b; });
  return report;
}

BehaviorReport behaves(const Decomposition& dec, std::size_t n, double eps,
                       double delta) {
  return behaves(dec.giant.size(), dec.core.size(), dec.kernel.num_vertices(),
                 dec.excess, n, eps, delta);
}

}  // namespace spreadlab
