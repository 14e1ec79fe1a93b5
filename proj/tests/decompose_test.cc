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

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "spreadlab/decompose.h"
#include "spreadlab/errors.h"
#include "spreadlab/randgen.h"
#include "test_graphs.h"

using namespace spreadlab;
using namespace spreadlab::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

VertexSet all_vertices(std::size_t n) {
  VertexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace

TEST_CASE("giant_component") {
  std::vector<Edge> triangles = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK(giant_component(Graph::from_edges(6, triangles)) == VertexSet{0, 1, 2});
  CHECK(giant_component(complete(2)) == VertexSet{0, 1});
}

TEST_CASE("two_core") {
  CHECK(two_core(path(6)).empty());
  CHECK(two_core(star(4)).empty());
  CHECK(two_core(cycle_with_tail(1)) == VertexSet{0, 1, 2, 3, 4});
  Graph th = theta({2, 3, 4});
  CHECK(two_core(th) == all_vertices(th.num_vertices()));
}

TEST_CASE("kernel of a theta graph") {
  Graph th = theta({2, 3, 4});
  auto k = kernel(th, two_core(th));
  CHECK(k.vertices == VertexSet{0, 1});
  REQUIRE(k.num_edges() == 3);
  std::vector<std::uint32_t> lengths;
  for (const auto& e : k.edges) {
    lengths.push_back(e.length);
    CHECK(e.path.size() == e.length + 1);
    CHECK(std::min(e.path.front(), e.path.back()) == 0);
    CHECK(std::max(e.path.front(), e.path.back()) == 1);
    for (std::size_t i = 0; i + 1 < e.path.size(); ++i) {
      CHECK(th.has_edge(e.path[i], e.path[i + 1]));
    }
  }
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::uint32_t>{2, 3, 4});
}

TEST_CASE("kernel of a bare cycle is a loop at its smallest vertex") {
  Graph c8 = cycle(8);
  auto k = kernel(c8, two_core(c8));
  CHECK(k.vertices == VertexSet{0});
  REQUIRE(k.num_edges() == 1);
  CHECK(k.edges[0].u == 0);
  CHECK(k.edges[0].v == 0);
  CHECK(k.edges[0].length == 8);
  CHECK(k.edges[0].path.front() == 0);
  CHECK(k.edges[0].path.back() == 0);
  CHECK(k.edges[0].path.size() == 9);
}

TEST_CASE("kernel and pendant trees need a core") {
  Graph s = star(5);
  CHECK(kind_of([&] { kernel(s, two_core(s)); }) == ErrorKind::kEmptyCore);
  CHECK(kind_of([&] { pendant_trees(s, two_core(s)); }) == ErrorKind::kEmptyCore);
  CHECK(kind_of([&] { rooted_pendant_forest(s, two_core(s)); }) == ErrorKind::kEmptyCore);
  CHECK(kind_of([&] { attachment_points(s, two_core(s)); }) == ErrorKind::kEmptyCore);
}

TEST_CASE("pendant trees") {
  Graph one = cycle_with_tail(1);
  auto trees = pendant_trees(one, two_core(one));
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].vertices == VertexSet{5});
  CHECK(trees[0].attachment == 0);

  Graph three = cycle_with_tail(3);
  trees = pendant_trees(three, two_core(three));
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].vertices == VertexSet{5, 6, 7});
  CHECK(trees[0].attachment == 0);
  CHECK(trees[0].attachment_edge.u == 5);
  CHECK(trees[0].attachment_edge.v == 0);
}

TEST_CASE("rooted pendant forest") {
  Graph g = cycle_with_tail(1);
  auto forest = rooted_pendant_forest(g, two_core(g));
  REQUIRE(forest.size() == 5);
  CHECK(forest[0].root == 0);
  CHECK(forest[0].vertices == VertexSet{0, 5});
  for (Vertex v = 1; v < 5; ++v) {
    CHECK(forest[v].root == v);
    CHECK(forest[v].vertices == VertexSet{v});
  }
  CHECK(attachment_points(g, two_core(g)) == std::vector<Vertex>{0, 1, 2, 3, 4, 0});
}

TEST_CASE("excess") {
  CHECK(excess(path(7)) == -1);
  CHECK(excess(star(3)) == -1);
  CHECK(excess(cycle(9)) == 0);
  Graph th = theta({2, 3, 4});
  CHECK(th.num_vertices() == 8);
  CHECK(th.num_edges() == 9);
  CHECK(excess(th) == 1);
  CHECK(kind_of([] { excess(edgeless(2)); }) == ErrorKind::kDisconnectedGraph);
}

TEST_CASE("degree_class_sizes") {
  CHECK(degree_class_sizes(complete(4)) == std::vector<std::size_t>{0, 0, 0, 4});
  CHECK(degree_class_sizes(edgeless(5)) == std::vector<std::size_t>{5});
}

TEST_CASE("degree classes of a sparse random graph decay exponentially") {
  const std::size_t n = 100000;
  Graph g = gen_gnp(n, 3.0 / n, 2024);
  auto sizes = degree_class_sizes(g);
  // Smallest C with |V_i| <= n e^-i for every i >= C.
  std::size_t smallest = sizes.size();
  while (smallest > 0 &&
         static_cast<double>(sizes[smallest - 1]) <=
             static_cast<double>(n) * std::exp(-static_cast<double>(smallest - 1))) {
    --smallest;
  }
  MESSAGE("smallest C = " << smallest);
  CHECK(smallest <= 15);
}

TEST_CASE("decompose keeps source ids and relabels the giant") {
  // Theta graph shifted by two, plus an isolated edge {0, 1}.
  Graph th = theta({2, 3, 4});
  std::vector<Edge> edges = {{0, 1}};
  for (const Edge& e : th.edges()) edges.push_back({e.u + 2, e.v + 2});
  Graph g = Graph::from_edges(th.num_vertices() + 2, edges);
  Decomposition dec = decompose(g);
  CHECK(dec.n_total == 10);
  CHECK(dec.giant == VertexSet{2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(dec.h == th);
  CHECK(dec.has_core());
  CHECK(dec.core.size() == 8);
  CHECK(dec.kernel.num_vertices() == 2);
  CHECK(dec.excess == 1);
  CHECK(dec.core_excess() == 1);
  CHECK(dec.kernel_excess() == 1);
  CHECK(dec.max_pendant_tree_size() == 0);
  CHECK(dec.kernel_length_histogram() ==
        std::map<std::uint32_t, std::size_t>{{2, 1}, {3, 1}, {4, 1}});
}

TEST_CASE("decompose of a tree has an empty core") {
  Decomposition dec = decompose(star(5));
  CHECK_FALSE(dec.has_core());
  CHECK(dec.kernel.num_edges() == 0);
  CHECK(dec.attachment.empty());
  CHECK(dec.excess == -1);
}

TEST_CASE("decomposition invariants on random graphs") {
  Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    Graph g = gen_gnp(400, 1.3 / 400, rng.next());
    Decomposition dec = decompose(g);
    if (!dec.has_core()) continue;
    // Every core vertex has core degree >= 2.
    auto mask = membership(dec.h.num_vertices(), dec.core);
    for (Vertex v : dec.core) {
      std::size_t inside = 0;
      for (Vertex w : dec.h.neighbors(v)) inside += mask[w];
      CHECK(inside >= 2);
    }
    // Suppressing degree-2 vertices keeps the excess.
    CHECK(dec.kernel_excess() == dec.core_excess());
    // Pendant trees partition the non-core part and each is a tree.
    std::size_t covered = dec.core.size();
    for (const auto& t : dec.pendant_trees) covered += t.vertices.size();
    CHECK(covered == dec.h.num_vertices());
    std::size_t forest_total = 0;
    for (const auto& t : dec.rooted_forest) {
      forest_total += t.vertices.size();
      for (Vertex v : t.vertices) CHECK(dec.attachment[v] == t.root);
    }
    CHECK(forest_total == dec.h.num_vertices());
    // Kernel edge lengths add up to the core's edge count.
    std::size_t length_sum = 0;
    for (const auto& e : dec.kernel.edges) length_sum += e.length;
    CHECK(length_sum == dec.core_edges());
  }
}

TEST_CASE("behaves on central sizes") {
  const std::size_t n = 1'000'000'000;
  const double eps = 0.01;
  auto central = behaves(20'000'000, 200'000, 1333, 667, n, eps);
  CHECK(central.checks == std::array<bool, 4>{true, true, true, true});
  CHECK(central.behaves);

  auto wide = behaves(30'000'000, 200'000, 1333, 667, n, eps);
  CHECK_FALSE(wide.checks[0]);
  CHECK_FALSE(wide.behaves);
}

TEST_CASE("behaves validates delta and eps") {
  CHECK(kind_of([] { behaves(10, 5, 2, 1, 100, 0.1, 0.2); }) ==
        ErrorKind::kDeltaOutOfRange);
  CHECK(kind_of([] { behaves(10, 5, 2, 1, 100, 0.1, 0.0); }) ==
        ErrorKind::kDeltaOutOfRange);
  CHECK(kind_of([] { behaves(10, 5, 2, 1, 100, 0.0); }) == ErrorKind::kInvalidArgument);
}

// At n = 10^6 the giant component's standard deviation is several times the
// +-delta eps n window, so this fraction stays far below 0.9.
TEST_CASE("behaving fraction of barely supercritical samples" * doctest::may_fail()) {
  const std::size_t n = 1'000'000;
  const double eps = std::pow(static_cast<double>(n), -0.25);
  const int trials = 50;
  int behaving = 0;
  for (int t = 0; t < trials; ++t) {
    Graph g = gen_gnp(n, (1.0 + eps) / static_cast<double>(n), derive_trial_seed(31, t));
    behaving += behaves(decompose(g), n, eps).behaves ? 1 : 0;
  }
  MESSAGE("behaving " << behaving << "/" << trials);
  CHECK(behaving >= 45);
}
