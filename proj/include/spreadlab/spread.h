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

#ifndef SPREADLAB_SPREAD_H_
#define SPREADLAB_SPREAD_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/graph.h"
#include "spreadlab/rational.h"
#include "spreadlab/vertex_function.h"

namespace spreadlab {

enum class SpreadKind { kExact, kLowerBound, kUpperBound };
std::string spread_kind_name(SpreadKind kind);

struct SpreadStats {
  std::uint64_t nodes = 0;
  std::uint64_t moves = 0;
  int restarts = 0;
};

struct SpreadResult {
  SpreadKind kind = SpreadKind::kExact;
  Value value;
  std::optional<VertexFunction> witness;
  std::string method;
  SpreadStats stats;
  // Final function of every local-search start, when requested.
  std::vector<VertexFunction> all_witnesses;
};

inline constexpr std::size_t kDefaultExactCap = 20;

// Exhaustive search over integer Lipschitz functions. Vertices are assigned in
// BFS order from vertex 0, which is pinned to 0; each later vertex ranges over
// the intersection of [f(u) - 1, f(u) + 1] over its assigned neighbors.
// Throws kDisconnectedGraph, kSizeGuard (n > max_vertices).
SpreadResult exact_spread(const Graph& g,
                          std::size_t max_vertices = kDefaultExactCap);

struct LocalSearchOptions {
  int restarts = 20;
  std::uint64_t seed = 0;
  std::uint64_t max_moves = 1'000'000;
  // Extra starting functions (must be Lipschitz integer functions), run
  // before the random restarts.
  std::vector<VertexFunction> seeds;
  bool keep_all_witnesses = false;
};

// Steepest strictly-improving ascent over single-vertex +-1 moves that keep f
// Lipschitz, from distance functions d(., u) for random u (restarts after the
// first also get a random Lipschitz perturbation). Lower bound on the spread.
// Throws kDisconnectedGraph, kNotLipschitz for a bad seed.
SpreadResult local_search_spread(const Graph& g,
                                 const LocalSearchOptions& options = {});

// Ascent from one starting function; exposed for tests and the harness.
VertexFunction ascend(const Graph& g, std::vector<std::int64_t> f,
                      std::uint64_t max_moves, std::uint64_t* moves = nullptr);

// diameter^2 / 4. Throws kDisconnectedGraph.
SpreadResult upper_bound_diameter(const Graph& g);

// 1/4 for even n, 1/4 - 1/(4 n^2) for odd n. Throws kInvalidArgument (n < 2).
Rational complete_graph_spread(std::size_t n);

}  // namespace spreadlab

#endif  // SPREADLAB_SPREAD_H_
