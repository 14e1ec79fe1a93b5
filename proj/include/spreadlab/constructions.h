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

#ifndef SPREADLAB_CONSTRUCTIONS_H_
#define SPREADLAB_CONSTRUCTIONS_H_

#include <array>
#include <cstddef>
#include <cstdint>

#include "spreadlab/decompose.h"
#include "spreadlab/graph.h"
#include "spreadlab/rational.h"
#include "spreadlab/vertex_function.h"

namespace spreadlab {

// 1/4 + (1/d - 2/n)(1 - 1/d).
Rational three_level_bound(std::size_t n, std::uint32_t d);

struct ThreeLevelFunction {
  // 2 on the t least-degree vertices T, 1 on A, 0 on B.
  VertexFunction f;
  VertexSet low;   // T
  VertexSet mid;   // A, contains N(T) \ T
  VertexSet rest;  // B
  Rational variance;
  Rational bound;
};

// Three-level function for a connected graph of average degree <= d with
// n >= 3d: t = floor(n / 2d), T the t vertices of least degree (ties by id),
// A the neighbors of T outside T topped up with the smallest remaining ids to
// floor(n/2) vertices. Throws kPreconditionViolated (disconnected, average
// degree or n), kConstructionInfeasible when |N(T) \ T| > floor(n/2).
ThreeLevelFunction three_level_function(const Graph& g, std::uint32_t d);

struct KernelPathParams {
  // floor((1 - delta) / (2 eps (1 + delta))); edges no longer are short.
  std::uint32_t short_threshold = 0;
  // Largest multiple of 3 with 2r <= (1 - delta) / (2 eps (1 + delta)).
  std::uint32_t r = 0;
};

// Throws kDeltaOutOfRange, kInvalidArgument (eps <= 0).
KernelPathParams kernel_path_params(double eps, double delta);

struct KernelPathFunction {
  // Defined on the giant component (Decomposition::h ids).
  VertexFunction f;
  KernelPathParams params;
  std::size_t long_edges = 0;
  std::size_t useless_vertices = 0;
  // Vertices carrying the periodic pattern.
  std::size_t pattern_vertices = 0;
};

// Integer Lipschitz function built on the core: along every long kernel edge
// the pattern 1 2 .. r r .. 2 1 repeats over the longest internal sub-path
// whose vertex count is a multiple of 2r (the most central such sub-path,
// lower start on ties); 0 elsewhere on the core; pendant vertices copy their
// point of attachment. Throws kEmptyCore, kEpsTooLarge (r < 3),
// kDeltaOutOfRange.
KernelPathFunction kernel_path_function(const Decomposition& dec, double eps,
                                        double delta = kDefaultDelta);

struct BSets {
  // core_sets[0] = B_0, core_sets[i] = {v in core : (i-1)r/3 < f(v) <= ir/3}.
  std::array<VertexSet, 4> core_sets;
  // |B_i^+| = |{v in H : a(v) in B_i}| for i = 1, 2, 3 (index i - 1).
  std::array<std::size_t, 3> plus_sizes = {0, 0, 0};
  double threshold = 0.0;  // eps n / 44
  std::array<bool, 3> star = {false, false, false};
  bool star_all = false;
};

// f on H ids, as produced by kernel_path_function. Throws kRNotDivisibleBy3,
// kEmptyCore, kSizeMismatch.
BSets b_sets(const Decomposition& dec, const VertexFunction& f, std::uint32_t r,
             double eps);

}  // namespace spreadlab

#endif  // SPREADLAB_CONSTRUCTIONS_H_
