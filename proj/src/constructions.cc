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

#include "spreadlab/constructions.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spreadlab/errors.h"

namespace spreadlab {

Rational three_level_bound(std::size_t n, std::uint32_t d) {
  const Rational inv_d(1, d);
  return Rational(1, 4) + (inv_d - Rational(2, static_cast<Int128>(n))) *
                              (Rational(1) - inv_d);
}

ThreeLevelFunction three_level_function(const Graph& g, std::uint32_t d) {
  const std::size_t n = g.num_vertices();
  if (d == 0) {
    throw Error(ErrorKind::kPreconditionViolated, "d must be positive");
  }
  if (n < 3 * static_cast<std::size_t>(d)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "need n >= 3d (n=" + std::to_string(n) +
                    ", d=" + std::to_string(d) + ")");
  }
  if (2 * g.num_edges() > static_cast<std::size_t>(d) * n) {
    throw Error(ErrorKind::kPreconditionViolated,
                "average degree exceeds " + std::to_string(d));
  }
  if (!is_connected(g)) {
    throw Error(ErrorKind::kPreconditionViolated, "graph is disconnected");
  }

  const std::size_t t = n / (2 * static_cast<std::size_t>(d));
  const std::size_t a = n / 2;
  std::vector<Vertex> by_degree(n);
  for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex x, Vertex y) {
    return g.degree(x) < g.degree(y);
  });

  std::vector<std::int64_t> f(n, 0);
  for (std::size_t i = 0; i < t; ++i) f[by_degree[i]] = 2;
  std::size_t mid_count = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (Vertex w : g.neighbors(by_degree[i])) {
      if (f[w] == 0) {
        f[w] = 1;
        ++mid_count;
      }
    }
  }
  if (mid_count > a) {
    throw Error(ErrorKind::kConstructionInfeasible,
                "neighbors of the low-degree set number " +
                    std::to_string(mid_count) + " > floor(n/2) = " +
                    std::to_string(a));
  }
  for (Vertex v = 0; v < n && mid_count < a; ++v) {
    if (f[v] == 0) {
      f[v] = 1;
      ++mid_count;
    }
  }

  ThreeLevelFunction out;
  for (Vertex v = 0; v < n; ++v) {
    (f[v] == 2 ? out.low : f[v] == 1 ? out.mid : out.rest).push_back(v);
  }
  out.variance = variance_exact(f);
  out.bound = three_level_bound(n, d);
  out.f = VertexFunction::integer(std::move(f));
  if (!is_lipschitz(g, out.f).lipschitz) {
    throw std::logic_error("three-level function is not Lipschitz");
  }
  return out;
}

KernelPathParams kernel_path_params(double eps, double delta) {
  if (!(delta > 0.0 && delta < 0.1)) {
    throw Error(ErrorKind::kDeltaOutOfRange,
                "delta must lie in (0, 1/10), got " + std::to_string(delta));
  }
  if (!(eps > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "eps must be positive");
  }
  const double span = (1.0 - delta) / (2.0 * eps * (1.0 + delta));
  KernelPathParams params;
  params.short_threshold = static_cast<std::uint32_t>(std::floor(span));
  params.r = 3 * static_cast<std::uint32_t>(std::floor(span / 6.0));
  return params;
}

KernelPathFunction kernel_path_function(const Decomposition& dec, double eps,
                                        double delta) {
  KernelPathFunction out;
  out.params = kernel_path_params(eps, delta);
  if (!dec.has_core()) {
    throw Error(ErrorKind::kEmptyCore, "giant component has no core");
  }
  const std::uint32_t r = out.params.r;
  if (r < 3) {
    throw Error(ErrorKind::kEpsTooLarge,
                "eps=" + std::to_string(eps) + " gives r=" + std::to_string(r) +
                    " < 3");
  }
  const std::size_t period = 2 * static_cast<std::size_t>(r);
  std::vector<std::int64_t> f(dec.h.num_vertices(), 0);
  for (const KernelEdge& e : dec.kernel.edges) {
    const std::size_t len = e.length;
    if (len <= out.params.short_threshold) {
      out.useless_vertices += len - 1;
      continue;
    }
    ++out.long_edges;
    const std::size_t internal = len - 1;
    const std::size_t k = period * (internal / period);
    // Internal positions are 1..len-1; center the k-vertex window.
    const std::size_t start = (len - k + 1) / 2;
    for (std::size_t j = 0; j < k; ++j) {
      auto pos = static_cast<std::int64_t>(j % period) + 1;
      f[e.path[start + j]] = pos <= r ? pos : 2 * static_cast<std::int64_t>(r) + 1 - pos;
    }
    out.pattern_vertices += k;
  }
  auto in_core = membership(dec.h.num_vertices(), dec.core);
  for (Vertex v = 0; v < dec.h.num_vertices(); ++v) {
    if (!in_core[v]) f[v] = f[dec.attachment[v]];
  }
  out.f = VertexFunction::integer(std::move(f));
  if (!is_lipschitz(dec.h, out.f).lipschitz) {
    throw std::logic_error("kernel-path function is not Lipschitz");
  }
  auto values = out.f.ints();
  std::int64_t top = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
  if (top != (out.long_edges > 0 ? static_cast<std::int64_t>(r) : 0)) {
    throw std::logic_error("kernel-path function has unexpected maximum");
  }
  return out;
}

BSets b_sets(const Decomposition& dec, const VertexFunction& f, std::uint32_t r,
             double eps) {
  if (r == 0 || r % 3 != 0) {
    throw Error(ErrorKind::kRNotDivisibleBy3,
                "r=" + std::to_string(r) + " is not a positive multiple of 3");
  }
  if (!dec.has_core()) {
    throw Error(ErrorKind::kEmptyCore, "giant component has no core");
  }
  if (f.size() != dec.h.num_vertices()) {
    throw Error(ErrorKind::kSizeMismatch, "function is not sized for H");
  }
  const std::int64_t third = r / 3;
  auto values = f.ints();
  // Class index per core vertex; 0 for B_0.
  std::vector<int> cls(dec.h.num_vertices(), -1);
  BSets out;
  for (Vertex v : dec.core) {
    int i = 0;
    for (int j = 1; j <= 3; ++j) {
      if ((j - 1) * third < values[v] && values[v] <= j * third) i = j;
    }
    cls[v] = i;
    out.core_sets[i].push_back(v);
  }
  for (Vertex v = 0; v < dec.h.num_vertices(); ++v) {
    int i = cls[dec.attachment[v]];
    if (i > 0) ++out.plus_sizes[i - 1];
  }
  out.threshold = eps * static_cast<double>(dec.n_total) / 44.0;
  for (int i = 0; i < 3; ++i) {
    out.star[i] = static_cast<double>(out.plus_sizes[i]) >= out.threshold;
  }
  out.star_all = out.star[0] && out.star[1] && out.star[2];
  return out;
}

}  // namespace spreadlab
