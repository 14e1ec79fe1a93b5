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

#include "spreadlab/oracles.h"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/errors.h"

namespace spreadlab {
namespace {

void require_small(const Graph& g, std::size_t cap) {
  if (g.num_vertices() > cap) {
    throw Error(ErrorKind::kSizeGuard,
                "oracle limited to n <= " + std::to_string(cap));
  }
}

// Calls visit(members) for every nonempty subset, as a list of vertices.
void for_each_subset(std::size_t n,
                     const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> members;
  for (std::size_t bits = 1; bits < (std::size_t{1} << n); ++bits) {
    members.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (bits & (std::size_t{1} << v)) members.push_back(v);
    }
    visit(members);
  }
}

void keep_min(std::optional<Rational>& best, const Rational& r) {
  if (!best || r < *best) best = r;
}

}  // namespace

Rational brute_force_spread(const Graph& g, std::size_t max_vertices) {
  require_small(g, max_vertices);
  const std::size_t n = g.num_vertices();
  const auto diam = static_cast<std::int64_t>(diameter(g));
  std::vector<std::int64_t> f(n, 0);
  Rational best(0);
  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v == n) {
      std::int64_t s = 0, s2 = 0;
      for (std::int64_t x : f) {
        s += x;
        s2 += x * x;
      }
      Rational var(static_cast<Int128>(n) * s2 - static_cast<Int128>(s) * s,
                   static_cast<Int128>(n) * n);
      if (best < var) best = var;
      return;
    }
    for (std::int64_t x = -diam; x <= diam; ++x) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && (x - f[w] > 1 || f[w] - x > 1)) ok = false;
      }
      if (!ok) continue;
      f[v] = x;
      assign(v + 1);
    }
  };
  assign(1);
  return best;
}

Rational brute_force_cheeger(const Graph& g) {
  require_small(g, 20);
  const std::size_t m = g.num_edges();
  std::optional<Rational> best;
  for_each_subset(g.num_vertices(), [&](const std::vector<Vertex>& s) {
    std::size_t vol = 0;
    for (Vertex v : s) vol += g.degree(v);
    if (vol == 0 || vol > m) return;
    keep_min(best, Rational(static_cast<Int128>(edge_boundary(g, s)),
                            static_cast<Int128>(vol)));
  });
  if (!best) throw Error(ErrorKind::kInvalidArgument, "no admissible set");
  return *best;
}

Rational brute_force_alpha_ratio(const Graph& g) {
  require_small(g, 20);
  const std::size_t n = g.num_vertices();
  std::optional<Rational> best;
  for_each_subset(n, [&](const std::vector<Vertex>& w) {
    if (2 * w.size() > n) return;
    auto in_w = membership(n, w);
    std::size_t count = 0;
    for (Vertex v : w) {
      for (Vertex x : g.neighbors(v)) {
        if (!in_w[x]) {
          ++count;
          break;
        }
      }
    }
    keep_min(best, Rational(static_cast<Int128>(count),
                            static_cast<Int128>(w.size())));
  });
  if (!best) throw Error(ErrorKind::kInvalidArgument, "no admissible set");
  return *best;
}

Rational brute_force_closed_neighborhood_ratio(const Graph& g,
                                               std::size_t max_size) {
  require_small(g, 20);
  const std::size_t n = g.num_vertices();
  std::optional<Rational> best;
  for_each_subset(n, [&](const std::vector<Vertex>& t) {
    if (t.size() > max_size) return;
    std::vector<char> covered(n, 0);
    for (Vertex v : t) {
      covered[v] = 1;
      for (Vertex x : g.neighbors(v)) covered[x] = 1;
    }
    std::size_t count = 0;
    for (char c : covered) count += c;
    keep_min(best, Rational(static_cast<Int128>(count),
                            static_cast<Int128>(t.size())));
  });
  if (!best) throw Error(ErrorKind::kInvalidArgument, "no admissible set");
  return *best;
}

}  // namespace spreadlab
