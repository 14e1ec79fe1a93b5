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

#include "spreadlab/randgen.h"

#include <algorithm>
#include <cmath>

#include "spreadlab/errors.h"

namespace spreadlab {

std::uint64_t Rng::uniform(std::uint64_t bound) {
  // Reject the low residue class so x % bound is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "p must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph::from_edges(n, edges);
  if (p == 1.0) {
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex w = 0; w < v; ++w) edges.push_back({w, v});
    }
    return Graph::from_edges(n, edges);
  }
  Rng rng(seed);
  edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2 * 1.1) + 16);
  const double log_q = std::log1p(-p);
  // Batagelj-Brandes: walk the lower triangle with geometric gaps.
  std::uint64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    double r = rng.uniform01();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= static_cast<std::int64_t>(v) && v < n) {
      w -= static_cast<std::int64_t>(v);
      ++v;
    }
    if (v < n) {
      edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

void check_regular_args(std::size_t n, std::size_t d) {
  if (d == 0 || d >= n) {
    throw Error(ErrorKind::kInvalidArgument,
                "regular graphs need 1 <= d < n (d=" + std::to_string(d) +
                    ", n=" + std::to_string(n) + ")");
  }
  if ((n * d) % 2 != 0) {
    throw Error(ErrorKind::kParityViolation,
                "d*n must be even (d=" + std::to_string(d) +
                    ", n=" + std::to_string(n) + ")");
  }
}

std::vector<Edge> configuration_pairing(std::size_t n, std::size_t d,
                                        Rng& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  rng.shuffle(std::span<Vertex>(stubs));
  std::vector<Edge> pairs;
  pairs.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    pairs.push_back({stubs[i], stubs[i + 1]});
  }
  return pairs;
}

bool is_simple(std::vector<Edge> pairs) {
  for (Edge& e : pairs) {
    if (e.u == e.v) return false;
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

// One pass of sequential suitable-pair sampling. Returns false on a dead end.
bool sequential_pairing(std::size_t n, std::size_t d, Rng& rng,
                        std::vector<Edge>& edges) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  std::vector<std::vector<Vertex>> adj(n);
  auto adjacent = [&](Vertex a, Vertex b) {
    const auto& list = adj[a].size() < adj[b].size() ? adj[a] : adj[b];
    Vertex other = adj[a].size() < adj[b].size() ? b : a;
    return std::find(list.begin(), list.end(), other) != list.end();
  };
  edges.clear();
  int misses = 0;
  while (!stubs.empty()) {
    std::size_t i = rng.uniform(stubs.size());
    std::size_t j = rng.uniform(stubs.size());
    Vertex a = stubs[i];
    Vertex b = stubs[j];
    if (i != j && a != b && !adjacent(a, b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
      edges.push_back({a, b});
      // Remove the higher index first so the lower one stays valid.
      for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
        stubs[k] = stubs.back();
        stubs.pop_back();
      }
      misses = 0;
      continue;
    }
    if (++misses < 64) continue;
    // Many misses in a row: check whether any suitable pair is left at all.
    VertexSet open(stubs.begin(), stubs.end());
    std::sort(open.begin(), open.end());
    open.erase(std::unique(open.begin(), open.end()), open.end());
    bool any = false;
    for (std::size_t x = 0; x < open.size() && !any; ++x) {
      for (std::size_t y = x + 1; y < open.size() && !any; ++y) {
        any = !adjacent(open[x], open[y]);
      }
    }
    if (!any) return false;
    misses = 0;
  }
  return true;
}

}  // namespace

RegularMode parse_regular_mode(const std::string& name) {
  if (name == "reject") return RegularMode::kReject;
  if (name == "erase") return RegularMode::kErase;
  if (name == "sequential") return RegularMode::kSequential;
  throw Error(ErrorKind::kInvalidArgument, "unknown regular mode '" + name + "'");
}

std::string regular_mode_name(RegularMode mode) {
  switch (mode) {
    case RegularMode::kReject: return "reject";
    case RegularMode::kErase: return "erase";
    case RegularMode::kSequential: return "sequential";
  }
  return "?";
}

RegularMode default_regular_mode(std::size_t d) {
  return d <= 8 ? RegularMode::kReject : RegularMode::kErase;
}

RegularSample gen_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                          RegularMode mode, int max_attempts) {
  check_regular_args(n, d);
  Rng rng(seed);
  RegularSample out;
  switch (mode) {
    case RegularMode::kReject:
      for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        auto pairs = configuration_pairing(n, d, rng);
        if (is_simple(pairs)) {
          out.graph = Graph::from_edges(n, pairs);
          out.attempts = attempt;
          return out;
        }
      }
      throw Error(ErrorKind::kRejectionCapExceeded,
                  "no simple pairing in " + std::to_string(max_attempts) +
                      " attempts; use erase or sequential mode for d=" +
                      std::to_string(d));
    case RegularMode::kErase: {
      auto pairs = configuration_pairing(n, d, rng);
      out.graph = Graph::simplified(n, pairs);
      out.exactly_regular = out.graph.num_edges() * 2 == n * d;
      return out;
    }
    case RegularMode::kSequential: {
      std::vector<Edge> edges;
      for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        if (sequential_pairing(n, d, rng, edges)) {
          out.graph = Graph::from_edges(n, edges);
          out.attempts = attempt;
          return out;
        }
      }
      throw Error(ErrorKind::kRejectionCapExceeded,
                  "sequential pairing hit dead ends " +
                      std::to_string(max_attempts) + " times");
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown regular mode");
}

GenSpec GenSpec::gnp_with_mean_degree(std::size_t n, double c,
                                      std::uint64_t seed) {
  GenSpec spec;
  spec.model = Model::kGnp;
  spec.n = n;
  spec.p = n == 0 ? 0.0 : c / static_cast<double>(n);
  spec.seed = seed;
  return spec;
}

RegularSample generate(const GenSpec& spec) {
  if (spec.model == GenSpec::Model::kGnp) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
      throw Error(ErrorKind::kInvalidArgument, "p must lie in [0, 1]");
    }
    return {gen_gnp(spec.n, spec.p, spec.seed), true, 1};
  }
  return gen_regular(spec.n, spec.d, spec.seed, spec.regular_mode);
}

}  // namespace spreadlab
