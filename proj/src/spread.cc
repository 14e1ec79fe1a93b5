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

#include "spreadlab/spread.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <utility>

#include "spreadlab/errors.h"
#include "spreadlab/randgen.h"

namespace spreadlab {
namespace {

void require_connected(const Graph& g) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "graph has no vertices");
  }
  if (!is_connected(g)) {
    throw Error(ErrorKind::kDisconnectedGraph, "spread is infinite");
  }
}

class ExactSearch {
 public:
  explicit ExactSearch(const Graph& g) : n_(g.num_vertices()) {
    auto dist = bfs_distances(g, 0);
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[order_[i]] = i;
    earlier_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (Vertex w : g.neighbors(order_[i])) {
        if (position[w] < i) earlier_[i].push_back(position[w]);
      }
    }
    values_.assign(n_, 0);
  }

  void run() {
    values_[0] = 0;
    ++nodes_;
    descend(1, 0, 0);
  }

  std::int64_t best_numerator() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::int64_t> witness() const {
    std::vector<std::int64_t> f(n_);
    for (std::size_t i = 0; i < n_; ++i) f[order_[i]] = best_values_[i];
    return f;
  }

 private:
  void descend(std::size_t pos, std::int64_t sum, std::int64_t sum_sq) {
    if (pos == n_) {
      std::int64_t num = static_cast<std::int64_t>(n_) * sum_sq - sum * sum;
      if (num > best_) {
        best_ = num;
        best_values_ = values_;
      }
      return;
    }
    std::int64_t lo = std::numeric_limits<std::int64_t>::min();
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j : earlier_[pos]) {
      lo = std::max(lo, values_[j] - 1);
      hi = std::min(hi, values_[j] + 1);
    }
    for (std::int64_t val = lo; val <= hi; ++val) {
      ++nodes_;
      values_[pos] = val;
      descend(pos + 1, sum + val, sum_sq + val * val);
    }
  }

  std::size_t n_;
  std::vector<Vertex> order_;
  // earlier_[i]: positions (< i) of the neighbors of order_[i].
  std::vector<std::vector<std::size_t>> earlier_;
  std::vector<std::int64_t> values_;
  std::vector<std::int64_t> best_values_;
  std::int64_t best_ = -1;
  std::uint64_t nodes_ = 0;
};

// Incremental state for single-vertex +-1 moves.
class Ascent {
 public:
  Ascent(const Graph& g, std::vector<std::int64_t> f)
      : g_(g),
        n_(static_cast<Int128>(g.num_vertices())),
        f_(std::move(f)),
        up_key_(g.num_vertices()),
        down_key_(g.num_vertices()) {
    for (std::int64_t v : f_) sum_ += v;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) refresh(v);
  }

  bool can_move(Vertex v, int dir) const {
    // Moving up needs every neighbor >= f(v); moving down needs <= f(v).
    for (Vertex w : g_.neighbors(v)) {
      if (dir > 0 ? f_[w] < f_[v] : f_[w] > f_[v]) return false;
    }
    return true;
  }

  void apply(Vertex v, int dir) {
    f_[v] += dir;
    sum_ += dir;
    refresh(v);
    for (Vertex w : g_.neighbors(v)) refresh(w);
  }

  // Gain in n^2 Var of moving v by dir.
  Int128 gain(Vertex v, int dir) const {
    return n_ * (2 * Int128(dir) * f_[v] + 1) - (2 * Int128(dir) * sum_ + 1);
  }

  // Best strictly improving move: the highest movable-up vertex or the lowest
  // movable-down vertex, whichever gains more; smallest id on ties.
  bool step() {
    std::optional<std::pair<Vertex, int>> best;
    Int128 best_gain = 0;
    if (!up_.empty()) {
      Vertex v = up_.begin()->second;
      Int128 g = gain(v, +1);
      if (g > best_gain) {
        best_gain = g;
        best = {v, +1};
      }
    }
    if (!down_.empty()) {
      Vertex v = down_.begin()->second;
      Int128 g = gain(v, -1);
      if (g > best_gain) {
        best_gain = g;
        best = {v, -1};
      }
    }
    if (!best) return false;
    apply(best->first, best->second);
    return true;
  }

  std::vector<std::int64_t>& values() { return f_; }

 private:
  void refresh(Vertex v) {
    if (up_key_[v]) up_.erase({-*up_key_[v], v});
    if (down_key_[v]) down_.erase({*down_key_[v], v});
    up_key_[v].reset();
    down_key_[v].reset();
    if (can_move(v, +1)) {
      up_.insert({-f_[v], v});
      up_key_[v] = f_[v];
    }
    if (can_move(v, -1)) {
      down_.insert({f_[v], v});
      down_key_[v] = f_[v];
    }
  }

  const Graph& g_;
  Int128 n_;
  std::vector<std::int64_t> f_;
  Int128 sum_ = 0;
  std::set<std::pair<std::int64_t, Vertex>> up_;    // keyed by -f
  std::set<std::pair<std::int64_t, Vertex>> down_;  // keyed by f
  // Key under which v currently sits in up_/down_, if it does.
  std::vector<std::optional<std::int64_t>> up_key_;
  std::vector<std::optional<std::int64_t>> down_key_;
};

}  // namespace

std::string spread_kind_name(SpreadKind kind) {
  switch (kind) {
    case SpreadKind::kExact: return "exact";
    case SpreadKind::kLowerBound: return "lower_bound";
    case SpreadKind::kUpperBound: return "upper_bound";
  }
  return "?";
}

SpreadResult exact_spread(const Graph& g, std::size_t max_vertices) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  if (n > max_vertices) {
    throw Error(ErrorKind::kSizeGuard,
                "exact spread limited to n <= " + std::to_string(max_vertices) +
                    " (got " + std::to_string(n) + ")");
  }
  ExactSearch search(g);
  search.run();
  SpreadResult result;
  result.kind = SpreadKind::kExact;
  result.value = Value::exact(Rational(search.best_numerator(),
                                       static_cast<Int128>(n) * n));
  result.witness = VertexFunction::integer(search.witness());
  result.method = "branch_and_bound";
  result.stats.nodes = search.nodes();
  return result;
}

VertexFunction ascend(const Graph& g, std::vector<std::int64_t> f,
                      std::uint64_t max_moves, std::uint64_t* moves) {
  Ascent state(g, std::move(f));
  std::uint64_t count = 0;
  while (count < max_moves && state.step()) ++count;
  if (moves) *moves += count;
  return VertexFunction::integer(std::move(state.values()));
}

SpreadResult local_search_spread(const Graph& g,
                                 const LocalSearchOptions& options) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  Rng rng(options.seed);
  SpreadResult result;
  result.kind = SpreadKind::kLowerBound;
  result.method = "local_search";
  std::optional<Rational> best;

  auto consider = [&](const VertexFunction& f) {
    Rational var = variance_exact(f.ints());
    if (!best || var > *best) {
      best = var;
      result.witness = f;
    }
    if (options.keep_all_witnesses) result.all_witnesses.push_back(f);
    ++result.stats.restarts;
  };

  for (const VertexFunction& seed : options.seeds) {
    if (!seed.is_integer() || !is_lipschitz(g, seed).lipschitz) {
      throw Error(ErrorKind::kNotLipschitz,
                  "local search seeds must be integer Lipschitz functions");
    }
    auto vals = seed.ints();
    consider(ascend(g, {vals.begin(), vals.end()}, options.max_moves,
                    &result.stats.moves));
  }
  for (int r = 0; r < options.restarts; ++r) {
    Vertex u = static_cast<Vertex>(rng.uniform(n));
    auto dist = bfs_distances(g, u);
    std::vector<std::int64_t> f(dist.begin(), dist.end());
    if (r > 0) {
      // Random Lipschitz-preserving +-1 moves.
      Ascent perturb(g, std::move(f));
      for (std::size_t k = 0; k < n; ++k) {
        Vertex v = static_cast<Vertex>(rng.uniform(n));
        int dir = rng.uniform(2) == 0 ? -1 : +1;
        if (perturb.can_move(v, dir)) perturb.apply(v, dir);
      }
      f = std::move(perturb.values());
    }
    consider(ascend(g, std::move(f), options.max_moves, &result.stats.moves));
  }
  if (!best) {
    throw Error(ErrorKind::kInvalidArgument,
                "local search needs restarts > 0 or at least one seed");
  }
  result.value = Value::exact(*best);
  return result;
}

SpreadResult upper_bound_diameter(const Graph& g) {
  require_connected(g);
  const std::int64_t diam = diameter(g);
  SpreadResult result;
  result.kind = SpreadKind::kUpperBound;
  result.value = Value::exact(Rational(diam * diam, 4));
  result.method = "diameter";
  return result;
}

Rational complete_graph_spread(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "complete graph spread needs n >= 2");
  }
  const Int128 nn = static_cast<Int128>(n) * n;
  if (n % 2 == 0) return Rational(1, 4);
  return Rational(nn - 1, 4 * nn);
}

}  // namespace spreadlab
