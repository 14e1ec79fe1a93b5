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
#include <numeric>

#include "spreadlab/errors.h"
#include "spreadlab/oracles.h"
#include "spreadlab/spread.h"
#include "spreadlab/vertex_function.h"
#include "test_graphs.h"

using namespace spreadlab;
using namespace spreadlab::testing;

namespace {

VertexFunction ints(std::vector<std::int64_t> values) {
  return VertexFunction::integer(std::move(values));
}

Rational exact_value(const Graph& g) { return exact_spread(g).value.rational(); }

}  // namespace

TEST_CASE("is_lipschitz") {
  Graph g = cycle(7);
  auto dist = bfs_distances(g, 3);
  CHECK(is_lipschitz(g, ints(std::vector<std::int64_t>(dist.begin(), dist.end()))).lipschitz);
  CHECK(is_lipschitz(g, ints({4, 4, 4, 4, 4, 4, 4})).lipschitz);

  auto bad = is_lipschitz(complete(2), ints({0, 2}));
  CHECK_FALSE(bad.lipschitz);
  REQUIRE(bad.violating_edge);
  CHECK(*bad.violating_edge == Edge{0, 1});

  CHECK(is_lipschitz(path(3), VertexFunction::real({0.0, 0.5, 1.5})).lipschitz);
  CHECK_FALSE(is_lipschitz(path(3), VertexFunction::real({0.0, 0.5, 1.6})).lipschitz);
  CHECK_THROWS_AS(is_lipschitz(path(3), ints({0, 1})), Error);
}

TEST_CASE("variance") {
  CHECK(variance(complete(2), ints({0, 1})).rational() == Rational(1, 4));
  CHECK(variance(path(3), ints({0, 1, 2})).rational() == Rational(2, 3));
  CHECK(variance(path(3), ints({5, 5, 5})).rational() == Rational(0));
  Value real = variance(path(3), VertexFunction::real({0.0, 1.0, 2.0}));
  CHECK_FALSE(real.is_exact());
  CHECK(real.to_double() == doctest::Approx(2.0 / 3.0));
  CHECK(Value::exact(Rational(2, 3)).to_string() == "2/3");
}

TEST_CASE("median is the lower median") {
  CHECK(median(ints({0, 0, 1})) == 0);
  CHECK(median(ints({0, 1})) == 0);
  CHECK(median(ints({1, 2, 3, 4})) == 2);
  CHECK(median(ints({4, 3, 2, 1})) == 2);
  CHECK(integer_median(std::vector<std::int64_t>{7}) == 7);
}

TEST_CASE("tail_profile") {
  auto prof = tail_profile(path(4), ints({0, 0, 1, 2}));
  CHECK(prof.median == 0);
  CHECK(prof.count(0) == 4);
  CHECK(prof.count(1) == 2);
  CHECK(prof.count(2) == 1);
  CHECK(prof.count(3) == 0);

  auto flat = tail_profile(path(4), ints({3, 3, 3, 3}));
  CHECK(flat.count(1) == 0);
  CHECK(flat.count(5) == 0);
}

TEST_CASE("exact_spread matches frozen brute-force values") {
  const Rational quarter(1, 4);
  const Rational k_values[] = {quarter,        Rational(2, 9),   quarter, Rational(6, 25),
                               quarter,        Rational(12, 49), quarter, Rational(20, 81)};
  for (std::size_t n = 2; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(exact_value(complete(n)) == k_values[n - 2]);
  }
  CHECK(exact_value(path(3)) == Rational(2, 3));
  CHECK(exact_value(cycle(4)) == Rational(1, 2));
  CHECK(exact_value(path(5)) == Rational(2));
  CHECK(exact_value(cycle(6)) == Rational(11, 12));
  CHECK(exact_value(star(5)) == Rational(29, 36));
}

TEST_CASE("exact_spread witness is Lipschitz and attains the value") {
  for (const Graph& g : {path(5), cycle(6), star(5), theta({2, 3, 4})}) {
    auto res = exact_spread(g);
    CHECK(res.kind == SpreadKind::kExact);
    REQUIRE(res.witness);
    CHECK(is_lipschitz(g, *res.witness).lipschitz);
    CHECK(variance(g, *res.witness).rational() == res.value.rational());
  }
}

TEST_CASE("exact_spread agrees with the brute-force oracle") {
  Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(rng, 2 + rng.uniform(7), 0.25);
    CAPTURE(i);
    CHECK(exact_value(g) == brute_force_spread(g));
  }
}

TEST_CASE("exact_spread guards") {
  CHECK_THROWS_AS(exact_spread(edgeless(3)), Error);
  CHECK_THROWS_AS(exact_spread(path(25)), Error);
  try {
    exact_spread(path(25));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSizeGuard);
  }
}

TEST_CASE("local search closes the gap on small graphs") {
  CHECK(local_search_spread(path(5)).value.rational() == Rational(2));
  CHECK(local_search_spread(complete(6)).value.rational() == Rational(1, 4));

  Rng rng(5);
  int matched = 0;
  const int graphs = 100;
  for (int i = 0; i < graphs; ++i) {
    Graph g = random_connected(rng, 4 + rng.uniform(9), 0.2);
    LocalSearchOptions opts;
    opts.seed = rng.next();
    auto ls = local_search_spread(g, opts);
    Rational exact = exact_value(g);
    CHECK(ls.kind == SpreadKind::kLowerBound);
    CHECK(ls.value.rational() <= exact);
    REQUIRE(ls.witness);
    CHECK(is_lipschitz(g, *ls.witness).lipschitz);
    matched += ls.value.rational() == exact ? 1 : 0;
  }
  MESSAGE("local search matched exact on " << matched << "/" << graphs);
  CHECK(matched >= 90);
}

TEST_CASE("local search honors seeds and rejects bad ones") {
  LocalSearchOptions opts;
  opts.restarts = 0;
  opts.seeds = {ints({0, 1, 2, 3, 4})};
  CHECK(local_search_spread(path(5), opts).value.rational() == Rational(2));
  opts.seeds = {ints({0, 2, 2, 3, 4})};
  CHECK_THROWS_AS(local_search_spread(path(5), opts), Error);
}

TEST_CASE("ascend only makes improving Lipschitz moves") {
  Graph g = path(6);
  std::uint64_t moves = 0;
  VertexFunction f = ascend(g, {0, 0, 0, 0, 0, 0}, 1000, &moves);
  CHECK(is_lipschitz(g, f).lipschitz);
  CHECK(variance(g, f).rational() > Rational(0));
  CHECK(moves > 0);
}

TEST_CASE("closed forms") {
  CHECK(upper_bound_diameter(complete(5)).value.to_double() == doctest::Approx(0.25));
  CHECK(upper_bound_diameter(path(3)).value.to_double() == doctest::Approx(1.0));
  CHECK(upper_bound_diameter(cycle(6)).value.to_double() == doctest::Approx(2.25));
  CHECK(upper_bound_diameter(cycle(6)).kind == SpreadKind::kUpperBound);

  CHECK(complete_graph_spread(2) == Rational(1, 4));
  CHECK(complete_graph_spread(3) == Rational(2, 9));
  CHECK(complete_graph_spread(7) == Rational(48, 196));
  CHECK_THROWS_AS(complete_graph_spread(1), Error);
}

TEST_CASE("spread is shift invariant and monotone under edge addition") {
  Rng rng(8);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_connected(rng, 4 + rng.uniform(5), 0.15);
    auto res = exact_spread(g);
    std::vector<std::int64_t> shifted(res.witness->ints().begin(), res.witness->ints().end());
    for (auto& x : shifted) x += 17;
    CHECK(variance(g, ints(shifted)).rational() == res.value.rational());

    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
        if (g.has_edge(u, v)) continue;
        CHECK(exact_value(with_edge(g, u, v)) <= res.value.rational());
        u = static_cast<Vertex>(g.num_vertices());
        break;
      }
    }
    CHECK(res.value.to_double() <= upper_bound_diameter(g).value.to_double() + 1e-12);
  }
}

TEST_CASE("level-set decay") {
  CHECK(verify_levelset_decay(cycle(6), ints({2, 2, 2, 2, 2, 2}), 0.5).passed);

  std::vector<std::int64_t> identity(20);
  std::iota(identity.begin(), identity.end(), 0);
  auto report = verify_levelset_decay(path(20), ints(identity), 0.3);
  CHECK_FALSE(report.passed);
  CHECK(report.violation_k.has_value());

  CHECK_THROWS_AS(verify_levelset_decay(path(3), ints({0, 2, 2}), 0.3), Error);
  CHECK_THROWS_AS(verify_levelset_decay(path(3), ints({0, 1, 2}), 0.0), Error);
}

TEST_CASE("spread_upper_from_tails") {
  auto upper = [](std::vector<std::int64_t> values) {
    return spread_upper_from_tails(level_counts(values), values.size());
  };
  CHECK(upper({0, 0, 1, 1}) == doctest::Approx(0.25));
  CHECK(upper({-1, 0, 0, 1}) == doctest::Approx(13.0 / 16.0));
  CHECK(upper({0, 1, 2, 3, 4}) == doctest::Approx(12.0 / 5.0));
  CHECK(level_counts(std::vector<std::int64_t>{-1, 0, 0, 1}) ==
        std::map<std::int64_t, std::size_t>{{-1, 1}, {0, 2}, {1, 1}});

  auto k6 = exact_spread(complete(6));
  std::vector<std::int64_t> w(k6.witness->ints().begin(), k6.witness->ints().end());
  CHECK(upper(w) == doctest::Approx(0.25));

  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_connected(rng, 3 + rng.uniform(6), 0.2);
    auto res = exact_spread(g);
    std::vector<std::int64_t> f(res.witness->ints().begin(), res.witness->ints().end());
    CHECK(res.value.to_double() <= upper(f) + 1e-12);
  }
}

TEST_CASE("tail fits recover synthetic rates") {
  std::vector<double> geometric, stretched;
  for (int x = 0; x <= 12; ++x) {
    geometric.push_back(1e6 * std::pow(2.0, -x));
    stretched.push_back(1e6 * std::pow(2.0, -std::sqrt(static_cast<double>(x))));
  }
  auto fit = fit_tail(geometric);
  REQUIRE(fit.exp_fit);
  CHECK(fit.exp_fit->slope == doctest::Approx(-std::log(2.0)).epsilon(1e-6));
  auto sfit = fit_tail(stretched);
  REQUIRE(sfit.sqrt_fit);
  CHECK(sfit.sqrt_fit->slope == doctest::Approx(-std::log(2.0)).epsilon(1e-6));

  std::vector<double> short_tail = {100, 50, 5};
  CHECK_FALSE(fit_tail(short_tail).exp_fit);
}
