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

#include "spreadlab/constructions.h"
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

std::vector<std::int64_t> values_of(const VertexFunction& f) {
  return {f.ints().begin(), f.ints().end()};
}

}  // namespace

TEST_CASE("three-level function on a star") {
  auto res = three_level_function(star(5), 2);
  CHECK(values_of(res.f) == std::vector<std::int64_t>{1, 2, 1, 1, 0, 0});
  CHECK(res.low == VertexSet{1});
  CHECK(res.mid == VertexSet{0, 2, 3});
  CHECK(res.rest == VertexSet{4, 5});
  CHECK(res.variance == Rational(17, 36));
  CHECK(res.bound == Rational(1, 3));
  CHECK(res.variance >= res.bound);
}

TEST_CASE("three-level function on C8") {
  auto res = three_level_function(cycle(8), 2);
  CHECK(values_of(res.f) == std::vector<std::int64_t>{2, 2, 1, 1, 1, 0, 0, 1});
  CHECK(res.variance == Rational(1, 2));
  CHECK(res.bound == Rational(3, 8));
  CHECK(three_level_bound(8, 2) == Rational(3, 8));
}

TEST_CASE("three-level function is Lipschitz and beats its bound on random graphs") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t d = 3 + static_cast<std::uint32_t>(rng.uniform(6));
    std::size_t n = 200;
    if (n * d % 2) ++n;
    Graph g = gen_regular(n, d, rng.next(), RegularMode::kSequential).graph;
    if (!is_connected(g)) continue;
    auto res = three_level_function(g, d);
    CHECK(is_lipschitz(g, res.f).lipschitz);
    CHECK(res.variance >= res.bound);
    CHECK(res.low.size() == n / (2 * d));
    CHECK(res.mid.size() == n / 2);
  }
}

TEST_CASE("three-level preconditions") {
  CHECK(kind_of([] { three_level_function(edgeless(10), 2); }) ==
        ErrorKind::kPreconditionViolated);
  CHECK(kind_of([] { three_level_function(complete(6), 2); }) ==
        ErrorKind::kPreconditionViolated);
  CHECK(kind_of([] { three_level_function(path(5), 2); }) ==
        ErrorKind::kPreconditionViolated);
}

TEST_CASE("kernel path parameters") {
  auto p = kernel_path_params(0.01, 0.05);
  CHECK(p.short_threshold == 45);
  CHECK(p.r == 21);
  CHECK(kind_of([] { kernel_path_params(0.01, 0.2); }) == ErrorKind::kDeltaOutOfRange);
  CHECK(kind_of([] { kernel_path_params(0.0, 0.05); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("kernel path function with only short kernel edges is zero") {
  Decomposition dec = decompose(theta({2, 3, 4}));
  auto res = kernel_path_function(dec, 0.01);
  CHECK(res.long_edges == 0);
  CHECK(res.pattern_vertices == 0);
  for (auto x : res.f.ints()) CHECK(x == 0);
  CHECK(variance(dec.h, res.f).rational() == Rational(0));
}

TEST_CASE("kernel path function on one long kernel edge") {
  Graph g = theta({2, 3, 100});
  Decomposition dec = decompose(g);
  auto res = kernel_path_function(dec, 0.01, 0.05);
  CHECK(res.params.r == 21);
  CHECK(res.long_edges == 1);
  CHECK(res.pattern_vertices == 84);
  CHECK(is_lipschitz(dec.h, res.f).lipschitz);
  std::size_t positive = 0;
  for (auto x : res.f.ints()) {
    CHECK(x >= 0);
    CHECK(x <= 21);
    positive += x > 0 ? 1 : 0;
  }
  CHECK(positive == 84);
  // Pattern 1..21 21..1 twice along the path, centered in its 99 internal
  // vertices: 7 zeros on the lower side, 8 on the upper.
  std::vector<std::int64_t> expected;
  for (int period = 0; period < 2; ++period) {
    for (int k = 1; k <= 21; ++k) expected.push_back(k);
    for (int k = 21; k >= 1; --k) expected.push_back(k);
  }
  const auto& edge = *std::find_if(dec.kernel.edges.begin(), dec.kernel.edges.end(),
                                   [](const KernelEdge& e) { return e.length == 100; });
  std::vector<std::int64_t> along;
  for (std::size_t i = 1; i + 1 < edge.path.size(); ++i) along.push_back(res.f.ints()[edge.path[i]]);
  REQUIRE(along.size() == 99);
  std::vector<std::int64_t> middle(along.begin() + 7, along.begin() + 91);
  if (edge.path.front() == 0) {
    CHECK(middle == expected);
  }
}

TEST_CASE("kernel path function errors") {
  CHECK(kind_of([] { kernel_path_function(decompose(star(4)), 0.01); }) ==
        ErrorKind::kEmptyCore);
  CHECK(kind_of([] { kernel_path_function(decompose(theta({2, 3, 100})), 0.2); }) ==
        ErrorKind::kEpsTooLarge);
}

TEST_CASE("b_sets") {
  Decomposition dec = decompose(theta({2, 3, 100}));
  auto res = kernel_path_function(dec, 0.01);
  auto b = b_sets(dec, res.f, res.params.r, 0.01);
  CHECK(b.core_sets[1].size() == b.core_sets[2].size());
  CHECK(b.core_sets[2].size() == b.core_sets[3].size());
  CHECK(b.core_sets[1].size() == 28);
  CHECK(b.core_sets[0].size() + 3 * 28 == dec.core.size());
  CHECK(b.threshold == doctest::Approx(0.01 * dec.n_total / 44.0));

  VertexFunction zero = VertexFunction::integer(std::vector<std::int64_t>(dec.h.num_vertices(), 0));
  auto empty = b_sets(dec, zero, 21, 0.01);
  CHECK(empty.core_sets[1].empty());
  CHECK(empty.core_sets[2].empty());
  CHECK(empty.core_sets[3].empty());
  CHECK(empty.plus_sizes == std::array<std::size_t, 3>{0, 0, 0});
  CHECK_FALSE(empty.star_all);

  CHECK(kind_of([&] { b_sets(dec, res.f, 20, 0.01); }) == ErrorKind::kRNotDivisibleBy3);
  VertexFunction wrong = VertexFunction::integer({0, 1});
  CHECK(kind_of([&] { b_sets(dec, wrong, 21, 0.01); }) == ErrorKind::kSizeMismatch);
}

TEST_CASE("b_sets sizes agree on random supercritical graphs") {
  const std::size_t n = 200000;
  const double eps = 0.06;
  int checked = 0;
  for (int t = 0; t < 5; ++t) {
    Graph g = gen_gnp(n, (1.0 + eps) / n, derive_trial_seed(3, t));
    Decomposition dec = decompose(g);
    if (!dec.has_core()) continue;
    auto res = kernel_path_function(dec, eps);
    CHECK(is_lipschitz(dec.h, res.f).lipschitz);
    auto b = b_sets(dec, res.f, res.params.r, eps);
    CHECK(b.core_sets[1].size() == b.core_sets[2].size());
    CHECK(b.core_sets[2].size() == b.core_sets[3].size());
    std::size_t plus_total = 0;
    for (auto s : b.plus_sizes) plus_total += s;
    CHECK(plus_total <= dec.h.num_vertices());
    ++checked;
  }
  CHECK(checked > 0);
}
