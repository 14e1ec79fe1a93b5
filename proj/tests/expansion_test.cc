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

#include "spreadlab/decompose.h"
#include "spreadlab/errors.h"
#include "spreadlab/expansion.h"
#include "spreadlab/oracles.h"
#include "spreadlab/randgen.h"
#include "spreadlab/spread.h"
#include "test_graphs.h"

using namespace spreadlab;
using namespace spreadlab::testing;

namespace {

Graph connected_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  for (std::uint64_t k = 0;; ++k) {
    Graph g = gen_regular(n, d, derive_trial_seed(seed, k), RegularMode::kSequential).graph;
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("cheeger_exact values and lexicographically smallest minimizers") {
  auto k4 = cheeger_exact(complete(4));
  CHECK(k4.phi == Rational(2, 3));
  CHECK(k4.argmin == VertexSet{0, 1});
  auto c4 = cheeger_exact(cycle(4));
  CHECK(c4.phi == Rational(1, 2));
  CHECK(c4.argmin == VertexSet{0, 1});
  auto c6 = cheeger_exact(cycle(6));
  CHECK(c6.phi == Rational(1, 3));
  CHECK(c6.argmin == VertexSet{0, 1, 2});
  auto p6 = cheeger_exact(path(6));
  CHECK(p6.phi == Rational(1, 5));
  CHECK(p6.argmin == VertexSet{0, 1, 2});
}

TEST_CASE("cheeger_exact guards") {
  CHECK_THROWS_AS(cheeger_exact(edgeless(3)), Error);
  CHECK_THROWS_AS(cheeger_exact(path(30)), Error);
  CHECK_THROWS_AS(cheeger_exact(path(10), 8), Error);
}

TEST_CASE("spectral lower bound on known spectra") {
  for (std::size_t n : {3, 4, 6, 10}) {
    auto s = cheeger_spectral_lower(complete(n));
    const double lambda2 = static_cast<double>(n) / static_cast<double>(n - 1);
    CHECK(s.lambda2 == doctest::Approx(lambda2).epsilon(1e-5));
    CHECK(s.bound <= cheeger_exact(complete(n)).phi.to_double() + 1e-6);
  }
  auto c4 = cheeger_spectral_lower(cycle(4));
  CHECK(c4.lambda2 == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(c4.bound <= 0.5 + 1e-6);
  CHECK(c4.bound == doctest::Approx(0.5).epsilon(1e-4));
  CHECK_THROWS_AS(cheeger_spectral_lower(edgeless(4)), Error);
}

TEST_CASE("spectral lower bound never exceeds the exact Cheeger constant") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(rng, 4 + rng.uniform(13), 0.2);
    CAPTURE(i);
    CHECK(cheeger_spectral_lower(g).bound <= cheeger_exact(g).phi.to_double() + 1e-6);
  }
}

TEST_CASE("alpha_expander_check") {
  auto k4 = alpha_expander_check(complete(4), Rational(1));
  CHECK(k4.verified);
  CHECK(k4.method == CertificateMethod::kExactEnumeration);
  REQUIRE(k4.extremal_ratio);
  CHECK(*k4.extremal_ratio == Rational(1));

  auto p10 = alpha_expander_check(path(10), Rational(1, 2));
  CHECK_FALSE(p10.verified);
  CHECK(p10.witness == VertexSet{0, 1, 2, 3, 4});
  REQUIRE(p10.extremal_ratio);
  CHECK(*p10.extremal_ratio == Rational(1, 5));

  CHECK_THROWS_AS(alpha_expander_check(path(4), Rational(0)), Error);
  CHECK_THROWS_AS(alpha_expander_check(path(30), Rational(1, 2)), Error);
}

TEST_CASE("randomized falsifiers find violations on a path") {
  CheckOptions opts;
  opts.mode = CheckMode::kRandom;
  opts.samples = 20000;
  opts.seed = 3;
  auto res = alpha_expander_check(path(200), Rational(1, 2), opts);
  CHECK(res.method == CertificateMethod::kRandomizedFalsifier);
  CHECK_FALSE(res.verified);
  REQUIRE_FALSE(res.witness.empty());
  CHECK(2 * res.witness.size() <= 200);

  auto be = beta_eta_check(path(200), Rational(3), Rational(1, 3), opts);
  CHECK(be.method == CertificateMethod::kRandomizedFalsifier);
  CHECK_FALSE(be.verified);
}

TEST_CASE("a regular graph expands at its Cheeger constant") {
  Rng rng(2);
  for (int i = 0; i < 15; ++i) {
    const std::size_t d = 3 + rng.uniform(3);
    std::size_t n = 8 + rng.uniform(11);
    if (n * d % 2) ++n;
    Graph g = connected_regular(n, d, rng.next());
    Rational phi = cheeger_exact(g).phi;
    CAPTURE(n);
    CAPTURE(d);
    CHECK(alpha_expander_check(g, phi).verified);
  }
}

TEST_CASE("beta_eta_check") {
  auto k25 = beta_eta_check(complete(25), Rational(3), Rational(1, 3));
  CHECK(k25.verified);
  CHECK(k25.method == CertificateMethod::kExactEnumeration);
  REQUIRE(k25.extremal_ratio);
  CHECK(*k25.extremal_ratio == Rational(5));

  auto p30 = beta_eta_check(path(30), Rational(3), Rational(1, 3));
  CHECK_FALSE(p30.verified);
  REQUIRE(p30.extremal_ratio);
  CHECK(*p30.extremal_ratio == Rational(7, 6));
  CHECK(p30.witness == VertexSet{0, 1, 2, 3, 4, 5});

  CheckOptions opts;
  opts.max_combinations = 10;
  opts.seed = 1;
  auto fallback = beta_eta_check(complete(25), Rational(3), Rational(1, 3), opts);
  CHECK(fallback.method == CertificateMethod::kRandomizedFalsifier);
  CHECK(fallback.verified);
}

TEST_CASE("random 15-regular graphs on 30 vertices are (3, 1/3)-expanders") {
  int verified = 0;
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = gen_regular(30, 15, derive_trial_seed(15, seed), RegularMode::kSequential).graph;
    auto cert = beta_eta_check(g, Rational(3), Rational(1, 3));
    CHECK(cert.method == CertificateMethod::kExactEnumeration);
    verified += cert.verified ? 1 : 0;
  }
  CHECK(verified >= 18);
}

TEST_CASE("local-search witnesses on certified expanders have geometric tails") {
  const double beta = 3.0;
  int certified = 0;
  for (int seed = 0; seed < 5; ++seed) {
    Graph g = gen_regular(30, 15, derive_trial_seed(16, seed), RegularMode::kSequential).graph;
    if (!beta_eta_check(g, Rational(3), Rational(1, 3)).verified) continue;
    ++certified;
    LocalSearchOptions opts;
    opts.seed = static_cast<std::uint64_t>(seed);
    opts.keep_all_witnesses = true;
    for (const auto& w : local_search_spread(g, opts).all_witnesses) {
      const std::int64_t m = integer_median(w.ints());
      std::vector<std::int64_t> f;
      for (auto x : w.ints()) f.push_back(x - m);
      std::size_t up = 0, down = 0;
      for (auto x : f) {
        up += x >= 1;
        down += x <= -1;
      }
      if (up < down) {
        for (auto& x : f) x = -x;
      }
      const double n = 30.0;
      for (std::int64_t i = 1; i <= 10; ++i) {
        std::size_t above = 0, below = 0;
        for (auto x : f) {
          above += x >= i;
          below += x <= -i;
        }
        CHECK(static_cast<double>(above) <= std::pow(beta, -(i - 1.0)) * n / 2 + 1e-9);
        CHECK(static_cast<double>(below) <= 2 * std::pow(beta, -static_cast<double>(i)) * n + 1e-9);
      }
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("exact checks agree with brute-force enumeration") {
  Rng rng(30);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_connected(rng, 3 + rng.uniform(8), 0.25);
    CAPTURE(i);
    CHECK(cheeger_exact(g).phi == brute_force_cheeger(g));
    auto alpha = alpha_expander_check(g, Rational(1, 2));
    REQUIRE(alpha.extremal_ratio);
    CHECK(*alpha.extremal_ratio == brute_force_alpha_ratio(g));
    CHECK(alpha.verified == (brute_force_alpha_ratio(g) >= Rational(1, 2)));

    auto be = beta_eta_check(g, Rational(2), Rational(1, 4));
    const std::size_t k = (3 * g.num_vertices()) / 8;
    if (k == 0) continue;
    REQUIRE(be.extremal_ratio);
    CHECK(*be.extremal_ratio == brute_force_closed_neighborhood_ratio(g, k));
    CHECK(be.verified == (brute_force_closed_neighborhood_ratio(g, k) >= Rational(2)));
  }
}

TEST_CASE("decorated expander with F the whole graph reduces to Cheeger") {
  Graph g = cycle(6);
  VertexSet all = {0, 1, 2, 3, 4, 5};
  auto pass = verify_decorated_expander(g, all, 0.3);
  CHECK(pass.num_decorations == 0);
  CHECK(pass.de2);
  CHECK(pass.de2_prime);
  CHECK(pass.de3);
  CHECK(pass.de1);
  CHECK(pass.certificate.verified);
  CHECK(pass.phi_f == doctest::Approx(1.0 / 3.0));
  CHECK(pass.max_alpha == doctest::Approx(1.0 / 3.0));
  CHECK_FALSE(verify_decorated_expander(g, all, 0.4).de1);
}

TEST_CASE("decorated expander on a cycle with a pendant vertex") {
  Graph g = cycle_with_tail(1);
  auto rep = verify_decorated_expander(g, VertexSet{0, 1, 2, 3, 4}, 0.2);
  CHECK(rep.num_decorations == 1);
  CHECK(rep.edge_count == 6.0);
  CHECK(rep.de1);
  CHECK(rep.de2);
  CHECK(rep.de2_prime == (1.0 <= std::exp(-0.2) * 6.0));
  CHECK(rep.de3);
  CHECK(rep.certificate.verified);
  CHECK(rep.max_alpha == doctest::Approx(0.5));
  CHECK(verify_decorated_expander(g, VertexSet{0, 1, 2, 3, 4}, rep.max_alpha).certificate.verified);
  CHECK_FALSE(verify_decorated_expander(g, VertexSet{0, 1, 2, 3, 4}, 0.6).certificate.verified);
}

TEST_CASE("decorated expander input errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kIntegerOverflow;
  };
  CHECK(kind_of([] { verify_decorated_expander(path(4), VertexSet{}, 0.1); }) ==
        ErrorKind::kEmptyF);
  CHECK(kind_of([] { verify_decorated_expander(path(4), VertexSet{0, 2}, 0.1); }) ==
        ErrorKind::kDisconnectedF);
}

TEST_CASE("decorated expanders on random giants") {
  const std::size_t n = 2000;
  for (int t = 0; t < 5; ++t) {
    Graph g = gen_gnp(n, 1.5 / n, derive_trial_seed(44, t));
    Decomposition dec = decompose(g);
    if (!dec.has_core()) continue;
    VertexSet f = candidate_decorated_f(dec);
    CHECK(f == dec.core);
    auto rep = verify_decorated_expander(dec.h, f, 0.01);
    MESSAGE("max alpha " << rep.max_alpha);
    CHECK(rep.max_alpha >= 0.0);
    CHECK(rep.max_alpha <= 1.0);
    // DE2 implies DE2' whenever the certificate holds.
    if (rep.de2) CHECK(rep.de2_prime);
    if (rep.max_alpha > 0.0) {
      auto at_max = verify_decorated_expander(dec.h, f, rep.max_alpha * (1 - 1e-9));
      CHECK(at_max.certificate.verified);
    }
  }
  CHECK_THROWS_AS(candidate_decorated_f(decompose(star(4))), Error);
  Graph th = theta({2, 3, 4});
  CHECK(candidate_decorated_f(decompose(th)).size() == th.num_vertices());
}

TEST_CASE("expansion union bound") {
  CHECK(expansion_union_bound(1e4, 20, 3, 10) < 0.0);

  // Fixed t: the bound shrinks as n grows once the exponent is positive.
  CHECK(expansion_union_bound(1e4, 20, 3, 5) > expansion_union_bound(1e5, 20, 3, 5));

  // With ln(1 + a) + 2 + a <= 2a and d >= 6(1 + a) the bound is at most
  // (e^(2a) ((1 + a) t / n)^(d/3))^t.
  for (double a : {4.0, 5.0, 8.0}) {
    REQUIRE(std::log(1 + a) + 2 + a <= 2 * a);
    for (double d = 6 * (1 + a); d <= 6 * (1 + a) + 40; d += 7) {
      for (double n : {1e3, 1e5, 1e7}) {
        for (double t = 1; (1 + a) * t <= n; t *= 3) {
          const double rhs = t * (2 * a + d / 3 * std::log((1 + a) * t / n));
          CHECK(expansion_union_bound(n, d, a, t) <= rhs + 1e-9 * std::abs(rhs));
        }
      }
    }
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}
