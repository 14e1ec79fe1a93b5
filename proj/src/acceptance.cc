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

#include "spreadlab/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "spreadlab/constructions.h"
#include "spreadlab/decompose.h"
#include "spreadlab/errors.h"
#include "spreadlab/expansion.h"
#include "spreadlab/harness.h"
#include "spreadlab/oracles.h"
#include "spreadlab/randgen.h"
#include "spreadlab/spread.h"
#include "spreadlab/vertex_function.h"

namespace spreadlab {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// Random spanning tree (each vertex joins a uniform earlier one, ids then
// shuffled) plus every other pair with probability p.
Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(std::span<Vertex>(label));
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    if (adj[a][b]) return;
    adj[a][b] = 1;
    edges.push_back({a, b});
  };
  for (Vertex v = 1; v < n; ++v) {
    add(label[v], label[rng.uniform(v)]);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adj[u][v] && rng.uniform01() < p) add(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

// Random tree plus random extra edges up to m edges in total.
Graph random_connected_graph_with_edges(Rng& rng, std::size_t n, std::size_t m) {
  Graph tree = random_connected_graph(rng, n, 0.0);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::vector<Edge> absent;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v)) absent.push_back({u, v});
    }
  }
  rng.shuffle(std::span<Edge>(absent));
  for (std::size_t i = 0; edges.size() < m && i < absent.size(); ++i) {
    edges.push_back(absent[i]);
  }
  return Graph::from_edges(n, edges);
}

CriterionResult make(int id, std::string title, double budget) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.budget_seconds = budget;
  return r;
}

CriterionResult oracle_equivalence(const AcceptanceOptions& options) {
  auto r = make(2, "exact solver matches brute-force oracle", 120);
  Rng rng(derive_trial_seed(options.seed, 2));
  const int graphs = options.reduced ? 50 : 200;
  int mismatches = 0;
  std::string first;
  for (int i = 0; i < graphs; ++i) {
    std::size_t n = 2 + rng.uniform(7);
    Graph g = random_connected_graph(rng, n, 0.1 + 0.6 * rng.uniform01());
    Rational exact = exact_spread(g).value.rational();
    Rational brute = brute_force_spread(g);
    if (exact != brute) {
      if (mismatches++ == 0) {
        first = "graph " + std::to_string(i) + ": " + exact.to_string() +
                " vs " + brute.to_string();
      }
    }
  }
  r.passed = mismatches == 0;
  r.detail = std::to_string(graphs - mismatches) + "/" + std::to_string(graphs) +
             " agree" + (first.empty() ? "" : "; first mismatch " + first);
  return r;
}

CriterionResult monotonicity(const AcceptanceOptions& options) {
  auto r = make(3, "edge monotonicity and diameter bound", 300);
  Rng rng(derive_trial_seed(options.seed, 3));
  const int graphs = options.reduced ? 50 : 200;
  int increases = 0, bound_violations = 0, done = 0;
  while (done < graphs) {
    std::size_t n = 3 + rng.uniform(8);
    Graph g = random_connected_graph(rng, n, 0.05 + 0.5 * rng.uniform01());
    std::vector<Edge> absent;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) absent.push_back({u, v});
      }
    }
    if (absent.empty()) continue;
    Edge e = absent[rng.uniform(absent.size())];
    Graph g2 = with_edge(g, e.u, e.v);
    Rational s = exact_spread(g).value.rational();
    Rational s2 = exact_spread(g2).value.rational();
    if (s < s2) ++increases;
    for (const auto& [graph, value] : {std::pair{&g, s}, std::pair{&g2, s2}}) {
      if (upper_bound_diameter(*graph).value.rational() < value) ++bound_violations;
    }
    ++done;
  }
  r.passed = increases == 0 && bound_violations == 0;
  r.detail = std::to_string(graphs) + " graphs, " + std::to_string(increases) +
             " increases, " + std::to_string(bound_violations) +
             " diameter-bound violations";
  return r;
}

CriterionResult three_level(const AcceptanceOptions& options) {
  auto r = make(4, "three-level construction meets its bound", 60);
  Rng rng(derive_trial_seed(options.seed, 4));
  const int graphs = 50;
  int feasible = 0, infeasible = 0, failures = 0;
  for (int i = 0; i < graphs; ++i) {
    std::uint32_t d = 2 + static_cast<std::uint32_t>(i % 3);
    std::size_t n = 3 * d + rng.uniform(40);
    std::size_t max_m = d * n / 2;
    std::size_t m = n - 1 + rng.uniform(max_m - (n - 1) + 1);
    Graph g = random_connected_graph_with_edges(rng, n, m);
    try {
      auto tl = three_level_function(g, d);
      ++feasible;
      if (!is_lipschitz(g, tl.f).lipschitz || tl.variance < tl.bound) ++failures;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kConstructionInfeasible) throw;
      ++infeasible;
    }
  }
  r.passed = failures == 0 && feasible > 0;
  r.detail = std::to_string(feasible) + " feasible, " + std::to_string(infeasible) +
             " infeasible (reported), " + std::to_string(failures) + " failures";
  return r;
}

CriterionResult epsilon_scaling(const AcceptanceOptions& options) {
  auto r = make(5, "kernel-path function at eps = n^-1/4", 900);
  SweepSpec spec;
  spec.preset = Preset::kEpsilon;
  spec.n_values = {100'000, 1'000'000};
  spec.params = {0.25};
  spec.trials = options.reduced ? 5 : 20;
  spec.master_seed = derive_trial_seed(options.seed, 5);
  spec.local_search = false;
  spec.exact_cap = 0;
  spec.exact_diameter_cap = 0;
  auto records = run_sweep(spec, options.threads);

  std::size_t errors = 0, behaving = 0, star_ok = 0, total = records.size();
  std::map<std::size_t, std::vector<double>> scaled;
  std::string first_error;
  for (const auto& rec : records) {
    if (!rec.ok()) {
      if (errors++ == 0) first_error = rec.error;
      continue;
    }
    if (rec.behaves.value_or(false)) ++behaving;
    if (rec.star && (*rec.star)[0] && (*rec.star)[1] && (*rec.star)[2]) ++star_ok;
    scaled[rec.n].push_back(rec.var_constructed->to_double() * *rec.eps * *rec.eps);
  }
  double small = median_of(scaled[100'000]);
  double large = median_of(scaled[1'000'000]);
  bool star_pass = static_cast<double>(star_ok) >= 0.9 * static_cast<double>(total);
  bool stable = large >= 0.5 * small;
  r.passed = errors == 0 && star_pass && stable;
  r.detail = "all " + std::to_string(total) + " trials Lipschitz" +
             (errors ? " except " + std::to_string(errors) + " errors (" + first_error + ")"
                     : std::string()) +
             "; star " + std::to_string(star_ok) + "/" + std::to_string(total) +
             "; median Var*eps^2 " + fmt(small) + " -> " + fmt(large) + "; behaving " +
             std::to_string(behaving) + "/" + std::to_string(total);
  return r;
}

CriterionResult cubic_boundedness(const AcceptanceOptions& options) {
  auto r = make(6, "bounded spread and exponential tails for 3-regular", 900);
  SweepSpec spec;
  spec.preset = Preset::kRegular;
  spec.n_values = {100, 10'000};
  spec.params = {3};
  spec.trials = options.reduced ? 5 : 20;
  spec.master_seed = derive_trial_seed(options.seed, 6);
  spec.exact_cap = 0;
  spec.exact_diameter_cap = 0;
  spec.regular_mode = RegularMode::kReject;
  auto records = run_sweep(spec, options.threads);

  std::map<std::size_t, std::vector<double>> vars;
  std::size_t errors = 0, good_tails = 0, large_trials = 0;
  for (const auto& rec : records) {
    if (!rec.ok()) {
      ++errors;
      continue;
    }
    vars[rec.n].push_back(rec.var_localsearch->to_double());
    if (rec.n == 10'000) {
      ++large_trials;
      if (rec.exp_fit && rec.exp_fit->slope < 0.0 && rec.exp_fit->r_squared >= 0.8) {
        ++good_tails;
      }
    }
  }
  double small = median_of(vars[100]);
  double large = median_of(vars[10'000]);
  bool bounded = large <= 2.0 * small;
  bool tails = large_trials > 0 &&
               static_cast<double>(good_tails) >= 0.8 * static_cast<double>(large_trials);
  r.passed = errors == 0 && bounded && tails;
  r.detail = "median spread " + fmt(small) + " (n=100) -> " + fmt(large) +
             " (n=10^4); decaying tail fits " + std::to_string(good_tails) + "/" +
             std::to_string(large_trials) +
             (errors ? "; " + std::to_string(errors) + " errors" : std::string());
  return r;
}

CriterionResult high_degree(const AcceptanceOptions& options) {
  auto r = make(7, "spread decreases with degree, near 1/4 at d = 50", 900);
  const int trials = options.reduced ? 5 : 20;
  std::vector<double> medians;
  std::size_t errors = 0;
  for (int d : {3, 10, 20, 50}) {
    SweepSpec spec;
    spec.preset = Preset::kRegular;
    spec.n_values = {2000};
    spec.params = {static_cast<double>(d)};
    spec.trials = trials;
    spec.master_seed = derive_trial_seed(options.seed, 700 + d);
    spec.exact_cap = 0;
    spec.exact_diameter_cap = 0;
    spec.regular_mode = d <= 8 ? RegularMode::kReject : RegularMode::kSequential;
    std::vector<double> vars;
    for (const auto& rec : run_sweep(spec, options.threads)) {
      if (!rec.ok()) {
        ++errors;
        continue;
      }
      vars.push_back(rec.var_localsearch->to_double());
    }
    medians.push_back(median_of(vars));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    if (medians[i] > medians[i - 1]) monotone = false;
  }
  r.passed = errors == 0 && monotone && medians.back() <= 0.40;
  r.detail = "medians d=3,10,20,50: " + fmt(medians[0]) + ", " + fmt(medians[1]) +
             ", " + fmt(medians[2]) + ", " + fmt(medians[3]) +
             (errors ? "; " + std::to_string(errors) + " errors" : std::string());
  return r;
}

CriterionResult expansion_suite(const AcceptanceOptions& options) {
  auto r = make(8, "Cheeger values, vertex expansion, spectral bound", 300);
  auto cycle = [](std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
      Vertex w = static_cast<Vertex>((v + 1) % n);
      edges.push_back({std::min(v, w), std::max(v, w)});
    }
    return Graph::from_edges(n, edges);
  };
  std::vector<Edge> k4_edges;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) k4_edges.push_back({u, v});
  }
  bool fixed = cheeger_exact(Graph::from_edges(4, k4_edges)).phi == Rational(2, 3) &&
               cheeger_exact(cycle(4)).phi == Rational(1, 2) &&
               cheeger_exact(cycle(6)).phi == Rational(1, 3);

  Rng rng(derive_trial_seed(options.seed, 8));
  const int graphs = options.reduced ? 20 : 50;
  int alpha_failures = 0, spectral_failures = 0;
  for (int i = 0; i < graphs;) {
    std::size_t d = 3 + rng.uniform(4);
    std::size_t n = 8 + rng.uniform(13);
    if ((n * d) % 2 != 0) continue;
    Graph g = gen_regular(n, d, rng.next(), RegularMode::kSequential).graph;
    if (!is_connected(g)) continue;
    ++i;
    Rational phi = cheeger_exact(g).phi;
    if (!alpha_expander_check(g, phi).verified) ++alpha_failures;
    if (cheeger_spectral_lower(g).bound > phi.to_double() + 1e-6) ++spectral_failures;
  }
  r.passed = fixed && alpha_failures == 0 && spectral_failures == 0;
  r.detail = std::string("K4/C4/C6 ") + (fixed ? "exact" : "WRONG") + "; " +
             std::to_string(graphs) + " regular graphs, " +
             std::to_string(alpha_failures) + " vertex-expansion failures, " +
             std::to_string(spectral_failures) + " spectral-bound failures";
  return r;
}

CriterionResult tail_lemma(const AcceptanceOptions& options) {
  auto r = make(9, "level-set tails on (3, 1/3)-expanding 15-regular graphs", 300);
  const std::size_t n = 30;
  const std::int64_t beta = 3;
  const int wanted = options.reduced ? 5 : 20;
  int verified = 0, attempts = 0, witnesses = 0, violations = 0;
  while (verified < wanted && attempts < 10 * wanted) {
    std::uint64_t seed = derive_trial_seed(derive_trial_seed(options.seed, 9), attempts++);
    Graph g = gen_regular(n, 15, seed, RegularMode::kSequential).graph;
    auto cert = beta_eta_check(g, Rational(beta), Rational(1, 3));
    if (!cert.verified || cert.method != CertificateMethod::kExactEnumeration) continue;
    ++verified;
    LocalSearchOptions ls;
    ls.seed = seed;
    ls.keep_all_witnesses = true;
    for (const auto& f : local_search_spread(g, ls).all_witnesses) {
      ++witnesses;
      auto values = f.ints();
      std::int64_t m = integer_median(values);
      std::vector<std::int64_t> shifted(values.begin(), values.end());
      std::size_t up = 0, down = 0;
      for (auto& x : shifted) {
        x -= m;
        up += x >= 1;
        down += x <= -1;
      }
      if (up < down) {
        for (auto& x : shifted) x = -x;
      }
      std::int64_t top = *std::max_element(shifted.begin(), shifted.end());
      std::int64_t bottom = *std::min_element(shifted.begin(), shifted.end());
      bool ok = true;
      Int128 power = 1;  // beta^(i-1)
      for (std::int64_t i = 1; i <= std::max(top, -bottom) + 1; ++i) {
        std::size_t ge = std::count_if(shifted.begin(), shifted.end(),
                                       [&](std::int64_t x) { return x >= i; });
        std::size_t le = std::count_if(shifted.begin(), shifted.end(),
                                       [&](std::int64_t x) { return x <= -i; });
        // |V>=i| <= beta^-(i-1) n/2 and |V<=-i| <= 2 beta^-i n.
        if (2 * power * ge > static_cast<Int128>(n)) ok = false;
        if (power * beta * le > 2 * static_cast<Int128>(n)) ok = false;
        power *= beta;
      }
      if (!ok) ++violations;
    }
  }
  r.passed = verified == wanted && violations == 0;
  r.detail = std::to_string(verified) + " certified graphs (" + std::to_string(attempts) +
             " sampled), " + std::to_string(witnesses) + " witnesses, " +
             std::to_string(violations) + " violations";
  return r;
}

CriterionResult decomposition(const AcceptanceOptions& options) {
  auto r = make(10, "excess identities and degree-class bounds", 300);
  Rng rng(derive_trial_seed(options.seed, 10));
  const int wanted = options.reduced ? 30 : 100;
  int samples = 0, attempts = 0, identity_failures = 0;
  while (samples < wanted && attempts < 20 * wanted) {
    ++attempts;
    std::size_t n = 200 + rng.uniform(4801);
    double c = 1.2 + 1.8 * rng.uniform01();
    Decomposition dec = decompose(gen_gnp(n, c / static_cast<double>(n), rng.next()));
    if (!dec.has_core()) continue;
    ++samples;
    if (dec.excess != dec.core_excess() || dec.excess != dec.kernel_excess()) {
      ++identity_failures;
    }
    std::size_t total = 0;
    for (const auto& e : dec.kernel.edges) total += e.length;
    if (total != dec.core_edges()) ++identity_failures;
  }

  const std::size_t n = 100'000;
  const double c = 2.0;
  const int trials = 20;
  int passing = 0, passing_from_15 = 0;
  for (int t = 0; t < trials; ++t) {
    Graph g = gen_gnp(n, c / static_cast<double>(n),
                      derive_trial_seed(derive_trial_seed(options.seed, 1010), t));
    auto classes = degree_class_sizes(g);
    bool edges_ok = static_cast<double>(g.num_edges()) <= c * static_cast<double>(n);
    auto classes_ok = [&](std::size_t from) {
      for (std::size_t i = from; i < classes.size(); ++i) {
        if (static_cast<double>(classes[i]) >
            static_cast<double>(n) * std::exp(-static_cast<double>(i))) {
          return false;
        }
      }
      return true;
    };
    passing += edges_ok && classes_ok(10);
    passing_from_15 += edges_ok && classes_ok(15);
  }
  bool degree_pass = passing >= 0.95 * trials;
  r.passed = samples == wanted && identity_failures == 0 && degree_pass;
  r.detail = std::to_string(samples) + " cored samples, " +
             std::to_string(identity_failures) + " identity failures; degree bound " +
             "for i >= 10 in " + std::to_string(passing) + "/" + std::to_string(trials) +
             " trials (i >= 15: " + std::to_string(passing_from_15) + "/" +
             std::to_string(trials) + ")";
  return r;
}

}  // namespace

CriterionResult check_complete_graphs(const VarianceFn& variance) {
  auto r = make(1, "complete graphs have spread 1/4 or 1/4 - 1/(4n^2)", 10);
  int wrong = 0;
  std::string first;
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    auto result = exact_spread(Graph::from_edges(n, edges));
    Rational expected = n % 2 == 0
                            ? Rational(1, 4)
                            : Rational(1, 4) - Rational(1, 4 * static_cast<Int128>(n) * n);
    Rational reported = result.value.rational();
    Rational recomputed = variance(result.witness->ints());
    if (reported != expected || recomputed != expected) {
      if (wrong++ == 0) {
        first = "n=" + std::to_string(n) + " gave " + recomputed.to_string() +
                ", expected " + expected.to_string();
      }
    }
  }
  r.passed = wrong == 0;
  r.detail = wrong == 0 ? "n = 2..9 exact" : std::to_string(wrong) + " wrong; " + first;
  return r;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  const auto start = Clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = check_complete_graphs(variance_exact); break;
      case 2: r = oracle_equivalence(options); break;
      case 3: r = monotonicity(options); break;
      case 4: r = three_level(options); break;
      case 5: r = epsilon_scaling(options); break;
      case 6: r = cubic_boundedness(options); break;
      case 7: r = high_degree(options); break;
      case 8: r = expansion_suite(options); break;
      case 9: r = tail_lemma(options); break;
      case 10: r = decomposition(options); break;
      default:
        throw Error(ErrorKind::kInvalidArgument,
                    "no acceptance criterion " + std::to_string(id));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidArgument && (id < 1 || id > kNumCriteria)) throw;
    r.id = id;
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = seconds_since(start);
  if (!options.reduced && r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += "; over the " + fmt(r.budget_seconds) + " s budget";
  }
  return r;
}

std::string format_criterion(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " +
         r.title + ": " + r.detail + " (" + fmt(r.seconds, 3) + " s)";
}

SelfcheckReport selfcheck(const AcceptanceOptions& options,
                          const std::function<void(const std::string&)>& log) {
  SelfcheckReport report;
  AcceptanceOptions reduced = options;
  reduced.reduced = true;
  report.passed = true;
  for (int id = 1; id <= kNumCriteria; ++id) {
    report.criteria.push_back(run_criterion(id, reduced));
    report.passed = report.passed && report.criteria.back().passed;
    if (log) log(format_criterion(report.criteria.back()));
  }
  // Sample variance instead of the population variance.
  auto corrupted = [](std::span<const std::int64_t> values) {
    Rational v = variance_exact(values);
    auto n = static_cast<Int128>(values.size());
    return n > 1 ? v * Rational(n, n - 1) : v;
  };
  report.canary_caught = !check_complete_graphs(corrupted).passed;
  report.passed = report.passed && report.canary_caught;
  if (log) {
    log(std::string(report.canary_caught ? "PASS" : "FAIL") +
        " [canary] corrupted variance is " +
        (report.canary_caught ? "rejected" : "NOT rejected"));
  }
  return report;
}

}  // namespace spreadlab
