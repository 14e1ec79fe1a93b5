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

#include "spreadlab/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "spreadlab/constructions.h"
#include "spreadlab/errors.h"

namespace spreadlab {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidSpec, message);
}

bool is_whole(double x) { return std::floor(x) == x; }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

template <typename T, typename F>
std::string opt(const std::optional<T>& v, F&& fmt) {
  return v ? fmt(*v) : std::string();
}

json fit_json(const std::optional<LinearFit>& fit) {
  if (!fit) return nullptr;
  return {{"slope", fit->slope}, {"intercept", fit->intercept},
          {"r_squared", fit->r_squared}};
}

json median_or_null(std::vector<double> values) {
  if (values.empty()) return nullptr;
  return median_of(std::move(values));
}

}  // namespace

std::string preset_name(Preset preset) {
  switch (preset) {
    case Preset::kComplete: return "complete";
    case Preset::kRegular: return "regular";
    case Preset::kGnp: return "gnp";
    case Preset::kEpsilon: return "epsilon";
    case Preset::kHighdeg: return "highdeg";
  }
  return "?";
}

Preset parse_preset(const std::string& name) {
  for (Preset p : {Preset::kComplete, Preset::kRegular, Preset::kGnp,
                   Preset::kEpsilon, Preset::kHighdeg}) {
    if (preset_name(p) == name) return p;
  }
  invalid("unknown preset '" + name + "'");
}

SweepSpec default_sweep_spec(Preset preset) {
  SweepSpec spec;
  spec.preset = preset;
  switch (preset) {
    case Preset::kComplete:
      spec.n_values = {2, 3, 4, 5, 6, 7, 8, 9};
      break;
    case Preset::kRegular:
      spec.n_values = {100, 1000, 10'000};
      spec.params = {3};
      spec.trials = 20;
      break;
    case Preset::kGnp:
      spec.n_values = {1000, 10'000, 100'000};
      spec.params = {2};
      spec.trials = 20;
      break;
    case Preset::kEpsilon:
      spec.n_values = {100'000, 1'000'000};
      spec.params = {0.25};
      spec.trials = 20;
      spec.local_search = false;
      break;
    case Preset::kHighdeg:
      spec.n_values = {2000};
      spec.params = {3, 10, 20, 50};
      spec.trials = 20;
      spec.regular_mode = RegularMode::kSequential;
      break;
  }
  return spec;
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  static const std::set<std::string> known = {
      "preset",   "n",        "params",       "trials",
      "seed",     "delta",    "restarts",     "local_search",
      "regular_mode", "exact_cap", "exact_diameter_cap"};
  SweepSpec spec;
  try {
    json j = json::parse(json_text);
    if (!j.is_object()) invalid("sweep spec must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (!known.count(key)) invalid("unknown sweep spec key '" + key + "'");
    }
    if (!j.contains("preset")) invalid("sweep spec needs a preset");
    spec = default_sweep_spec(parse_preset(j.at("preset").get<std::string>()));
    if (j.contains("n")) spec.n_values = j.at("n").get<std::vector<std::size_t>>();
    if (j.contains("params")) spec.params = j.at("params").get<std::vector<double>>();
    if (j.contains("trials")) spec.trials = j.at("trials").get<int>();
    if (j.contains("seed")) spec.master_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("delta")) spec.delta = j.at("delta").get<double>();
    if (j.contains("restarts")) spec.restarts = j.at("restarts").get<int>();
    if (j.contains("local_search")) spec.local_search = j.at("local_search").get<bool>();
    if (j.contains("regular_mode") && !j.at("regular_mode").is_null()) {
      try {
        spec.regular_mode = parse_regular_mode(j.at("regular_mode").get<std::string>());
      } catch (const Error& e) {
        invalid(e.what());
      }
    }
    if (j.contains("exact_cap")) spec.exact_cap = j.at("exact_cap").get<std::size_t>();
    if (j.contains("exact_diameter_cap")) {
      spec.exact_diameter_cap = j.at("exact_diameter_cap").get<std::size_t>();
    }
  } catch (const json::exception& e) {
    invalid(std::string("malformed sweep spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

std::string sweep_spec_to_json(const SweepSpec& spec) {
  json j = {{"preset", preset_name(spec.preset)},
            {"n", spec.n_values},
            {"params", spec.params},
            {"trials", spec.trials},
            {"seed", spec.master_seed},
            {"delta", spec.delta},
            {"restarts", spec.restarts},
            {"local_search", spec.local_search},
            {"regular_mode", spec.regular_mode
                                 ? json(regular_mode_name(*spec.regular_mode))
                                 : json(nullptr)},
            {"exact_cap", spec.exact_cap},
            {"exact_diameter_cap", spec.exact_diameter_cap}};
  return j.dump(2);
}

void validate(const SweepSpec& spec) {
  if (spec.n_values.empty()) invalid("n must list at least one size");
  if (spec.params.empty()) invalid("params must list at least one value");
  if (spec.trials < 1) invalid("trials must be >= 1");
  if (spec.restarts < 0) invalid("restarts must be >= 0");
  if (!(spec.delta > 0.0 && spec.delta < 0.1)) invalid("delta must lie in (0, 1/10)");
  for (std::size_t n : spec.n_values) {
    if (n < 1) invalid("n must be positive");
    if (spec.preset == Preset::kComplete && n < 2) invalid("complete preset needs n >= 2");
  }
  for (double x : spec.params) {
    switch (spec.preset) {
      case Preset::kRegular:
      case Preset::kHighdeg:
        if (!(x >= 1.0) || !is_whole(x)) invalid("degree params must be positive integers");
        for (std::size_t n : spec.n_values) {
          if (x >= static_cast<double>(n)) invalid("degree must be below n");
          if ((static_cast<std::size_t>(x) * n) % 2 != 0) invalid("d * n must be even");
        }
        break;
      case Preset::kGnp:
        if (!(x >= 0.0)) invalid("mean degree c must be >= 0");
        break;
      case Preset::kEpsilon:
        if (!(x > 0.0 && x < 1.0)) invalid("eps exponent must lie in (0, 1)");
        break;
      case Preset::kComplete:
        break;
    }
  }
}

std::vector<Cell> sweep_cells(const SweepSpec& spec) {
  std::vector<Cell> cells;
  for (std::size_t n : spec.n_values) {
    for (double param : spec.params) cells.push_back({cells.size(), n, param});
  }
  return cells;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, int trial) {
  return derive_trial_seed(derive_trial_seed(master, cell),
                           static_cast<std::uint64_t>(trial));
}

TrialRecord run_trial(const SweepSpec& spec, const Cell& cell, int trial) {
  TrialRecord rec;
  rec.cell = cell.index;
  rec.trial = trial;
  rec.n = cell.n;
  rec.param = cell.param;
  rec.seed = trial_seed(spec.master_seed, cell.index, trial);
  const auto start = std::chrono::steady_clock::now();
  try {
    Graph g;
    switch (spec.preset) {
      case Preset::kComplete:
        g = complete_graph(cell.n);
        break;
      case Preset::kRegular:
      case Preset::kHighdeg: {
        auto d = static_cast<std::size_t>(cell.param);
        auto sample = gen_regular(cell.n, d, rec.seed,
                                  spec.regular_mode.value_or(default_regular_mode(d)));
        rec.exactly_regular = sample.exactly_regular;
        g = std::move(sample.graph);
        break;
      }
      case Preset::kGnp:
        g = gen_gnp(cell.n, cell.param / static_cast<double>(cell.n), rec.seed);
        if (cell.param > 1.0) rec.eps = cell.param - 1.0;
        break;
      case Preset::kEpsilon:
        rec.eps = std::pow(static_cast<double>(cell.n), -cell.param);
        g = gen_gnp(cell.n, std::min(1.0, (1.0 + *rec.eps) / static_cast<double>(cell.n)),
                    rec.seed);
        break;
    }
    rec.edges = g.num_edges();

    const Decomposition dec = decompose(g);
    const Graph& h = dec.h;
    rec.giant = h.num_vertices();
    rec.core = dec.core.size();
    rec.kernel_vertices = dec.kernel.num_vertices();
    rec.kernel_edges = dec.kernel.num_edges();
    rec.excess = dec.excess;
    rec.max_pendant_tree = dec.max_pendant_tree_size();
    if (rec.eps) rec.behaves = behaves(dec, cell.n, *rec.eps, spec.delta).behaves;
    if (h.num_vertices() <= spec.exact_diameter_cap) {
      rec.diameter = diameter(h);
    } else {
      rec.diameter = diameter_lower_bound(h);
      rec.diameter_approx = true;
    }

    std::optional<VertexFunction> best;
    LocalSearchOptions options;
    options.restarts = spec.restarts;
    options.seed = rec.seed;
    options.keep_all_witnesses = spec.keep_witnesses;
    if (spec.preset == Preset::kEpsilon) {
      auto kp = kernel_path_function(dec, *rec.eps, spec.delta);
      rec.r = kp.params.r;
      rec.var_constructed = variance_exact(kp.f.ints());
      auto bs = b_sets(dec, kp.f, kp.params.r, *rec.eps);
      rec.star = bs.star;
      best = kp.f;
      options.seeds.push_back(std::move(kp.f));
    } else if (spec.preset == Preset::kHighdeg) {
      auto tl = three_level_function(h, static_cast<std::uint32_t>(cell.param));
      rec.var_constructed = tl.variance;
      best = tl.f;
      options.seeds.push_back(std::move(tl.f));
    }
    if (h.num_vertices() <= spec.exact_cap) {
      rec.var_exact = exact_spread(h, spec.exact_cap).value.rational();
    }
    if (spec.local_search && (options.restarts > 0 || !options.seeds.empty())) {
      auto result = local_search_spread(h, options);
      rec.var_localsearch = result.value.rational();
      best = std::move(result.witness);
      rec.witnesses = std::move(result.all_witnesses);
    }
    if (best) {
      auto profile = tail_profile(h, *best);
      rec.tail_counts = std::move(profile.counts);
      rec.exp_fit = profile.fit.exp_fit;
      rec.sqrt_fit = profile.fit.sqrt_fit;
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

int sweep_threads_from_env() {
  const char* text = std::getenv("SPREADLAB_THREADS");
  if (!text) return 1;
  int threads = std::atoi(text);
  return threads > 0 ? threads : 1;
}

std::vector<TrialRecord> run_sweep(const SweepSpec& spec, int threads) {
  validate(spec);
  if (threads <= 0) threads = sweep_threads_from_env();
  const auto cells = sweep_cells(spec);
  const std::size_t total = cells.size() * static_cast<std::size_t>(spec.trials);
  std::vector<TrialRecord> records(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      records[i] = run_trial(spec, cells[i / spec.trials],
                             static_cast<int>(i % spec.trials));
    }
  };
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
  if (count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return records;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "# spreadlab-csv v1\n"
         "cell,trial,n,param,seed,status,edges,exactly_regular,eps,giant,core,"
         "kernel_vertices,kernel_edges,excess,behaves,max_pendant_tree,diameter,"
         "diameter_approx,var_exact,var_constructed,var_localsearch,r,star1,"
         "star2,star3,exp_rate,exp_r2,sqrt_rate,sqrt_r2,tail_counts,error\n";
  auto rat = [](const Rational& r) { return r.to_string(); };
  auto flag = [](bool b) { return std::string(b ? "1" : "0"); };
  for (const TrialRecord& r : records) {
    std::string tail;
    for (std::size_t i = 0; i < r.tail_counts.size(); ++i) {
      if (i) tail += ';';
      tail += std::to_string(r.tail_counts[i]);
    }
    out << r.cell << ',' << r.trial << ',' << r.n << ',' << format_double(r.param)
        << ',' << r.seed << ',' << (r.ok() ? "ok" : "error") << ',' << r.edges << ','
        << flag(r.exactly_regular) << ','
        << opt(r.eps, format_double) << ',' << r.giant << ',' << r.core << ','
        << r.kernel_vertices << ',' << r.kernel_edges << ',' << r.excess << ','
        << opt(r.behaves, flag) << ',' << r.max_pendant_tree << ','
        << opt(r.diameter, [](std::uint32_t d) { return std::to_string(d); }) << ','
        << flag(r.diameter_approx) << ',' << opt(r.var_exact, rat) << ','
        << opt(r.var_constructed, rat) << ',' << opt(r.var_localsearch, rat) << ','
        << opt(r.r, [](std::uint32_t x) { return std::to_string(x); });
    for (int i = 0; i < 3; ++i) {
      out << ',' << (r.star ? flag((*r.star)[i]) : std::string());
    }
    auto slope = [](const LinearFit& f) { return format_double(f.slope); };
    auto r2 = [](const LinearFit& f) { return format_double(f.r_squared); };
    out << ',' << opt(r.exp_fit, slope) << ',' << opt(r.exp_fit, r2) << ','
        << opt(r.sqrt_fit, slope) << ',' << opt(r.sqrt_fit, r2) << ',' << tail << ','
        << csv_quote(r.error) << '\n';
  }
}

void write_timings_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "cell,trial,runtime_ms\n";
  for (const TrialRecord& r : records) {
    out << r.cell << ',' << r.trial << ',' << format_double(r.runtime_ms) << '\n';
  }
}

std::vector<CellTailRates> fit_tail_rates(const std::vector<TrialRecord>& records) {
  std::map<std::size_t, std::vector<double>> sums;
  std::map<std::size_t, std::size_t> used;
  for (const TrialRecord& r : records) {
    auto& sum = sums[r.cell];
    if (!r.ok() || r.tail_counts.empty()) continue;
    if (sum.size() < r.tail_counts.size()) sum.resize(r.tail_counts.size(), 0.0);
    for (std::size_t x = 0; x < r.tail_counts.size(); ++x) {
      sum[x] += static_cast<double>(r.tail_counts[x]);
    }
    ++used[r.cell];
  }
  std::vector<CellTailRates> out;
  for (const auto& [cell, sum] : sums) {
    CellTailRates rates;
    rates.cell = cell;
    rates.trials_used = used[cell];
    auto fit = fit_tail(sum);
    rates.exp_fit = fit.exp_fit;
    rates.sqrt_fit = fit.sqrt_fit;
    rates.insufficient_range = !fit.exp_fit;
    out.push_back(rates);
  }
  return out;
}

double median_of(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  auto mid = values.begin() + (values.size() - 1) / 2;
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

std::string summary_json(const SweepSpec& spec,
                         const std::vector<TrialRecord>& records) {
  json cells = json::array();
  const auto rates = fit_tail_rates(records);
  for (const Cell& cell : sweep_cells(spec)) {
    std::vector<double> ls, constructed, constructed_eps2, exact, giant, core, diam;
    std::size_t trials = 0, ok = 0, behaving = 0, star_all = 0;
    json errors = json::array();
    for (const TrialRecord& r : records) {
      if (r.cell != cell.index) continue;
      ++trials;
      if (!r.ok()) {
        errors.push_back({{"trial", r.trial}, {"error", r.error}});
        continue;
      }
      ++ok;
      if (r.var_localsearch) ls.push_back(r.var_localsearch->to_double());
      if (r.var_constructed) {
        constructed.push_back(r.var_constructed->to_double());
        if (r.eps) constructed_eps2.push_back(r.var_constructed->to_double() * *r.eps * *r.eps);
      }
      if (r.var_exact) exact.push_back(r.var_exact->to_double());
      giant.push_back(static_cast<double>(r.giant));
      core.push_back(static_cast<double>(r.core));
      if (r.diameter) diam.push_back(*r.diameter);
      if (r.behaves.value_or(false)) ++behaving;
      if (r.star && (*r.star)[0] && (*r.star)[1] && (*r.star)[2]) ++star_all;
    }
    json tail = nullptr;
    for (const auto& rate : rates) {
      if (rate.cell != cell.index) continue;
      tail = {{"trials_used", rate.trials_used},
              {"exp_fit", fit_json(rate.exp_fit)},
              {"sqrt_fit", fit_json(rate.sqrt_fit)},
              {"insufficient_range", rate.insufficient_range}};
    }
    cells.push_back({{"cell", cell.index},
                     {"n", cell.n},
                     {"param", cell.param},
                     {"trials", trials},
                     {"ok_trials", ok},
                     {"median_var_localsearch", median_or_null(ls)},
                     {"median_var_constructed", median_or_null(constructed)},
                     {"median_var_constructed_eps2", median_or_null(constructed_eps2)},
                     {"median_var_exact", median_or_null(exact)},
                     {"median_giant", median_or_null(giant)},
                     {"median_core", median_or_null(core)},
                     {"median_diameter", median_or_null(diam)},
                     {"behaving_trials", behaving},
                     {"star_all_trials", star_all},
                     {"tail", tail},
                     {"errors", errors}});
  }
  json doc = {{"format", "spreadlab-summary v1"},
              {"spec", json::parse(sweep_spec_to_json(spec))},
              {"cells", cells}};
  return doc.dump(2) + "\n";
}

}  // namespace spreadlab
