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

// Command-line front end: graph generation, decomposition, spread bounds,
// constructions, expansion certificates, sweeps and the self-check.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spreadlab/acceptance.h"
#include "spreadlab/constructions.h"
#include "spreadlab/decompose.h"
#include "spreadlab/errors.h"
#include "spreadlab/expansion.h"
#include "spreadlab/graph_io.h"
#include "spreadlab/harness.h"
#include "spreadlab/randgen.h"
#include "spreadlab/spread.h"

namespace {

using nlohmann::json;
using namespace spreadlab;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  return out;
}

void write_values_file(const std::string& path, const VertexFunction& f) {
  auto values = f.ints();
  auto out = open_out(path);
  write_values(out, {values.begin(), values.end()});
}

json set_json(const VertexSet& s) { return json(s); }

json spread_json(const SpreadResult& r, const std::optional<std::string>& witness) {
  return {{"kind", spread_kind_name(r.kind)},
          {"value", r.value.to_string()},
          {"value_decimal", r.value.to_double()},
          {"method", r.method},
          {"witness", witness ? json(*witness) : json(nullptr)},
          {"stats",
           {{"nodes", r.stats.nodes}, {"moves", r.stats.moves}, {"restarts", r.stats.restarts}}}};
}

json certificate_json(const Certificate& c) {
  json params = json::array();
  for (const Rational& p : c.params) params.push_back(p.to_string());
  return {{"kind", certificate_kind_name(c.kind)},
          {"params", params},
          {"verified", c.verified},
          {"method", certificate_method_name(c.method)},
          {"witness", set_json(c.witness)},
          {"extremal_ratio", c.extremal_ratio ? json(c.extremal_ratio->to_string()) : json(nullptr)},
          {"sets_checked", c.sets_checked},
          {"scale_note", c.scale_note}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spreadlab: spread of graphs, decompositions and expansion certificates"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a random graph");
  std::string model = "gnp", gen_out, mode_name;
  std::size_t gen_n = 0, gen_d = 0;
  std::optional<double> gen_p, gen_c;
  std::uint64_t gen_seed = 1;
  gen->add_option("--model", model, "gnp or regular")->check(CLI::IsMember({"gnp", "regular"}));
  gen->add_option("--n", gen_n, "Vertex count")->required();
  auto* p_opt = gen->add_option("--p", gen_p, "Edge probability (gnp)");
  gen->add_option("--c", gen_c, "Mean degree, p = c/n (gnp)")->excludes(p_opt);
  gen->add_option("--d", gen_d, "Degree (regular)");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--mode", mode_name, "reject, erase or sequential (regular)");
  gen->add_option("--out", gen_out, "Output edge list")->required();

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Giant component, core, kernel, excess");
  std::string dec_in, kernel_out;
  std::optional<double> dec_eps;
  double dec_delta = kDefaultDelta;
  bool dec_json = false;
  dec_cmd->add_option("--in", dec_in, "Edge list")->required();
  dec_cmd->add_option("--eps", dec_eps, "eps with p = (1 + eps)/n, for the behaves checks");
  dec_cmd->add_option("--delta", dec_delta, "Tolerance in (0, 1/10)");
  dec_cmd->add_flag("--json", dec_json, "JSON output");
  dec_cmd->add_option("--kernel-out", kernel_out, "Write kernel edges as 'u v length'");

  // spread-exact
  auto* exact_cmd = app.add_subcommand("spread-exact", "Exact spread by branch and bound");
  std::string exact_in, exact_witness;
  std::size_t exact_cap = kDefaultExactCap;
  exact_cmd->add_option("--in", exact_in, "Edge list")->required();
  exact_cmd->add_option("--max-n", exact_cap, "Size guard");
  exact_cmd->add_option("--witness", exact_witness, "Write the optimal function here");

  // spread-estimate
  auto* est_cmd = app.add_subcommand("spread-estimate", "Local-search lower bound on the spread");
  std::string est_in, est_witness, est_start;
  LocalSearchOptions est_options;
  est_cmd->add_option("--in", est_in, "Edge list")->required();
  est_cmd->add_option("--restarts", est_options.restarts, "Random restarts");
  est_cmd->add_option("--seed", est_options.seed, "Seed");
  est_cmd->add_option("--max-moves", est_options.max_moves, "Move cap per start");
  est_cmd->add_option("--start", est_start, "Extra starting function (values file)");
  est_cmd->add_option("--witness", est_witness, "Write the best function here");

  // construct-f
  auto* cons_cmd = app.add_subcommand("construct-f", "Kernel-path or three-level function");
  std::string cons_mode, cons_in, cons_out;
  double cons_eps = 0.0, cons_delta = kDefaultDelta;
  std::uint32_t cons_d = 0;
  cons_cmd->add_option("--mode", cons_mode, "kernel or threelevel")
      ->required()
      ->check(CLI::IsMember({"kernel", "threelevel"}));
  cons_cmd->add_option("--in", cons_in, "Edge list")->required();
  cons_cmd->add_option("--eps", cons_eps, "eps (kernel mode)");
  cons_cmd->add_option("--delta", cons_delta, "delta (kernel mode)");
  cons_cmd->add_option("--d", cons_d, "Average-degree parameter (threelevel mode)");
  cons_cmd->add_option("--out", cons_out, "Values file, one integer per vertex")->required();

  // certify
  auto* cert_cmd = app.add_subcommand("certify", "Expansion certificates");
  std::string cert_in, cert_kind, cert_mode = "exact", cert_f;
  std::string cert_alpha, cert_beta, cert_eta;
  CheckOptions check;
  std::optional<double> cert_edges;
  bool cert_json = false;
  cert_cmd->add_option("--in", cert_in, "Edge list")->required();
  cert_cmd->add_option("--kind", cert_kind, "cheeger, alpha, betaeta or decorated")
      ->required()
      ->check(CLI::IsMember({"cheeger", "alpha", "betaeta", "decorated"}));
  cert_cmd->add_option("--alpha", cert_alpha, "alpha (p/q or decimal)");
  cert_cmd->add_option("--beta", cert_beta, "beta");
  cert_cmd->add_option("--eta", cert_eta, "eta");
  cert_cmd->add_option("--F", cert_f, "Vertex set F (one id per line); default the 2-core");
  cert_cmd->add_option("--mode", cert_mode, "exact or random")
      ->check(CLI::IsMember({"exact", "random"}));
  cert_cmd->add_option("--max-n", check.max_vertices, "Subset enumeration guard");
  cert_cmd->add_option("--max-combinations", check.max_combinations, "Combination guard");
  cert_cmd->add_option("--samples", check.samples, "Random samples");
  cert_cmd->add_option("--seed", check.seed, "Seed for random mode");
  cert_cmd->add_option("--edge-count", cert_edges, "Normalizing |E| for decorated checks");
  cert_cmd->add_flag("--json", cert_json, "JSON output (the default; kept for scripts)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment sweep");
  std::string sweep_preset, sweep_spec_path, sweep_out;
  int sweep_threads = 0;
  sweep_cmd->add_option("--preset", sweep_preset, "complete, regular, gnp, epsilon or highdeg");
  sweep_cmd->add_option("--spec", sweep_spec_path, "Sweep spec JSON");
  sweep_cmd->add_option("--out", sweep_out, "Output directory")->required();
  sweep_cmd->add_option("--threads", sweep_threads, "Threads (default SPREADLAB_THREADS or 1)");

  // selfcheck
  auto* self_cmd = app.add_subcommand("selfcheck", "Acceptance suite at reduced scale");
  int self_threads = 0;
  self_cmd->add_option("--threads", self_threads, "Sweep threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      GenSpec spec;
      spec.n = gen_n;
      spec.seed = gen_seed;
      if (model == "gnp") {
        if (gen_c) {
          spec = GenSpec::gnp_with_mean_degree(gen_n, *gen_c, gen_seed);
        } else if (gen_p) {
          spec.p = *gen_p;
        } else {
          throw Error(ErrorKind::kInvalidArgument, "gnp needs --p or --c");
        }
      } else {
        spec.model = GenSpec::Model::kRegular;
        spec.d = gen_d;
        spec.regular_mode =
            mode_name.empty() ? default_regular_mode(gen_d) : parse_regular_mode(mode_name);
      }
      auto sample = generate(spec);
      write_edge_list_file(gen_out, sample.graph);
      if (!sample.exactly_regular) {
        std::cerr << "note: erase mode removed loops/multi-edges; graph is not exactly "
                  << gen_d << "-regular\n";
      }
      return 0;
    }

    if (*dec_cmd) {
      Graph g = read_edge_list_file(dec_in);
      Decomposition dec = decompose(g);
      json hist = json::object();
      for (const auto& [len, count] : dec.kernel_length_histogram()) {
        hist[std::to_string(len)] = count;
      }
      json j = {{"n", g.num_vertices()},
                {"edges", g.num_edges()},
                {"giant", dec.h.num_vertices()},
                {"giant_edges", dec.h.num_edges()},
                {"core", dec.core.size()},
                {"core_edges", dec.core_edges()},
                {"kernel_vertices", dec.kernel.num_vertices()},
                {"kernel_edges", dec.kernel.num_edges()},
                {"excess", dec.excess},
                {"core_excess", dec.has_core() ? json(dec.core_excess()) : json(nullptr)},
                {"kernel_excess", dec.has_core() ? json(dec.kernel_excess()) : json(nullptr)},
                {"pendant_trees", dec.pendant_trees.size()},
                {"max_pendant_tree", dec.max_pendant_tree_size()},
                {"kernel_length_histogram", hist}};
      if (dec_eps) {
        auto report = behaves(dec, g.num_vertices(), *dec_eps, dec_delta);
        j["behaves"] = {{"eps", *dec_eps},
                        {"delta", dec_delta},
                        {"giant", report.checks[0]},
                        {"core", report.checks[1]},
                        {"kernel", report.checks[2]},
                        {"excess", report.checks[3]},
                        {"behaves", report.behaves}};
      }
      if (!kernel_out.empty()) {
        auto out = open_out(kernel_out);
        write_lengthed_multigraph(out, dec.kernel);
      }
      if (dec_json) {
        print_json(j);
      } else {
        for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
      }
      return 0;
    }

    if (*exact_cmd) {
      Graph g = read_edge_list_file(exact_in);
      auto result = exact_spread(g, exact_cap);
      std::optional<std::string> path;
      if (!exact_witness.empty()) {
        write_values_file(exact_witness, *result.witness);
        path = exact_witness;
      }
      print_json(spread_json(result, path));
      return 0;
    }

    if (*est_cmd) {
      Graph g = read_edge_list_file(est_in);
      if (!est_start.empty()) {
        std::ifstream in(est_start);
        if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + est_start);
        est_options.seeds.push_back(VertexFunction::integer(read_values(in)));
      }
      auto result = local_search_spread(g, est_options);
      std::optional<std::string> path;
      if (!est_witness.empty()) {
        write_values_file(est_witness, *result.witness);
        path = est_witness;
      }
      print_json(spread_json(result, path));
      return 0;
    }

    if (*cons_cmd) {
      Graph g = read_edge_list_file(cons_in);
      json j;
      if (cons_mode == "kernel") {
        Decomposition dec = decompose(g);
        auto kp = kernel_path_function(dec, cons_eps, cons_delta);
        auto bs = b_sets(dec, kp.f, kp.params.r, cons_eps);
        // Back to input ids; vertices outside the giant component get 0.
        std::vector<std::int64_t> full(g.num_vertices(), 0);
        auto local = kp.f.ints();
        for (std::size_t i = 0; i < dec.giant.size(); ++i) full[dec.giant[i]] = local[i];
        auto out = open_out(cons_out);
        write_values(out, full);
        j = {{"mode", "kernel"},
             {"short_threshold", kp.params.short_threshold},
             {"r", kp.params.r},
             {"long_edges", kp.long_edges},
             {"useless_vertices", kp.useless_vertices},
             {"pattern_vertices", kp.pattern_vertices},
             {"variance_on_giant", variance_exact(local).to_string()},
             {"b_plus_sizes", bs.plus_sizes},
             {"star_threshold", bs.threshold},
             {"star", bs.star},
             {"out", cons_out}};
      } else {
        auto tl = three_level_function(g, cons_d);
        write_values_file(cons_out, tl.f);
        j = {{"mode", "threelevel"},
             {"d", cons_d},
             {"low", tl.low.size()},
             {"mid", tl.mid.size()},
             {"rest", tl.rest.size()},
             {"variance", tl.variance.to_string()},
             {"bound", tl.bound.to_string()},
             {"meets_bound", !(tl.variance < tl.bound)},
             {"out", cons_out}};
      }
      print_json(j);
      return 0;
    }

    if (*cert_cmd) {
      Graph g = read_edge_list_file(cert_in);
      check.mode = cert_mode == "exact" ? CheckMode::kExact : CheckMode::kRandom;
      auto need = [](const std::string& value, const char* name) {
        if (value.empty()) {
          throw Error(ErrorKind::kInvalidArgument, std::string("--") + name + " is required");
        }
        return parse_rational(value);
      };
      json j;
      if (cert_kind == "cheeger") {
        if (check.mode == CheckMode::kExact) {
          auto result = cheeger_exact(g, check.max_vertices);
          j = {{"kind", "cheeger"},
               {"method", "exact_enumeration"},
               {"phi", result.phi.to_string()},
               {"phi_decimal", result.phi.to_double()},
               {"argmin", set_json(result.argmin)}};
        } else {
          auto bound = cheeger_spectral_lower(g);
          j = {{"kind", "cheeger"},
               {"method", "spectral_bound"},
               {"lambda2", bound.lambda2},
               {"lower_bound", bound.bound},
               {"iterations", bound.iterations}};
        }
      } else if (cert_kind == "alpha") {
        j = certificate_json(alpha_expander_check(g, need(cert_alpha, "alpha"), check));
      } else if (cert_kind == "betaeta") {
        j = certificate_json(
            beta_eta_check(g, need(cert_beta, "beta"), need(cert_eta, "eta"), check));
      } else {
        VertexSet f;
        if (!cert_f.empty()) {
          std::ifstream in(cert_f);
          if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + cert_f);
          f = read_vertex_set(in);
        } else {
          Decomposition dec = decompose(g);
          for (Vertex v : candidate_decorated_f(dec)) f.push_back(dec.giant[v]);
        }
        DecoratedOptions options;
        options.edge_count = cert_edges;
        options.exact_de1_cap = check.max_vertices;
        auto report =
            verify_decorated_expander(g, f, need(cert_alpha, "alpha").to_double(), options);
        j = certificate_json(report.certificate);
        j["params"] = json::array({cert_alpha});
        j["F_size"] = f.size();
        j["de1"] = report.de1;
        j["de2"] = report.de2;
        j["de2_prime"] = report.de2_prime;
        j["de3"] = report.de3;
        j["phi_f"] = report.phi_f;
        j["de1_method"] = certificate_method_name(report.de1_method);
        j["decorations"] = report.num_decorations;
        j["edge_count"] = report.edge_count;
        j["de2_binding_x"] = report.de2_binding_x ? json(*report.de2_binding_x) : json(nullptr);
        j["de2_prime_binding_x"] =
            report.de2_prime_binding_x ? json(*report.de2_prime_binding_x) : json(nullptr);
        j["de3_binding_vertex"] =
            report.de3_binding_vertex ? json(*report.de3_binding_vertex) : json(nullptr);
        j["max_alpha"] = report.max_alpha;
      }
      (void)cert_json;
      print_json(j);
      return 0;
    }

    if (*sweep_cmd) {
      SweepSpec spec;
      if (!sweep_spec_path.empty()) {
        json j = json::parse(read_file(sweep_spec_path));
        if (!sweep_preset.empty()) {
          if (j.contains("preset") && j["preset"] != sweep_preset) {
            throw Error(ErrorKind::kInvalidSpec, "--preset disagrees with the spec file");
          }
          j["preset"] = sweep_preset;
        }
        spec = parse_sweep_spec(j.dump());
      } else if (!sweep_preset.empty()) {
        spec = default_sweep_spec(parse_preset(sweep_preset));
      } else {
        throw Error(ErrorKind::kInvalidSpec, "sweep needs --preset or --spec");
      }
      auto records = run_sweep(spec, sweep_threads);
      std::filesystem::create_directories(sweep_out);
      const std::filesystem::path dir(sweep_out);
      {
        auto out = open_out((dir / "records.csv").string());
        write_records_csv(out, records);
      }
      {
        auto out = open_out((dir / "summary.json").string());
        out << summary_json(spec, records);
      }
      {
        auto out = open_out((dir / "timings.csv").string());
        write_timings_csv(out, records);
      }
      std::size_t failed = 0;
      for (const auto& r : records) failed += !r.ok();
      std::cerr << records.size() << " trials, " << failed << " with errors; wrote "
                << (dir / "records.csv").string() << "\n";
      return 0;
    }

    if (*self_cmd) {
      AcceptanceOptions options;
      options.threads = self_threads;
      auto report = selfcheck(options, [](const std::string& line) {
        std::cout << line << std::endl;
      });
      std::cout << (report.passed ? "selfcheck passed" : "selfcheck FAILED") << "\n";
      return report.passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
