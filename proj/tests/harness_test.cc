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
#include <sstream>

#include <json.hpp>

#include "spreadlab/errors.h"
#include "spreadlab/harness.h"
#include "spreadlab/spread.h"

using namespace spreadlab;

namespace {

std::string records_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_records_csv(out, records);
  return out.str();
}

ErrorKind spec_error(const std::string& text) {
  try {
    parse_sweep_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("preset names round trip") {
  for (auto p : {Preset::kComplete, Preset::kRegular, Preset::kGnp, Preset::kEpsilon,
                 Preset::kHighdeg}) {
    CHECK(parse_preset(preset_name(p)) == p);
  }
  CHECK_THROWS_AS(parse_preset("lattice"), Error);
}

TEST_CASE("sweep spec parsing") {
  SweepSpec spec = parse_sweep_spec(
      R"({"preset": "regular", "n": [100, 200], "params": [3, 4], "trials": 2, "seed": 9})");
  CHECK(spec.preset == Preset::kRegular);
  CHECK(spec.n_values == std::vector<std::size_t>{100, 200});
  CHECK(spec.trials == 2);
  CHECK(spec.master_seed == 9);

  SweepSpec again = parse_sweep_spec(sweep_spec_to_json(spec));
  CHECK(again.n_values == spec.n_values);
  CHECK(again.params == spec.params);
  CHECK(again.master_seed == spec.master_seed);

  SweepSpec defaults = parse_sweep_spec(R"({"preset": "highdeg"})");
  CHECK(defaults.n_values == default_sweep_spec(Preset::kHighdeg).n_values);
  CHECK(defaults.params == default_sweep_spec(Preset::kHighdeg).params);
  CHECK(defaults.regular_mode == RegularMode::kSequential);

  CHECK(spec_error(R"({"preset": "regular", "n": [100], "colour": 1})") ==
        ErrorKind::kInvalidSpec);
  CHECK(spec_error(R"({"n": [100]})") == ErrorKind::kInvalidSpec);
  CHECK(spec_error(R"({"preset": "regular", "n": [101], "params": [3]})") ==
        ErrorKind::kInvalidSpec);
  CHECK(spec_error(R"({"preset": "gnp", "n": [100], "trials": 0})") == ErrorKind::kInvalidSpec);
  CHECK(spec_error("[1, 2]") == ErrorKind::kInvalidSpec);
  CHECK(spec_error("{") == ErrorKind::kInvalidSpec);
}

TEST_CASE("cells are n-major and seeds derive from cell and trial") {
  SweepSpec spec = default_sweep_spec(Preset::kGnp);
  spec.n_values = {10, 20};
  spec.params = {1.0, 2.0, 3.0};
  auto cells = sweep_cells(spec);
  REQUIRE(cells.size() == 6);
  CHECK(cells[1].n == 10);
  CHECK(cells[1].param == 2.0);
  CHECK(cells[3].n == 20);
  CHECK(cells[3].param == 1.0);
  CHECK(trial_seed(5, 2, 3) == derive_trial_seed(derive_trial_seed(5, 2), 3));
}

TEST_CASE("complete preset reproduces the closed form") {
  auto records = run_sweep(default_sweep_spec(Preset::kComplete), 1);
  REQUIRE(records.size() == 8);
  for (const auto& rec : records) {
    CAPTURE(rec.n);
    CHECK(rec.ok());
    REQUIRE(rec.var_exact);
    CHECK(*rec.var_exact == complete_graph_spread(rec.n));
    REQUIRE(rec.var_localsearch);
    CHECK(*rec.var_localsearch == complete_graph_spread(rec.n));
  }
}

TEST_CASE("records CSV is deterministic across reruns and thread counts") {
  SweepSpec spec = default_sweep_spec(Preset::kGnp);
  spec.n_values = {300, 600};
  spec.params = {1.5, 3.0};
  spec.trials = 3;
  spec.restarts = 3;
  const std::string one = records_csv(run_sweep(spec, 1));
  CHECK(one == records_csv(run_sweep(spec, 1)));
  CHECK(one == records_csv(run_sweep(spec, 3)));
  CHECK(one.rfind("# spreadlab-csv v1\ncell,trial,", 0) == 0);
  CHECK(one.find("runtime") == std::string::npos);

  std::ostringstream timings;
  write_timings_csv(timings, run_sweep(spec, 1));
  CHECK(timings.str().rfind("cell,trial,runtime_ms\n", 0) == 0);
}

TEST_CASE("a failing trial becomes an error row without stopping the sweep") {
  SweepSpec spec = default_sweep_spec(Preset::kEpsilon);
  spec.n_values = {1000, 100000};
  spec.trials = 1;
  auto records = run_sweep(spec, 1);
  REQUIRE(records.size() == 2);
  CHECK_FALSE(records[0].ok());
  CHECK(records[0].error.find("EpsTooLarge") != std::string::npos);
  CHECK(records[1].ok());
  CHECK(records[1].var_constructed.has_value());

  const std::string csv = records_csv(records);
  CHECK(csv.find("EpsTooLarge") != std::string::npos);
  auto summary = nlohmann::json::parse(summary_json(spec, records));
  CHECK(summary["format"] == "spreadlab-summary v1");
}

TEST_CASE("local search never ends below the construction it was seeded with") {
  SweepSpec spec = default_sweep_spec(Preset::kHighdeg);
  spec.n_values = {300};
  spec.params = {3, 10};
  spec.trials = 2;
  spec.restarts = 2;
  for (const auto& rec : run_sweep(spec, 1)) {
    CHECK(rec.ok());
    REQUIRE(rec.var_constructed);
    REQUIRE(rec.var_localsearch);
    CHECK(*rec.var_localsearch >= *rec.var_constructed);
  }
}

TEST_CASE("tail rates from synthetic counts") {
  TrialRecord geometric, stretched;
  geometric.cell = 0;
  stretched.cell = 1;
  for (int x = 0; x <= 12; ++x) {
    geometric.tail_counts.push_back(
        static_cast<std::size_t>(std::llround(std::ldexp(1.0, 20 - x))));
  }
  for (int x = 0; x <= 16; ++x) {
    stretched.tail_counts.push_back(static_cast<std::size_t>(
        std::llround(std::exp2(30.0 - std::sqrt(static_cast<double>(x))))));
  }
  auto rates = fit_tail_rates({geometric, stretched});
  REQUIRE(rates.size() == 2);
  REQUIRE(rates[0].exp_fit);
  CHECK(std::abs(rates[0].exp_fit->slope + std::log(2.0)) <= 1e-6);
  REQUIRE(rates[1].sqrt_fit);
  CHECK(std::abs(rates[1].sqrt_fit->slope + std::log(2.0)) <= 1e-6);

  TrialRecord sparse;
  sparse.tail_counts = {50, 20, 3};
  auto few = fit_tail_rates({sparse});
  REQUIRE(few.size() == 1);
  CHECK(few[0].insufficient_range);
}

TEST_CASE("median_of") {
  CHECK(median_of({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median_of({4.0, 1.0, 3.0, 2.0}) == 2.0);
  CHECK(std::isnan(median_of({})));
}

TEST_CASE("thread count from the environment") {
  setenv("SPREADLAB_THREADS", "3", 1);
  CHECK(sweep_threads_from_env() == 3);
  unsetenv("SPREADLAB_THREADS");
  CHECK(sweep_threads_from_env() == 1);
}
