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

#ifndef SPREADLAB_HARNESS_H_
#define SPREADLAB_HARNESS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spreadlab/decompose.h"
#include "spreadlab/randgen.h"
#include "spreadlab/rational.h"
#include "spreadlab/spread.h"
#include "spreadlab/vertex_function.h"

namespace spreadlab {

enum class Preset { kComplete, kRegular, kGnp, kEpsilon, kHighdeg };

std::string preset_name(Preset preset);
// Throws kInvalidSpec.
Preset parse_preset(const std::string& name);

struct SweepSpec {
  Preset preset = Preset::kRegular;
  std::vector<std::size_t> n_values;
  // Per preset: d (regular, highdeg), c with p = c/n (gnp), the exponent a
  // of eps = n^-a (epsilon); ignored by complete.
  std::vector<double> params = {0.0};
  int trials = 1;
  std::uint64_t master_seed = 1;
  double delta = kDefaultDelta;
  int restarts = 20;
  // Skip local search (the constructions are still evaluated).
  bool local_search = true;
  // Generator for regular/highdeg; default_regular_mode(d) when unset.
  std::optional<RegularMode> regular_mode;
  // Exact spread is computed when the graph has at most this many vertices.
  std::size_t exact_cap = 12;
  // Exact diameter up to this many vertices, double-sweep bound above.
  std::size_t exact_diameter_cap = 1000;
  // Keep every local-search end state in the records (not written out).
  bool keep_witnesses = false;
};

// Desk-scale defaults per preset: complete n = 2..9; regular d = 3,
// n = 10^2..10^4; gnp c = 2, n = 10^3..10^5; epsilon a = 1/4,
// n = 10^5, 10^6 without local search; highdeg n = 2000, d = 3..50.
SweepSpec default_sweep_spec(Preset preset);

// JSON object with keys preset, n (list), params (list), trials, seed,
// delta, restarts, local_search, regular_mode, exact_cap,
// exact_diameter_cap. Missing keys take the preset defaults; unknown keys are
// rejected. Throws kInvalidSpec.
SweepSpec parse_sweep_spec(const std::string& json_text);
std::string sweep_spec_to_json(const SweepSpec& spec);
// Throws kInvalidSpec.
void validate(const SweepSpec& spec);

struct Cell {
  std::size_t index = 0;
  std::size_t n = 0;
  double param = 0.0;
};

// n-major order: cell index = n position * |params| + param position.
std::vector<Cell> sweep_cells(const SweepSpec& spec);

// Seed of one trial: derive_trial_seed(derive_trial_seed(master, cell), trial).
std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, int trial);

struct TrialRecord {
  std::size_t cell = 0;
  int trial = 0;
  std::size_t n = 0;
  double param = 0.0;
  std::uint64_t seed = 0;
  // Empty when the trial completed; otherwise the error that stopped it.
  // Fields filled before the failure are kept.
  std::string error;

  std::size_t edges = 0;
  bool exactly_regular = true;
  std::optional<double> eps;
  std::size_t giant = 0;
  std::size_t core = 0;
  std::size_t kernel_vertices = 0;
  std::size_t kernel_edges = 0;
  std::int64_t excess = 0;
  std::optional<bool> behaves;
  std::size_t max_pendant_tree = 0;
  std::optional<std::uint32_t> diameter;
  bool diameter_approx = false;

  std::optional<Rational> var_exact;
  std::optional<Rational> var_constructed;
  std::optional<Rational> var_localsearch;
  std::optional<std::uint32_t> r;
  std::optional<std::array<bool, 3>> star;
  // Tail counts of the best available function (local search, else the
  // construction) and their fits.
  std::vector<std::size_t> tail_counts;
  std::optional<LinearFit> exp_fit;
  std::optional<LinearFit> sqrt_fit;

  double runtime_ms = 0.0;
  // Giant-component local ids; only with SweepSpec::keep_witnesses.
  std::vector<VertexFunction> witnesses;

  bool ok() const { return error.empty(); }
};

// Runs one trial. Never throws for per-trial failures; they land in
// TrialRecord::error.
TrialRecord run_trial(const SweepSpec& spec, const Cell& cell, int trial);

// Thread count from SPREADLAB_THREADS, default 1.
int sweep_threads_from_env();

// All trials, ordered by (cell, trial) whatever the thread count.
// threads <= 0 reads the environment. Throws kInvalidSpec.
std::vector<TrialRecord> run_sweep(const SweepSpec& spec, int threads = 0);

// Deterministic CSV: a "# spreadlab-csv v1" line, a header, one row per
// record. Runtime is left out so reruns are byte-identical.
void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records);
// "cell,trial,runtime_ms" rows.
void write_timings_csv(std::ostream& out, const std::vector<TrialRecord>& records);

struct CellTailRates {
  std::size_t cell = 0;
  std::size_t trials_used = 0;
  // Fits of the summed tail counts of the cell; absent with "insufficient
  // range" when fewer than three points have count >= 10.
  std::optional<LinearFit> exp_fit;
  std::optional<LinearFit> sqrt_fit;
  bool insufficient_range = false;
};

std::vector<CellTailRates> fit_tail_rates(const std::vector<TrialRecord>& records);

// Per-cell medians and tail rates plus the spec, as a JSON document.
std::string summary_json(const SweepSpec& spec,
                         const std::vector<TrialRecord>& records);

// Lower median of the values (NaN for an empty list).
double median_of(std::vector<double> values);

}  // namespace spreadlab

#endif  // SPREADLAB_HARNESS_H_
