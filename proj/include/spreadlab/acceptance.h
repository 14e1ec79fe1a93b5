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

#ifndef SPREADLAB_ACCEPTANCE_H_
#define SPREADLAB_ACCEPTANCE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spreadlab/rational.h"

namespace spreadlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  // Wall-clock budget; exceeding it fails the criterion at full scale.
  double budget_seconds = 0.0;
};

struct AcceptanceOptions {
  // Smaller trial counts (same thresholds, no runtime budgets).
  bool reduced = false;
  // Sweep threads; <= 0 reads SPREADLAB_THREADS.
  int threads = 0;
  std::uint64_t seed = 20240601;
};

using VarianceFn = std::function<Rational(std::span<const std::int64_t>)>;

inline constexpr int kNumCriteria = 10;

// Criterion 1 with a pluggable variance evaluator, so a corrupted one can be
// shown to fail.
CriterionResult check_complete_graphs(const VarianceFn& variance);

// Runs criterion `id` (1..10). Throws kInvalidArgument for other ids.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

// "PASS [3] title: detail (1.2 s)".
std::string format_criterion(const CriterionResult& result);

struct SelfcheckReport {
  std::vector<CriterionResult> criteria;
  // True when criterion 1 rejected a deliberately corrupted variance.
  bool canary_caught = false;
  bool passed = false;
};

// Every criterion at reduced scale plus the mutation canary; `log` receives
// each line as it is produced.
SelfcheckReport selfcheck(const AcceptanceOptions& options,
                          const std::function<void(const std::string&)>& log = {});

}  // namespace spreadlab

#endif  // SPREADLAB_ACCEPTANCE_H_
