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

#ifndef SPREADLAB_RANDGEN_H_
#define SPREADLAB_RANDGEN_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "spreadlab/graph.h"

namespace spreadlab {

// Portable random source: std::mt19937_64 (its output sequence is fixed by
// the C++ standard) plus hand-rolled bounded integer and unit-interval
// helpers, since the std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer applied to master + 0x9E3779B97F4A7C15 * (index + 1),
// i.e. the (index+1)-th output of a SplitMix64 stream started at `master`.
// Bijective in index for a fixed master.
std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t index);

// G(n, p) by geometric skip sampling over pairs (v, w), w < v, in row order.
// Expected time O(n + p n^2).
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

enum class RegularMode {
  // Configuration model, resample until simple (exactly uniform).
  kReject,
  // Configuration model once; drop loops and collapse parallel edges.
  kErase,
  // Sequential stub pairing that only accepts pairs keeping the graph simple,
  // restarting on dead ends. Exactly d-regular, asymptotically uniform; the
  // practical choice for large d where rejection never succeeds.
  kSequential,
};

RegularMode parse_regular_mode(const std::string& name);
std::string regular_mode_name(RegularMode mode);

struct RegularSample {
  Graph graph;
  // False only when erase mode lost edges.
  bool exactly_regular = true;
  int attempts = 1;
};

inline constexpr int kDefaultRejectionCap = 1000;

// Throws kParityViolation (d*n odd), kInvalidArgument (d >= n or d == 0),
// kRejectionCapExceeded.
RegularSample gen_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                          RegularMode mode,
                          int max_attempts = kDefaultRejectionCap);

// CLI/harness default: rejection up to degree 8, erasure above.
RegularMode default_regular_mode(std::size_t d);

struct GenSpec {
  enum class Model { kGnp, kRegular };
  Model model = Model::kGnp;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  RegularMode regular_mode = RegularMode::kReject;

  // p = c / n.
  static GenSpec gnp_with_mean_degree(std::size_t n, double c,
                                      std::uint64_t seed);
};

// Validates the spec (kInvalidArgument / kParityViolation) and samples.
RegularSample generate(const GenSpec& spec);

}  // namespace spreadlab

#endif  // SPREADLAB_RANDGEN_H_
