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

#ifndef SPREADLAB_VERTEX_FUNCTION_H_
#define SPREADLAB_VERTEX_FUNCTION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spreadlab/graph.h"
#include "spreadlab/rational.h"

namespace spreadlab {

// One value per vertex, either integer- or real-valued.
class VertexFunction {
 public:
  VertexFunction() = default;
  static VertexFunction integer(std::vector<std::int64_t> values) {
    VertexFunction f;
    f.values_ = std::move(values);
    return f;
  }
  static VertexFunction real(std::vector<double> values) {
    VertexFunction f;
    f.values_ = std::move(values);
    return f;
  }

  bool is_integer() const {
    return std::holds_alternative<std::vector<std::int64_t>>(values_);
  }
  std::size_t size() const;
  double at(std::size_t v) const;
  // Throws kInvalidArgument for real-valued functions.
  std::span<const std::int64_t> ints() const;
  std::vector<double> as_real() const;

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::variant<std::vector<std::int64_t>, std::vector<double>> values_;
};

// Exact rational or floating-point number.
class Value {
 public:
  Value() = default;
  static Value exact(Rational r) {
    Value v;
    v.value_ = r;
    return v;
  }
  static Value real(double d) {
    Value v;
    v.value_ = d;
    return v;
  }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double to_double() const;
  // "num/den" for exact values, shortest round-trip decimal otherwise.
  std::string to_string() const;

 private:
  std::variant<Rational, double> value_ = Rational();
};

struct LipschitzCheck {
  bool lipschitz = true;
  std::optional<Edge> violating_edge;
};

// Throws kSizeMismatch if f is not sized for g.
LipschitzCheck is_lipschitz(const Graph& g, const VertexFunction& f);

// Var f(X) for X uniform on the vertices: (n sum f^2 - (sum f)^2) / n^2,
// exact for integer functions. Throws kSizeMismatch, kIntegerOverflow.
Value variance(const Graph& g, const VertexFunction& f);
Rational variance_exact(std::span<const std::int64_t> values);
double variance_real(std::span<const double> values);

// Lower median: smallest m with |{f <= m}| >= n/2.
double median(const VertexFunction& f);
std::int64_t integer_median(std::span<const std::int64_t> values);

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
};
// Ordinary least squares of y on x. Needs at least two distinct x; R^2 is 1
// when y is constant.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

struct TailFit {
  std::vector<int> fit_range;
  // Slopes of log counts against x and against sqrt(x); absent when the
  // range has fewer than three points.
  std::optional<LinearFit> exp_fit;
  std::optional<LinearFit> sqrt_fit;
};

inline constexpr double kMinTailCount = 10.0;

// counts[x] for x = 0, 1, ...; fits over x with counts[x] >= kMinTailCount.
TailFit fit_tail(std::span<const double> counts);

struct TailProfile {
  double median = 0.0;
  // counts[x] = |{v : |f(v) - m| >= x}| for x = 0 .. last nonzero.
  std::vector<std::size_t> counts;
  TailFit fit;

  std::size_t count(std::size_t x) const {
    return x < counts.size() ? counts[x] : 0;
  }
  std::optional<double> fitted_exp_rate() const {
    return fit.exp_fit ? std::optional(fit.exp_fit->slope) : std::nullopt;
  }
  std::optional<double> fitted_sqrt_rate() const {
    return fit.sqrt_fit ? std::optional(fit.sqrt_fit->slope) : std::nullopt;
  }
};

TailProfile tail_profile(const Graph& g, const VertexFunction& f);

// Level i -> |{v : f(v) - m = i}| for an integer f with lower median m.
std::map<std::int64_t, std::size_t> level_counts(
    std::span<const std::int64_t> values);

// 1/4 + sum over levels i not in {0, 1} of (count_i / n) (i - 1/2)^2, an
// upper bound on Var f for the median-shifted function.
double spread_upper_from_tails(const std::map<std::int64_t, std::size_t>& levels,
                               std::size_t n);

struct LevelsetDecayReport {
  bool passed = true;
  // First k (>= 1) where |E_{k+1}| > (1 - alpha)|E_k| with |E_k| <= n/2;
  // sign +1 for {f - m >= k}, -1 for {f - m <= -k}.
  std::optional<std::int64_t> violation_k;
  int violation_sign = 0;
};

// Level-set decay that an alpha-vertex-expander forces on every Lipschitz
// function. Throws kNotLipschitz, kInvalidArgument (alpha outside (0, 1]).
LevelsetDecayReport verify_levelset_decay(const Graph& g,
                                          const VertexFunction& f,
                                          double alpha);

}  // namespace spreadlab

#endif  // SPREADLAB_VERTEX_FUNCTION_H_
