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

#include "spreadlab/vertex_function.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "spreadlab/errors.h"

namespace spreadlab {
namespace {

void check_binding(const Graph& g, const VertexFunction& f) {
  if (f.size() != g.num_vertices()) {
    throw Error(ErrorKind::kSizeMismatch,
                "function has " + std::to_string(f.size()) +
                    " values but graph has " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::kIntegerOverflow, "variance numerator");
  }
  return out;
}

}  // namespace

std::size_t VertexFunction::size() const {
  return std::visit([](const auto& v) { return v.size(); }, values_);
}

double VertexFunction::at(std::size_t v) const {
  return std::visit([v](const auto& vals) { return static_cast<double>(vals[v]); },
                    values_);
}

std::span<const std::int64_t> VertexFunction::ints() const {
  if (!is_integer()) {
    throw Error(ErrorKind::kInvalidArgument, "function is real-valued");
  }
  return std::get<std::vector<std::int64_t>>(values_);
}

std::vector<double> VertexFunction::as_real() const {
  return std::visit(
      [](const auto& vals) { return std::vector<double>(vals.begin(), vals.end()); },
      values_);
}

double Value::to_double() const {
  return is_exact() ? rational().to_double() : std::get<double>(value_);
}

std::string Value::to_string() const {
  if (is_exact()) return rational().to_string();
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
  return std::string(buf, end);
}

LipschitzCheck is_lipschitz(const Graph& g, const VertexFunction& f) {
  check_binding(g, f);
  LipschitzCheck out;
  for (const Edge& e : g.edges()) {
    bool ok = f.is_integer()
                  ? std::llabs(f.ints()[e.u] - f.ints()[e.v]) <= 1
                  : std::fabs(f.at(e.u) - f.at(e.v)) <= 1.0;
    if (!ok) {
      out.lipschitz = false;
      out.violating_edge = e;
      return out;
    }
  }
  return out;
}

Rational variance_exact(std::span<const std::int64_t> values) {
  const Int128 n = static_cast<Int128>(values.size());
  if (n == 0) return Rational(0);
  Int128 sum = 0;
  Int128 sum_sq = 0;
  for (std::int64_t v : values) {
    sum += v;
    sum_sq += checked_mul(v, v);
  }
  Int128 num = checked_mul(n, sum_sq) - checked_mul(sum, sum);
  return Rational(num, checked_mul(n, n));
}

double variance_real(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double n = static_cast<double>(values.size());
  double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return acc / n;
}

Value variance(const Graph& g, const VertexFunction& f) {
  check_binding(g, f);
  if (f.is_integer()) return Value::exact(variance_exact(f.ints()));
  return Value::real(variance_real(f.as_real()));
}

std::int64_t integer_median(std::span<const std::int64_t> values) {
  if (values.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "median of an empty function");
  }
  std::vector<std::int64_t> sorted(values.begin(), values.end());
  // Smallest m with |{f <= m}| >= n/2 is the ceil(n/2)-th smallest value.
  std::size_t k = (sorted.size() + 1) / 2 - 1;
  std::nth_element(sorted.begin(), sorted.begin() + k, sorted.end());
  return sorted[k];
}

double median(const VertexFunction& f) {
  if (f.is_integer()) return static_cast<double>(integer_median(f.ints()));
  std::vector<double> sorted = f.as_real();
  if (sorted.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "median of an empty function");
  }
  std::size_t k = (sorted.size() + 1) / 2 - 1;
  std::nth_element(sorted.begin(), sorted.begin() + k, sorted.end());
  return sorted[k];
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "least squares needs distinct x");
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

TailFit fit_tail(std::span<const double> counts) {
  TailFit out;
  std::vector<double> xs, roots, logs;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] >= kMinTailCount) {
      out.fit_range.push_back(static_cast<int>(x));
      xs.push_back(static_cast<double>(x));
      roots.push_back(std::sqrt(static_cast<double>(x)));
      logs.push_back(std::log(counts[x]));
    }
  }
  if (xs.size() >= 3) {
    out.exp_fit = least_squares(xs, logs);
    out.sqrt_fit = least_squares(roots, logs);
  }
  return out;
}

TailProfile tail_profile(const Graph& g, const VertexFunction& f) {
  check_binding(g, f);
  TailProfile profile;
  const std::size_t n = f.size();
  if (n == 0) return profile;
  profile.median = median(f);
  // histogram of floor(|f - m|), then suffix sums give counts(x).
  std::vector<std::size_t> hist;
  for (std::size_t v = 0; v < n; ++v) {
    double dev = std::fabs(f.at(v) - profile.median);
    auto bucket = static_cast<std::size_t>(std::floor(dev));
    if (hist.size() <= bucket) hist.resize(bucket + 1, 0);
    ++hist[bucket];
  }
  profile.counts.assign(hist.size(), 0);
  std::size_t running = 0;
  for (std::size_t x = hist.size(); x-- > 0;) {
    running += hist[x];
    profile.counts[x] = running;
  }
  std::vector<double> as_double(profile.counts.begin(), profile.counts.end());
  profile.fit = fit_tail(as_double);
  return profile;
}

std::map<std::int64_t, std::size_t> level_counts(
    std::span<const std::int64_t> values) {
  std::map<std::int64_t, std::size_t> levels;
  if (values.empty()) return levels;
  std::int64_t m = integer_median(values);
  for (std::int64_t v : values) ++levels[v - m];
  return levels;
}

double spread_upper_from_tails(const std::map<std::int64_t, std::size_t>& levels,
                               std::size_t n) {
  double bound = 0.25;
  for (const auto& [level, count] : levels) {
    if (level == 0 || level == 1) continue;
    double d = static_cast<double>(level) - 0.5;
    bound += static_cast<double>(count) / static_cast<double>(n) * d * d;
  }
  return bound;
}

LevelsetDecayReport verify_levelset_decay(const Graph& g,
                                          const VertexFunction& f,
                                          double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha must lie in (0, 1]");
  }
  auto lip = is_lipschitz(g, f);
  if (!lip.lipschitz) {
    throw Error(ErrorKind::kNotLipschitz,
                "edge (" + std::to_string(lip.violating_edge->u) + "," +
                    std::to_string(lip.violating_edge->v) + ")");
  }
  LevelsetDecayReport report;
  const std::size_t n = f.size();
  if (n == 0) return report;
  const double m = median(f);
  for (int sign : {+1, -1}) {
    // sizes[k] = |{v : sign (f(v) - m) >= k}| for k >= 1.
    std::vector<std::size_t> sizes;
    for (std::size_t v = 0; v < n; ++v) {
      double dev = sign * (f.at(v) - m);
      if (dev < 1.0) continue;
      auto top = static_cast<std::size_t>(std::floor(dev));
      if (sizes.size() <= top) sizes.resize(top + 1, 0);
      ++sizes[top];
    }
    for (std::size_t k = sizes.size(); k-- > 1;) {
      if (k + 1 < sizes.size()) sizes[k] += sizes[k + 1];
    }
    auto at = [&](std::size_t k) { return k < sizes.size() ? sizes[k] : 0; };
    for (std::size_t k = 1; k < sizes.size(); ++k) {
      if (2 * at(k) > n) continue;
      if (static_cast<double>(at(k + 1)) >
          (1.0 - alpha) * static_cast<double>(at(k)) + 1e-9) {
        report.passed = false;
        report.violation_k = static_cast<std::int64_t>(k);
        report.violation_sign = sign;
        return report;
      }
    }
  }
  return report;
}

}  // namespace spreadlab
