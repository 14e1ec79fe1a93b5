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

#include "spreadlab/expansion.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "spreadlab/errors.h"
#include "spreadlab/randgen.h"

namespace spreadlab {
namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

VertexSet mask_to_set(Mask m) {
  VertexSet s;
  while (m) {
    s.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

// Lexicographic order of the ascending vertex lists of two masks.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  int p = std::countr_zero(a ^ b);
  // The lists agree below p; the one holding p is smaller iff the other
  // continues past p.
  if ((a >> p) & 1) return (b >> (p + 1)) != 0;
  return (a >> (p + 1)) == 0;
}

void require_guard(const Graph& g, std::size_t cap) {
  std::size_t limit = std::min<std::size_t>(cap, 63);
  if (g.num_vertices() > limit) {
    throw Error(ErrorKind::kSizeGuard,
                "subset enumeration limited to n <= " + std::to_string(limit) +
                    " (got " + std::to_string(g.num_vertices()) + ")");
  }
}

// ratio a_num/a_den < b_num/b_den for nonnegative integers, positive dens.
bool ratio_less(std::uint64_t a_num, std::uint64_t a_den, std::uint64_t b_num,
                std::uint64_t b_den) {
  return static_cast<Int128>(a_num) * b_den < static_cast<Int128>(b_num) * a_den;
}

// count < r * size, for rational r.
bool below(std::uint64_t count, const Rational& r, std::uint64_t size) {
  return Rational(static_cast<Int128>(count), 1) <
         r * Rational(static_cast<Int128>(size), 1);
}

// Random candidate sets for the falsifiers. Odd samples are uniform subsets
// of the given size; even samples are BFS balls around a uniform vertex,
// which is where sparse graphs tend to expand worst.
class SetSampler {
 public:
  SetSampler(const Graph& g, std::uint64_t seed)
      : g_(g), rng_(seed), perm_(g.num_vertices()), seen_(g.num_vertices(), 0) {
    std::iota(perm_.begin(), perm_.end(), 0);
  }

  // Fills `set` (unsorted) with up to `size` vertices.
  void draw(std::uint64_t sample, std::size_t size, std::vector<Vertex>& set) {
    const std::size_t n = g_.num_vertices();
    set.clear();
    if (sample % 2 == 1) {
      for (std::size_t i = 0; i < size; ++i) {
        std::swap(perm_[i], perm_[i + rng_.uniform(n - i)]);
        set.push_back(perm_[i]);
      }
      return;
    }
    ++stamp_;
    Vertex source = static_cast<Vertex>(rng_.uniform(n));
    seen_[source] = stamp_;
    set.push_back(source);
    for (std::size_t head = 0; head < set.size() && set.size() < size; ++head) {
      for (Vertex w : g_.neighbors(set[head])) {
        if (seen_[w] == stamp_) continue;
        seen_[w] = stamp_;
        set.push_back(w);
        if (set.size() == size) break;
      }
    }
  }

  Rng& rng() { return rng_; }

 private:
  const Graph& g_;
  Rng rng_;
  std::vector<Vertex> perm_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
};

// Binomial coefficient saturating at `cap + 1`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1.0L;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(std::llround(acc));
}

std::int64_t floor_rational(const Rational& r) {
  Int128 q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() < 0) --q;
  return static_cast<std::int64_t>(q);
}

}  // namespace

std::string certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kCheeger: return "cheeger";
    case CertificateKind::kAlphaVertex: return "alpha_vertex";
    case CertificateKind::kBetaEta: return "beta_eta";
    case CertificateKind::kDecorated: return "decorated";
  }
  return "?";
}

std::string certificate_method_name(CertificateMethod method) {
  switch (method) {
    case CertificateMethod::kExactEnumeration: return "exact_enumeration";
    case CertificateMethod::kRandomizedFalsifier: return "randomized_falsifier";
    case CertificateMethod::kSpectralBound: return "spectral_bound";
  }
  return "?";
}

CheegerResult cheeger_exact(const Graph& g, std::size_t max_vertices) {
  require_guard(g, max_vertices);
  if (!is_connected(g)) {
    throw Error(ErrorKind::kDisconnectedGraph, "Cheeger constant of a disconnected graph");
  }
  if (g.num_edges() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "Cheeger constant needs an edge");
  }
  const std::size_t n = g.num_vertices();
  const std::uint64_t m = g.num_edges();
  auto adj = adjacency_masks(g);
  Mask set = 0;
  std::uint64_t vol = 0;
  std::uint64_t boundary = 0;
  bool found = false;
  Mask best = 0;
  std::uint64_t best_b = 0, best_vol = 1;
  // Gray-code walk: one vertex toggles per step.
  for (Mask i = 1; i < (Mask{1} << n); ++i) {
    int v = std::countr_zero(i);
    Mask bit = Mask{1} << v;
    std::uint64_t deg = g.degree(static_cast<Vertex>(v));
    if (set & bit) {
      set &= ~bit;
      boundary = boundary - deg + 2 * std::popcount(adj[v] & set);
      vol -= deg;
    } else {
      boundary = boundary + deg - 2 * std::popcount(adj[v] & set);
      set |= bit;
      vol += deg;
    }
    if (vol > m || vol == 0) continue;
    if (!found || ratio_less(boundary, vol, best_b, best_vol) ||
        (!ratio_less(best_b, best_vol, boundary, vol) && lex_less(set, best))) {
      found = true;
      best = set;
      best_b = boundary;
      best_vol = vol;
    }
  }
  return {Rational(static_cast<Int128>(best_b), static_cast<Int128>(best_vol)),
          mask_to_set(best)};
}

SpectralBound cheeger_spectral_lower(const Graph& g, double tol,
                                     int max_iterations) {
  const std::size_t n = g.num_vertices();
  if (n < 2 || !is_connected(g)) {
    throw Error(ErrorKind::kDisconnectedGraph,
                "spectral bound needs a connected graph with n >= 2");
  }
  std::vector<double> inv_sqrt(n), top(n);
  double norm = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    double d = static_cast<double>(g.degree(v));
    inv_sqrt[v] = 1.0 / std::sqrt(d);
    top[v] = std::sqrt(d);
    norm += d;
  }
  for (double& x : top) x /= std::sqrt(norm);

  auto deflate_normalize = [&](std::vector<double>& x) {
    double dot = std::inner_product(x.begin(), x.end(), top.begin(), 0.0);
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] -= dot * top[i];
      len += x[i] * x[i];
    }
    len = std::sqrt(len);
    for (double& xi : x) xi /= len;
  };
  // y = (x + D^-1/2 A D^-1/2 x) / 2
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (Vertex v = 0; v < n; ++v) {
      double acc = 0.0;
      for (Vertex w : g.neighbors(v)) acc += inv_sqrt[w] * x[w];
      y[v] = 0.5 * (x[v] + inv_sqrt[v] * acc);
    }
  };

  Rng rng(0x5eed5eedULL);
  std::vector<double> x(n), y(n);
  for (double& xi : x) xi = rng.uniform01() - 0.5;
  deflate_normalize(x);
  for (int it = 1; it <= max_iterations; ++it) {
    apply(x, y);
    double rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] - rho * x[i];
      residual += r * r;
    }
    if (std::sqrt(residual) < tol) {
      SpectralBound out;
      out.lambda2 = 2.0 - 2.0 * rho;
      out.bound = out.lambda2 / 2.0 - tol;
      out.iterations = it;
      return out;
    }
    x.swap(y);
    deflate_normalize(x);
  }
  throw Error(ErrorKind::kConvergenceFailure,
              "power iteration did not reach tolerance in " +
                  std::to_string(max_iterations) + " iterations");
}

Certificate alpha_expander_check(const Graph& g, const Rational& alpha,
                                 const CheckOptions& options) {
  if (alpha <= Rational(0)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha must be positive");
  }
  const std::size_t n = g.num_vertices();
  const std::size_t max_size = n / 2;
  Certificate cert;
  cert.kind = CertificateKind::kAlphaVertex;
  cert.params = {alpha};
  cert.verified = true;

  if (options.mode == CheckMode::kExact) {
    require_guard(g, options.max_vertices);
    cert.method = CertificateMethod::kExactEnumeration;
    auto adj = adjacency_masks(g);
    bool found = false;
    Mask best = 0;
    std::uint64_t best_c = 0, best_s = 1;
    for (Mask w = 1; w < (Mask{1} << n); ++w) {
      std::uint64_t size = std::popcount(w);
      if (size > max_size) continue;
      ++cert.sets_checked;
      std::uint64_t count = 0;
      for (Mask rest = w; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        count += (adj[v] & ~w) != 0;
      }
      if (!found || ratio_less(count, size, best_c, best_s) ||
          (!ratio_less(best_c, best_s, count, size) && lex_less(w, best))) {
        found = true;
        best = w;
        best_c = count;
        best_s = size;
      }
    }
    if (found) {
      cert.extremal_ratio = Rational(static_cast<Int128>(best_c),
                                     static_cast<Int128>(best_s));
      cert.verified = !below(best_c, alpha, best_s);
      if (!cert.verified) cert.witness = mask_to_set(best);
    }
    cert.scale_note = "enumerated all " + std::to_string(cert.sets_checked) +
                      " sets with |W| <= " + std::to_string(max_size) +
                      " (cap n <= " + std::to_string(options.max_vertices) + ")";
    return cert;
  }

  cert.method = CertificateMethod::kRandomizedFalsifier;
  SetSampler sampler(g, options.seed);
  std::vector<Vertex> w;
  std::vector<std::uint64_t> stamp(n, 0);
  for (std::uint64_t sample = 1; sample <= options.samples && max_size > 0;
       ++sample) {
    sampler.draw(sample, 1 + sampler.rng().uniform(max_size), w);
    for (Vertex v : w) stamp[v] = sample;
    ++cert.sets_checked;
    std::uint64_t count = 0;
    for (Vertex v : w) {
      for (Vertex x : g.neighbors(v)) {
        if (stamp[x] != sample) {
          ++count;
          break;
        }
      }
    }
    if (below(count, alpha, w.size())) {
      cert.verified = false;
      cert.witness.assign(w.begin(), w.end());
      std::sort(cert.witness.begin(), cert.witness.end());
      break;
    }
  }
  cert.scale_note = cert.verified
                        ? "no counterexample in " +
                              std::to_string(cert.sets_checked) + " samples"
                        : "counterexample after " +
                              std::to_string(cert.sets_checked) + " samples";
  return cert;
}

Certificate beta_eta_check(const Graph& g, const Rational& beta,
                           const Rational& eta, const CheckOptions& options) {
  if (!(beta > Rational(1)) || !(eta > Rational(0)) || !(eta < Rational(1))) {
    throw Error(ErrorKind::kInvalidArgument, "need beta > 1 and 0 < eta < 1");
  }
  const std::size_t n = g.num_vertices();
  const Rational limit =
      (Rational(1) - eta) * Rational(static_cast<Int128>(n), 1) / beta;
  const std::size_t k = static_cast<std::size_t>(std::max<std::int64_t>(0, floor_rational(limit)));
  Certificate cert;
  cert.kind = CertificateKind::kBetaEta;
  cert.params = {beta, eta};
  cert.verified = true;

  const bool exact = options.mode == CheckMode::kExact &&
                     binomial_capped(n, k, options.max_combinations) <=
                         options.max_combinations;
  if (exact) {
    cert.method = CertificateMethod::kExactEnumeration;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<Mask>> closed(n, std::vector<Mask>(words, 0));
    for (Vertex v = 0; v < n; ++v) {
      closed[v][v / 64] |= Mask{1} << (v % 64);
      for (Vertex w : g.neighbors(v)) closed[v][w / 64] |= Mask{1} << (w % 64);
    }
    // Depth-first over increasing vertex lists visits sets in lexicographic
    // order, so the first minimizer found is the lexicographically smallest.
    std::vector<std::vector<Mask>> acc(k + 1, std::vector<Mask>(words, 0));
    std::vector<Vertex> chosen;
    bool found = false;
    std::uint64_t best_c = 0, best_s = 1;
    VertexSet best;
    auto visit = [&](auto&& self, Vertex from, std::size_t depth) -> void {
      for (Vertex v = from; v < n; ++v) {
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < words; ++i) {
          acc[depth + 1][i] = acc[depth][i] | closed[v][i];
          count += std::popcount(acc[depth + 1][i]);
        }
        chosen.push_back(v);
        ++cert.sets_checked;
        std::uint64_t size = depth + 1;
        if (!found || ratio_less(count, size, best_c, best_s)) {
          found = true;
          best_c = count;
          best_s = size;
          best = chosen;
        }
        if (depth + 1 < k) self(self, v + 1, depth + 1);
        chosen.pop_back();
      }
    };
    if (k > 0) visit(visit, 0, 0);
    if (found) {
      cert.extremal_ratio = Rational(static_cast<Int128>(best_c),
                                     static_cast<Int128>(best_s));
      cert.verified = !below(best_c, beta, best_s);
      if (!cert.verified) cert.witness = best;
    }
    cert.scale_note = "enumerated all " + std::to_string(cert.sets_checked) +
                      " sets with |T| <= " + std::to_string(k);
    return cert;
  }

  cert.method = CertificateMethod::kRandomizedFalsifier;
  SetSampler sampler(g, options.seed);
  std::vector<Vertex> t;
  std::vector<std::uint64_t> stamp(n, 0);
  for (std::uint64_t sample = 1; sample <= options.samples && k > 0; ++sample) {
    sampler.draw(sample, 1 + sampler.rng().uniform(k), t);
    std::uint64_t count = 0;
    auto mark = [&](Vertex v) {
      if (stamp[v] != sample) {
        stamp[v] = sample;
        ++count;
      }
    };
    for (Vertex v : t) {
      mark(v);
      for (Vertex w : g.neighbors(v)) mark(w);
    }
    ++cert.sets_checked;
    if (below(count, beta, t.size())) {
      cert.verified = false;
      cert.witness.assign(t.begin(), t.end());
      std::sort(cert.witness.begin(), cert.witness.end());
      break;
    }
  }
  cert.scale_note = cert.verified
                        ? "no counterexample in " +
                              std::to_string(cert.sets_checked) + " samples"
                        : "counterexample after " +
                              std::to_string(cert.sets_checked) + " samples";
  return cert;
}

DecoratedReport verify_decorated_expander(const Graph& g, const VertexSet& f,
                                          double alpha,
                                          const DecoratedOptions& options) {
  if (f.empty()) throw Error(ErrorKind::kEmptyF, "F has no vertices");
  if (!(alpha > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha must be positive");
  }
  const std::size_t n = g.num_vertices();
  auto in_f = membership(n, f);
  auto sub = induced_subgraph(g, f);
  if (!is_connected(sub.graph)) {
    throw Error(ErrorKind::kDisconnectedF, "F does not induce a connected graph");
  }

  DecoratedReport report;
  report.certificate.kind = CertificateKind::kDecorated;
  report.certificate.params = {};
  report.edge_count = options.edge_count.value_or(static_cast<double>(g.num_edges()));

  // Decorations: components of g - F.
  std::vector<std::uint32_t> comp(n, kUnreachable);
  std::vector<std::uint64_t> comp_vertices, comp_edges;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (in_f[s] || comp[s] != kUnreachable) continue;
    auto id = static_cast<std::uint32_t>(comp_vertices.size());
    comp_vertices.push_back(0);
    comp_edges.push_back(0);
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++comp_vertices[id];
      for (Vertex w : g.neighbors(v)) {
        if (in_f[w]) {
          ++comp_edges[id];  // edge to F, counted once from the D side
        } else {
          if (v < w) ++comp_edges[id];
          if (comp[w] == kUnreachable) {
            comp[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
  }
  report.num_decorations = comp_vertices.size();
  const double edges = report.edge_count;
  double max_alpha = 1.0;

  // Count of statistic values >= x, checked at every distinct value; the
  // count is a step function, so these are the only places it can first fail.
  auto check_tail = [&](std::vector<std::uint64_t> stats, bool include_zero,
                        std::optional<double>& binding) {
    std::sort(stats.begin(), stats.end());
    bool ok = true;
    auto consider = [&](double x, std::size_t count) {
      if (count == 0) return;
      if (static_cast<double>(count) > std::exp(-alpha * x) * edges && ok) {
        ok = false;
        binding = x;
      }
      if (x > 0.0) {
        max_alpha = std::min(max_alpha, std::log(edges / static_cast<double>(count)) / x);
      } else if (static_cast<double>(count) > edges) {
        max_alpha = 0.0;
      }
    };
    if (include_zero) consider(0.0, stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) {
      if (i > 0 && stats[i] == stats[i - 1]) continue;
      if (stats[i] == 0) continue;
      consider(static_cast<double>(stats[i]), stats.size() - i);
    }
    return ok;
  };
  report.de2 = check_tail(comp_edges, false, report.de2_binding_x);
  report.de2_prime = check_tail(comp_vertices, true, report.de2_prime_binding_x);

  report.de3 = true;
  std::size_t max_decorations = 0;
  std::vector<std::uint32_t> seen;
  for (Vertex v : f) {
    seen.clear();
    for (Vertex w : g.neighbors(v)) {
      if (!in_f[w]) seen.push_back(comp[w]);
    }
    std::sort(seen.begin(), seen.end());
    std::size_t count = std::unique(seen.begin(), seen.end()) - seen.begin();
    max_decorations = std::max(max_decorations, count);
    if (report.de3 && static_cast<double>(count) * alpha > 1.0) {
      report.de3 = false;
      report.de3_binding_vertex = v;
    }
  }
  if (max_decorations > 0) {
    max_alpha = std::min(max_alpha, 1.0 / static_cast<double>(max_decorations));
  }

  if (sub.graph.num_edges() == 0) {
    report.phi_f = 0.0;
  } else if (sub.graph.num_vertices() <= options.exact_de1_cap) {
    report.phi_f = cheeger_exact(sub.graph, options.exact_de1_cap).phi.to_double();
    report.de1_method = CertificateMethod::kExactEnumeration;
  } else {
    report.phi_f = cheeger_spectral_lower(sub.graph, options.spectral_tol).bound;
    report.de1_method = CertificateMethod::kSpectralBound;
  }
  report.de1 = report.phi_f >= alpha;
  max_alpha = std::min(max_alpha, report.phi_f);
  report.max_alpha = std::max(0.0, max_alpha);

  Certificate& cert = report.certificate;
  cert.verified = report.de1 && report.de2 && report.de2_prime && report.de3;
  cert.method = report.de1_method;
  cert.scale_note = report.de1_method == CertificateMethod::kSpectralBound
                        ? "DE1 from spectral lower bound (not a proof of tightness)"
                        : "DE1 by exact enumeration";
  return report;
}

VertexSet candidate_decorated_f(const Decomposition& dec) {
  if (!dec.has_core()) {
    throw Error(ErrorKind::kEmptyCore, "giant component has no core");
  }
  return dec.core;
}

double expansion_union_bound(double n, double d, double alpha_param, double t) {
  const double a = alpha_param;
  return t * (std::log1p(a) + 2.0 + a +
              (d / 2.0 - 1.0 - a) * std::log((1.0 + a) * t / n));
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::kParseError, "not a rational number: '" + text + "'");
  };
  if (text.empty()) return fail();
  auto parse_int = [&](const std::string& s) -> Int128 {
    if (s.empty()) fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail();
    Int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
      v = v * 10 + (s[i] - '0');
    }
    return s[0] == '-' ? -v : v;
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Int128 scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int128 frac_part = frac.empty() ? 0 : parse_int(frac);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) fail();
    Int128 w = parse_int(whole);
    Int128 num = (negative ? -w : w) * scale + frac_part;
    return Rational(negative ? -num : num, scale);
  }
  return Rational(parse_int(text), 1);
}

}  // namespace spreadlab
