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

#ifndef SPREADLAB_EXPANSION_H_
#define SPREADLAB_EXPANSION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/decompose.h"
#include "spreadlab/graph.h"
#include "spreadlab/rational.h"

namespace spreadlab {

enum class CertificateKind { kCheeger, kAlphaVertex, kBetaEta, kDecorated };
enum class CertificateMethod {
  kExactEnumeration,
  kRandomizedFalsifier,
  kSpectralBound,
};
enum class CheckMode { kExact, kRandom };

std::string certificate_kind_name(CertificateKind kind);
std::string certificate_method_name(CertificateMethod method);

// A verified certificate from exact enumeration is a proof. From the
// randomized falsifier it only means no counterexample turned up; a
// falsified certificate is sound either way.
struct Certificate {
  CertificateKind kind = CertificateKind::kCheeger;
  std::vector<Rational> params;
  bool verified = false;
  CertificateMethod method = CertificateMethod::kExactEnumeration;
  // Most violating set found (exact) or first violating sample (random).
  VertexSet witness;
  // Exact minimum of the certified ratio over admissible sets, when the
  // enumeration ran.
  std::optional<Rational> extremal_ratio;
  std::uint64_t sets_checked = 0;
  std::string scale_note;
};

inline constexpr std::size_t kSubsetEnumerationCap = 24;
inline constexpr std::uint64_t kCombinationCap = 10'000'000;
inline constexpr std::uint64_t kDefaultSamples = 100'000;

struct CheegerResult {
  Rational phi;
  // Smallest in lexicographic order among minimizers.
  VertexSet argmin;
};

// min |E(S, V \ S)| / vol(S) over nonempty S with vol(S) <= |E|.
// Throws kSizeGuard, kDisconnectedGraph.
CheegerResult cheeger_exact(const Graph& g,
                            std::size_t max_vertices = kSubsetEnumerationCap);

struct SpectralBound {
  // Second smallest eigenvalue of the normalized Laplacian (upper estimate).
  double lambda2 = 0.0;
  // lambda2 / 2 - tol, a lower bound on the Cheeger constant.
  double bound = 0.0;
  int iterations = 0;
};

// Deflated power iteration on (I + D^-1/2 A D^-1/2) / 2. Stops once the
// residual drops below tol. Throws kDisconnectedGraph, kConvergenceFailure.
SpectralBound cheeger_spectral_lower(const Graph& g, double tol = 1e-6,
                                     int max_iterations = 100'000);

// The randomized falsifier alternates uniform subsets and BFS balls around
// uniform vertices, with uniform sizes up to the admissible maximum.
struct CheckOptions {
  CheckMode mode = CheckMode::kExact;
  std::size_t max_vertices = kSubsetEnumerationCap;
  std::uint64_t max_combinations = kCombinationCap;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
};

// Every W with |W| <= n/2 has at least alpha |W| vertices with a neighbor
// outside W. Throws kSizeGuard (exact mode), kInvalidArgument (alpha <= 0).
Certificate alpha_expander_check(const Graph& g, const Rational& alpha,
                                 const CheckOptions& options = {});

// Every T with |T| <= (1 - eta) n / beta has |T u N(T)| >= beta |T|. Exact
// enumeration when C(n, floor((1 - eta) n / beta)) fits the combination cap,
// randomized falsifier otherwise (or when asked).
Certificate beta_eta_check(const Graph& g, const Rational& beta,
                           const Rational& eta, const CheckOptions& options = {});

struct DecoratedReport {
  Certificate certificate;
  bool de1 = false;
  bool de2 = false;
  bool de2_prime = false;
  bool de3 = false;
  // Cheeger constant of F (exact) or its spectral lower bound.
  double phi_f = 0.0;
  CertificateMethod de1_method = CertificateMethod::kExactEnumeration;
  std::size_t num_decorations = 0;
  double edge_count = 0.0;
  // Statistic value where DE2 / DE2' fails, or the vertex breaking DE3.
  std::optional<double> de2_binding_x;
  std::optional<double> de2_prime_binding_x;
  std::optional<Vertex> de3_binding_vertex;
  // Largest alpha for which all four conditions would hold on this input.
  double max_alpha = 0.0;
};

struct DecoratedOptions {
  // Normalizing edge count for DE2/DE2'; |E(g)| when unset.
  std::optional<double> edge_count;
  std::size_t exact_de1_cap = kSubsetEnumerationCap;
  double spectral_tol = 1e-6;
};

// F is a vertex set of g; F's induced subgraph is the expander part and the
// components of g - F are the decorations. Throws kEmptyF, kDisconnectedF.
DecoratedReport verify_decorated_expander(const Graph& g, const VertexSet& f,
                                          double alpha,
                                          const DecoratedOptions& options = {});

// Heuristic candidate for F: the 2-core. Throws kEmptyCore.
VertexSet candidate_decorated_f(const Decomposition& dec);

// log of ((1 + a) e^(2 + a) ((1 + a) t / n)^(d/2 - 1 - a))^t, the union bound
// on the expected number of non-expanding (T, U) cell pairs.
double expansion_union_bound(double n, double d, double alpha_param, double t);

// Accepts "p/q", integers and plain decimals ("0.25" -> 1/4).
Rational parse_rational(const std::string& text);

}  // namespace spreadlab

#endif  // SPREADLAB_EXPANSION_H_
