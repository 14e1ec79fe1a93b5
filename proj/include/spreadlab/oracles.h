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

#ifndef SPREADLAB_ORACLES_H_
#define SPREADLAB_ORACLES_H_

#include <cstddef>

#include "spreadlab/graph.h"
#include "spreadlab/rational.h"

namespace spreadlab {

// Slow reference implementations used to cross-check the optimized code.
// They share no search logic with it and are meant for n <= 10 or so.

// Maximum variance over integer Lipschitz functions with f(0) = 0 and values
// in [-diam, diam], enumerated in vertex-id order. Throws kDisconnectedGraph,
// kSizeGuard (n > max_vertices).
Rational brute_force_spread(const Graph& g, std::size_t max_vertices = 10);

// Minimum of |E(S, V \ S)| / vol(S) over nonempty S with vol(S) <= |E|.
Rational brute_force_cheeger(const Graph& g);

// Minimum over nonempty W with |W| <= n/2 of (vertices of W with a neighbor
// outside W) / |W|.
Rational brute_force_alpha_ratio(const Graph& g);

// Minimum over nonempty T with |T| <= max_size of |T u N(T)| / |T|.
Rational brute_force_closed_neighborhood_ratio(const Graph& g,
                                               std::size_t max_size);

}  // namespace spreadlab

#endif  // SPREADLAB_ORACLES_H_
