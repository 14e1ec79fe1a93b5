# Copyright 2026 The spreadlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Lipschitz spread of graphs.

Exact rationals are returned as fractions.Fraction. Library failures raise
SpreadlabError, whose ``kind`` attribute names the error category.
"""

from ._spreadlab import (
    Graph,
    SpreadlabError,
    alpha_expander_check,
    behaves,
    beta_eta_check,
    cheeger_exact,
    cheeger_spectral_lower,
    complete_graph_spread,
    connected_components,
    decompose,
    derive_trial_seed,
    diameter,
    exact_spread,
    gen_gnp,
    gen_regular,
    is_lipschitz,
    kernel_path_params,
    local_search_spread,
    read_edge_list,
    run_sweep,
    three_level_function,
    variance,
    verify_decorated_expander,
    write_edge_list,
)

__all__ = [
    "Graph",
    "SpreadlabError",
    "alpha_expander_check",
    "behaves",
    "beta_eta_check",
    "cheeger_exact",
    "cheeger_spectral_lower",
    "complete_graph_spread",
    "connected_components",
    "decompose",
    "derive_trial_seed",
    "diameter",
    "exact_spread",
    "gen_gnp",
    "gen_regular",
    "is_lipschitz",
    "kernel_path_params",
    "local_search_spread",
    "read_edge_list",
    "run_sweep",
    "three_level_function",
    "variance",
    "verify_decorated_expander",
    "write_edge_list",
]
