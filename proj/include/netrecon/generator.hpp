// Copyright 2026 The netrecon Authors
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

#ifndef NETRECON_GENERATOR_HPP_
#define NETRECON_GENERATOR_HPP_

#include <cstdint>

#include "netrecon/graph.hpp"

namespace netrecon {

struct GeneratorParams {
  uint64_t seed = 0;
  int boundary_count = 3;   // >= 2
  int internal_count = 0;   // >= 0
  double edge_density = 0.5;  // probability of each optional internal edge, (0,1]
  double weight_min = 1.0;    // > 0
  double weight_max = 10.0;   // >= weight_min
  // Route every unordered pair once and mirror the path for the reverse
  // direction (paths are picked on symmetrized weights).
  bool symmetric_routing = false;
  // Give each edge pair equal weights in both directions.
  bool symmetric_weights = false;
  // Canonicalize the output (no unused edges, no trivial or separable
  // vertices).
  bool ensure_compliant = false;
  // Multiply stored weights by (1 + u * 1e-12). Route selection always uses
  // the perturbed weights so shortest paths stay unique and mutually
  // consistent; this flag only decides whether the emitted weights carry the
  // perturbation too (off gives exact user-range weights, e.g. integers).
  bool jitter = true;
};

// Builds a random network: internal vertices x1..xN on a bidirectional random
// spanning tree plus density-driven extra edges, boundary vertices b1..bM
// attached as leaves, routes picked as unique shortest paths. Fixed seeds
// reproduce byte-identical graphs. Throws Error(UNSATISFIABLE_PARAMS) for
// out-of-range parameter combinations.
NetworkGraph random_network(const GeneratorParams& params);

}  // namespace netrecon

#endif  // NETRECON_GENERATOR_HPP_
