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

// Equivalence checks: comparing measured data sets, matching two graphs up to
// renaming of internal vertices (anchored by their positions along routes,
// not by a general isomorphism search), and the end-to-end round-trip check
// that reconstruction from measured data lands on the canonical form.

#ifndef NETRECON_VERIFY_HPP_
#define NETRECON_VERIFY_HPP_

#include <map>
#include <optional>
#include <string>

#include "netrecon/compliance.hpp"
#include "netrecon/pcd.hpp"

namespace netrecon {

// True when both data sets cover the same boundary set and agree on every
// length and junction value within eps. Throws Error(BOUNDARY_MISMATCH) when
// the boundary sets differ.
bool pcd_equal(const PathCorrelationData& a, const PathCorrelationData& b,
               double eps = kDefaultEpsilon);

struct IsomorphismWitness {
  // vertex of a -> vertex of b; identity on boundary ids
  std::map<VertexId, VertexId> mapping;
  double max_weight_discrepancy = 0.0;
};

// Matches two graphs over the same boundary by aligning their routes position
// by position. Returns the witness when the alignment is a weight-preserving
// bijection covering all vertices and edges of both graphs, otherwise
// nullopt. Vertices lying on no route cannot be anchored and void the match.
std::optional<IsomorphismWitness> boundary_anchored_isomorphic(
    const NetworkGraph& a, const NetworkGraph& b, double eps = kDefaultEpsilon);

struct RoundTripReport {
  bool pass = false;
  bool symmetric_routing = false;
  bool reconstruction_isomorphic = false;
  bool pcd_preserved = false;
  double max_weight_discrepancy = 0.0;
  std::string detail;
};

// Measures g, reconstructs from the measurement, and checks the result is the
// canonical form of g; also checks canonicalization left the data unchanged.
RoundTripReport check_round_trip(const NetworkGraph& g,
                                 double eps = kDefaultEpsilon);

}  // namespace netrecon

#endif  // NETRECON_VERIFY_HPP_
