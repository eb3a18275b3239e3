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

// Network reconstruction from path correlation data. Junction values locate
// internal vertices as labeled points along the boundary-pair paths; a
// propagation pass places every label on every path it provably lies on, and
// the labeled paths then read off as a graph. The reconstruction is the
// canonical representative among all networks sharing the same data.

#ifndef NETRECON_RECONSTRUCT_HPP_
#define NETRECON_RECONSTRUCT_HPP_

#include <array>
#include <string>
#include <vector>

#include "netrecon/pcd.hpp"

namespace netrecon {

// Internal vertex discovered during reconstruction. origin records the
// boundary triple whose junction created it, for diagnostics only.
struct Label {
  std::string id;
  std::array<VertexId, 3> origin;
};

// One point on a reconstructed path: a boundary id or label id at its
// distance from the path's source.
struct PathEntry {
  std::string id;
  double distance = 0.0;
};

// Reconstructed path for an ordered boundary pair, entries sorted by
// distance. First entry is (src, 0), last is (dst, full length).
struct ReconstructedPath {
  VertexId src;
  VertexId dst;
  std::vector<PathEntry> entries;
};

struct ReconstructionStats {
  long labels_created = 0;
  long labels_discarded = 0;   // junction already present on the target path
  long insertions = 0;         // label placements across all paths
  long toplevel_calls = 0;     // placement calls from the main triple loop
};

struct ReconstructionResult {
  NetworkGraph graph;
  std::vector<ReconstructedPath> paths;
  std::vector<Label> labels;
  ReconstructionStats stats;
};

// Converts labeled paths into a graph: consecutive entries become edges with
// the distance delta as weight. Throws Error(WEIGHT_CONFLICT) when two paths
// disagree on an edge weight beyond eps.
NetworkGraph read_off_graph(const std::vector<ReconstructedPath>& paths,
                            double eps = kDefaultEpsilon);

// General reconstruction. With symmetric_routing set, the junction labels of
// a pair's two directions are shared, which is only sound when the measured
// network routes symmetrically. Throws Error(INCONSISTENT_PCD) when the data
// fails validation or does not read off as a graph.
ReconstructionResult reconstruct(const PathCorrelationData& pcd,
                                 bool symmetric_routing,
                                 double eps = kDefaultEpsilon);

// Specialized variant for symmetric routing: each boundary triple is handled
// by a single placement call that maintains both directions of a path at
// once, halving the top-level call count while producing the same network.
ReconstructionResult reconstruct_symmetric(const PathCorrelationData& pcd,
                                           double eps = kDefaultEpsilon);

}  // namespace netrecon

#endif  // NETRECON_RECONSTRUCT_HPP_
