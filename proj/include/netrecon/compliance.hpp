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

// Canonicalization. Different graphs can produce identical path correlation
// data; within each such family exactly one representative has no unused
// edges, no pass-through vertices, and no separable vertices. clean() rewrites
// any valid graph into that representative without changing its data. The
// order matters: unused edges first, then splits, then merges, since splits
// can expose new pass-through vertices.

#ifndef NETRECON_COMPLIANCE_HPP_
#define NETRECON_COMPLIANCE_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/graph.hpp"

namespace netrecon {

// Edges no route traverses. Removing them never changes measured data.
std::set<std::pair<VertexId, VertexId>> unused_edges(const NetworkGraph& g);

// Internal vertices that merely forward traffic: with symmetric_mode unset,
// exactly one incoming and one outgoing edge; with it set, at most two
// adjacent vertices. Throws Error(MODE_MISMATCH) if symmetric_mode is set on
// a graph that does not route symmetrically.
std::set<VertexId> trivial_vertices(const NetworkGraph& g, bool symmetric_mode);

// Finest grouping of the routes through one internal vertex into families
// that share no boundary endpoint on either side. source_classes[i] pairs
// with receiver_classes[i]; two or more classes mean the vertex can split
// into independent copies without changing any measurement. In symmetric
// mode the two sides carry the same classes.
struct SeparabilityPartition {
  VertexId vertex;
  std::vector<std::vector<VertexId>> source_classes;
  std::vector<std::vector<VertexId>> receiver_classes;
  bool separable() const { return source_classes.size() >= 2; }
};

// Throws Error(NOT_INTERNAL) for boundary ids, Error(NOT_ON_ANY_ROUTE) when
// no route interior contains x, Error(MODE_MISMATCH) as above.
SeparabilityPartition separability_classes(const NetworkGraph& g, const VertexId& x,
                                           bool symmetric_mode);

// Replaces x by one copy per class (ids x#1, x#2, ... in class order), each
// inheriting exactly the edges its routes traverse.
NetworkGraph split_vertex(const NetworkGraph& g, const SeparabilityPartition& parts);

// Removes a trivial vertex, fusing its edge pair(s) into direct edges with
// summed weights and shortening routes accordingly. When the direct edge
// already exists with the same weight (within eps) the merge coalesces onto
// it; an existing edge with a different weight is Error(MERGE_CONFLICT).
NetworkGraph merge_trivial_vertex(const NetworkGraph& g, const VertexId& x,
                                  bool symmetric_mode,
                                  double eps = kDefaultEpsilon);

struct CleaningReport {
  std::vector<std::pair<VertexId, VertexId>> removed_edges;
  // Internal vertices left without any edge after unused-edge removal.
  std::vector<VertexId> removed_vertices;
  std::map<VertexId, std::vector<VertexId>> split_vertices;
  std::vector<VertexId> merged_vertices;
  bool changed() const {
    return !(removed_edges.empty() && removed_vertices.empty() &&
             split_vertices.empty() && merged_vertices.empty());
  }
};

// Full canonicalization pass. The result has no unused edges, no trivial
// vertices, and no separable vertices, and measures identically to the input.
std::pair<NetworkGraph, CleaningReport> clean(const NetworkGraph& g,
                                              bool symmetric_mode,
                                              double eps = kDefaultEpsilon);

}  // namespace netrecon

#endif  // NETRECON_COMPLIANCE_HPP_
