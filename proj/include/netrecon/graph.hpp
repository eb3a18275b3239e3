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

// Core network model: a directed, positively weighted graph with a
// distinguished set of boundary vertices and one fixed simple route per
// ordered boundary pair. Routes never pass through other boundary vertices.
// Everything downstream (measurement, reconstruction, canonicalization)
// works on this structure.

#ifndef NETRECON_GRAPH_HPP_
#define NETRECON_GRAPH_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/error.hpp"

namespace netrecon {

inline constexpr double kDefaultEpsilon = 1e-9;

using VertexId = std::string;

struct Vertex {
  VertexId id;
  bool boundary = false;
};

struct Edge {
  VertexId from;
  VertexId to;
  double weight = 0.0;
};

// Fixed route for the ordered boundary pair (src, dst). path includes both
// endpoints: path.front() == src, path.back() == dst.
struct Route {
  VertexId src;
  VertexId dst;
  std::vector<VertexId> path;
};

struct NetworkGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Route> routes;

  std::vector<VertexId> boundary() const;
  std::vector<VertexId> internal() const;
  bool has_vertex(const VertexId& id) const;
  bool is_boundary(const VertexId& id) const;
};

// Validation issue codes.
namespace violation {
inline constexpr const char* kSelfLoop = "SELF_LOOP";
inline constexpr const char* kMultiEdge = "MULTI_EDGE";
inline constexpr const char* kNonpositiveWeight = "NONPOSITIVE_WEIGHT";
inline constexpr const char* kMissingRoute = "MISSING_ROUTE";
inline constexpr const char* kNonSimpleRoute = "NON_SIMPLE_ROUTE";
inline constexpr const char* kRouteNotOnEdges = "ROUTE_NOT_ON_EDGES";
inline constexpr const char* kInteriorBoundaryVertex = "INTERIOR_BOUNDARY_VERTEX";
inline constexpr const char* kTreeConsistencyViolation = "TREE_CONSISTENCY_VIOLATION";
inline constexpr const char* kDuplicateVertex = "DUPLICATE_VERTEX";
inline constexpr const char* kUnknownVertex = "UNKNOWN_VERTEX";
}  // namespace violation

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Lookup structure built once over a graph. All query helpers below have an
// overload taking a prebuilt index so O(n^3) sweeps do not rebuild it per call.
class GraphIndex {
 public:
  explicit GraphIndex(const NetworkGraph& g);

  const NetworkGraph& graph() const { return *g_; }
  bool has_vertex(const VertexId& id) const { return ids_.count(id) != 0; }
  bool is_boundary(const VertexId& id) const { return boundary_set_.count(id) != 0; }
  const std::vector<VertexId>& boundary() const { return boundary_; }

  std::optional<double> edge_weight(const VertexId& from, const VertexId& to) const;
  const Route* find_route(const VertexId& src, const VertexId& dst) const;
  // Throws Error(UNKNOWN_ROUTE) when the pair has no route.
  const Route& route(const VertexId& src, const VertexId& dst) const;
  // Cumulative distance from route start to each path position. NaN entries
  // appear past a path step whose edge is missing from the graph.
  const std::vector<double>& prefix(const Route& r) const;

 private:
  const NetworkGraph* g_;
  std::set<VertexId> ids_;
  std::set<VertexId> boundary_set_;
  std::vector<VertexId> boundary_;
  std::map<std::pair<VertexId, VertexId>, double> weight_;
  std::map<std::pair<VertexId, VertexId>, const Route*> route_;
  std::map<const Route*, std::vector<double>> prefix_;
};

// Structural and routing checks. A graph is usable by the rest of the library
// exactly when the report comes back empty. The consistency check flags route
// pairs that visit two vertices in the same order but disagree on the segment
// in between; fixed shortest-path routings can never do that, and the
// downstream junction walks rely on it.
ValidationReport validate(const NetworkGraph& g);

// Total weight of the fixed route from b1 to b2. Throws Error(UNKNOWN_ROUTE).
double path_length(const NetworkGraph& g, const VertexId& b1, const VertexId& b2);
double path_length(const GraphIndex& idx, const VertexId& b1, const VertexId& b2);

struct Junction {
  VertexId vertex;
  double distance;
};

// Last vertex common to the routes b->b1 and b->b2 when walking from b, and
// its distance from b. Throws Error(TREE_CONSISTENCY_VIOLATION) if the two
// routes share a vertex past the point where they diverge.
Junction source_junction(const NetworkGraph& g, const VertexId& b,
                         const VertexId& b1, const VertexId& b2);
Junction source_junction(const GraphIndex& idx, const VertexId& b,
                         const VertexId& b1, const VertexId& b2);

// Mirror image: first vertex common to the routes b1->b and b2->b when walking
// toward b, at its distance from that vertex to b.
Junction receiver_junction(const NetworkGraph& g, const VertexId& b1,
                           const VertexId& b2, const VertexId& b);
Junction receiver_junction(const GraphIndex& idx, const VertexId& b1,
                           const VertexId& b2, const VertexId& b);

struct SourceReceiverSets {
  std::set<VertexId> sources;
  std::set<VertexId> receivers;
};

// Boundary vertices whose routes pass through internal vertex x, split by
// which side of x they sit on. Throws Error(NOT_INTERNAL) for boundary ids.
SourceReceiverSets source_receiver_sets(const NetworkGraph& g, const VertexId& x);
SourceReceiverSets source_receiver_sets(const GraphIndex& idx, const VertexId& x);

// True when every edge has its reverse and every route is the reversal of the
// opposite route.
bool is_symmetric_routing(const NetworkGraph& g);

struct DrawOutResult {
  NetworkGraph graph;
  // Boundary vertices that sat in some route interior and got an internal
  // stand-in (id suffixed with "#int") plus a fresh leaf edge pair.
  std::vector<VertexId> drawn_out;
  double leaf_weight = 1.0;
};

// Rewires boundary vertices that appear inside route interiors: the original
// id stays boundary but becomes a leaf, an internal stand-in inherits all
// former edges, and every route is updated. Input must be valid except for
// INTERIOR_BOUNDARY_VERTEX findings.
DrawOutResult draw_out_boundary(const NetworkGraph& g, double leaf_weight = 1.0);

}  // namespace netrecon

#endif  // NETRECON_GRAPH_HPP_
