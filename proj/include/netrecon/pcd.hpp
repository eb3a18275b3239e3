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

// Path correlation data: per ordered boundary pair the route length, plus for
// every boundary triple how far two routes leaving a common source stay
// together (src) and how early two routes toward a common receiver meet
// (rcv). This is everything an observer at the boundary can measure, and the
// only input reconstruction gets.

#ifndef NETRECON_PCD_HPP_
#define NETRECON_PCD_HPP_

#include <map>
#include <string>
#include <vector>

#include "netrecon/graph.hpp"

namespace netrecon {

class PathCorrelationData {
 public:
  PathCorrelationData() = default;
  // All entries start unset (NaN) until filled in.
  explicit PathCorrelationData(std::vector<VertexId> boundary);

  const std::vector<VertexId>& boundary() const { return boundary_; }
  size_t size() const { return boundary_.size(); }
  // Position of b in the boundary list, -1 when absent.
  int index_of(const VertexId& b) const;

  double len(const VertexId& b1, const VertexId& b2) const;
  void set_len(const VertexId& b1, const VertexId& b2, double v);

  // Distance from b to the junction of the routes b->b1 and b->b2.
  // Symmetric in (b1, b2).
  double src(const VertexId& b, const VertexId& b1, const VertexId& b2) const;
  void set_src(const VertexId& b, const VertexId& b1, const VertexId& b2, double v);

  // Distance from the junction of the routes b1->b and b2->b to b.
  // Symmetric in (b1, b2).
  double rcv(const VertexId& b1, const VertexId& b2, const VertexId& b) const;
  void set_rcv(const VertexId& b1, const VertexId& b2, const VertexId& b, double v);

  // Index-based accessors for sweep loops; i,j,k are boundary positions.
  double len_at(size_t i, size_t j) const { return len_[i * size() + j]; }
  double src_at(size_t b, size_t j, size_t k) const {
    return src_[(b * size() + j) * size() + k];
  }
  double rcv_at(size_t j, size_t k, size_t b) const {
    return rcv_[(b * size() + j) * size() + k];
  }

 private:
  size_t at(const VertexId& b) const;  // throws on unknown id
  std::vector<VertexId> boundary_;
  std::map<VertexId, size_t> pos_;
  std::vector<double> len_;  // n*n, diagonal unused
  std::vector<double> src_;  // n*n*n, symmetric in the last two positions
  std::vector<double> rcv_;  // n*n*n, symmetric in the middle pair
};

namespace pcd_violation {
inline constexpr const char* kMissingEntry = "MISSING_ENTRY";
inline constexpr const char* kRangeViolation = "RANGE_VIOLATION";
inline constexpr const char* kThreePointViolation = "THREE_POINT_VIOLATION";
}  // namespace pcd_violation

// Measures the full table from a graph by walking its routes. Validates the
// graph first and throws Error(INVALID_GRAPH) when it is unusable.
PathCorrelationData measure(const NetworkGraph& g);

// Checks completeness, value ranges, and the three-point condition (for any
// boundary triple seen from one root, the smallest of the three pairwise
// values must be attained at least twice). Data measured from a valid graph
// always passes.
ValidationReport validate_pcd(const PathCorrelationData& pcd,
                              double eps = kDefaultEpsilon);

struct TreeNode {
  std::string id;
  double depth = 0.0;
};

struct TreeEdge {
  std::string parent;
  std::string child;
  double weight = 0.0;
};

// Junction tree seen from one root: leaves are the other boundary vertices at
// their full route length, internal nodes are the junctions the src (or rcv)
// values describe. Depths measure distance from the root for source trees and
// distance to the root for receiver trees.
struct LogicalTree {
  VertexId root;
  bool toward_root = false;
  std::vector<TreeNode> internal_nodes;
  std::vector<TreeNode> leaves;
  std::vector<TreeEdge> edges;  // parent -> child, weight = depth difference
};

// Builds the junction tree for routes leaving root. Junction depths within
// eps collapse into one node (and into the root at depth zero). Throws
// Error(INCONSISTENT_PCD) when the values cannot come from any tree.
LogicalTree build_source_tree(const PathCorrelationData& pcd, const VertexId& root,
                              double eps = kDefaultEpsilon);

// Same for routes arriving at root, using the rcv table.
LogicalTree build_receiver_tree(const PathCorrelationData& pcd, const VertexId& root,
                                double eps = kDefaultEpsilon);

}  // namespace netrecon

#endif  // NETRECON_PCD_HPP_
