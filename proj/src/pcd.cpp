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

#include "netrecon/pcd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

namespace netrecon {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

bool is_set(double v) { return !std::isnan(v); }

std::string triple_str(const std::string& a, const std::string& b, const std::string& c) {
  return "(" + a + ";" + b + "," + c + ")";
}

}  // namespace

PathCorrelationData::PathCorrelationData(std::vector<VertexId> boundary)
    : boundary_(std::move(boundary)) {
  for (size_t i = 0; i < boundary_.size(); ++i) pos_[boundary_[i]] = i;
  if (pos_.size() != boundary_.size()) {
    throw Error("DUPLICATE_VERTEX", "boundary list contains a repeated id");
  }
  const size_t n = boundary_.size();
  len_.assign(n * n, kUnset);
  src_.assign(n * n * n, kUnset);
  rcv_.assign(n * n * n, kUnset);
}

int PathCorrelationData::index_of(const VertexId& b) const {
  auto it = pos_.find(b);
  return it == pos_.end() ? -1 : static_cast<int>(it->second);
}

size_t PathCorrelationData::at(const VertexId& b) const {
  auto it = pos_.find(b);
  if (it == pos_.end()) {
    throw Error("UNKNOWN_VERTEX", b + " is not a boundary vertex of this data set");
  }
  return it->second;
}

double PathCorrelationData::len(const VertexId& b1, const VertexId& b2) const {
  return len_[at(b1) * size() + at(b2)];
}

void PathCorrelationData::set_len(const VertexId& b1, const VertexId& b2, double v) {
  len_[at(b1) * size() + at(b2)] = v;
}

double PathCorrelationData::src(const VertexId& b, const VertexId& b1,
                                const VertexId& b2) const {
  return src_at(at(b), at(b1), at(b2));
}

void PathCorrelationData::set_src(const VertexId& b, const VertexId& b1,
                                  const VertexId& b2, double v) {
  const size_t n = size();
  const size_t i = at(b), j = at(b1), k = at(b2);
  src_[(i * n + j) * n + k] = v;
  src_[(i * n + k) * n + j] = v;
}

double PathCorrelationData::rcv(const VertexId& b1, const VertexId& b2,
                                const VertexId& b) const {
  return rcv_at(at(b1), at(b2), at(b));
}

void PathCorrelationData::set_rcv(const VertexId& b1, const VertexId& b2,
                                  const VertexId& b, double v) {
  const size_t n = size();
  const size_t i = at(b), j = at(b1), k = at(b2);
  rcv_[(i * n + j) * n + k] = v;
  rcv_[(i * n + k) * n + j] = v;
}

PathCorrelationData measure(const NetworkGraph& g) {
  ValidationReport report = validate(g);
  if (!report.valid()) {
    throw Error("INVALID_GRAPH", "cannot measure an invalid graph: " +
                                     report.violations.front().code + ": " +
                                     report.violations.front().detail);
  }
  GraphIndex idx(g);
  PathCorrelationData pcd(idx.boundary());
  const auto& bs = pcd.boundary();
  const size_t n = bs.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      pcd.set_len(bs[i], bs[j], path_length(idx, bs[i], bs[j]));
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = j + 1; k < n; ++k) {
        if (k == i) continue;
        pcd.set_src(bs[i], bs[j], bs[k],
                    source_junction(idx, bs[i], bs[j], bs[k]).distance);
        pcd.set_rcv(bs[j], bs[k], bs[i],
                    receiver_junction(idx, bs[j], bs[k], bs[i]).distance);
      }
    }
  }
  return pcd;
}

ValidationReport validate_pcd(const PathCorrelationData& pcd, double eps) {
  ValidationReport report;
  auto add = [&report](const char* code, std::string detail) {
    report.violations.push_back({code, std::move(detail)});
  };
  const auto& bs = pcd.boundary();
  const size_t n = bs.size();

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double l = pcd.len_at(i, j);
      if (!is_set(l)) {
        add(pcd_violation::kMissingEntry, "len(" + bs[i] + "," + bs[j] + ") is unset");
      } else if (!(l > 0.0) || !std::isfinite(l)) {
        std::ostringstream oss;
        oss << "len(" << bs[i] << "," << bs[j] << ") = " << l << " is not positive";
        add(pcd_violation::kRangeViolation, oss.str());
      }
    }
  }

  // src/rcv presence and bounds against the participating route lengths
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = j + 1; k < n; ++k) {
        if (k == i) continue;
        const double s = pcd.src_at(i, j, k);
        if (!is_set(s)) {
          add(pcd_violation::kMissingEntry,
              "src" + triple_str(bs[i], bs[j], bs[k]) + " is unset");
        } else if (is_set(pcd.len_at(i, j)) && is_set(pcd.len_at(i, k))) {
          const double cap = std::min(pcd.len_at(i, j), pcd.len_at(i, k));
          if (s < -eps || s > cap + eps) {
            std::ostringstream oss;
            oss << "src" << triple_str(bs[i], bs[j], bs[k]) << " = " << s
                << " outside [0, " << cap << "]";
            add(pcd_violation::kRangeViolation, oss.str());
          }
        }
        const double r = pcd.rcv_at(j, k, i);
        if (!is_set(r)) {
          add(pcd_violation::kMissingEntry,
              "rcv" + triple_str(bs[i], bs[j], bs[k]) + " is unset");
        } else if (is_set(pcd.len_at(j, i)) && is_set(pcd.len_at(k, i))) {
          const double cap = std::min(pcd.len_at(j, i), pcd.len_at(k, i));
          if (r < -eps || r > cap + eps) {
            std::ostringstream oss;
            oss << "rcv" << triple_str(bs[i], bs[j], bs[k]) << " = " << r
                << " outside [0, " << cap << "]";
            add(pcd_violation::kRangeViolation, oss.str());
          }
        }
      }
    }
  }

  // Three-point condition: among the three pairwise junction values of any
  // triple seen from one root, the minimum must occur (at least) twice.
  auto check_three_point = [&](bool source_side, size_t b, size_t j, size_t k, size_t l) {
    const double vjk = source_side ? pcd.src_at(b, j, k) : pcd.rcv_at(j, k, b);
    const double vjl = source_side ? pcd.src_at(b, j, l) : pcd.rcv_at(j, l, b);
    const double vkl = source_side ? pcd.src_at(b, k, l) : pcd.rcv_at(k, l, b);
    if (!is_set(vjk) || !is_set(vjl) || !is_set(vkl)) return;
    const double lo = std::min({vjk, vjl, vkl});
    int at_min = 0;
    for (double v : {vjk, vjl, vkl}) {
      if (v <= lo + eps) ++at_min;
    }
    if (at_min < 2) {
      std::ostringstream oss;
      oss << (source_side ? "src" : "rcv") << " values for root " << bs[b] << " and {"
          << bs[j] << "," << bs[k] << "," << bs[l] << "} are {" << vjk << "," << vjl
          << "," << vkl << "}: minimum attained only once";
      add(pcd_violation::kThreePointViolation, oss.str());
    }
  };
  for (size_t b = 0; b < n; ++b) {
    for (size_t j = 0; j < n; ++j) {
      if (j == b) continue;
      for (size_t k = j + 1; k < n; ++k) {
        if (k == b) continue;
        for (size_t l = k + 1; l < n; ++l) {
          if (l == b) continue;
          check_three_point(true, b, j, k, l);
          check_three_point(false, b, j, k, l);
        }
      }
    }
  }

  return report;
}

namespace {

// Agglomerative construction shared by the source and receiver sides.
// value(a, b) is the pairwise junction depth, leaf_depth(a) the full route
// length. Deepest pairs merge first; equal-depth merges collapse afterward.
struct Cluster {
  std::vector<size_t> members;  // leaf indices, first member is the oldest
};

struct DendroNode {
  double depth = 0.0;
  std::vector<int> child_nodes;
  std::vector<size_t> child_leaves;
};

LogicalTree build_tree(const PathCorrelationData& pcd, const VertexId& root,
                       bool toward_root, double eps) {
  const int root_idx = pcd.index_of(root);
  if (root_idx < 0) {
    throw Error("UNKNOWN_VERTEX", root + " is not a boundary vertex of this data set");
  }
  const size_t b = static_cast<size_t>(root_idx);
  const auto& bs = pcd.boundary();
  const size_t n = bs.size();

  std::vector<size_t> leaves;
  for (size_t i = 0; i < n; ++i) {
    if (i != b) leaves.push_back(i);
  }
  auto leaf_depth = [&](size_t i) {
    return toward_root ? pcd.len_at(i, b) : pcd.len_at(b, i);
  };
  auto value = [&](size_t i, size_t j) {
    return toward_root ? pcd.rcv_at(i, j, b) : pcd.src_at(b, i, j);
  };
  for (size_t i : leaves) {
    if (!is_set(leaf_depth(i))) {
      throw Error("INCONSISTENT_PCD", "missing length for " + bs[i]);
    }
    for (size_t j : leaves) {
      if (j > i && !is_set(value(i, j))) {
        throw Error("INCONSISTENT_PCD",
                    "missing junction value for " + bs[i] + "," + bs[j]);
      }
    }
  }

  // Dendrogram: repeatedly merge the two clusters with the deepest junction.
  std::vector<Cluster> clusters;
  std::vector<int> cluster_node;  // dendrogram node of each live cluster, -1 for leaf
  std::vector<DendroNode> nodes;
  for (size_t i : leaves) {
    clusters.push_back({{i}});
    cluster_node.push_back(-1);
  }

  auto cluster_value = [&](const Cluster& a, const Cluster& c) {
    const double rep = value(a.members.front(), c.members.front());
    for (size_t x : a.members) {
      for (size_t y : c.members) {
        if (std::fabs(value(x, y) - rep) > eps) {
          std::ostringstream oss;
          oss << "junction values disagree across a cluster: (" << bs[x] << "," << bs[y]
              << ") = " << value(x, y) << " vs (" << bs[a.members.front()] << ","
              << bs[c.members.front()] << ") = " << rep;
          throw Error("INCONSISTENT_PCD", oss.str());
        }
      }
    }
    return rep;
  };

  while (clusters.size() > 1) {
    size_t best_i = 0, best_j = 1;
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < clusters.size(); ++i) {
      for (size_t j = i + 1; j < clusters.size(); ++j) {
        const double v = cluster_value(clusters[i], clusters[j]);
        if (v > best) {
          best = v;
          best_i = i;
          best_j = j;
        }
      }
    }
    DendroNode node;
    node.depth = best;
    for (size_t idx : {best_i, best_j}) {
      if (cluster_node[idx] < 0) {
        node.child_leaves.push_back(clusters[idx].members.front());
      } else {
        node.child_nodes.push_back(cluster_node[idx]);
      }
    }
    for (size_t m : clusters[best_j].members) clusters[best_i].members.push_back(m);
    nodes.push_back(std::move(node));
    cluster_node[best_i] = static_cast<int>(nodes.size()) - 1;
    clusters.erase(clusters.begin() + static_cast<long>(best_j));
    cluster_node.erase(cluster_node.begin() + static_cast<long>(best_j));
  }

  // Collapse: a node within eps of its retained ancestor joins it; nodes at
  // depth <= eps join the root. Retained nodes become the tree's junctions.
  LogicalTree tree;
  tree.root = root;
  tree.toward_root = toward_root;

  struct Retained {
    double depth;
    std::string id;
    std::vector<size_t> leaf_children;
    std::vector<int> node_children;  // indices into retained
  };
  std::vector<Retained> retained;

  // parent_of[i]: index into retained (-1 for root) owning dendrogram node i
  // after collapsing. Process from the top node downward.
  struct Frame {
    int node;
    int parent;        // retained index, -1 = root
    double parent_depth;
  };
  std::vector<Frame> stack;
  if (!nodes.empty()) {
    stack.push_back({static_cast<int>(nodes.size()) - 1, -1, 0.0});
  }
  std::vector<size_t> root_leaves;
  if (nodes.empty() && leaves.size() == 1) root_leaves.push_back(leaves.front());

  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const DendroNode& dn = nodes[static_cast<size_t>(f.node)];
    int attach = f.parent;
    double attach_depth = f.parent_depth;
    if (dn.depth > f.parent_depth + eps) {
      retained.push_back({dn.depth, "", {}, {}});
      attach = static_cast<int>(retained.size()) - 1;
      attach_depth = dn.depth;
      // nodes whose parent is the root stay unclaimed and are picked up below
      if (f.parent >= 0) {
        retained[static_cast<size_t>(f.parent)].node_children.push_back(attach);
      }
    }
    for (size_t leaf : dn.child_leaves) {
      if (attach < 0) {
        root_leaves.push_back(leaf);
      } else {
        retained[static_cast<size_t>(attach)].leaf_children.push_back(leaf);
      }
    }
    for (int child : dn.child_nodes) {
      stack.push_back({child, attach, attach_depth});
    }
  }

  // Root children are the retained nodes nobody claimed.
  std::vector<bool> claimed(retained.size(), false);
  for (const auto& r : retained) {
    for (int c : r.node_children) claimed[static_cast<size_t>(c)] = true;
  }

  // Deterministic ids: order junctions by depth, then by smallest leaf beneath.
  std::vector<int> order(static_cast<int>(retained.size()));
  for (size_t i = 0; i < retained.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<std::string> min_leaf(retained.size());
  // compute smallest leaf id in each retained subtree (children appear after
  // parents in creation order, so walk backwards)
  for (size_t i = retained.size(); i-- > 0;) {
    std::string lo;
    for (size_t leaf : retained[i].leaf_children) {
      if (lo.empty() || bs[leaf] < lo) lo = bs[leaf];
    }
    for (int c : retained[i].node_children) {
      const std::string& cl = min_leaf[static_cast<size_t>(c)];
      if (lo.empty() || (!cl.empty() && cl < lo)) lo = cl;
    }
    min_leaf[i] = lo;
  }
  std::sort(order.begin(), order.end(), [&](int a, int c) {
    const auto& ra = retained[static_cast<size_t>(a)];
    const auto& rc = retained[static_cast<size_t>(c)];
    if (ra.depth != rc.depth) return ra.depth < rc.depth;
    return min_leaf[static_cast<size_t>(a)] < min_leaf[static_cast<size_t>(c)];
  });
  for (size_t rank = 0; rank < order.size(); ++rank) {
    retained[static_cast<size_t>(order[rank])].id = "j" + std::to_string(rank + 1);
  }

  for (int i : order) {
    const auto& r = retained[static_cast<size_t>(i)];
    tree.internal_nodes.push_back({r.id, r.depth});
  }
  auto emit_leaf = [&](const std::string& parent_id, double parent_depth, size_t leaf) {
    const double d = leaf_depth(leaf);
    if (d <= parent_depth + eps) {
      std::ostringstream oss;
      oss << "leaf " << bs[leaf] << " at depth " << d
          << " does not clear its junction at depth " << parent_depth;
      throw Error("INCONSISTENT_PCD", oss.str());
    }
    tree.leaves.push_back({bs[leaf], d});
    tree.edges.push_back({parent_id, bs[leaf], d - parent_depth});
  };
  // Emit edges in a stable order: root's children first, then junctions by id
  // rank. Leaves sort by id within a parent.
  std::sort(root_leaves.begin(), root_leaves.end(),
            [&](size_t a, size_t c) { return bs[a] < bs[c]; });
  std::vector<int> root_nodes;
  for (size_t i = 0; i < retained.size(); ++i) {
    if (!claimed[i]) root_nodes.push_back(static_cast<int>(i));
  }
  std::sort(root_nodes.begin(), root_nodes.end(), [&](int a, int c) {
    return retained[static_cast<size_t>(a)].id < retained[static_cast<size_t>(c)].id;
  });
  for (int i : root_nodes) {
    const auto& r = retained[static_cast<size_t>(i)];
    tree.edges.push_back({root, r.id, r.depth});
  }
  for (size_t leaf : root_leaves) emit_leaf(root, 0.0, leaf);
  for (int i : order) {
    const auto& r = retained[static_cast<size_t>(i)];
    std::vector<int> kids = r.node_children;
    std::sort(kids.begin(), kids.end(), [&](int a, int c) {
      return retained[static_cast<size_t>(a)].id < retained[static_cast<size_t>(c)].id;
    });
    for (int c : kids) {
      const auto& rc = retained[static_cast<size_t>(c)];
      tree.edges.push_back({r.id, rc.id, rc.depth - r.depth});
    }
    std::vector<size_t> kid_leaves = r.leaf_children;
    std::sort(kid_leaves.begin(), kid_leaves.end(),
              [&](size_t a, size_t c) { return bs[a] < bs[c]; });
    for (size_t leaf : kid_leaves) emit_leaf(r.id, r.depth, leaf);
  }
  std::sort(tree.leaves.begin(), tree.leaves.end(),
            [](const TreeNode& a, const TreeNode& c) { return a.id < c.id; });

  return tree;
}

}  // namespace

LogicalTree build_source_tree(const PathCorrelationData& pcd, const VertexId& root,
                              double eps) {
  return build_tree(pcd, root, false, eps);
}

LogicalTree build_receiver_tree(const PathCorrelationData& pcd, const VertexId& root,
                                double eps) {
  return build_tree(pcd, root, true, eps);
}

}  // namespace netrecon
