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

#include "netrecon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace netrecon {

namespace {

std::string pair_str(const VertexId& a, const VertexId& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

std::vector<VertexId> NetworkGraph::boundary() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices) {
    if (v.boundary) out.push_back(v.id);
  }
  return out;
}

std::vector<VertexId> NetworkGraph::internal() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices) {
    if (!v.boundary) out.push_back(v.id);
  }
  return out;
}

bool NetworkGraph::has_vertex(const VertexId& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return true;
  }
  return false;
}

bool NetworkGraph::is_boundary(const VertexId& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return v.boundary;
  }
  return false;
}

GraphIndex::GraphIndex(const NetworkGraph& g) : g_(&g) {
  for (const auto& v : g.vertices) {
    ids_.insert(v.id);
    if (v.boundary) {
      if (boundary_set_.insert(v.id).second) boundary_.push_back(v.id);
    }
  }
  for (const auto& e : g.edges) {
    // first occurrence wins; validate() reports duplicates
    weight_.emplace(std::make_pair(e.from, e.to), e.weight);
  }
  for (const auto& r : g.routes) {
    route_.emplace(std::make_pair(r.src, r.dst), &r);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : g.routes) {
    std::vector<double> acc(r.path.size(), 0.0);
    for (size_t i = 1; i < r.path.size(); ++i) {
      auto it = weight_.find(std::make_pair(r.path[i - 1], r.path[i]));
      double w = (it == weight_.end()) ? nan : it->second;
      acc[i] = acc[i - 1] + w;
    }
    prefix_.emplace(&r, std::move(acc));
  }
}

std::optional<double> GraphIndex::edge_weight(const VertexId& from,
                                              const VertexId& to) const {
  auto it = weight_.find(std::make_pair(from, to));
  if (it == weight_.end()) return std::nullopt;
  return it->second;
}

const Route* GraphIndex::find_route(const VertexId& src, const VertexId& dst) const {
  auto it = route_.find(std::make_pair(src, dst));
  return it == route_.end() ? nullptr : it->second;
}

const Route& GraphIndex::route(const VertexId& src, const VertexId& dst) const {
  const Route* r = find_route(src, dst);
  if (r == nullptr) {
    throw Error("UNKNOWN_ROUTE", "no route for boundary pair " + pair_str(src, dst));
  }
  return *r;
}

const std::vector<double>& GraphIndex::prefix(const Route& r) const {
  return prefix_.at(&r);
}

namespace {

// True when the route is usable for order-sensitive checks: known vertices,
// consistent endpoints, no repeats.
bool route_well_formed(const GraphIndex& idx, const Route& r) {
  if (r.path.size() < 2) return false;
  if (r.path.front() != r.src || r.path.back() != r.dst) return false;
  if (r.src == r.dst) return false;
  std::unordered_set<std::string> seen;
  for (const auto& v : r.path) {
    if (!idx.has_vertex(v)) return false;
    if (!seen.insert(v).second) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const NetworkGraph& g) {
  ValidationReport report;
  auto add = [&report](const char* code, std::string detail) {
    report.violations.push_back({code, std::move(detail)});
  };

  std::set<VertexId> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second) {
      add(violation::kDuplicateVertex, "vertex id declared twice: " + v.id);
    }
  }

  GraphIndex idx(g);

  std::set<std::pair<VertexId, VertexId>> edge_keys;
  for (const auto& e : g.edges) {
    if (!idx.has_vertex(e.from) || !idx.has_vertex(e.to)) {
      add(violation::kUnknownVertex, "edge " + pair_str(e.from, e.to) +
                                         " references an undeclared vertex");
      continue;
    }
    if (e.from == e.to) {
      add(violation::kSelfLoop, "self loop at " + e.from);
    }
    if (!edge_keys.insert(std::make_pair(e.from, e.to)).second) {
      add(violation::kMultiEdge, "duplicate edge " + pair_str(e.from, e.to));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      std::ostringstream oss;
      oss << "edge " << pair_str(e.from, e.to) << " has weight " << e.weight;
      add(violation::kNonpositiveWeight, oss.str());
    }
  }

  std::set<std::pair<VertexId, VertexId>> route_keys;
  for (const auto& r : g.routes) {
    const std::string key = pair_str(r.src, r.dst);
    bool known = true;
    for (const auto& v : r.path) {
      if (!idx.has_vertex(v)) {
        add(violation::kUnknownVertex, "route " + key + " visits undeclared vertex " + v);
        known = false;
      }
    }
    if (idx.has_vertex(r.src) && !idx.is_boundary(r.src)) {
      add(violation::kNonSimpleRoute, "route " + key + " starts at a non-boundary vertex");
    }
    if (idx.has_vertex(r.dst) && !idx.is_boundary(r.dst)) {
      add(violation::kNonSimpleRoute, "route " + key + " ends at a non-boundary vertex");
    }
    if (r.src == r.dst) {
      add(violation::kNonSimpleRoute, "route " + key + " connects a vertex to itself");
    }
    if (r.path.size() < 2 || r.path.front() != r.src || r.path.back() != r.dst) {
      add(violation::kNonSimpleRoute, "route " + key + " path does not run from src to dst");
    } else if (known) {
      std::unordered_set<std::string> seen;
      for (const auto& v : r.path) {
        if (!seen.insert(v).second) {
          add(violation::kNonSimpleRoute, "route " + key + " revisits " + v);
          break;
        }
      }
      for (size_t i = 1; i + 1 < r.path.size(); ++i) {
        if (idx.is_boundary(r.path[i])) {
          add(violation::kInteriorBoundaryVertex,
              "route " + key + " passes through boundary vertex " + r.path[i]);
        }
      }
      for (size_t i = 1; i < r.path.size(); ++i) {
        if (!idx.edge_weight(r.path[i - 1], r.path[i]).has_value()) {
          add(violation::kRouteNotOnEdges,
              "route " + key + " uses missing edge " + pair_str(r.path[i - 1], r.path[i]));
        }
      }
    }
    if (!route_keys.insert(std::make_pair(r.src, r.dst)).second) {
      add(violation::kMultiEdge, "duplicate route for pair " + key);
    }
  }

  for (const auto& b1 : idx.boundary()) {
    for (const auto& b2 : idx.boundary()) {
      if (b1 == b2) continue;
      if (idx.find_route(b1, b2) == nullptr) {
        add(violation::kMissingRoute, "no route for boundary pair " + pair_str(b1, b2));
      }
    }
  }

  // Order consistency: two routes that visit u and then v must agree on the
  // whole stretch between them. Reversed-order sharing is fine (a route and
  // its mirror meet every vertex in opposite order).
  std::vector<const Route*> sound;
  for (const auto& r : g.routes) {
    if (route_well_formed(idx, r)) sound.push_back(&r);
  }
  for (size_t i = 0; i < sound.size(); ++i) {
    const Route& r1 = *sound[i];
    std::unordered_map<std::string, size_t> pos1;
    for (size_t k = 0; k < r1.path.size(); ++k) pos1[r1.path[k]] = k;
    for (size_t j = i + 1; j < sound.size(); ++j) {
      const Route& r2 = *sound[j];
      std::vector<std::pair<size_t, size_t>> shared;  // (pos in r1, pos in r2)
      for (size_t k = 0; k < r2.path.size(); ++k) {
        auto it = pos1.find(r2.path[k]);
        if (it != pos1.end()) shared.emplace_back(it->second, k);
      }
      bool flagged = false;
      for (size_t a = 0; a < shared.size() && !flagged; ++a) {
        for (size_t b = 0; b < shared.size() && !flagged; ++b) {
          if (a == b) continue;
          auto [p1u, p2u] = shared[a];
          auto [p1v, p2v] = shared[b];
          if (p1u >= p1v || p2u >= p2v) continue;
          if (p1v - p1u != p2v - p2u ||
              !std::equal(r1.path.begin() + static_cast<long>(p1u),
                          r1.path.begin() + static_cast<long>(p1v) + 1,
                          r2.path.begin() + static_cast<long>(p2u))) {
            add(violation::kTreeConsistencyViolation,
                "routes " + pair_str(r1.src, r1.dst) + " and " + pair_str(r2.src, r2.dst) +
                    " both visit " + r1.path[p1u] + " before " + r1.path[p1v] +
                    " but disagree in between");
            flagged = true;
          }
        }
      }
    }
  }

  return report;
}

double path_length(const GraphIndex& idx, const VertexId& b1, const VertexId& b2) {
  const Route& r = idx.route(b1, b2);
  return idx.prefix(r).back();
}

double path_length(const NetworkGraph& g, const VertexId& b1, const VertexId& b2) {
  return path_length(GraphIndex(g), b1, b2);
}

namespace {

// Asserts the half-open slices r1.path[lo1,hi1) and r2.path[lo2,hi2) are
// disjoint; the junction walks call this on the stretches outside the shared
// prefix or suffix, where any overlap means the routing is not tree shaped.
void check_disjoint(const Route& r1, const Route& r2, size_t lo1, size_t hi1,
                    size_t lo2, size_t hi2) {
  std::unordered_set<std::string> part1(r1.path.begin() + static_cast<long>(lo1),
                                        r1.path.begin() + static_cast<long>(hi1));
  for (size_t k = lo2; k < hi2; ++k) {
    if (part1.count(r2.path[k]) != 0) {
      throw Error("TREE_CONSISTENCY_VIOLATION",
                  "routes (" + r1.src + "," + r1.dst + ") and (" + r2.src + "," + r2.dst +
                      ") diverge and then both reach " + r2.path[k]);
    }
  }
}

}  // namespace

Junction source_junction(const GraphIndex& idx, const VertexId& b,
                         const VertexId& b1, const VertexId& b2) {
  const Route& r1 = idx.route(b, b1);
  const Route& r2 = idx.route(b, b2);
  size_t k = 0;
  while (k < r1.path.size() && k < r2.path.size() && r1.path[k] == r2.path[k]) ++k;
  // k >= 1 because both paths start at b
  check_disjoint(r1, r2, k, r1.path.size(), k, r2.path.size());
  return {r1.path[k - 1], idx.prefix(r1)[k - 1]};
}

Junction source_junction(const NetworkGraph& g, const VertexId& b,
                         const VertexId& b1, const VertexId& b2) {
  return source_junction(GraphIndex(g), b, b1, b2);
}

Junction receiver_junction(const GraphIndex& idx, const VertexId& b1,
                           const VertexId& b2, const VertexId& b) {
  const Route& r1 = idx.route(b1, b);
  const Route& r2 = idx.route(b2, b);
  const size_t n1 = r1.path.size();
  const size_t n2 = r2.path.size();
  size_t k = 0;
  while (k < n1 && k < n2 && r1.path[n1 - 1 - k] == r2.path[n2 - 1 - k]) ++k;
  check_disjoint(r1, r2, 0, n1 - k, 0, n2 - k);
  const auto& acc = idx.prefix(r1);
  const size_t j = n1 - k;  // first shared position in r1
  return {r1.path[j], acc.back() - acc[j]};
}

Junction receiver_junction(const NetworkGraph& g, const VertexId& b1,
                           const VertexId& b2, const VertexId& b) {
  return receiver_junction(GraphIndex(g), b1, b2, b);
}

SourceReceiverSets source_receiver_sets(const GraphIndex& idx, const VertexId& x) {
  if (!idx.has_vertex(x)) {
    throw Error("UNKNOWN_VERTEX", "no vertex with id " + x);
  }
  if (idx.is_boundary(x)) {
    throw Error("NOT_INTERNAL", x + " is a boundary vertex");
  }
  SourceReceiverSets out;
  for (const auto& r : idx.graph().routes) {
    for (size_t i = 1; i + 1 < r.path.size(); ++i) {
      if (r.path[i] == x) {
        out.sources.insert(r.src);
        out.receivers.insert(r.dst);
        break;
      }
    }
  }
  return out;
}

SourceReceiverSets source_receiver_sets(const NetworkGraph& g, const VertexId& x) {
  return source_receiver_sets(GraphIndex(g), x);
}

bool is_symmetric_routing(const NetworkGraph& g) {
  GraphIndex idx(g);
  for (const auto& e : g.edges) {
    if (!idx.edge_weight(e.to, e.from).has_value()) return false;
  }
  for (const auto& r : g.routes) {
    const Route* back = idx.find_route(r.dst, r.src);
    if (back == nullptr) return false;
    if (back->path.size() != r.path.size()) return false;
    if (!std::equal(r.path.begin(), r.path.end(), back->path.rbegin())) return false;
  }
  return true;
}

DrawOutResult draw_out_boundary(const NetworkGraph& g, double leaf_weight) {
  GraphIndex idx(g);
  std::set<VertexId> drawn_set;
  std::vector<VertexId> drawn;
  for (const auto& r : g.routes) {
    for (size_t i = 1; i + 1 < r.path.size(); ++i) {
      if (idx.is_boundary(r.path[i]) && drawn_set.insert(r.path[i]).second) {
        drawn.push_back(r.path[i]);
      }
    }
  }
  std::sort(drawn.begin(), drawn.end());

  std::map<VertexId, VertexId> stand_in;
  for (const auto& b : drawn) {
    VertexId cand = b + "#int";
    while (idx.has_vertex(cand) || stand_in.count(cand) != 0) cand += "'";
    stand_in[b] = cand;
  }
  auto mapped = [&stand_in](const VertexId& v) {
    auto it = stand_in.find(v);
    return it == stand_in.end() ? v : it->second;
  };

  DrawOutResult result;
  result.leaf_weight = leaf_weight;
  result.drawn_out = drawn;
  NetworkGraph& out = result.graph;
  out.vertices = g.vertices;
  for (const auto& b : drawn) {
    out.vertices.push_back({stand_in[b], false});
  }
  for (const auto& e : g.edges) {
    out.edges.push_back({mapped(e.from), mapped(e.to), e.weight});
  }
  for (const auto& b : drawn) {
    out.edges.push_back({b, stand_in[b], leaf_weight});
    out.edges.push_back({stand_in[b], b, leaf_weight});
  }
  for (const auto& r : g.routes) {
    Route nr;
    nr.src = r.src;
    nr.dst = r.dst;
    nr.path.push_back(r.src);
    if (drawn_set.count(r.src) != 0) nr.path.push_back(stand_in[r.src]);
    for (size_t i = 1; i + 1 < r.path.size(); ++i) nr.path.push_back(mapped(r.path[i]));
    if (drawn_set.count(r.dst) != 0) nr.path.push_back(stand_in[r.dst]);
    nr.path.push_back(r.dst);
    out.routes.push_back(std::move(nr));
  }
  return result;
}

}  // namespace netrecon
