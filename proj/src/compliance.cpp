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

#include "netrecon/compliance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace netrecon {

namespace {

void require_mode(const NetworkGraph& g, bool symmetric_mode) {
  if (symmetric_mode && !is_symmetric_routing(g)) {
    throw Error("MODE_MISMATCH",
                "symmetric mode requested but the graph does not route symmetrically");
  }
}

// Minimal union-find over ids.
struct UnionFind {
  std::map<std::string, std::string> parent;
  const std::string& find(const std::string& v) {
    auto it = parent.emplace(v, v).first;
    while (it->second != it->first) {
      const std::string up = parent[it->second];
      it->second = up;
      it = parent.find(up);
    }
    return it->first;
  }
  void unite(const std::string& a, const std::string& b) {
    const std::string ra = find(a);
    const std::string rb = find(b);
    if (ra != rb) parent[rb] = ra;
  }
};

std::vector<std::vector<VertexId>> components(UnionFind& uf,
                                              const std::set<VertexId>& members) {
  std::map<std::string, std::vector<VertexId>> by_root;
  for (const auto& m : members) by_root[uf.find(m)].push_back(m);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, vs] : by_root) {
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// Ordered endpoint pairs of the routes whose interior contains x.
std::vector<std::pair<VertexId, VertexId>> routes_through(const NetworkGraph& g,
                                                          const VertexId& x) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& r : g.routes) {
    for (size_t i = 1; i + 1 < r.path.size(); ++i) {
      if (r.path[i] == x) {
        out.emplace_back(r.src, r.dst);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::set<std::pair<VertexId, VertexId>> unused_edges(const NetworkGraph& g) {
  std::set<std::pair<VertexId, VertexId>> traversed;
  for (const auto& r : g.routes) {
    for (size_t i = 1; i < r.path.size(); ++i) {
      traversed.emplace(r.path[i - 1], r.path[i]);
    }
  }
  std::set<std::pair<VertexId, VertexId>> out;
  for (const auto& e : g.edges) {
    auto key = std::make_pair(e.from, e.to);
    if (traversed.count(key) == 0) out.insert(key);
  }
  return out;
}

std::set<VertexId> trivial_vertices(const NetworkGraph& g, bool symmetric_mode) {
  require_mode(g, symmetric_mode);
  std::set<VertexId> out;
  if (symmetric_mode) {
    std::map<VertexId, std::set<VertexId>> neighbors;
    for (const auto& e : g.edges) {
      neighbors[e.from].insert(e.to);
      neighbors[e.to].insert(e.from);
    }
    for (const auto& v : g.vertices) {
      if (v.boundary) continue;
      auto it = neighbors.find(v.id);
      if (it == neighbors.end() || it->second.size() <= 2) out.insert(v.id);
    }
  } else {
    std::map<VertexId, int> indeg, outdeg;
    for (const auto& e : g.edges) {
      ++outdeg[e.from];
      ++indeg[e.to];
    }
    for (const auto& v : g.vertices) {
      if (v.boundary) continue;
      if (indeg[v.id] == 1 && outdeg[v.id] == 1) out.insert(v.id);
    }
  }
  return out;
}

SeparabilityPartition separability_classes(const NetworkGraph& g, const VertexId& x,
                                           bool symmetric_mode) {
  if (!g.has_vertex(x)) {
    throw Error("UNKNOWN_VERTEX", "no vertex with id " + x);
  }
  if (g.is_boundary(x)) {
    throw Error("NOT_INTERNAL", x + " is a boundary vertex");
  }
  require_mode(g, symmetric_mode);
  const auto pairs = routes_through(g, x);
  if (pairs.empty()) {
    throw Error("NOT_ON_ANY_ROUTE", "no route interior contains " + x);
  }

  SeparabilityPartition parts;
  parts.vertex = x;

  if (symmetric_mode) {
    UnionFind uf;
    std::set<VertexId> members;
    for (const auto& [s, d] : pairs) {
      uf.unite(s, d);
      members.insert(s);
      members.insert(d);
    }
    parts.source_classes = components(uf, members);
    parts.receiver_classes = parts.source_classes;
    return parts;
  }

  // Two sources belong together when some receiver hears them both through x;
  // dually for receivers. The two partitions pair up one to one.
  UnionFind src_uf, rcv_uf;
  std::set<VertexId> sources, receivers;
  std::map<VertexId, VertexId> first_src_for_rcv, first_rcv_for_src;
  for (const auto& [s, d] : pairs) {
    sources.insert(s);
    receivers.insert(d);
    auto [it_s, new_s] = first_rcv_for_src.emplace(s, d);
    if (!new_s) rcv_uf.unite(it_s->second, d);
    auto [it_d, new_d] = first_src_for_rcv.emplace(d, s);
    if (!new_d) src_uf.unite(it_d->second, s);
  }
  parts.source_classes = components(src_uf, sources);
  parts.receiver_classes = components(rcv_uf, receivers);

  // Align receiver classes with their source classes via any route's pairing.
  std::map<std::string, size_t> src_class_of, rcv_class_of;
  for (size_t i = 0; i < parts.source_classes.size(); ++i) {
    for (const auto& s : parts.source_classes[i]) src_class_of[s] = i;
  }
  for (size_t i = 0; i < parts.receiver_classes.size(); ++i) {
    for (const auto& d : parts.receiver_classes[i]) rcv_class_of[d] = i;
  }
  std::vector<int> paired(parts.source_classes.size(), -1);
  for (const auto& [s, d] : pairs) {
    const size_t si = src_class_of[s];
    const int di = static_cast<int>(rcv_class_of[d]);
    if (paired[si] >= 0 && paired[si] != di) {
      throw Error("INTERNAL",
                  "separation classes of " + x + " do not pair consistently");
    }
    paired[si] = di;
  }
  std::vector<std::vector<VertexId>> aligned(parts.source_classes.size());
  for (size_t i = 0; i < parts.source_classes.size(); ++i) {
    if (paired[i] < 0 ||
        parts.source_classes.size() != parts.receiver_classes.size()) {
      throw Error("INTERNAL",
                  "separation classes of " + x + " do not pair consistently");
    }
    aligned[i] = parts.receiver_classes[static_cast<size_t>(paired[i])];
  }
  parts.receiver_classes = std::move(aligned);
  return parts;
}

NetworkGraph split_vertex(const NetworkGraph& g, const SeparabilityPartition& parts) {
  if (parts.source_classes.size() < 2) return g;
  const VertexId& x = parts.vertex;

  std::map<VertexId, size_t> class_of_src;
  for (size_t i = 0; i < parts.source_classes.size(); ++i) {
    for (const auto& s : parts.source_classes[i]) class_of_src[s] = i;
  }

  std::vector<VertexId> copy_ids;
  for (size_t i = 0; i < parts.source_classes.size(); ++i) {
    VertexId cand = x + "#" + std::to_string(i + 1);
    while (g.has_vertex(cand)) cand += "'";
    copy_ids.push_back(cand);
  }

  NetworkGraph out;
  for (const auto& v : g.vertices) {
    if (v.id == x) {
      for (const auto& c : copy_ids) out.vertices.push_back({c, false});
    } else {
      out.vertices.push_back(v);
    }
  }

  for (const auto& r : g.routes) {
    Route nr = r;
    auto it = class_of_src.find(r.src);
    if (it != class_of_src.end()) {
      for (auto& v : nr.path) {
        if (v == x) v = copy_ids[it->second];
      }
    }
    out.routes.push_back(std::move(nr));
  }

  // Copies keep only the edges their rewired routes traverse; every other
  // edge carries over untouched.
  GraphIndex idx(g);
  std::set<std::pair<VertexId, VertexId>> wanted;
  for (const auto& r : out.routes) {
    for (size_t i = 1; i < r.path.size(); ++i) {
      wanted.emplace(r.path[i - 1], r.path[i]);
    }
  }
  std::set<std::pair<VertexId, VertexId>> emitted;
  for (const auto& e : g.edges) {
    if (e.from != x && e.to != x) {
      out.edges.push_back(e);
      continue;
    }
    for (const auto& c : copy_ids) {
      Edge ne{e.from == x ? c : e.from, e.to == x ? c : e.to, e.weight};
      auto key = std::make_pair(ne.from, ne.to);
      if (wanted.count(key) != 0 && emitted.insert(key).second) {
        out.edges.push_back(ne);
      }
    }
  }
  return out;
}

NetworkGraph merge_trivial_vertex(const NetworkGraph& g, const VertexId& x,
                                  bool symmetric_mode, double eps) {
  if (!g.has_vertex(x)) {
    throw Error("UNKNOWN_VERTEX", "no vertex with id " + x);
  }
  if (g.is_boundary(x)) {
    throw Error("NOT_INTERNAL", x + " is a boundary vertex");
  }
  require_mode(g, symmetric_mode);

  std::vector<const Edge*> in, out_edges;
  for (const auto& e : g.edges) {
    if (e.to == x) in.push_back(&e);
    if (e.from == x) out_edges.push_back(&e);
  }
  std::set<VertexId> neighbors;
  for (const Edge* e : in) neighbors.insert(e->from);
  for (const Edge* e : out_edges) neighbors.insert(e->to);
  if (neighbors.count(x) != 0) {
    throw Error("MERGE_CONFLICT", "merging " + x + " would create a self loop");
  }

  // The fused edges, keyed by their endpoints.
  std::vector<Edge> fused;
  if (symmetric_mode) {
    if (neighbors.size() != 2 || in.size() != 2 || out_edges.size() != 2) {
      throw Error("NOT_TRIVIAL", x + " does not sit between exactly two neighbors");
    }
    for (const Edge* ein : in) {
      for (const Edge* eout : out_edges) {
        if (ein->from != eout->to) {
          fused.push_back({ein->from, eout->to, ein->weight + eout->weight});
        }
      }
    }
  } else {
    if (in.size() != 1 || out_edges.size() != 1) {
      throw Error("NOT_TRIVIAL", x + " does not have exactly one edge in and one out");
    }
    if (in.front()->from == out_edges.front()->to) {
      throw Error("MERGE_CONFLICT", "merging " + x + " would create a self loop");
    }
    fused.push_back({in.front()->from, out_edges.front()->to,
                     in.front()->weight + out_edges.front()->weight});
  }

  GraphIndex idx(g);
  std::map<std::pair<VertexId, VertexId>, double> fused_by_key;
  for (const auto& f : fused) {
    auto existing = idx.edge_weight(f.from, f.to);
    if (existing.has_value() && std::fabs(*existing - f.weight) > eps) {
      std::ostringstream oss;
      oss << "merging " << x << " yields edge (" << f.from << "," << f.to
          << ") with weight " << f.weight << " but the graph already has it at "
          << *existing;
      throw Error("MERGE_CONFLICT", oss.str());
    }
    fused_by_key[{f.from, f.to}] = existing.value_or(f.weight);
  }

  NetworkGraph out;
  for (const auto& v : g.vertices) {
    if (v.id != x) out.vertices.push_back(v);
  }
  // Surviving edges keep their order; each incoming edge's slot takes the
  // fused edge leaving its tail, unless the graph already holds that edge
  // elsewhere (the coalescing case). Outgoing edges just drop.
  std::set<std::pair<VertexId, VertexId>> present;
  for (const auto& e : g.edges) {
    if (e.from != x && e.to != x) present.emplace(e.from, e.to);
  }
  for (const auto& e : g.edges) {
    if (e.from != x && e.to != x) {
      out.edges.push_back(e);
      continue;
    }
    if (e.to == x) {
      for (const auto& [key, w] : fused_by_key) {
        if (key.first == e.from && present.insert(key).second) {
          out.edges.push_back({key.first, key.second, w});
        }
      }
    }
  }

  for (const auto& r : g.routes) {
    Route nr;
    nr.src = r.src;
    nr.dst = r.dst;
    for (const auto& v : r.path) {
      if (v != x) nr.path.push_back(v);
    }
    out.routes.push_back(std::move(nr));
  }
  return out;
}

std::pair<NetworkGraph, CleaningReport> clean(const NetworkGraph& g,
                                              bool symmetric_mode, double eps) {
  ValidationReport vr = validate(g);
  if (!vr.valid()) {
    throw Error("INVALID_GRAPH", "cannot canonicalize an invalid graph: " +
                                     vr.violations.front().code + ": " +
                                     vr.violations.front().detail);
  }
  require_mode(g, symmetric_mode);

  CleaningReport report;
  NetworkGraph cur = g;

  // 1) Drop edges no route needs, then vertices that lost every edge.
  const auto unused = unused_edges(cur);
  if (!unused.empty()) {
    report.removed_edges.assign(unused.begin(), unused.end());
    std::vector<Edge> kept;
    for (const auto& e : cur.edges) {
      if (unused.count({e.from, e.to}) == 0) kept.push_back(e);
    }
    cur.edges = std::move(kept);
  }
  {
    std::set<VertexId> touched;
    for (const auto& e : cur.edges) {
      touched.insert(e.from);
      touched.insert(e.to);
    }
    std::vector<Vertex> kept;
    for (const auto& v : cur.vertices) {
      if (!v.boundary && touched.count(v.id) == 0) {
        report.removed_vertices.push_back(v.id);
      } else {
        kept.push_back(v);
      }
    }
    cur.vertices = std::move(kept);
  }

  // 2) Split every separable vertex. Classes depend only on route endpoints,
  // so splitting one vertex never changes another's partition.
  {
    std::vector<VertexId> internals;
    for (const auto& v : cur.vertices) {
      if (!v.boundary) internals.push_back(v.id);
    }
    for (const auto& x : internals) {
      SeparabilityPartition parts = separability_classes(cur, x, symmetric_mode);
      if (!parts.separable()) continue;
      NetworkGraph next = split_vertex(cur, parts);
      std::vector<VertexId> copies;
      for (const auto& v : next.vertices) {
        if (!cur.has_vertex(v.id)) copies.push_back(v.id);
      }
      report.split_vertices[x] = std::move(copies);
      cur = std::move(next);
    }
  }

  // 3) Merge pass-through vertices until none remain; each merge can expose
  // the next one, so re-scan after every step.
  while (true) {
    std::set<VertexId> trivial = trivial_vertices(cur, symmetric_mode);
    if (trivial.empty()) break;
    const VertexId x = *trivial.begin();
    cur = merge_trivial_vertex(cur, x, symmetric_mode, eps);
    report.merged_vertices.push_back(x);
  }

  return {std::move(cur), std::move(report)};
}

}  // namespace netrecon
