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

#include "netrecon/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace netrecon {

namespace {

// Label ids must never collide with boundary ids. Grow the prefix until no
// boundary id looks like prefix+digits.
std::string pick_label_prefix(const std::vector<VertexId>& boundary) {
  std::string prefix = "a";
  auto collides = [&boundary](const std::string& p) {
    for (const auto& b : boundary) {
      if (b.size() <= p.size() || b.compare(0, p.size(), p) != 0) continue;
      bool digits = true;
      for (size_t i = p.size(); i < b.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(b[i]))) {
          digits = false;
          break;
        }
      }
      if (digits) return true;
    }
    return false;
  };
  while (collides(prefix)) prefix += "a";
  return prefix;
}

struct Builder {
  const PathCorrelationData& pcd;
  double eps;
  std::string label_prefix;
  ReconstructionStats stats;
  std::vector<Label> labels;
  // entries per ordered boundary position pair, kept sorted by distance
  std::map<std::pair<size_t, size_t>, std::vector<PathEntry>> table;

  Builder(const PathCorrelationData& p, double e)
      : pcd(p), eps(e), label_prefix(pick_label_prefix(p.boundary())) {
    const auto& bs = pcd.boundary();
    for (size_t i = 0; i < bs.size(); ++i) {
      for (size_t j = 0; j < bs.size(); ++j) {
        if (i == j) continue;
        const double len = pcd.len_at(i, j);
        if (!(len > eps)) {
          throw Error("INCONSISTENT_PCD",
                      "path length for (" + bs[i] + "," + bs[j] +
                          ") is not resolvable at the working tolerance");
        }
        table[{i, j}] = {{bs[i], 0.0}, {bs[j], len}};
      }
    }
  }

  bool has_entry_at(const std::vector<PathEntry>& entries, double d) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), d - eps,
        [](const PathEntry& e, double v) { return e.distance < v; });
    return it != entries.end() && it->distance <= d + eps;
  }

  const std::string& ensure_label(std::string& slot, const std::array<VertexId, 3>& origin) {
    if (slot.empty()) {
      ++stats.labels_created;
      slot = label_prefix + std::to_string(labels.size() + 1);
      labels.push_back({slot, origin});
    }
    return slot;
  }

  void insert_entry(std::vector<PathEntry>& entries, const std::string& id, double d) {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), d,
        [](const PathEntry& e, double v) { return e.distance < v; });
    entries.insert(it, {id, d});
    ++stats.insertions;
  }

  // Places a vertex at distance delta from bs[u] on the path (u,v), then
  // propagates it onto every other path that provably contains it: paths out
  // of u that stay together past delta, and paths into v that have already
  // merged by the time they are delta' = len(u,v) - delta from v.
  void place(size_t u, size_t v, std::string& slot,
             const std::array<VertexId, 3>& origin, double delta) {
    auto& entries = table[{u, v}];
    if (has_entry_at(entries, delta)) return;
    insert_entry(entries, ensure_label(slot, origin), delta);

    const double delta_rev = pcd.len_at(u, v) - delta;
    const size_t n = pcd.size();
    for (size_t z = 0; z < n; ++z) {
      if (z == u || z == v) continue;
      if (pcd.src_at(u, v, z) >= delta - eps) {
        place(u, z, slot, origin, delta);
      }
      if (pcd.rcv_at(u, z, v) >= delta_rev - eps) {
        place(z, v, slot, origin, pcd.len_at(z, v) - delta_rev);
      }
    }
  }

  // Symmetric-routing placement: maintains the pair's two directions at once.
  // delta is the distance from bs[u] along (u,v); delta_back the distance
  // from the vertex back to bs[u] along (v,u).
  void place_paired(size_t u, size_t v, std::string& slot,
                    const std::array<VertexId, 3>& origin, double delta,
                    double delta_back) {
    auto& fwd = table[{u, v}];
    if (has_entry_at(fwd, delta)) return;
    const std::string& id = ensure_label(slot, origin);
    insert_entry(fwd, id, delta);
    auto& rev = table[{v, u}];
    const double rev_pos = pcd.len_at(v, u) - delta_back;
    if (!has_entry_at(rev, rev_pos)) insert_entry(rev, id, rev_pos);

    const double from_v = pcd.len_at(v, u) - delta_back;   // distance v -> vertex
    const double back_to_v = pcd.len_at(u, v) - delta;     // distance vertex -> v
    const size_t n = pcd.size();
    for (size_t z = 0; z < n; ++z) {
      if (z == u || z == v) continue;
      if (pcd.src_at(u, v, z) >= delta - eps) {
        place_paired(u, z, slot, origin, delta, delta_back);
      }
      if (pcd.src_at(v, u, z) >= from_v - eps) {
        place_paired(v, z, slot, origin, from_v, back_to_v);
      }
    }
  }

  std::vector<ReconstructedPath> paths() const {
    std::vector<ReconstructedPath> out;
    const auto& bs = pcd.boundary();
    for (const auto& [key, entries] : table) {
      out.push_back({bs[key.first], bs[key.second], entries});
    }
    return out;
  }
};

void check_pcd(const PathCorrelationData& pcd, double eps) {
  ValidationReport report = validate_pcd(pcd, eps);
  if (!report.valid()) {
    throw Error("INCONSISTENT_PCD", report.violations.front().code + ": " +
                                        report.violations.front().detail);
  }
}

ReconstructionResult finish(Builder&& b, double eps) {
  ReconstructionResult result;
  result.paths = b.paths();
  try {
    result.graph = read_off_graph(result.paths, eps);
  } catch (const Error& e) {
    if (e.code() == "WEIGHT_CONFLICT") {
      throw Error("INCONSISTENT_PCD", e.what());
    }
    throw;
  }
  result.labels = std::move(b.labels);
  result.stats = b.stats;
  return result;
}

}  // namespace

NetworkGraph read_off_graph(const std::vector<ReconstructedPath>& paths, double eps) {
  NetworkGraph g;
  std::set<std::string> boundary_ids;
  for (const auto& p : paths) {
    boundary_ids.insert(p.src);
    boundary_ids.insert(p.dst);
  }
  std::set<std::string> seen;
  for (const auto& p : paths) {
    if (p.entries.size() < 2 || p.entries.front().id != p.src ||
        p.entries.back().id != p.dst) {
      throw Error("WEIGHT_CONFLICT", "malformed path for (" + p.src + "," + p.dst + ")");
    }
    for (const auto& e : p.entries) {
      if (seen.insert(e.id).second) {
        g.vertices.push_back({e.id, boundary_ids.count(e.id) != 0});
      }
    }
  }

  std::map<std::pair<std::string, std::string>, double> weights;
  for (const auto& p : paths) {
    Route r;
    r.src = p.src;
    r.dst = p.dst;
    for (size_t i = 0; i < p.entries.size(); ++i) {
      r.path.push_back(p.entries[i].id);
      if (i == 0) continue;
      const auto& a = p.entries[i - 1];
      const auto& b = p.entries[i];
      const double w = b.distance - a.distance;
      auto key = std::make_pair(a.id, b.id);
      auto it = weights.find(key);
      if (it == weights.end()) {
        weights.emplace(key, w);
        g.edges.push_back({a.id, b.id, w});
      } else if (std::fabs(it->second - w) > eps) {
        throw Error("WEIGHT_CONFLICT",
                    "paths disagree on edge (" + a.id + "," + b.id + "): " +
                        std::to_string(it->second) + " vs " + std::to_string(w));
      }
    }
    g.routes.push_back(std::move(r));
  }
  return g;
}

ReconstructionResult reconstruct(const PathCorrelationData& pcd,
                                 bool symmetric_routing, double eps) {
  check_pcd(pcd, eps);
  Builder b(pcd, eps);
  const auto& bs = pcd.boundary();
  const size_t n = bs.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const std::array<VertexId, 3> origin = {bs[i], bs[j], bs[k]};
        std::string label;
        ++b.stats.toplevel_calls;
        b.place(i, j, label, origin, pcd.src_at(i, j, k));
        std::string label2;
        std::string& second = symmetric_routing ? label : label2;
        ++b.stats.toplevel_calls;
        b.place(j, i, second, origin, pcd.len_at(j, i) - pcd.rcv_at(j, k, i));
        if (symmetric_routing) {
          if (label.empty()) ++b.stats.labels_discarded;
        } else {
          if (label.empty()) ++b.stats.labels_discarded;
          if (label2.empty()) ++b.stats.labels_discarded;
        }
      }
    }
  }
  return finish(std::move(b), eps);
}

ReconstructionResult reconstruct_symmetric(const PathCorrelationData& pcd, double eps) {
  check_pcd(pcd, eps);
  Builder b(pcd, eps);
  const auto& bs = pcd.boundary();
  const size_t n = bs.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const std::array<VertexId, 3> origin = {bs[i], bs[j], bs[k]};
        std::string label;
        ++b.stats.toplevel_calls;
        // junction distance out of bs[i], and its mirror seen from the
        // receiving side of the reverse direction
        b.place_paired(i, j, label, origin, pcd.src_at(i, j, k), pcd.rcv_at(j, k, i));
        if (label.empty()) ++b.stats.labels_discarded;
      }
    }
  }
  return finish(std::move(b), eps);
}

}  // namespace netrecon
