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

#include "netrecon/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "netrecon/compliance.hpp"

namespace netrecon {

namespace {

// Deterministic draws straight off the engine, so streams do not depend on
// the standard library's distribution implementations.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(uint64_t seed) : engine(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  size_t below(size_t n) {
    const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                           std::numeric_limits<uint64_t>::max() % n;
    uint64_t v;
    do {
      v = engine();
    } while (v >= limit);
    return static_cast<size_t>(v % n);
  }
  bool chance(double p) { return unit() < p; }
};

void check_params(const GeneratorParams& p) {
  auto fail = [](const std::string& what) {
    throw Error("UNSATISFIABLE_PARAMS", what);
  };
  if (p.boundary_count < 2) fail("boundary_count must be at least 2");
  if (p.internal_count < 0) fail("internal_count must be non-negative");
  if (!(p.edge_density > 0.0) || p.edge_density > 1.0) {
    fail("edge_density must lie in (0, 1]");
  }
  if (!(p.weight_min > 0.0) || !std::isfinite(p.weight_min)) {
    fail("weight_min must be positive");
  }
  if (p.weight_max < p.weight_min || !std::isfinite(p.weight_max)) {
    fail("weight_max must be at least weight_min");
  }
}

using WeightMap = std::map<std::pair<VertexId, VertexId>, double>;

// Unique shortest paths from src under the routing weights. The routing
// weights carry a per-edge perturbation that rules out cost ties between
// distinct paths, so the lexicographic tie-break below is defensive only;
// it keeps the choice deterministic should two float sums still collide.
std::map<VertexId, std::vector<VertexId>> shortest_paths(const std::vector<VertexId>& vertices,
                                                         const WeightMap& w,
                                                         const VertexId& src) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::map<VertexId, double> dist;
  std::map<VertexId, bool> done;
  for (const auto& v : vertices) dist[v] = inf;
  dist[src] = 0.0;
  while (true) {
    VertexId u;
    double best = inf;
    for (const auto& [v, d] : dist) {
      if (!done[v] && d < best) {
        best = d;
        u = v;
      }
    }
    if (best == inf) break;
    done[u] = true;
    for (const auto& [key, weight] : w) {
      if (key.first != u) continue;
      if (dist[u] + weight < dist[key.second]) {
        dist[key.second] = dist[u] + weight;
      }
    }
  }

  std::vector<VertexId> order;
  for (const auto& [v, d] : dist) {
    if (d < inf) order.push_back(v);
  }
  std::sort(order.begin(), order.end(),
            [&dist](const VertexId& a, const VertexId& b) { return dist[a] < dist[b]; });

  // Predecessors have strictly smaller distance (weights are positive), so
  // walking vertices in distance order sees every candidate prefix finished.
  std::map<VertexId, std::vector<VertexId>> path;
  path[src] = {src};
  for (const auto& v : order) {
    if (v == src) continue;
    std::vector<VertexId> best_path;
    for (const auto& [key, weight] : w) {
      if (key.second != v) continue;
      const auto it = path.find(key.first);
      if (it == path.end()) continue;
      if (dist[key.first] + weight == dist[v]) {
        std::vector<VertexId> cand = it->second;
        cand.push_back(v);
        if (best_path.empty() ||
            std::lexicographical_compare(cand.begin(), cand.end(), best_path.begin(),
                                         best_path.end())) {
          best_path = std::move(cand);
        }
      }
    }
    if (!best_path.empty()) path[v] = std::move(best_path);
  }
  return path;
}

}  // namespace

NetworkGraph random_network(const GeneratorParams& params) {
  check_params(params);
  Rng rng(params.seed);
  const size_t m = static_cast<size_t>(params.boundary_count);
  const size_t n = static_cast<size_t>(params.internal_count);
  // Paired modes create and parameterize edges per unordered pair so the two
  // directions stay in lockstep wherever equality matters.
  const bool paired = params.symmetric_routing || params.symmetric_weights;

  NetworkGraph g;
  std::vector<VertexId> bs, xs;
  for (size_t i = 1; i <= m; ++i) {
    bs.push_back("b" + std::to_string(i));
    g.vertices.push_back({bs.back(), true});
  }
  for (size_t i = 1; i <= n; ++i) {
    xs.push_back("x" + std::to_string(i));
    g.vertices.push_back({xs.back(), false});
  }

  WeightMap stored;
  // Tie-break factors per directed edge. They always shape the routing
  // weights (distinct costs mean unique shortest paths, and unique shortest
  // paths mirror and share segments consistently); the stored weights pick
  // them up only when jitter is requested.
  WeightMap tiebreak;
  auto add_one = [&](const VertexId& u, const VertexId& v, double base, double tb) {
    const double w = params.jitter ? base * (1.0 + tb * 1e-12) : base;
    stored[{u, v}] = w;
    tiebreak[{u, v}] = tb;
    g.edges.push_back({u, v, w});
  };
  auto add_pair = [&](const VertexId& u, const VertexId& v) {
    if (params.symmetric_weights) {
      const double base = rng.uniform(params.weight_min, params.weight_max);
      const double tb = rng.unit();
      add_one(u, v, base, tb);
      add_one(v, u, base, tb);
    } else if (paired) {
      const double b1 = rng.uniform(params.weight_min, params.weight_max);
      const double b2 = rng.uniform(params.weight_min, params.weight_max);
      const double tb = rng.unit();
      add_one(u, v, b1, tb);
      add_one(v, u, b2, tb);
    } else {
      add_one(u, v, rng.uniform(params.weight_min, params.weight_max), rng.unit());
      add_one(v, u, rng.uniform(params.weight_min, params.weight_max), rng.unit());
    }
  };

  if (n == 0) {
    // No interior: boundary pairs connect directly and the routes are the
    // edges themselves, which mirrors trivially.
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = i + 1; j < m; ++j) {
        add_pair(bs[i], bs[j]);
      }
    }
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        g.routes.push_back({bs[i], bs[j], {bs[i], bs[j]}});
      }
    }
    if (params.ensure_compliant) {
      return clean(g, is_symmetric_routing(g)).first;
    }
    return g;
  }

  // Bidirectional spanning tree first, so every pair is routable no matter
  // how low the density is.
  for (size_t i = 1; i < n; ++i) {
    const size_t j = rng.below(i);
    add_pair(xs[j], xs[i]);
  }
  auto connected = [&](const VertexId& u, const VertexId& v) {
    return stored.count({u, v}) != 0 || stored.count({v, u}) != 0;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (paired) {
        if (j <= i || connected(xs[i], xs[j])) continue;
        if (rng.chance(params.edge_density)) add_pair(xs[i], xs[j]);
      } else {
        if (j == i || stored.count({xs[i], xs[j]}) != 0) continue;
        if (rng.chance(params.edge_density)) {
          add_one(xs[i], xs[j], rng.uniform(params.weight_min, params.weight_max), rng.unit());
        }
      }
    }
  }
  // Boundary vertices hang off a random internal hub as leaves; a leaf can
  // never sit in the interior of someone else's route.
  for (size_t i = 0; i < m; ++i) {
    add_pair(bs[i], xs[rng.below(n)]);
  }

  // Routing weights: symmetrized means when the routes must mirror (every
  // edge is paired in that mode), the stored weights otherwise, plus the
  // tie-break factor whenever the stored weights do not carry it already.
  WeightMap routing = stored;
  if (params.symmetric_routing && !params.symmetric_weights) {
    for (auto& [key, w] : routing) {
      w = 0.5 * (w + stored.at({key.second, key.first}));
    }
  }
  if (!params.jitter) {
    for (auto& [key, w] : routing) {
      w *= 1.0 + tiebreak.at(key) * 1e-12;
    }
  }

  std::vector<VertexId> all_ids;
  for (const auto& v : g.vertices) all_ids.push_back(v.id);
  std::map<VertexId, std::map<VertexId, std::vector<VertexId>>> from;
  for (const auto& b : bs) {
    from[b] = shortest_paths(all_ids, routing, b);
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (params.symmetric_routing && i > j) {
        // Mirror the opposite route instead of recomputing it; per-source
        // float sums could otherwise disagree on which tied path wins.
        const Route& fwd = *std::find_if(g.routes.begin(), g.routes.end(), [&](const Route& r) {
          return r.src == bs[j] && r.dst == bs[i];
        });
        Route rev;
        rev.src = bs[i];
        rev.dst = bs[j];
        rev.path.assign(fwd.path.rbegin(), fwd.path.rend());
        g.routes.push_back(std::move(rev));
        continue;
      }
      g.routes.push_back({bs[i], bs[j], from[bs[i]].at(bs[j])});
    }
  }

  if (params.ensure_compliant) {
    // Canonicalize by the routing symmetry the graph actually ended up with:
    // sparse or tree-shaped instances mirror their routes even when symmetry
    // was not requested, and the symmetric rules then merge more vertices.
    return clean(g, is_symmetric_routing(g)).first;
  }
  return g;
}

}  // namespace netrecon
