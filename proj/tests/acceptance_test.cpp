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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any criterion fails. Every random draw comes from
// seeded engines, so a failure reproduces exactly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "netrecon/compliance.hpp"
#include "netrecon/error.hpp"
#include "netrecon/generator.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/pcd.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/verify.hpp"
#include "oracles.hpp"

namespace netrecon {
namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool ok = false;
  std::string detail;
};

// One reconstruction run, kept for the complexity-bound criterion.
struct RunRecord {
  long insertions = 0;
  size_t internal_count = 0;
  size_t boundary_count = 0;
};

struct Context {
  std::vector<RunRecord> runs;
  // Measured data of every compliant instance, reused for the tree criterion.
  std::vector<PathCorrelationData> compliant_pcds;
};

std::string format_double(double v) {
  std::ostringstream oss;
  oss.precision(3);
  oss << v;
  return oss.str();
}

GeneratorParams draw_params(std::mt19937_64& rng, int boundary_min,
                            int boundary_max, int internal_min,
                            int internal_max) {
  GeneratorParams p;
  p.seed = rng();
  p.boundary_count = boundary_min +
                     static_cast<int>(rng() % (boundary_max - boundary_min + 1));
  p.internal_count = internal_min +
                     static_cast<int>(rng() % (internal_max - internal_min + 1));
  const double densities[] = {0.25, 0.5, 0.75, 1.0};
  p.edge_density = densities[rng() % 4];
  const int mode = static_cast<int>(rng() % 3);
  p.symmetric_routing = mode >= 1;
  p.symmetric_weights = mode == 2;
  p.jitter = (rng() & 1) != 0;
  return p;
}

// --- defect injection for the canonicalization corpus ---------------------

double draw_weight(std::mt19937_64& rng) {
  return 1.0 + 9.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// Adds edges no route uses; measured data is untouched, compliance breaks.
void inject_unused_edges(NetworkGraph& g, std::mt19937_64& rng, int count) {
  std::set<std::pair<VertexId, VertexId>> existing;
  for (const auto& e : g.edges) existing.insert({e.from, e.to});
  for (int c = 0; c < count; ++c) {
    bool added = false;
    for (int attempt = 0; attempt < 50 && !added; ++attempt) {
      const VertexId& a = g.vertices[rng() % g.vertices.size()].id;
      const VertexId& b = g.vertices[rng() % g.vertices.size()].id;
      if (a == b || existing.count({a, b}) != 0) continue;
      g.edges.push_back({a, b, draw_weight(rng)});
      existing.insert({a, b});
      added = true;
    }
    if (!added) {
      // Dense graph: hang a fresh vertex on unused edges instead. It carries
      // no traffic, so cleaning drops it entirely.
      const VertexId z = "z" + std::to_string(g.vertices.size());
      const VertexId& a = g.vertices[0].id;
      g.vertices.push_back({z, false});
      g.edges.push_back({a, z, draw_weight(rng)});
      g.edges.push_back({z, a, draw_weight(rng)});
    }
  }
}

// Splits one used edge through a fresh pass-through vertex, rewriting every
// route over it. Symmetrically routed graphs get both directions split
// through the same vertex so their routes keep mirroring.
void inject_trivial_chain(NetworkGraph& g, std::mt19937_64& rng, int& counter) {
  std::set<std::pair<VertexId, VertexId>> used;
  for (const auto& r : g.routes) {
    for (size_t i = 1; i < r.path.size(); ++i) {
      used.insert({r.path[i - 1], r.path[i]});
    }
  }
  auto it = used.begin();
  std::advance(it, static_cast<long>(rng() % used.size()));
  const auto [a, b] = *it;
  const bool sym = is_symmetric_routing(g);
  const VertexId t = "t" + std::to_string(++counter);
  const double alpha = 0.25 + 0.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);

  auto split_edge = [&g, &t](const VertexId& from, const VertexId& to,
                             double head_fraction) {
    for (auto& e : g.edges) {
      if (e.from == from && e.to == to) {
        const double w = e.weight;
        e = {from, t, w * head_fraction};
        g.edges.push_back({t, to, w * (1.0 - head_fraction)});
        return;
      }
    }
  };
  split_edge(a, b, alpha);
  if (sym) split_edge(b, a, 1.0 - alpha);

  g.vertices.push_back({t, false});
  for (auto& r : g.routes) {
    for (size_t i = 0; i + 1 < r.path.size(); ++i) {
      const bool forward = r.path[i] == a && r.path[i + 1] == b;
      const bool backward = sym && r.path[i] == b && r.path[i + 1] == a;
      if (forward || backward) {
        r.path.insert(r.path.begin() + static_cast<long>(i) + 1, t);
        ++i;
      }
    }
  }
}

// A network built around a deliberately separable crossing vertex x: k
// disjoint source families each reach their own receiver family through x,
// and every other boundary pair routes through an independent hub. x then
// has exactly k separability classes.
struct SeparableInstance {
  NetworkGraph graph;
  size_t classes = 0;
};

SeparableInstance engineered_separable(std::mt19937_64& rng) {
  const int m = 4 + static_cast<int>(rng() % 3);
  const int k = (m >= 6 && (rng() & 1) != 0) ? 3 : 2;

  std::vector<VertexId> boundary;
  for (int i = 1; i <= m; ++i) boundary.push_back("b" + std::to_string(i));
  std::vector<VertexId> shuffled = boundary;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const int sources = k + static_cast<int>(rng() % (m - 2 * k + 1));
  std::map<VertexId, int> src_family, rcv_family;
  for (int i = 0; i < sources; ++i) {
    src_family[shuffled[i]] = i < k ? i : static_cast<int>(rng() % k);
  }
  for (int i = sources; i < m; ++i) {
    const int j = i - sources;
    rcv_family[shuffled[i]] = j < k ? j : static_cast<int>(rng() % k);
  }

  NetworkGraph g;
  for (const auto& b : boundary) g.vertices.push_back({b, true});
  g.vertices.push_back({"x", false});
  g.vertices.push_back({"h", false});
  for (const auto& [s, fam] : src_family) {
    (void)fam;
    g.edges.push_back({s, "x", draw_weight(rng)});
  }
  for (const auto& [r, fam] : rcv_family) {
    (void)fam;
    g.edges.push_back({"x", r, draw_weight(rng)});
  }
  for (const auto& b : boundary) {
    g.edges.push_back({b, "h", draw_weight(rng)});
    g.edges.push_back({"h", b, draw_weight(rng)});
  }
  for (const auto& p : boundary) {
    for (const auto& q : boundary) {
      if (p == q) continue;
      const auto ps = src_family.find(p);
      const auto qr = rcv_family.find(q);
      const bool via_x =
          ps != src_family.end() && qr != rcv_family.end() && ps->second == qr->second;
      g.routes.push_back({p, q, {p, via_x ? "x" : "h", q}});
    }
  }
  return {std::move(g), static_cast<size_t>(k)};
}

// --- separability comparison against the exhaustive oracle ----------------

// Returns false (with a message) if the library partition and the brute-force
// enumeration disagree on vertex x.
bool separability_matches(const NetworkGraph& g, const VertexId& x,
                          bool symmetric, std::string* why) {
  SeparabilityPartition parts;
  try {
    parts = separability_classes(g, x, symmetric);
  } catch (const Error& e) {
    if (e.code() == std::string("NOT_ON_ANY_ROUTE")) {
      if (!oracles::routes_through(g, x).empty()) {
        *why = x + ": library says no routes, oracle found some";
        return false;
      }
      return true;
    }
    *why = x + ": unexpected error " + e.code();
    return false;
  }

  const oracles::BruteSeparability brute =
      symmetric ? oracles::brute_separability_symmetric(g, x)
                : oracles::brute_separability(g, x);
  if (parts.separable() != brute.separable) {
    *why = x + ": separable() disagrees with the enumeration";
    return false;
  }
  const size_t k = parts.source_classes.size();
  const size_t expected_splits = brute.separable ? (size_t{1} << k) - 2 : 0;
  if (brute.splits.size() != expected_splits) {
    *why = x + ": " + std::to_string(brute.splits.size()) +
           " valid bipartitions, expected " + std::to_string(expected_splits);
    return false;
  }
  for (const auto& [s1, r1] : brute.splits) {
    for (size_t c = 0; c < k; ++c) {
      const auto& sc = parts.source_classes[c];
      const auto& rc = parts.receiver_classes[c];
      const bool in1 = s1.count(sc[0]) != 0;
      for (const auto& s : sc) {
        if ((s1.count(s) != 0) != in1) {
          *why = x + ": a source class straddles a valid bipartition";
          return false;
        }
      }
      for (const auto& r : rc) {
        if ((r1.count(r) != 0) != in1) {
          *why = x + ": a receiver class leaves its source class's side";
          return false;
        }
      }
    }
  }
  return true;
}

// --- criteria --------------------------------------------------------------

Outcome criterion_round_trip(Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260819);
  const int instances = 1000;
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    GeneratorParams params = draw_params(rng, 3, 8, 0, 20);
    params.ensure_compliant = true;
    const NetworkGraph g = random_network(params);
    PathCorrelationData pcd = measure(g);
    const ReconstructionResult res =
        reconstruct(pcd, is_symmetric_routing(g), kTol);
    const auto witness = boundary_anchored_isomorphic(res.graph, g, kTol);
    if (!witness.has_value()) {
      return {false, "instance " + std::to_string(i) + " (seed " +
                         std::to_string(params.seed) +
                         ") does not reconstruct to the generated graph"};
    }
    worst = std::max(worst, witness->max_weight_discrepancy);
    ctx.runs.push_back(
        {res.stats.insertions, res.graph.internal().size(), g.boundary().size()});
    ctx.compliant_pcds.push_back(std::move(pcd));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream detail;
  detail << instances << " compliant instances, worst weight discrepancy "
         << format_double(worst) << ", " << format_double(secs) << " s";
  return {worst <= kTol && secs < 60.0, detail.str()};
}

Outcome criterion_canonicalization(Context& ctx) {
  std::mt19937_64 rng(99120);
  const int instances = 1000;
  int chain_counter = 0;
  for (int i = 0; i < instances; ++i) {
    NetworkGraph g;
    const int kind = i % 4;
    if (kind == 2) {
      g = engineered_separable(rng).graph;
    } else {
      GeneratorParams params = draw_params(rng, 3, 6, 1, 10);
      params.ensure_compliant = false;
      g = random_network(params);
      if (kind == 0) inject_unused_edges(g, rng, 1 + static_cast<int>(rng() % 3));
      if (kind == 1 || kind == 3) {
        inject_trivial_chain(g, rng, chain_counter);
        if ((rng() & 1) != 0) inject_trivial_chain(g, rng, chain_counter);
      }
      if (kind == 3) inject_unused_edges(g, rng, 1);
    }
    const std::string tag = "instance " + std::to_string(i);
    if (!validate(g).valid()) {
      return {false, tag + ": injected graph fails validation"};
    }
    const bool sym = is_symmetric_routing(g);
    const auto [canon, report] = clean(g, sym, kTol);
    if (!report.changed()) {
      return {false, tag + ": corpus graph was already canonical"};
    }
    const PathCorrelationData pcd = measure(g);
    const ReconstructionResult res = reconstruct(pcd, sym, kTol);
    if (!boundary_anchored_isomorphic(res.graph, canon, kTol).has_value()) {
      return {false, tag + ": reconstruction differs from the canonical form"};
    }
    if (!pcd_equal(pcd, measure(canon), kTol)) {
      return {false, tag + ": canonicalization changed the measured data"};
    }
    ctx.runs.push_back(
        {res.stats.insertions, res.graph.internal().size(), g.boundary().size()});
  }
  return {true, std::to_string(instances) +
                    " defect-injected instances reconstruct to their canonical form"};
}

Outcome criterion_triangle(Context&) {
  const PathCorrelationData pcd = measure(fixtures::unit_triangle());
  const size_t directed = reconstruct(pcd, false, kTol).graph.internal().size();
  if (directed != 6) {
    return {false, "direction-blind run found " + std::to_string(directed) +
                       " internal vertices, expected 6"};
  }
  for (const bool specialized : {false, true}) {
    const ReconstructionResult res =
        specialized ? reconstruct_symmetric(pcd, kTol) : reconstruct(pcd, true, kTol);
    if (res.graph.internal().size() != 3 ||
        !boundary_anchored_isomorphic(res.graph, fixtures::unit_triangle(), kTol)
             .has_value()) {
      return {false, "symmetric run does not recover the original triangle"};
    }
  }
  return {true, "6 internal vertices without symmetry, the original 3 with it"};
}

Outcome criterion_complexity_bound(Context& ctx) {
  long worst_insertions = 0;
  for (const RunRecord& run : ctx.runs) {
    const long bound = static_cast<long>(run.internal_count) *
                       static_cast<long>(run.boundary_count) *
                       static_cast<long>(run.boundary_count);
    if (run.insertions > bound) {
      return {false, std::to_string(run.insertions) + " insertions exceed " +
                         std::to_string(bound) + " on a run with " +
                         std::to_string(run.internal_count) + " internal and " +
                         std::to_string(run.boundary_count) + " boundary vertices"};
    }
    worst_insertions = std::max(worst_insertions, run.insertions);
  }
  return {!ctx.runs.empty(),
          "insertions <= internal x boundary^2 on all " +
              std::to_string(ctx.runs.size()) + " runs (max " +
              std::to_string(worst_insertions) + " insertions)"};
}

Outcome criterion_algorithm_equivalence(Context&) {
  std::mt19937_64 rng(55442);
  const int instances = 200;
  for (int i = 0; i < instances; ++i) {
    GeneratorParams params = draw_params(rng, 3, 7, 0, 12);
    params.symmetric_routing = true;
    params.ensure_compliant = (i % 2 == 0);
    const NetworkGraph g = random_network(params);
    const PathCorrelationData pcd = measure(g);
    const ReconstructionResult general = reconstruct(pcd, true, kTol);
    const ReconstructionResult special = reconstruct_symmetric(pcd, kTol);
    if (!boundary_anchored_isomorphic(general.graph, special.graph, kTol)
             .has_value()) {
      return {false, "instance " + std::to_string(i) +
                         ": the two algorithms reconstruct different networks"};
    }
    if (special.stats.toplevel_calls * 2 != general.stats.toplevel_calls) {
      return {false, "instance " + std::to_string(i) + ": " +
                         std::to_string(special.stats.toplevel_calls) +
                         " specialized top-level calls vs " +
                         std::to_string(general.stats.toplevel_calls)};
    }
  }
  return {true, std::to_string(instances) +
                    " symmetric instances, identical output, exactly half the "
                    "top-level calls"};
}

Outcome criterion_separability(Context&) {
  std::mt19937_64 rng(77001);
  int instance_count = 0;
  int vertex_count = 0;
  int separable_count = 0;
  std::string why;

  auto check_graph = [&](const NetworkGraph& g, bool symmetric) -> bool {
    ++instance_count;
    for (const VertexId& x : g.internal()) {
      const auto pairs = oracles::routes_through(g, x);
      std::set<VertexId> endpoint_sources, endpoint_receivers;
      for (const auto& [s, d] : pairs) {
        endpoint_sources.insert(s);
        endpoint_receivers.insert(d);
      }
      if (endpoint_sources.size() + endpoint_receivers.size() > 12) continue;
      if (!separability_matches(g, x, symmetric, &why)) return false;
      if (!pairs.empty() &&
          separability_classes(g, x, symmetric).separable()) {
        ++separable_count;
      }
      ++vertex_count;
    }
    return true;
  };

  for (int i = 0; i < 300; ++i) {
    GeneratorParams params = draw_params(rng, 3, 5, 1, 6);
    params.ensure_compliant = false;
    const NetworkGraph g = random_network(params);
    if (!check_graph(g, is_symmetric_routing(g))) return {false, why};
  }
  for (int i = 0; i < 200; ++i) {
    const SeparableInstance made = engineered_separable(rng);
    if (!check_graph(made.graph, false)) return {false, why};
    const SeparabilityPartition parts =
        separability_classes(made.graph, "x", false);
    if (parts.source_classes.size() != made.classes) {
      return {false, "engineered crossing vertex has " +
                         std::to_string(parts.source_classes.size()) +
                         " classes, expected " + std::to_string(made.classes)};
    }
  }
  for (const NetworkGraph& g :
       {fixtures::crossing_network(), fixtures::split_hub(),
        fixtures::cleanable_network(), fixtures::hub_with_unused_edge()}) {
    if (!check_graph(g, false)) return {false, why};
  }

  std::ostringstream detail;
  detail << instance_count << " instances, " << vertex_count
         << " vertices checked against exhaustive bipartition search, "
         << separable_count << " separable";
  return {instance_count >= 500, detail.str()};
}

Outcome criterion_symmetric_weights_identity(Context&) {
  std::mt19937_64 rng(31337);
  const int instances = 200;
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    GeneratorParams params = draw_params(rng, 3, 8, 0, 15);
    params.symmetric_routing = true;
    params.symmetric_weights = true;
    params.ensure_compliant = (i % 3 == 0);
    const PathCorrelationData pcd = measure(random_network(params));
    const auto& bs = pcd.boundary();
    for (const auto& b : bs) {
      for (const auto& j : bs) {
        for (const auto& k : bs) {
          if (b == j || b == k || j >= k) continue;
          const double diff = std::fabs(pcd.rcv(j, k, b) - pcd.src(b, j, k));
          worst = std::max(worst, diff);
          if (diff > kTol) {
            return {false, "instance " + std::to_string(i) + ": rcv(" + j + "," +
                               k + ";" + b + ") differs from src by " +
                               format_double(diff)};
          }
        }
      }
    }
  }
  return {true, std::to_string(instances) +
                    " symmetric-weight instances, worst |rcv - src| = " +
                    format_double(worst)};
}

Outcome criterion_crossing_split(Context&) {
  const NetworkGraph g = fixtures::crossing_network();
  const ReconstructionResult res = reconstruct(measure(g), false, kTol);
  const auto [canon, report] = clean(g, false, kTol);

  const std::vector<VertexId> canon_internal = canon.internal();
  const std::set<VertexId> expected = {"m", "t", "u#1", "u#2", "v", "w"};
  if (std::set<VertexId>(canon_internal.begin(), canon_internal.end()) !=
      expected) {
    return {false, "canonical form of the crossing network has unexpected "
                   "internal vertices"};
  }
  const auto witness = boundary_anchored_isomorphic(res.graph, canon, kTol);
  if (!witness.has_value()) {
    return {false, "reconstruction does not match the split canonical form"};
  }
  VertexId copy1, copy2;
  for (const auto& [from, to] : witness->mapping) {
    if (to == "u#1") copy1 = from;
    if (to == "u#2") copy2 = from;
  }
  if (copy1.empty() || copy2.empty() || copy1 == copy2) {
    return {false, "the crossing vertex did not reappear as two distinct copies"};
  }
  return {true, "crossing vertex reconstructed as two copies (" + copy1 + ", " +
                    copy2 + "), all other internals recovered"};
}

Outcome criterion_logical_trees(Context& ctx) {
  double worst = 0.0;
  for (size_t i = 0; i < ctx.compliant_pcds.size(); ++i) {
    const PathCorrelationData& pcd = ctx.compliant_pcds[i];
    const auto& bs = pcd.boundary();
    for (const auto& root : bs) {
      const LogicalTree stree = build_source_tree(pcd, root, kTol);
      const LogicalTree rtree = build_receiver_tree(pcd, root, kTol);
      for (const auto& j : bs) {
        for (const auto& k : bs) {
          if (j >= k || j == root || k == root) continue;
          const double src_diff = std::fabs(
              oracles::tree_junction_depth(stree, j, k) - pcd.src(root, j, k));
          const double rcv_diff = std::fabs(
              oracles::tree_junction_depth(rtree, j, k) - pcd.rcv(j, k, root));
          worst = std::max(worst, std::max(src_diff, rcv_diff));
          if (src_diff > kTol || rcv_diff > kTol) {
            return {false, "instance " + std::to_string(i) + ", root " + root +
                               ": tree depth differs from the table by " +
                               format_double(std::max(src_diff, rcv_diff))};
          }
        }
      }
    }
  }
  return {!ctx.compliant_pcds.empty(),
          "trees over " + std::to_string(ctx.compliant_pcds.size()) +
              " instances reproduce every junction value (worst deviation " +
              format_double(worst) + ")"};
}

}  // namespace
}  // namespace netrecon

int main() {
  using netrecon::Context;
  using netrecon::Outcome;

  Context ctx;
  struct Criterion {
    const char* title;
    Outcome (*run)(Context&);
  };
  const Criterion criteria[] = {
      {"round-trip reconstruction of compliant instances",
       netrecon::criterion_round_trip},
      {"reconstruction of defective instances lands on the canonical form",
       netrecon::criterion_canonicalization},
      {"unit triangle with and without routing symmetry",
       netrecon::criterion_triangle},
      {"placement count stays within the complexity bound",
       netrecon::criterion_complexity_bound},
      {"specialized symmetric algorithm matches the general one",
       netrecon::criterion_algorithm_equivalence},
      {"separability classes agree with exhaustive bipartition search",
       netrecon::criterion_separability},
      {"symmetric weights make receiver data mirror source data",
       netrecon::criterion_symmetric_weights_identity},
      {"crossing vertex splits into two reconstructed copies",
       netrecon::criterion_crossing_split},
      {"logical trees reproduce the junction tables",
       netrecon::criterion_logical_trees},
  };

  bool all_ok = true;
  int number = 1;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run(ctx);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all_ok = all_ok && outcome.ok;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << number
              << ": " << criterion.title << " (" << outcome.detail << ")\n";
    ++number;
  }
  std::cout << (all_ok ? "all criteria passed" : "ACCEPTANCE FAILED") << "\n";
  return all_ok ? 0 : 1;
}
