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

// Hand-built networks with known canonical forms, shared across the test
// binaries. Each builder documents the structural feature it exercises and
// the exact outcome cleaning or reconstruction must produce.

#ifndef NETRECON_TESTS_FIXTURES_HPP_
#define NETRECON_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/graph.hpp"

namespace netrecon {
namespace fixtures {

inline void add_vertices(NetworkGraph& g, std::initializer_list<std::string> boundary,
                         std::initializer_list<std::string> internal) {
  for (const auto& b : boundary) g.vertices.push_back({b, true});
  for (const auto& x : internal) g.vertices.push_back({x, false});
}

inline void add_edge(NetworkGraph& g, const std::string& from, const std::string& to,
                     double w) {
  g.edges.push_back({from, to, w});
}

inline void add_route(NetworkGraph& g, std::vector<std::string> path) {
  Route r;
  r.src = path.front();
  r.dst = path.back();
  r.path = std::move(path);
  g.routes.push_back(std::move(r));
}

// Mirrors every edge and every route, for symmetric-routing fixtures.
inline void mirror(NetworkGraph& g) {
  const size_t ne = g.edges.size();
  for (size_t i = 0; i < ne; ++i) {
    const Edge e = g.edges[i];
    g.edges.push_back({e.to, e.from, e.weight});
  }
  const size_t nr = g.routes.size();
  for (size_t i = 0; i < nr; ++i) {
    Route r = g.routes[i];
    std::reverse(r.path.begin(), r.path.end());
    std::swap(r.src, r.dst);
    g.routes.push_back(std::move(r));
  }
}

// Three boundary vertices hanging off a unit-weight relay ring. Every route
// runs leaf -> own relay -> peer relay -> peer leaf, so routing and weights
// are both symmetric. Under symmetric-routing rules the graph is already
// canonical; under directed rules every relay splits in two.
inline NetworkGraph unit_triangle() {
  NetworkGraph g;
  add_vertices(g, {"b1", "b2", "b3"}, {"x1", "x2", "x3"});
  add_edge(g, "b1", "x1", 1.0);
  add_edge(g, "b2", "x2", 1.0);
  add_edge(g, "b3", "x3", 1.0);
  add_edge(g, "x1", "x2", 1.0);
  add_edge(g, "x1", "x3", 1.0);
  add_edge(g, "x2", "x3", 1.0);
  add_route(g, {"b1", "x1", "x2", "b2"});
  add_route(g, {"b1", "x1", "x3", "b3"});
  add_route(g, {"b2", "x2", "x3", "b3"});
  mirror(g);
  return g;
}

// Two route families crossing at vertex u: family A runs v/t -> u -> w, family
// B runs b5 -> u -> b2/b6, and they share no boundary endpoint on either side.
// All other pairs go through the hub m. Cleaning must split u into exactly two
// copies and leave v, t, w, m alone.
inline NetworkGraph crossing_network() {
  NetworkGraph g;
  add_vertices(g, {"b1", "b2", "b3", "b4", "b5", "b6"}, {"v", "t", "u", "w", "m"});
  add_edge(g, "b1", "v", 1.0);
  add_edge(g, "b6", "v", 2.0);
  add_edge(g, "b2", "t", 3.0);
  add_edge(g, "b3", "t", 4.0);
  add_edge(g, "v", "u", 5.0);
  add_edge(g, "t", "u", 6.0);
  add_edge(g, "u", "w", 7.0);
  add_edge(g, "w", "b3", 8.0);
  add_edge(g, "w", "b4", 9.0);
  add_edge(g, "b5", "u", 10.0);
  add_edge(g, "u", "b6", 11.0);
  add_edge(g, "u", "b2", 12.0);
  const std::vector<std::string> bs = {"b1", "b2", "b3", "b4", "b5", "b6"};
  for (size_t i = 0; i < bs.size(); ++i) {
    add_edge(g, bs[i], "m", 13.0 + static_cast<double>(i));
  }
  for (size_t i = 0; i < bs.size(); ++i) {
    add_edge(g, "m", bs[i], 19.0 + static_cast<double>(i));
  }
  add_route(g, {"b1", "v", "u", "w", "b3"});
  add_route(g, {"b1", "v", "u", "w", "b4"});
  add_route(g, {"b6", "v", "u", "w", "b3"});
  add_route(g, {"b6", "v", "u", "w", "b4"});
  add_route(g, {"b2", "t", "u", "w", "b3"});
  add_route(g, {"b2", "t", "u", "w", "b4"});
  add_route(g, {"b3", "t", "u", "w", "b4"});
  add_route(g, {"b5", "u", "b6"});
  add_route(g, {"b5", "u", "b2"});
  std::set<std::pair<std::string, std::string>> placed;
  for (const auto& r : g.routes) placed.emplace(r.src, r.dst);
  for (const auto& s : bs) {
    for (const auto& d : bs) {
      if (s == d || placed.count({s, d}) != 0) continue;
      add_route(g, {s, "m", d});
    }
  }
  return g;
}

// One specimen of each cleaning step: the direct edge (b2,b3) is unused, x
// serves the families {b1,b3}->{b2} and {b2}->{w,...} so it splits, and after
// the split one copy of x plus the relay y are pass-through and merge away.
inline NetworkGraph cleanable_network() {
  NetworkGraph g;
  add_vertices(g, {"b1", "b2", "b3"}, {"x", "y", "w"});
  add_edge(g, "b1", "x", 1.0);
  add_edge(g, "b3", "x", 2.0);
  add_edge(g, "b2", "x", 3.0);
  add_edge(g, "x", "b2", 4.0);
  add_edge(g, "x", "w", 5.0);
  add_edge(g, "w", "b1", 6.0);
  add_edge(g, "w", "b3", 7.0);
  add_edge(g, "b1", "y", 8.0);
  add_edge(g, "y", "b3", 9.0);
  add_edge(g, "b3", "b1", 10.0);
  add_edge(g, "b2", "b3", 11.0);  // unused
  add_route(g, {"b1", "x", "b2"});
  add_route(g, {"b3", "x", "b2"});
  add_route(g, {"b2", "x", "w", "b1"});
  add_route(g, {"b2", "x", "w", "b3"});
  add_route(g, {"b1", "y", "b3"});
  add_route(g, {"b3", "b1"});
  return g;
}

// The canonical form cleanable_network() must reach: unused edge gone, x#1
// keeps the {b1,b3}->b2 side, the b2 side fused into (b2,w) = 3+5, and y fused
// into (b1,b3) = 8+9.
inline NetworkGraph cleanable_network_expected() {
  NetworkGraph g;
  add_vertices(g, {"b1", "b2", "b3"}, {"x#1", "w"});
  add_edge(g, "b1", "x#1", 1.0);
  add_edge(g, "b3", "x#1", 2.0);
  add_edge(g, "b2", "w", 8.0);
  add_edge(g, "x#1", "b2", 4.0);
  add_edge(g, "w", "b1", 6.0);
  add_edge(g, "w", "b3", 7.0);
  add_edge(g, "b1", "b3", 17.0);
  add_edge(g, "b3", "b1", 10.0);
  add_route(g, {"b1", "x#1", "b2"});
  add_route(g, {"b3", "x#1", "b2"});
  add_route(g, {"b2", "w", "b1"});
  add_route(g, {"b2", "w", "b3"});
  add_route(g, {"b1", "b3"});
  add_route(g, {"b3", "b1"});
  return g;
}

// Complete routing through one hub plus a direct edge no route touches.
inline NetworkGraph hub_with_unused_edge() {
  NetworkGraph g;
  add_vertices(g, {"u", "v", "w"}, {"m"});
  add_edge(g, "u", "m", 1.0);
  add_edge(g, "v", "m", 2.0);
  add_edge(g, "w", "m", 3.0);
  add_edge(g, "m", "u", 4.0);
  add_edge(g, "m", "v", 5.0);
  add_edge(g, "m", "w", 6.0);
  add_edge(g, "u", "w", 7.0);  // unused
  const std::vector<std::string> bs = {"u", "v", "w"};
  for (const auto& s : bs) {
    for (const auto& d : bs) {
      if (s != d) add_route(g, {s, "m", d});
    }
  }
  return g;
}

// Smallest mergeable network: one pass-through relay on the only route that
// needs it. Cleaning melts x into the direct edge (u,w) = 1+2.
inline NetworkGraph single_relay() {
  NetworkGraph g;
  add_vertices(g, {"u", "w"}, {"x"});
  add_edge(g, "u", "x", 1.0);
  add_edge(g, "x", "w", 2.0);
  add_edge(g, "w", "u", 3.0);
  add_route(g, {"u", "x", "w"});
  add_route(g, {"w", "u"});
  return g;
}

// Vertex x serves two fully disjoint families b1->{b3,b4} and b2->{b5,b6};
// everything else goes through the hub m. x must split into two copies,
// neither of which is pass-through.
inline NetworkGraph split_hub() {
  NetworkGraph g;
  add_vertices(g, {"b1", "b2", "b3", "b4", "b5", "b6"}, {"x", "m"});
  add_edge(g, "b1", "x", 1.0);
  add_edge(g, "b2", "x", 2.0);
  add_edge(g, "x", "b3", 3.0);
  add_edge(g, "x", "b4", 4.0);
  add_edge(g, "x", "b5", 5.0);
  add_edge(g, "x", "b6", 6.0);
  const std::vector<std::string> bs = {"b1", "b2", "b3", "b4", "b5", "b6"};
  for (size_t i = 0; i < bs.size(); ++i) {
    add_edge(g, bs[i], "m", 11.0 + static_cast<double>(i));
    add_edge(g, "m", bs[i], 21.0 + static_cast<double>(i));
  }
  add_route(g, {"b1", "x", "b3"});
  add_route(g, {"b1", "x", "b4"});
  add_route(g, {"b2", "x", "b5"});
  add_route(g, {"b2", "x", "b6"});
  std::set<std::pair<std::string, std::string>> placed;
  for (const auto& r : g.routes) placed.emplace(r.src, r.dst);
  for (const auto& s : bs) {
    for (const auto& d : bs) {
      if (s == d || placed.count({s, d}) != 0) continue;
      add_route(g, {s, "m", d});
    }
  }
  return g;
}

// Four boundary vertices on a unit ring where the diagonal routes pass
// through other boundary vertices. Valid except for those interior-boundary
// findings; draw_out_boundary turns it into a proper network.
inline NetworkGraph boundary_ring() {
  NetworkGraph g;
  add_vertices(g, {"b1", "b2", "b3", "b4"}, {});
  add_edge(g, "b1", "b2", 1.0);
  add_edge(g, "b2", "b3", 1.0);
  add_edge(g, "b3", "b4", 1.0);
  add_edge(g, "b4", "b1", 1.0);
  add_route(g, {"b1", "b2"});
  add_route(g, {"b2", "b3"});
  add_route(g, {"b3", "b4"});
  add_route(g, {"b4", "b1"});
  add_route(g, {"b1", "b2", "b3"});
  add_route(g, {"b2", "b3", "b4"});
  mirror(g);
  return g;
}

// Routes b->b1 and b->b2 visit p and then q in the same order but disagree on
// the stretch in between ([] versus [r]), which no fixed routing can produce.
// Every edge is used, so this is the only validation finding.
inline NetworkGraph inconsistent_order_network() {
  NetworkGraph g;
  add_vertices(g, {"b", "b1", "b2"}, {"p", "q", "r", "h"});
  add_edge(g, "b", "p", 1.0);
  add_edge(g, "p", "q", 2.0);
  add_edge(g, "q", "b1", 3.0);
  add_edge(g, "p", "r", 4.0);
  add_edge(g, "r", "q", 5.0);
  add_edge(g, "q", "b2", 6.0);
  add_edge(g, "b1", "h", 7.0);
  add_edge(g, "b2", "h", 8.0);
  add_edge(g, "h", "b", 9.0);
  add_edge(g, "h", "b1", 10.0);
  add_edge(g, "h", "b2", 11.0);
  add_route(g, {"b", "p", "q", "b1"});
  add_route(g, {"b", "p", "r", "q", "b2"});
  add_route(g, {"b1", "h", "b"});
  add_route(g, {"b2", "h", "b"});
  add_route(g, {"b1", "h", "b2"});
  add_route(g, {"b2", "h", "b1"});
  return g;
}

}  // namespace fixtures
}  // namespace netrecon

#endif  // NETRECON_TESTS_FIXTURES_HPP_
