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

#include "netrecon/verify.hpp"

#include <algorithm>
#include <cmath>

#include "netrecon/reconstruct.hpp"

namespace netrecon {

namespace {

bool close_or_both_unset(double a, double b, double eps) {
  const bool na = std::isnan(a);
  const bool nb = std::isnan(b);
  if (na || nb) return na && nb;
  return std::fabs(a - b) <= eps;
}

}  // namespace

bool pcd_equal(const PathCorrelationData& a, const PathCorrelationData& b,
               double eps) {
  std::set<VertexId> sa(a.boundary().begin(), a.boundary().end());
  std::set<VertexId> sb(b.boundary().begin(), b.boundary().end());
  if (sa != sb) {
    throw Error("BOUNDARY_MISMATCH",
                "the two data sets cover different boundary sets");
  }
  const auto& bs = a.boundary();
  const size_t n = bs.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!close_or_both_unset(a.len(bs[i], bs[j]), b.len(bs[i], bs[j]), eps)) {
        return false;
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = j + 1; k < n; ++k) {
        if (k == i) continue;
        if (!close_or_both_unset(a.src(bs[i], bs[j], bs[k]),
                                 b.src(bs[i], bs[j], bs[k]), eps)) {
          return false;
        }
        if (!close_or_both_unset(a.rcv(bs[j], bs[k], bs[i]),
                                 b.rcv(bs[j], bs[k], bs[i]), eps)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<IsomorphismWitness> boundary_anchored_isomorphic(
    const NetworkGraph& a, const NetworkGraph& b, double eps) {
  const auto ba = a.boundary();
  const auto bb = b.boundary();
  if (std::set<VertexId>(ba.begin(), ba.end()) !=
      std::set<VertexId>(bb.begin(), bb.end())) {
    return std::nullopt;
  }
  if (a.routes.size() != b.routes.size()) return std::nullopt;

  GraphIndex ib(b);
  IsomorphismWitness wit;
  std::map<VertexId, VertexId> back;
  for (const auto& ra : a.routes) {
    const Route* rb = ib.find_route(ra.src, ra.dst);
    if (rb == nullptr || rb->path.size() != ra.path.size()) return std::nullopt;
    for (size_t i = 0; i < ra.path.size(); ++i) {
      auto [it, fresh] = wit.mapping.emplace(ra.path[i], rb->path[i]);
      if (!fresh && it->second != rb->path[i]) return std::nullopt;
      auto [it2, fresh2] = back.emplace(rb->path[i], ra.path[i]);
      if (!fresh2 && it2->second != ra.path[i]) return std::nullopt;
    }
  }
  // Route positions must pin every vertex on both sides.
  if (wit.mapping.size() != a.vertices.size() || back.size() != b.vertices.size()) {
    return std::nullopt;
  }
  for (const auto& v : a.vertices) {
    if (wit.mapping.count(v.id) == 0) return std::nullopt;
  }

  if (a.edges.size() != b.edges.size()) return std::nullopt;
  for (const auto& e : a.edges) {
    auto w = ib.edge_weight(wit.mapping.at(e.from), wit.mapping.at(e.to));
    if (!w.has_value()) return std::nullopt;
    const double d = std::fabs(*w - e.weight);
    if (d > eps) return std::nullopt;
    wit.max_weight_discrepancy = std::max(wit.max_weight_discrepancy, d);
  }
  return wit;
}

RoundTripReport check_round_trip(const NetworkGraph& g, double eps) {
  RoundTripReport report;
  report.symmetric_routing = is_symmetric_routing(g);
  const PathCorrelationData pcd = measure(g);
  const ReconstructionResult recon = reconstruct(pcd, report.symmetric_routing, eps);
  const auto [canon, cleaning] = clean(g, report.symmetric_routing, eps);

  auto wit = boundary_anchored_isomorphic(recon.graph, canon, eps);
  report.reconstruction_isomorphic = wit.has_value();
  if (wit.has_value()) report.max_weight_discrepancy = wit->max_weight_discrepancy;

  report.pcd_preserved = pcd_equal(pcd, measure(canon), eps);
  report.pass = report.reconstruction_isomorphic && report.pcd_preserved;
  if (report.pass) {
    report.detail = "reconstruction matches the canonical form and the data is preserved";
  } else if (!report.reconstruction_isomorphic) {
    report.detail = "reconstruction does not match the canonical form";
  } else {
    report.detail = "canonicalization changed the measured data";
  }
  return report;
}

}  // namespace netrecon
