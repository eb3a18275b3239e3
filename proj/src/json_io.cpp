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

#include "netrecon/json_io.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "netrecon/error.hpp"

namespace netrecon {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error("SCHEMA", what); }

// Loaders reject structural problems (wrong types, missing or unknown keys,
// duplicate or dangling identifiers) as SCHEMA errors. Semantic problems a
// structurally sound document can express (bad weights, missing routes,
// inconsistent tables) are left to validate() and validate_pcd().
const Json& expect(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where + " must be an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(where + " is missing key \"" + key + "\"");
  return *it;
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (known.count(key) == 0) schema_error(where + " has unknown key \"" + key + "\"");
  }
}

const Json& expect_array(const Json& j, const char* key, const std::string& where) {
  const Json& v = expect(j, key, where);
  if (!v.is_array()) schema_error(where + "." + key + " must be an array");
  return v;
}

std::string expect_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = expect(j, key, where);
  if (!v.is_string() || v.get<std::string>().empty()) {
    schema_error(where + "." + key + " must be a non-empty string");
  }
  return v.get<std::string>();
}

double expect_number(const Json& j, const char* key, const std::string& where) {
  const Json& v = expect(j, key, where);
  if (!v.is_number()) schema_error(where + "." + key + " must be a number");
  return v.get<double>();
}

bool expect_bool(const Json& j, const char* key, const std::string& where) {
  const Json& v = expect(j, key, where);
  if (!v.is_boolean()) schema_error(where + "." + key + " must be a boolean");
  return v.get<bool>();
}

std::string slot(const char* name, size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

}  // namespace

Json graph_to_json(const NetworkGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices) {
    j["vertices"].push_back({{"id", v.id}, {"boundary", v.boundary}});
  }
  j["edges"] = Json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  }
  j["routes"] = Json::array();
  for (const auto& r : g.routes) {
    j["routes"].push_back({{"src", r.src}, {"dst", r.dst}, {"path", r.path}});
  }
  return j;
}

NetworkGraph graph_from_json(const Json& j) {
  if (!j.is_object()) schema_error("graph document must be an object");
  reject_unknown_keys(j, {"vertices", "edges", "routes"}, "graph");

  NetworkGraph g;
  std::set<VertexId> ids;
  const Json& vertices = expect_array(j, "vertices", "graph");
  for (size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = slot("vertices", i);
    reject_unknown_keys(vertices[i], {"id", "boundary"}, where);
    Vertex v;
    v.id = expect_string(vertices[i], "id", where);
    v.boundary = expect_bool(vertices[i], "boundary", where);
    if (!ids.insert(v.id).second) schema_error(where + ": duplicate vertex id \"" + v.id + "\"");
    g.vertices.push_back(std::move(v));
  }

  auto known = [&](const std::string& id, const std::string& where) {
    if (ids.count(id) == 0) schema_error(where + " references unknown vertex \"" + id + "\"");
  };

  const Json& edges = expect_array(j, "edges", "graph");
  for (size_t i = 0; i < edges.size(); ++i) {
    const std::string where = slot("edges", i);
    reject_unknown_keys(edges[i], {"from", "to", "weight"}, where);
    Edge e;
    e.from = expect_string(edges[i], "from", where);
    e.to = expect_string(edges[i], "to", where);
    e.weight = expect_number(edges[i], "weight", where);
    known(e.from, where);
    known(e.to, where);
    g.edges.push_back(std::move(e));
  }

  std::set<std::pair<VertexId, VertexId>> route_keys;
  const Json& routes = expect_array(j, "routes", "graph");
  for (size_t i = 0; i < routes.size(); ++i) {
    const std::string where = slot("routes", i);
    reject_unknown_keys(routes[i], {"src", "dst", "path"}, where);
    Route r;
    r.src = expect_string(routes[i], "src", where);
    r.dst = expect_string(routes[i], "dst", where);
    known(r.src, where);
    known(r.dst, where);
    if (r.src == r.dst) schema_error(where + ": src and dst must differ");
    if (!route_keys.insert({r.src, r.dst}).second) {
      schema_error(where + ": duplicate route for pair (" + r.src + ", " + r.dst + ")");
    }
    const Json& path = expect_array(routes[i], "path", where);
    for (size_t k = 0; k < path.size(); ++k) {
      if (!path[k].is_string()) schema_error(where + ".path entries must be strings");
      r.path.push_back(path[k].get<std::string>());
      known(r.path.back(), where + ".path");
    }
    g.routes.push_back(std::move(r));
  }
  return g;
}

Json pcd_to_json(const PathCorrelationData& pcd) {
  const auto& bs = pcd.boundary();
  const size_t n = bs.size();
  Json j;
  j["boundary"] = bs;
  j["path_lengths"] = Json::array();
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      if (i == k || std::isnan(pcd.len_at(i, k))) continue;
      j["path_lengths"].push_back(
          {{"src", bs[i]}, {"dst", bs[k]}, {"len", pcd.len_at(i, k)}});
    }
  }
  // Junction tables are symmetric in their pair; emit each pair once.
  j["source_pcd"] = Json::array();
  for (size_t r = 0; r < n; ++r) {
    for (size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      for (size_t k = i + 1; k < n; ++k) {
        if (k == r || std::isnan(pcd.src_at(r, i, k))) continue;
        j["source_pcd"].push_back(
            {{"root", bs[r]}, {"b1", bs[i]}, {"b2", bs[k]}, {"value", pcd.src_at(r, i, k)}});
      }
    }
  }
  j["receiver_pcd"] = Json::array();
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = i + 1; k < n; ++k) {
      for (size_t r = 0; r < n; ++r) {
        if (r == i || r == k || std::isnan(pcd.rcv_at(i, k, r))) continue;
        j["receiver_pcd"].push_back(
            {{"b1", bs[i]}, {"b2", bs[k]}, {"root", bs[r]}, {"value", pcd.rcv_at(i, k, r)}});
      }
    }
  }
  return j;
}

PathCorrelationData pcd_from_json(const Json& j) {
  if (!j.is_object()) schema_error("data document must be an object");
  reject_unknown_keys(j, {"boundary", "path_lengths", "source_pcd", "receiver_pcd"}, "data");

  const Json& boundary = expect_array(j, "boundary", "data");
  std::vector<VertexId> bs;
  std::set<VertexId> seen;
  for (size_t i = 0; i < boundary.size(); ++i) {
    if (!boundary[i].is_string() || boundary[i].get<std::string>().empty()) {
      schema_error(slot("boundary", i) + " must be a non-empty string");
    }
    bs.push_back(boundary[i].get<std::string>());
    if (!seen.insert(bs.back()).second) {
      schema_error(slot("boundary", i) + ": duplicate boundary id \"" + bs.back() + "\"");
    }
  }
  if (bs.size() < 2) schema_error("data.boundary needs at least two entries");
  PathCorrelationData pcd(bs);

  auto check_known = [&](const std::string& id, const std::string& where) {
    if (seen.count(id) == 0) {
      schema_error(where + " references unknown boundary \"" + id + "\"");
    }
  };

  std::set<std::pair<std::string, std::string>> len_keys;
  const Json& lens = expect_array(j, "path_lengths", "data");
  for (size_t i = 0; i < lens.size(); ++i) {
    const std::string where = slot("path_lengths", i);
    reject_unknown_keys(lens[i], {"src", "dst", "len"}, where);
    const std::string src = expect_string(lens[i], "src", where);
    const std::string dst = expect_string(lens[i], "dst", where);
    check_known(src, where);
    check_known(dst, where);
    if (src == dst) schema_error(where + ": src and dst must differ");
    if (!len_keys.insert({src, dst}).second) schema_error(where + ": duplicate entry");
    pcd.set_len(src, dst, expect_number(lens[i], "len", where));
  }

  auto load_triples = [&](const char* key, bool source_side) {
    std::set<std::array<std::string, 3>> keys;
    const Json& arr = expect_array(j, key, "data");
    for (size_t i = 0; i < arr.size(); ++i) {
      const std::string where = slot(key, i);
      reject_unknown_keys(arr[i], {"root", "b1", "b2", "value"}, where);
      const std::string root = expect_string(arr[i], "root", where);
      const std::string b1 = expect_string(arr[i], "b1", where);
      const std::string b2 = expect_string(arr[i], "b2", where);
      check_known(root, where);
      check_known(b1, where);
      check_known(b2, where);
      if (b1 == b2 || root == b1 || root == b2) {
        schema_error(where + ": root, b1, b2 must be three distinct boundaries");
      }
      const std::array<std::string, 3> k{root, std::min(b1, b2), std::max(b1, b2)};
      if (!keys.insert(k).second) schema_error(where + ": duplicate entry");
      const double value = expect_number(arr[i], "value", where);
      if (source_side) {
        pcd.set_src(root, b1, b2, value);
      } else {
        pcd.set_rcv(b1, b2, root, value);
      }
    }
  };
  load_triples("source_pcd", true);
  load_triples("receiver_pcd", false);
  return pcd;
}

Json tree_to_json(const LogicalTree& tree) {
  Json j;
  j["root"] = tree.root;
  j["toward_root"] = tree.toward_root;
  j["junctions"] = Json::array();
  for (const auto& nd : tree.internal_nodes) {
    j["junctions"].push_back({{"id", nd.id}, {"depth", nd.depth}});
  }
  j["leaves"] = Json::array();
  for (const auto& nd : tree.leaves) {
    j["leaves"].push_back({{"id", nd.id}, {"depth", nd.depth}});
  }
  j["edges"] = Json::array();
  for (const auto& e : tree.edges) {
    j["edges"].push_back({{"parent", e.parent}, {"child", e.child}, {"weight", e.weight}});
  }
  return j;
}

Json validation_report_to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back({{"code", v.code}, {"detail", v.detail}});
  }
  return j;
}

Json stats_to_json(const ReconstructionStats& stats) {
  Json j;
  j["labels_created"] = stats.labels_created;
  j["insertions"] = stats.insertions;
  j["toplevel_calls"] = stats.toplevel_calls;
  j["labels_discarded"] = stats.labels_discarded;
  return j;
}

Json cleaning_report_to_json(const CleaningReport& report) {
  Json j;
  j["changed"] = report.changed();
  j["removed_edges"] = Json::array();
  for (const auto& [from, to] : report.removed_edges) {
    j["removed_edges"].push_back({{"from", from}, {"to", to}});
  }
  j["removed_vertices"] = report.removed_vertices;
  j["split_vertices"] = Json::object();
  for (const auto& [vertex, copies] : report.split_vertices) {
    j["split_vertices"][vertex] = copies;
  }
  j["merged_vertices"] = report.merged_vertices;
  return j;
}

Json round_trip_report_to_json(const RoundTripReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["symmetric_routing"] = report.symmetric_routing;
  j["reconstruction_isomorphic"] = report.reconstruction_isomorphic;
  j["pcd_preserved"] = report.pcd_preserved;
  j["max_weight_discrepancy"] = report.max_weight_discrepancy;
  j["detail"] = report.detail;
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    schema_error(e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace netrecon
