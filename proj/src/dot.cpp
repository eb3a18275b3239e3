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

#include "netrecon/dot.hpp"

#include <charconv>

namespace netrecon {

namespace {

// Shortest decimal form that round-trips the double.
std::string format_weight(double w) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, res.ptr);
}

std::string quote(const std::string& id) {
  std::string out = "\"";
  for (const char c : id) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string graph_to_dot(const NetworkGraph& g) {
  std::string out = "digraph network {\n";
  out += "  node [shape=circle];\n";
  for (const auto& v : g.vertices) {
    out += "  " + quote(v.id);
    if (v.boundary) out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (const auto& e : g.edges) {
    out += "  " + quote(e.from) + " -> " + quote(e.to) + " [label=" +
           quote(format_weight(e.weight)) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string tree_to_dot(const LogicalTree& tree) {
  std::string out = "digraph tree {\n";
  out += "  node [shape=circle];\n";
  out += "  " + quote(tree.root) + " [shape=doublecircle];\n";
  for (const auto& nd : tree.internal_nodes) {
    out += "  " + quote(nd.id) + " [label=" +
           quote(nd.id + " @ " + format_weight(nd.depth)) + "];\n";
  }
  for (const auto& nd : tree.leaves) {
    out += "  " + quote(nd.id) + " [shape=doublecircle];\n";
  }
  // Receiver trees point toward the root, so flip the arrows there.
  for (const auto& e : tree.edges) {
    const std::string label = " [label=" + quote(format_weight(e.weight)) + "];\n";
    if (tree.toward_root) {
      out += "  " + quote(e.child) + " -> " + quote(e.parent) + label;
    } else {
      out += "  " + quote(e.parent) + " -> " + quote(e.child) + label;
    }
  }
  out += "}\n";
  return out;
}

}  // namespace netrecon
