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

#ifndef NETRECON_DOT_HPP_
#define NETRECON_DOT_HPP_

#include <string>

#include "netrecon/graph.hpp"
#include "netrecon/pcd.hpp"

namespace netrecon {

// Graphviz rendering. Boundary vertices are drawn double-circled; edges carry
// their weight as label.
std::string graph_to_dot(const NetworkGraph& g);
std::string tree_to_dot(const LogicalTree& tree);

}  // namespace netrecon

#endif  // NETRECON_DOT_HPP_
