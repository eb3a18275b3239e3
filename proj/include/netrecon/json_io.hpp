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

// JSON serialization for every value the CLI moves between files. Output key
// order and array order are deterministic, and numbers round-trip exactly, so
// identical inputs always produce byte-identical files. Loaders throw
// Error(SCHEMA) on malformed documents.

#ifndef NETRECON_JSON_IO_HPP_
#define NETRECON_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "netrecon/compliance.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/pcd.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/verify.hpp"

namespace netrecon {

using Json = nlohmann::ordered_json;

Json graph_to_json(const NetworkGraph& g);
NetworkGraph graph_from_json(const Json& j);

Json pcd_to_json(const PathCorrelationData& pcd);
PathCorrelationData pcd_from_json(const Json& j);

Json tree_to_json(const LogicalTree& tree);
Json validation_report_to_json(const ValidationReport& report);
Json stats_to_json(const ReconstructionStats& stats);
Json cleaning_report_to_json(const CleaningReport& report);
Json round_trip_report_to_json(const RoundTripReport& report);

// Parses text into JSON, rethrowing parse failures as Error(SCHEMA).
Json parse_json(const std::string& text);

// Serializes with two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

}  // namespace netrecon

#endif  // NETRECON_JSON_IO_HPP_
