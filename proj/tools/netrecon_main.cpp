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

// netrecon command line. Every subcommand is a pure file transform: JSON (or
// DOT) in, JSON (or DOT) out, "-" meaning stdin/stdout. Exit codes: 0 success,
// 1 the input data failed a check (invalid graph, inconsistent data, failed
// round-trip), 2 usage, schema, or IO problems. Failures print
// {"error":{"code","message"}} on stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netrecon/compliance.hpp"
#include "netrecon/dot.hpp"
#include "netrecon/generator.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/json_io.hpp"
#include "netrecon/pcd.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/verify.hpp"

namespace {

using netrecon::Error;
using netrecon::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    if (std::cin.bad()) throw Error("IO", "failed to read standard input");
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO", "cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("IO", "failed to read " + path);
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error("IO", "failed to write standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IO", "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error("IO", "failed to write " + path);
}

netrecon::NetworkGraph load_graph(const std::string& path) {
  return netrecon::graph_from_json(netrecon::parse_json(read_input(path)));
}

netrecon::PathCorrelationData load_pcd(const std::string& path) {
  return netrecon::pcd_from_json(netrecon::parse_json(read_input(path)));
}

// Flags fill the defaults first; an explicit params file wins over defaults
// but individually set flags win over the file, so both styles compose.
netrecon::GeneratorParams params_from_json(const Json& j, netrecon::GeneratorParams base) {
  if (!j.is_object()) throw Error("SCHEMA", "params document must be an object");
  for (const auto& [key, value] : j.items()) {
    auto number = [&](const char* name) {
      if (!value.is_number()) throw Error("SCHEMA", std::string("params.") + name + " must be a number");
      return value.get<double>();
    };
    auto integer = [&](const char* name) {
      if (!value.is_number_integer()) {
        throw Error("SCHEMA", std::string("params.") + name + " must be an integer");
      }
      return value.get<int64_t>();
    };
    auto flag = [&](const char* name) {
      if (!value.is_boolean()) throw Error("SCHEMA", std::string("params.") + name + " must be a boolean");
      return value.get<bool>();
    };
    if (key == "seed") {
      base.seed = static_cast<uint64_t>(integer("seed"));
    } else if (key == "boundary_count") {
      base.boundary_count = static_cast<int>(integer("boundary_count"));
    } else if (key == "internal_count") {
      base.internal_count = static_cast<int>(integer("internal_count"));
    } else if (key == "edge_density") {
      base.edge_density = number("edge_density");
    } else if (key == "weight_min") {
      base.weight_min = number("weight_min");
    } else if (key == "weight_max") {
      base.weight_max = number("weight_max");
    } else if (key == "symmetric_routing") {
      base.symmetric_routing = flag("symmetric_routing");
    } else if (key == "symmetric_weights") {
      base.symmetric_weights = flag("symmetric_weights");
    } else if (key == "ensure_compliant") {
      base.ensure_compliant = flag("ensure_compliant");
    } else if (key == "jitter") {
      base.jitter = flag("jitter");
    } else {
      throw Error("SCHEMA", "params has unknown key \"" + key + "\"");
    }
  }
  return base;
}

int fail(const Error& e) {
  Json j;
  j["error"] = {{"code", e.code()}, {"message", e.what()}};
  std::cerr << netrecon::dump_json(j);
  const std::string& c = e.code();
  return (c == "SCHEMA" || c == "IO" || c == "USAGE" || c == "UNSATISFIABLE_PARAMS") ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network reconstruction from path correlation data"};
  app.require_subcommand(1);
  double epsilon = netrecon::kDefaultEpsilon;
  app.add_option("--epsilon", epsilon, "Tolerance for all weight and distance comparisons")
      ->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random network graph");
  netrecon::GeneratorParams params;
  std::string gen_params_path, gen_out = "-";
  uint64_t gen_seed = 0;
  gen->add_option("--params", gen_params_path, "Generator params as JSON (flags override)");
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--boundary", params.boundary_count, "Boundary vertex count")
      ->capture_default_str();
  gen->add_option("--internal", params.internal_count, "Internal vertex count")
      ->capture_default_str();
  gen->add_option("--density", params.edge_density, "Extra edge probability, (0,1]")
      ->capture_default_str();
  gen->add_option("--weight-min", params.weight_min, "Smallest edge weight")
      ->capture_default_str();
  gen->add_option("--weight-max", params.weight_max, "Largest edge weight")
      ->capture_default_str();
  bool gen_sym_routing = false, gen_sym_weights = false, gen_compliant = false,
       gen_no_jitter = false;
  gen->add_flag("--symmetric-routing", gen_sym_routing, "Mirror routes across directions");
  gen->add_flag("--symmetric-weights", gen_sym_weights, "Equal weights in both directions");
  gen->add_flag("--ensure-compliant", gen_compliant, "Canonicalize the generated graph");
  gen->add_flag("--no-jitter", gen_no_jitter, "Emit weights without the tie-break perturbation");
  gen->add_option("-o,--output", gen_out, "Output path, - for stdout");

  // validate
  auto* val = app.add_subcommand("validate", "Check a graph against the model rules");
  std::string val_in = "-", val_out = "-";
  val->add_option("input", val_in, "Graph JSON, - for stdin");
  val->add_option("-o,--output", val_out, "Report path, - for stdout");

  // measure
  auto* mea = app.add_subcommand("measure", "Measure path correlation data from a graph");
  std::string mea_in = "-", mea_out = "-";
  mea->add_option("input", mea_in, "Graph JSON, - for stdin");
  mea->add_option("-o,--output", mea_out, "Data path, - for stdout");

  // trees
  auto* tre = app.add_subcommand("trees", "Build per-root source and receiver junction trees");
  std::string tre_in = "-", tre_out = "-", tre_format = "json";
  tre->add_option("input", tre_in, "Data JSON, - for stdin");
  tre->add_option("-o,--output", tre_out, "Output path, - for stdout");
  tre->add_option("--format", tre_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "Reconstruct the network from measured data");
  std::string rec_in = "-", rec_out = "-", rec_stats, rec_algorithm = "general";
  bool rec_symmetric = false;
  rec->add_option("input", rec_in, "Data JSON, - for stdin");
  rec->add_option("-o,--output", rec_out, "Graph path, - for stdout");
  rec->add_option("--stats", rec_stats, "Also write placement statistics JSON here");
  rec->add_flag("--symmetric-routing", rec_symmetric,
                "Treat the data as coming from mirrored routes");
  rec->add_option("--algorithm", rec_algorithm, "general or specialized")
      ->check(CLI::IsMember({"general", "specialized"}))
      ->capture_default_str();

  // clean
  auto* cle = app.add_subcommand("clean", "Canonicalize a graph without changing its data");
  std::string cle_in = "-", cle_out = "-", cle_report;
  bool cle_symmetric = false;
  cle->add_option("input", cle_in, "Graph JSON, - for stdin");
  cle->add_option("-o,--output", cle_out, "Graph path, - for stdout");
  cle->add_option("--report", cle_report, "Also write the cleaning report JSON here");
  cle->add_flag("--symmetric", cle_symmetric, "Treat the graph as symmetrically routed");

  // verify
  auto* ver = app.add_subcommand("verify", "Round-trip check: measure, reconstruct, compare");
  std::string ver_in = "-", ver_out = "-";
  ver->add_option("input", ver_in, "Graph JSON, - for stdin");
  ver->add_option("-o,--output", ver_out, "Report path, - for stdout");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Render a graph as Graphviz DOT");
  std::string dot_in = "-", dot_out = "-";
  dot->add_option("input", dot_in, "Graph JSON, - for stdin");
  dot->add_option("-o,--output", dot_out, "DOT path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(Error("USAGE", e.what()));
  }

  try {
    if (*gen) {
      if (!gen_params_path.empty()) {
        params = params_from_json(netrecon::parse_json(read_input(gen_params_path)), params);
      }
      // Re-apply flags the user actually passed so they override the file.
      if (gen->count("--seed") != 0 || gen_params_path.empty()) params.seed = gen_seed;
      if (gen->count("--boundary") != 0) {
        gen->get_option("--boundary")->results(params.boundary_count);
      }
      if (gen->count("--internal") != 0) {
        gen->get_option("--internal")->results(params.internal_count);
      }
      if (gen->count("--density") != 0) gen->get_option("--density")->results(params.edge_density);
      if (gen->count("--weight-min") != 0) {
        gen->get_option("--weight-min")->results(params.weight_min);
      }
      if (gen->count("--weight-max") != 0) {
        gen->get_option("--weight-max")->results(params.weight_max);
      }
      if (gen_sym_routing) params.symmetric_routing = true;
      if (gen_sym_weights) params.symmetric_weights = true;
      if (gen_compliant) params.ensure_compliant = true;
      if (gen_no_jitter) params.jitter = false;
      const netrecon::NetworkGraph g = netrecon::random_network(params);
      write_output(gen_out, netrecon::dump_json(netrecon::graph_to_json(g)));
      return 0;
    }

    if (*val) {
      const netrecon::NetworkGraph g = load_graph(val_in);
      const netrecon::ValidationReport report = netrecon::validate(g);
      write_output(val_out, netrecon::dump_json(netrecon::validation_report_to_json(report)));
      return report.valid() ? 0 : 1;
    }

    if (*mea) {
      const netrecon::NetworkGraph g = load_graph(mea_in);
      write_output(mea_out, netrecon::dump_json(netrecon::pcd_to_json(netrecon::measure(g))));
      return 0;
    }

    if (*tre) {
      const netrecon::PathCorrelationData pcd = load_pcd(tre_in);
      if (tre_format == "dot") {
        std::string out;
        for (const auto& b : pcd.boundary()) {
          out += netrecon::tree_to_dot(netrecon::build_source_tree(pcd, b, epsilon));
        }
        for (const auto& b : pcd.boundary()) {
          out += netrecon::tree_to_dot(netrecon::build_receiver_tree(pcd, b, epsilon));
        }
        write_output(tre_out, out);
        return 0;
      }
      Json j;
      j["source_trees"] = Json::array();
      j["receiver_trees"] = Json::array();
      for (const auto& b : pcd.boundary()) {
        j["source_trees"].push_back(
            netrecon::tree_to_json(netrecon::build_source_tree(pcd, b, epsilon)));
      }
      for (const auto& b : pcd.boundary()) {
        j["receiver_trees"].push_back(
            netrecon::tree_to_json(netrecon::build_receiver_tree(pcd, b, epsilon)));
      }
      write_output(tre_out, netrecon::dump_json(j));
      return 0;
    }

    if (*rec) {
      if (rec_algorithm == "specialized" && !rec_symmetric) {
        throw Error("USAGE", "--algorithm specialized requires --symmetric-routing");
      }
      const netrecon::PathCorrelationData pcd = load_pcd(rec_in);
      const netrecon::ReconstructionResult result =
          rec_algorithm == "specialized"
              ? netrecon::reconstruct_symmetric(pcd, epsilon)
              : netrecon::reconstruct(pcd, rec_symmetric, epsilon);
      write_output(rec_out, netrecon::dump_json(netrecon::graph_to_json(result.graph)));
      if (!rec_stats.empty()) {
        write_output(rec_stats, netrecon::dump_json(netrecon::stats_to_json(result.stats)));
      }
      return 0;
    }

    if (*cle) {
      const netrecon::NetworkGraph g = load_graph(cle_in);
      const auto [cleaned, report] = netrecon::clean(g, cle_symmetric, epsilon);
      write_output(cle_out, netrecon::dump_json(netrecon::graph_to_json(cleaned)));
      if (!cle_report.empty()) {
        write_output(cle_report, netrecon::dump_json(netrecon::cleaning_report_to_json(report)));
      }
      return 0;
    }

    if (*ver) {
      const netrecon::NetworkGraph g = load_graph(ver_in);
      const netrecon::RoundTripReport report = netrecon::check_round_trip(g, epsilon);
      write_output(ver_out, netrecon::dump_json(netrecon::round_trip_report_to_json(report)));
      return report.pass ? 0 : 1;
    }

    if (*dot) {
      const netrecon::NetworkGraph g = load_graph(dot_in);
      write_output(dot_out, netrecon::graph_to_dot(g));
      return 0;
    }
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    return fail(Error("INTERNAL", e.what()));
  }
  return 0;
}
