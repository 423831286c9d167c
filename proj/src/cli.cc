// Copyright 2026 The fincontagion Authors
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

#include "fincontagion/cli.h"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fincontagion/arborescence.h"
#include "fincontagion/cascade.h"
#include "fincontagion/dual.h"
#include "fincontagion/generators.h"
#include "fincontagion/io.h"
#include "fincontagion/network.h"
#include "fincontagion/stability.h"

namespace fincontagion {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoMethodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string file;
  std::string edges_csv;
  std::string gamma = "1/10";
  std::string phi = "1/2";
  std::string external = "10";
  bool use_float = false;
  double tolerance = 1e-12;
};

void AddInputOptions(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("file", o.file, "Network JSON file");
  cmd->add_option("--edges,--edges-csv", o.edges_csv,
                  "Edges CSV (header src,dst[,weight]) instead of a JSON file");
  cmd->add_option("--gamma", o.gamma, "gamma for --edges-csv input");
  cmd->add_option("--phi", o.phi, "phi for --edges-csv input");
  cmd->add_option("--external", o.external, "E for --edges-csv input");
  cmd->add_flag("--float", o.use_float, "Use the binary float backend");
  cmd->add_option("--tolerance", o.tolerance,
                  "Comparison tolerance for the float backend");
}

Amount ParseAmountArg(const std::string& text, const std::string& name) {
  auto a = Amount::Parse(text);
  if (!a) throw UsageError("bad amount for " + name + ": '" + text + "'");
  return *a;
}

NetworkSpec LoadInput(const InputOptions& o) {
  NumericPolicy numeric;
  if (o.use_float) numeric.backend = Backend::kFloat;
  numeric.tolerance = o.tolerance;
  NetworkSpec spec;
  if (!o.edges_csv.empty()) {
    std::ifstream in(o.edges_csv);
    if (!in) throw FormatError("cannot open '" + o.edges_csv + "'");
    CsvNetworkParams params{ParseAmountArg(o.gamma, "--gamma"),
                            ParseAmountArg(o.phi, "--phi"),
                            ParseAmountArg(o.external, "--external")};
    spec = NetworkFromEdgesCsv(in, params, numeric);
  } else if (!o.file.empty()) {
    spec = ReadNetworkFile(o.file, numeric);
  } else {
    throw UsageError("give a network file or --edges-csv");
  }
  ValidateOrThrow(spec);
  return spec;
}

int ParseHorizon(const std::string& text) {
  if (text == "unbounded" || text == "inf") return kUnboundedHorizon;
  try {
    size_t used = 0;
    const long t = std::stol(text, &used);
    if (used == text.size() && t >= 1 && t <= kUnboundedHorizon) {
      return static_cast<int>(t);
    }
  } catch (const std::exception&) {
  }
  throw UsageError("horizon must be a positive integer or 'unbounded', got '" +
                   text + "'");
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    const auto a = part.find_first_not_of(' ');
    if (a == std::string::npos) continue;
    parts.push_back(part.substr(a, part.find_last_not_of(' ') - a + 1));
  }
  return parts;
}

int ToInt(const std::string& text) {
  try {
    size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer, got '" + text + "'");
}

// "0-1,1-2" with 0-based vertices.
UndirectedGraph ParseGraph(const std::string& text, int vertices) {
  UndirectedGraph g;
  int top = -1;
  for (const std::string& edge : Split(text, ',')) {
    const auto ends = Split(edge, '-');
    if (ends.size() != 2) throw UsageError("bad edge '" + edge + "'");
    const int a = ToInt(ends[0]), b = ToInt(ends[1]);
    g.edges.push_back({a, b});
    top = std::max({top, a, b});
  }
  g.n = std::max(vertices, top + 1);
  return g;
}

UndirectedGraph PresetGraph(const std::string& name) {
  if (name == "k2") return ParseGraph("0-1", 2);
  if (name == "p3") return ParseGraph("0-1,1-2", 3);
  if (name == "star4") return ParseGraph("0-1,0-2,0-3,0-4", 5);
  if (name == "k4") return ParseGraph("0-1,0-2,0-3,1-2,1-3,2-3", 4);
  if (name == "k33") return ParseGraph("0-3,0-4,0-5,1-3,1-4,1-5,2-3,2-4,2-5", 6);
  if (name == "petersen") {
    return ParseGraph(
        "0-1,1-2,2-3,3-4,4-0,0-5,1-6,2-7,3-8,4-9,5-7,7-9,9-6,6-8,8-5", 10);
  }
  throw UsageError("unknown graph preset '" + name + "'");
}

// "1 2 3;3 4" with 1-based members. Returns groups as 0-based lists.
std::vector<std::vector<int>> ParseGroups(const std::string& text, int& top) {
  std::vector<std::vector<int>> groups;
  top = 0;
  for (const std::string& group : Split(text, ';')) {
    std::vector<int> items;
    for (const std::string& item : Split(group, ' ')) {
      const int v = ToInt(item);
      if (v < 1) throw UsageError("members are numbered from 1");
      items.push_back(v - 1);
      top = std::max(top, v);
    }
    groups.push_back(std::move(items));
  }
  return groups;
}

SetSystem PresetSets(const std::string& name) {
  if (name == "four-sets") return {4, {{0, 1, 2}, {2, 3}, {2}, {0, 1}}};
  throw UsageError("unknown set-system preset '" + name + "'");
}

json Summary(const NetworkSpec& spec, const CascadeTrace& trace) {
  json doc;
  doc["dead"] = trace.dead;
  json steps = json::array();
  for (const CascadeStep& step : trace.steps) {
    if (step.failed.empty()) continue;
    json ids = json::array();
    for (NodeIndex v : step.failed) ids.push_back(spec.node_ids[v]);
    steps.push_back({{"t", step.t}, {"failed", ids}});
  }
  doc["steps"] = std::move(steps);
  json failed = json::array(), survivors = json::array();
  for (NodeIndex v : trace.Failed()) failed.push_back(spec.node_ids[v]);
  for (NodeIndex v : trace.survivors) survivors.push_back(spec.node_ids[v]);
  doc["failed"] = std::move(failed);
  doc["survivors"] = std::move(survivors);
  doc["last_failure_step"] = trace.LastFailureStep();
  return doc;
}

bool TreeDpApplies(const NetworkSpec& spec) {
  return IsInArborescence(spec) && EveryNodeFailsWhenShocked(spec);
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Shock propagation and stability indices for banking networks",
               "fincontagion"};
  app.require_subcommand(1);
  std::function<void()> action;

  // balance
  InputOptions balance_in;
  auto* balance = app.add_subcommand("balance", "Print balance sheets as CSV");
  AddInputOptions(balance, balance_in);
  balance->callback([&] {
    action = [&] { WriteBalanceCsv(out, LoadInput(balance_in)); };
  });

  // simulate
  InputOptions sim_in;
  std::vector<std::string> shock_ids;
  std::string sim_horizon = "unbounded", trace_path, dot_path;
  auto* simulate = app.add_subcommand("simulate", "Run one shock cascade");
  AddInputOptions(simulate, sim_in);
  simulate->add_option("--shock", shock_ids, "Shocked node ids, or 'all'")
      ->required();
  simulate->add_option("--horizon", sim_horizon, "T or 'unbounded'");
  simulate->add_option("--trace", trace_path, "Write the full trace JSON");
  simulate->add_option("--dot", dot_path, "Write a Graphviz file");
  simulate->callback([&] {
    action = [&] {
      const int horizon = ParseHorizon(sim_horizon);
      const NetworkSpec spec = LoadInput(sim_in);
      const ShockSet shock =
          shock_ids.size() == 1 && shock_ids[0] == "all"
              ? ShockSet::All(spec.num_nodes())
              : ShockSet::FromIds(spec, shock_ids);
      const CascadeTrace trace = Propagate(spec, shock, horizon);
      if (!trace_path.empty()) {
        WriteJsonFile(trace_path, TraceToJson(spec, shock, trace));
      }
      if (!dot_path.empty()) WriteTextFile(dot_path, TraceToDot(spec, trace));
      out << Summary(spec, trace).dump(2) << "\n";
    };
  });

  // stab
  InputOptions stab_in;
  std::string stab_horizon = "unbounded", stab_method = "auto";
  int stab_threads = 1, stab_limit = 20;
  auto* stab = app.add_subcommand("stab", "Compute the stability index");
  AddInputOptions(stab, stab_in);
  stab->add_option("--horizon", stab_horizon, "T or 'unbounded'");
  stab->add_option("--method", stab_method, "auto|brute|greedy-t2|dp")
      ->check(CLI::IsMember({"auto", "brute", "greedy-t2", "dp"}));
  stab->add_option("--threads", stab_threads, "Worker threads for brute force");
  stab->add_option("--node-limit", stab_limit, "Largest n for brute force");
  stab->callback([&] {
    action = [&] {
      const int horizon = ParseHorizon(stab_horizon);
      const NetworkSpec spec = LoadInput(stab_in);
      std::string method = stab_method;
      if (method == "auto") {
        if (TreeDpApplies(spec)) {
          method = "dp";
        } else if (spec.num_nodes() <= stab_limit) {
          method = "brute";
        } else if (horizon == 2) {
          method = "greedy-t2";
        } else {
          throw NoMethodError(
              "no method applies: not a tree with all-fail nodes, n > " +
              std::to_string(stab_limit) + " and T != 2");
        }
      }
      StabilityResult result;
      if (method == "dp") {
        result = StabExactInArborescence(spec, horizon);
      } else if (method == "brute") {
        result = StabExactBruteforce(spec, horizon, stab_limit, stab_threads);
      } else {
        if (horizon != 2) throw NoMethodError("greedy-t2 needs --horizon 2");
        result = StabGreedyT2(spec);
      }
      out << StabilityToJson(spec, result).dump(2) << "\n";
    };
  });

  // dual
  InputOptions dual_in;
  std::string dual_horizon = "unbounded", dual_method = "auto";
  int kappa = 1, dual_threads = 1, dual_limit = 20;
  auto* dual = app.add_subcommand("dual", "Compute the dual stability index");
  AddInputOptions(dual, dual_in);
  dual->add_option("--kappa", kappa, "Number of shocked nodes")->required();
  dual->add_option("--horizon", dual_horizon, "T or 'unbounded'");
  dual->add_option("--method", dual_method, "auto|brute|greedy|dp")
      ->check(CLI::IsMember({"auto", "brute", "greedy", "dp"}));
  dual->add_option("--threads", dual_threads, "Worker threads for brute force");
  dual->add_option("--node-limit", dual_limit, "Largest n for brute force");
  dual->callback([&] {
    action = [&] {
      const int horizon = ParseHorizon(dual_horizon);
      const NetworkSpec spec = LoadInput(dual_in);
      std::string method = dual_method;
      if (method == "auto") {
        method = TreeDpApplies(spec)                 ? "dp"
                 : spec.num_nodes() <= dual_limit ? "brute"
                                                      : "greedy";
      }
      DualResult result;
      if (method == "dp") {
        result = DualExactInArborescence(spec, horizon, kappa);
      } else if (method == "brute") {
        result = DualExactBruteforce(spec, horizon, kappa, dual_limit,
                                     dual_threads);
      } else {
        result = DualGreedy(spec, horizon, kappa);
      }
      out << DualToJson(spec, result).dump(2) << "\n";
    };
  });

  // gen
  std::string kind, graph_text, preset, sets_text, hyper_text, out_prefix;
  std::string gen_gamma = "1/10", gen_phi = "1/2", gen_external, epsilon =
      "1/1000000000";
  int vertices = 0, gen_n = 0, universe = 0, num_sets = 0, arity = 2,
      num_edges = 0, max_in_degree = 3, gen_kappa = 0, membership = 2;
  double edge_prob = 0.3;
  uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a network");
  gen->add_option("kind", kind,
                  "dominating-set|node-cover-3reg|set-cover|max-coverage|"
                  "densest-hypergraph|random-arborescence|random-dag")
      ->required()
      ->check(CLI::IsMember({"dominating-set", "node-cover-3reg", "set-cover",
                             "max-coverage", "densest-hypergraph",
                             "random-arborescence", "random-dag"}));
  gen->add_option("--graph", graph_text, "Undirected edges, e.g. 0-1,1-2");
  gen->add_option("--preset", preset,
                  "k2|p3|star4|k4|k33|petersen or four-sets for set systems");
  gen->add_option("--sets", sets_text, "Sets, e.g. '1 2 3;3 4' (1-based)");
  gen->add_option("--hyperedges", hyper_text, "Hyperedges, e.g. '1 2;2 3'");
  gen->add_option("--vertices", vertices, "Vertex count for graph inputs");
  gen->add_option("--n", gen_n, "Node count for random kinds");
  gen->add_option("--universe", universe, "Universe size for random sets");
  gen->add_option("--num-sets", num_sets, "Set count for random sets");
  gen->add_option("--membership", membership,
                  "Minimum sets per element for random sets");
  gen->add_option("--arity", arity, "Hyperedge size for random hypergraphs");
  gen->add_option("--num-edges", num_edges, "Hyperedge count (random)");
  gen->add_option("--edge-prob", edge_prob, "Edge probability (random)");
  gen->add_option("--max-in-degree", max_in_degree, "Degree cap (trees)");
  gen->add_option("--kappa", gen_kappa, "kappa for the dual reductions");
  gen->add_option("--gamma", gen_gamma, "gamma for random kinds");
  gen->add_option("--phi", gen_phi, "phi for random kinds");
  gen->add_option("--external", gen_external, "E for random kinds");
  gen->add_option("--epsilon", epsilon, "phi - 2/5 for set-cover");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_prefix,
                  "Write PREFIX.json and PREFIX.cert.json instead of stdout");
  gen->callback([&] {
    action = [&] {
      auto graph = [&] {
        if (!preset.empty()) return PresetGraph(preset);
        if (!graph_text.empty()) return ParseGraph(graph_text, vertices);
        if (gen_n > 0) return RandomConnectedGraph(gen_n, edge_prob, seed);
        throw UsageError("give --graph, --preset or --n");
      };
      auto sets = [&] {
        if (!preset.empty()) return PresetSets(preset);
        if (!sets_text.empty()) {
          int top = 0;
          SetSystem s;
          s.sets = ParseGroups(sets_text, top);
          s.universe = std::max(universe, top);
          return s;
        }
        if (universe > 0 && num_sets > 0) {
          return RandomSetSystem(universe, num_sets, membership, seed);
        }
        throw UsageError("give --sets, --preset or --universe/--num-sets");
      };
      std::optional<GeneratedInstance> instance;
      NetworkSpec spec;
      if (kind == "dominating-set") {
        instance = GenFromDominatingSet(graph());
      } else if (kind == "node-cover-3reg") {
        instance = GenFromNodeCover3Regular(graph());
      } else if (kind == "set-cover") {
        instance = GenFromSetCover(sets(), ParseAmountArg(epsilon, "--epsilon"));
      } else if (kind == "max-coverage") {
        instance = GenFromMaxCoverage(sets(), gen_kappa);
      } else if (kind == "densest-hypergraph") {
        Hypergraph h;
        if (!hyper_text.empty()) {
          int top = 0;
          h.edges = ParseGroups(hyper_text, top);
          h.n = std::max(vertices, top);
        } else if (vertices > 0 && num_edges > 0) {
          h = RandomUniformHypergraph(vertices, arity, num_edges, seed);
        } else {
          throw UsageError("give --hyperedges or --vertices/--num-edges");
        }
        instance = GenFromDensestSubhypergraph(h, gen_kappa);
      } else {
        if (gen_n < 1) throw UsageError("random kinds need --n");
        const Amount g = ParseAmountArg(gen_gamma, "--gamma");
        const Amount p = ParseAmountArg(gen_phi, "--phi");
        if (kind == "random-arborescence") {
          const Amount e = gen_external.empty()
                               ? Amount(2 * gen_n)
                               : ParseAmountArg(gen_external, "--external");
          spec = GenRandomInArborescence(gen_n, max_in_degree, g, p, e, seed);
        } else {
          RandomParams params;
          params.gamma = g;
          params.phi = p;
          if (!gen_external.empty()) {
            params.external_total = ParseAmountArg(gen_external, "--external");
          }
          spec = GenRandomDag(gen_n, edge_prob, params, seed);
        }
        const auto violations = Validate(spec);
        if (!violations.empty()) {
          throw GeneratorError(FormatViolations(violations));
        }
      }
      if (instance) spec = instance->spec;
      const json network = NetworkToJson(spec);
      if (out_prefix.empty()) {
        out << network.dump(2) << "\n";
        return;
      }
      WriteJsonFile(out_prefix + ".json", network);
      if (instance) {
        WriteJsonFile(out_prefix + ".cert.json", CertificateToJson(*instance));
      }
      out << "wrote " << out_prefix << ".json"
          << (instance ? " and " + out_prefix + ".cert.json" : "") << "\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    action();
  } catch (const ValidationError& e) {
    err << "invalid network:\n" << e.what();
    return kExitValidation;
  } catch (const FormatError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnknownNodeError& e) {
    err << e.what() << "\n";
    return kExitUnknownNode;
  } catch (const GeneratorError& e) {
    err << "generator failed: " << e.what() << "\n";
    return kExitGenerator;
  } catch (const PreconditionError& e) {
    err << "method not applicable: " << e.what() << "\n";
    return kExitNoMethod;
  } catch (const NoMethodError& e) {
    err << e.what() << "\n";
    return kExitNoMethod;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace fincontagion
