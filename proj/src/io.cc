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

#include "fincontagion/io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace fincontagion {

using nlohmann::json;

namespace {

Amount ParseAmount(const json& value, const std::string& field,
                   Backend backend) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number_integer()) {
    text = std::to_string(value.get<long long>());
  } else if (value.is_number()) {
    // Accepted for convenience; the shortest round-trip text is parsed
    // exactly.
    std::ostringstream os;
    os.precision(17);
    os << value.get<double>();
    text = os.str();
  } else {
    throw FormatError("field '" + field + "' must be a rational string");
  }
  auto parsed = Amount::Parse(text, backend);
  if (!parsed) {
    throw FormatError("field '" + field + "': cannot parse amount '" + text + "'");
  }
  return *parsed;
}

const json& Require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::string RequireString(const json& doc, const char* key) {
  const json& v = Require(doc, key);
  if (!v.is_string()) {
    throw FormatError(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

json IdList(const NetworkSpec& spec, const std::vector<NodeIndex>& nodes) {
  json out = json::array();
  for (NodeIndex v : nodes) out.push_back(spec.node_ids[v]);
  return out;
}

std::vector<Amount> UniformShares(int count, const Amount& total,
                                  Backend backend) {
  std::vector<Amount> out;
  if (count == 0) return out;
  const Amount share = (total / Amount(count)).As(backend);
  out.assign(count, share);
  return out;
}

}  // namespace

NetworkSpec NetworkFromJson(const json& doc, NumericPolicy numeric) {
  if (!doc.is_object()) throw FormatError("network document must be an object");
  const Backend b = numeric.backend;
  NetworkSpec spec;
  spec.numeric = numeric;
  const std::string mode = doc.value("mode", std::string("homogeneous"));
  if (mode == "homogeneous") {
    spec.mode = Mode::kHomogeneous;
  } else if (mode == "heterogeneous") {
    spec.mode = Mode::kHeterogeneous;
  } else {
    throw FormatError("mode must be 'homogeneous' or 'heterogeneous'");
  }
  const bool hetero = spec.mode == Mode::kHeterogeneous;
  spec.gamma = ParseAmount(Require(doc, "gamma"), "gamma", b);
  spec.phi = ParseAmount(Require(doc, "phi"), "phi", b);
  spec.external_total =
      ParseAmount(Require(doc, "external_total"), "external_total", b);

  const json& nodes = Require(doc, "nodes");
  if (!nodes.is_array()) throw FormatError("'nodes' must be an array");
  std::vector<std::optional<Amount>> alpha;
  for (const json& node : nodes) {
    if (node.is_string()) {
      spec.node_ids.push_back(node.get<std::string>());
      alpha.emplace_back();
      continue;
    }
    spec.node_ids.push_back(RequireString(node, "id"));
    if (node.contains("alpha")) {
      alpha.push_back(ParseAmount(node.at("alpha"), "alpha", b));
    } else {
      alpha.emplace_back();
    }
  }
  std::unordered_map<std::string, NodeIndex> index;
  for (NodeIndex v = 0; v < spec.num_nodes(); ++v) {
    index.emplace(spec.node_ids[v], v);
  }

  const json& edges = Require(doc, "edges");
  if (!edges.is_array()) throw FormatError("'edges' must be an array");
  bool any_weight = false;
  std::vector<std::optional<Amount>> weight;
  for (const json& edge : edges) {
    auto find = [&](const std::string& id) {
      auto it = index.find(id);
      if (it == index.end()) throw UnknownNodeError(id);
      return it->second;
    };
    // Either {"src": .., "dst": .., "weight": ..} or a ["src", "dst"] pair.
    if (edge.is_array()) {
      if (edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string()) {
        throw FormatError("edge pairs must be [\"src\", \"dst\"]");
      }
      spec.edges.push_back({find(edge[0].get<std::string>()),
                            find(edge[1].get<std::string>())});
      weight.emplace_back();
      continue;
    }
    spec.edges.push_back(
        {find(RequireString(edge, "src")), find(RequireString(edge, "dst"))});
    if (edge.contains("weight")) {
      weight.push_back(ParseAmount(edge.at("weight"), "weight", b));
      any_weight = true;
    } else {
      weight.emplace_back();
    }
  }

  if (doc.contains("interbank_total")) {
    spec.interbank_total =
        ParseAmount(doc.at("interbank_total"), "interbank_total", b);
  } else if (hetero && any_weight) {
    spec.interbank_total = Amount::Zero(b);
    for (const auto& w : weight) {
      if (w) spec.interbank_total += *w;
    }
  } else {
    throw FormatError("missing field 'interbank_total'");
  }

  const auto default_w =
      UniformShares(spec.num_edges(), spec.interbank_total, b);
  const auto default_a = UniformShares(spec.num_nodes(), Amount(1), b);
  for (int i = 0; i < spec.num_edges(); ++i) {
    if (!weight[i] && hetero) {
      throw FormatError("heterogeneous edge " + std::to_string(i) +
                        " needs a weight");
    }
    spec.weights.push_back(weight[i] ? *weight[i] : default_w[i]);
  }
  for (int v = 0; v < spec.num_nodes(); ++v) {
    if (!alpha[v] && hetero) {
      throw FormatError("heterogeneous node '" + spec.node_ids[v] +
                        "' needs an alpha");
    }
    spec.alpha.push_back(alpha[v] ? *alpha[v] : default_a[v]);
  }
  return spec;
}

json NetworkToJson(const NetworkSpec& spec) {
  const bool hetero = spec.mode == Mode::kHeterogeneous;
  json doc;
  doc["mode"] = std::string(ModeName(spec.mode));
  doc["gamma"] = spec.gamma.ToString();
  doc["phi"] = spec.phi.ToString();
  doc["external_total"] = spec.external_total.ToString();
  doc["interbank_total"] = spec.interbank_total.ToString();
  json nodes = json::array();
  for (int v = 0; v < spec.num_nodes(); ++v) {
    json node{{"id", spec.node_ids[v]}};
    if (hetero) node["alpha"] = spec.alpha[v].ToString();
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  json edges = json::array();
  for (int i = 0; i < spec.num_edges(); ++i) {
    json edge{{"src", spec.node_ids[spec.edges[i].src]},
              {"dst", spec.node_ids[spec.edges[i].dst]}};
    if (hetero) edge["weight"] = spec.weights[i].ToString();
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

NetworkSpec ReadNetworkFile(const std::string& path, NumericPolicy numeric) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
  return NetworkFromJson(doc, numeric);
}

void WriteJsonFile(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

NetworkSpec NetworkFromEdgesCsv(std::istream& in, const CsvNetworkParams& params,
                                NumericPolicy numeric) {
  const Backend b = numeric.backend;
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto first = cell.find_first_not_of(" \t\r");
      const auto last = cell.find_last_not_of(" \t\r");
      cells.push_back(first == std::string::npos
                          ? ""
                          : cell.substr(first, last - first + 1));
    }
    return cells;
  };
  std::string line;
  if (!std::getline(in, line)) throw FormatError("edges CSV is empty");
  const auto header = split(line);
  int src_col = -1, dst_col = -1, weight_col = -1;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (header[i] == "src") src_col = i;
    if (header[i] == "dst") dst_col = i;
    if (header[i] == "weight") weight_col = i;
  }
  if (src_col < 0 || dst_col < 0) {
    throw FormatError("edges CSV header must name 'src' and 'dst'");
  }
  std::vector<std::string> ids;
  std::unordered_map<std::string, NodeIndex> index;
  auto node = [&](const std::string& id) {
    auto [it, inserted] = index.emplace(id, static_cast<NodeIndex>(ids.size()));
    if (inserted) ids.push_back(id);
    return it->second;
  };
  std::vector<Edge> edges;
  std::vector<Amount> weights;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split(line);
    const int need = std::max({src_col, dst_col, weight_col}) + 1;
    if (static_cast<int>(cells.size()) < need) {
      throw FormatError("edges CSV row " + std::to_string(row) +
                        " has too few cells");
    }
    edges.push_back({node(cells[src_col]), node(cells[dst_col])});
    if (weight_col >= 0) {
      auto w = Amount::Parse(cells[weight_col], b);
      if (!w) {
        throw FormatError("edges CSV row " + std::to_string(row) +
                          ": bad weight '" + cells[weight_col] + "'");
      }
      weights.push_back(*w);
    }
  }
  if (ids.empty()) throw FormatError("edges CSV has no edges");
  if (weight_col < 0) {
    return MakeHomogeneous(static_cast<int>(ids.size()), edges, params.gamma,
                           params.phi, params.external_total,
                           Amount(static_cast<int>(edges.size())), ids,
                           numeric);
  }
  const auto alpha = UniformShares(static_cast<int>(ids.size()), Amount(1), b);
  return MakeHeterogeneous(ids, edges, weights, alpha, params.gamma, params.phi,
                           params.external_total, numeric);
}

json TraceToJson(const NetworkSpec& spec, const ShockSet& shock,
                 const CascadeTrace& trace) {
  json doc;
  doc["horizon"] = trace.horizon == kUnboundedHorizon
                       ? json("unbounded")
                       : json(trace.horizon);
  doc["effective_horizon"] = trace.effective_horizon;
  doc["shock"] = IdList(spec, shock.nodes());
  json steps = json::array();
  for (const CascadeStep& step : trace.steps) {
    json s;
    s["t"] = step.t;
    s["failed"] = IdList(spec, step.failed);
    json equity = json::object();
    for (NodeIndex v = 0; v < spec.num_nodes(); ++v) {
      if (trace.failure_step[v] == 0 || trace.failure_step[v] >= step.t) {
        equity[spec.node_ids[v]] = step.equity[v].ToString();
      }
    }
    s["equity"] = std::move(equity);
    json sends = json::array();
    for (const Transmission& tr : step.transmissions) {
      sends.push_back({{"source", spec.node_ids[tr.source]},
                       {"per_lender", tr.per_lender.ToString()},
                       {"recipients", tr.recipients}});
    }
    s["transmissions"] = std::move(sends);
    steps.push_back(std::move(s));
  }
  doc["steps"] = std::move(steps);
  doc["failed"] = IdList(spec, trace.Failed());
  doc["survivors"] = IdList(spec, trace.survivors);
  doc["dead"] = trace.dead;
  doc["last_failure_step"] = trace.LastFailureStep();
  return doc;
}

json StabilityToJson(const NetworkSpec& spec, const StabilityResult& result) {
  json doc;
  doc["method"] = std::string(StabMethodName(result.method));
  doc["horizon"] = result.horizon == kUnboundedHorizon
                       ? json("unbounded")
                       : json(result.horizon);
  doc["status"] = result.feasible ? "finite" : "infinite";
  doc["value"] = result.ValueString();
  doc["n"] = result.num_nodes;
  if (result.feasible) {
    doc["set"] = IdList(spec, result.shock_set);
    doc["shock_count"] = static_cast<int>(result.shock_set.size());
  } else {
    doc["set"] = json::array();
  }
  doc["confirmed"] = result.confirmed;
  if (result.lower_bound) doc["lower_bound"] = result.lower_bound->ToString();
  return doc;
}

json DualToJson(const NetworkSpec& spec, const DualResult& result) {
  json doc;
  doc["method"] = std::string(DualMethodName(result.method));
  doc["horizon"] = result.horizon == kUnboundedHorizon
                       ? json("unbounded")
                       : json(result.horizon);
  doc["kappa"] = result.kappa;
  doc["value"] = result.ValueString();
  doc["set"] = IdList(spec, result.shock_set);
  doc["failed"] = IdList(spec, result.failed);
  doc["failed_count"] = static_cast<int>(result.failed.size());
  doc["confirmed"] = result.confirmed;
  return doc;
}

json CertificateToJson(const GeneratedInstance& instance) {
  const NetworkSpec& spec = instance.spec;
  json doc;
  doc["kind"] = instance.kind;
  doc["predicate"] = instance.predicate;
  if (instance.kappa > 0) doc["kappa"] = instance.kappa;
  json roles = json::object();
  for (const auto& [role, nodes] : instance.correspondence) {
    roles[role] = IdList(spec, nodes);
  }
  doc["correspondence"] = std::move(roles);
  doc["fixed_shock"] = IdList(spec, instance.fixed_shock);
  json source;
  if (auto* g = std::get_if<UndirectedGraph>(&instance.source)) {
    source = {{"type", "graph"}, {"n", g->n}, {"edges", g->edges}};
  } else if (auto* s = std::get_if<SetSystem>(&instance.source)) {
    source = {{"type", "set-system"}, {"universe", s->universe},
              {"sets", s->sets}};
  } else if (auto* h = std::get_if<Hypergraph>(&instance.source)) {
    source = {{"type", "hypergraph"}, {"n", h->n}, {"edges", h->edges}};
  }
  doc["source"] = std::move(source);
  json checks = json::array();
  for (const InequalityCheck& c : instance.checks) {
    checks.push_back(
        {{"name", c.name}, {"statement", c.statement}, {"holds", c.holds}});
  }
  doc["checks"] = std::move(checks);
  return doc;
}

std::string TraceToDot(const NetworkSpec& spec, const CascadeTrace& trace) {
  static const char* kPalette[] = {"#d7191c", "#fdae61", "#ffffbf",
                                   "#abd9e9", "#2c7bb6", "#984ea3"};
  constexpr int kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  std::ostringstream os;
  os << "digraph cascade {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (NodeIndex v = 0; v < spec.num_nodes(); ++v) {
    const int t = trace.failure_step[v];
    os << "  \"" << spec.node_ids[v] << "\"";
    if (t > 0) {
      os << " [style=filled, fillcolor=\"" << kPalette[(t - 1) % kColors]
         << "\", label=\"" << spec.node_ids[v] << "\\nt=" << t << "\"]";
    }
    os << ";\n";
  }
  for (int i = 0; i < spec.num_edges(); ++i) {
    os << "  \"" << spec.node_ids[spec.edges[i].src] << "\" -> \""
       << spec.node_ids[spec.edges[i].dst] << "\"";
    if (spec.mode == Mode::kHeterogeneous) {
      os << " [label=\"" << spec.weights[i].ToString() << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

void WriteBalanceCsv(std::ostream& out, const NetworkSpec& spec) {
  const auto sheets = DeriveBalanceSheets(spec);
  out << "node,iota,b,e,a,c\n";
  for (NodeIndex v = 0; v < spec.num_nodes(); ++v) {
    const BalanceSheet& s = sheets[v];
    out << spec.node_ids[v] << ',' << s.interbank_asset.ToDecimalString() << ','
        << s.interbank_borrowing.ToDecimalString() << ','
        << s.external_asset.ToDecimalString() << ','
        << s.total_asset.ToDecimalString() << ','
        << s.equity.ToDecimalString() << '\n';
  }
}

}  // namespace fincontagion
