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

#include "fincontagion/network.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fincontagion {

std::string FormatViolations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid network:";
  for (const Violation& v : violations) {
    os << "\n  " << v.subject << ": " << v.message;
  }
  return os.str();
}

std::string_view ModeName(Mode mode) {
  return mode == Mode::kHomogeneous ? "homogeneous" : "heterogeneous";
}

std::optional<NodeIndex> NetworkSpec::Find(std::string_view id) const {
  for (NodeIndex i = 0; i < num_nodes(); ++i) {
    if (node_ids[i] == id) return i;
  }
  return std::nullopt;
}

NodeIndex NetworkSpec::IndexOf(std::string_view id) const {
  if (auto i = Find(id)) return *i;
  throw UnknownNodeError(std::string(id));
}

bool operator==(const NetworkSpec& a, const NetworkSpec& b) {
  return a.mode == b.mode && a.gamma == b.gamma && a.phi == b.phi &&
         a.external_total == b.external_total &&
         a.interbank_total == b.interbank_total && a.node_ids == b.node_ids &&
         a.edges == b.edges && a.weights == b.weights && a.alpha == b.alpha &&
         a.numeric.backend == b.numeric.backend;
}

namespace {

std::vector<Amount> Uniform(int count, const Amount& total, Backend backend) {
  if (count == 0) return {};
  Amount share = (total / Amount(count)).As(backend);
  return std::vector<Amount>(count, share);
}

}  // namespace

NetworkSpec MakeHomogeneous(
    std::vector<std::string> ids,
    const std::vector<std::pair<std::string, std::string>>& edges,
    Amount gamma, Amount phi, Amount external_total, Amount interbank_total,
    NumericPolicy numeric) {
  std::unordered_map<std::string, NodeIndex> index;
  for (NodeIndex i = 0; i < static_cast<NodeIndex>(ids.size()); ++i) {
    index.emplace(ids[i], i);
  }
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [src, dst] : edges) {
    auto s = index.find(src);
    if (s == index.end()) throw UnknownNodeError(src);
    auto d = index.find(dst);
    if (d == index.end()) throw UnknownNodeError(dst);
    indexed.push_back({s->second, d->second});
  }
  const int n = static_cast<int>(ids.size());
  return MakeHomogeneous(n, indexed, std::move(gamma), std::move(phi),
                         std::move(external_total), std::move(interbank_total),
                         std::move(ids), numeric);
}

NetworkSpec MakeHomogeneous(int n, const std::vector<Edge>& edges, Amount gamma,
                            Amount phi, Amount external_total,
                            Amount interbank_total,
                            std::vector<std::string> ids,
                            NumericPolicy numeric) {
  NetworkSpec spec;
  spec.mode = Mode::kHomogeneous;
  spec.numeric = numeric;
  const Backend b = numeric.backend;
  spec.gamma = gamma.As(b);
  spec.phi = phi.As(b);
  spec.external_total = external_total.As(b);
  spec.interbank_total = interbank_total.As(b);
  if (ids.empty()) {
    for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  }
  spec.node_ids = std::move(ids);
  spec.edges = edges;
  spec.weights = Uniform(static_cast<int>(edges.size()), spec.interbank_total, b);
  spec.alpha = Uniform(n, Amount(1), b);
  return spec;
}

NetworkSpec MakeHeterogeneous(std::vector<std::string> ids,
                              const std::vector<Edge>& edges,
                              std::vector<Amount> weights,
                              std::vector<Amount> alpha, Amount gamma,
                              Amount phi, Amount external_total,
                              NumericPolicy numeric) {
  NetworkSpec spec;
  spec.mode = Mode::kHeterogeneous;
  spec.numeric = numeric;
  const Backend b = numeric.backend;
  spec.gamma = gamma.As(b);
  spec.phi = phi.As(b);
  spec.external_total = external_total.As(b);
  Amount total = Amount::Zero(b);
  for (Amount& w : weights) {
    w = w.As(b);
    total += w;
  }
  for (Amount& a : alpha) a = a.As(b);
  spec.interbank_total = total;
  spec.node_ids = std::move(ids);
  spec.edges = edges;
  spec.weights = std::move(weights);
  spec.alpha = std::move(alpha);
  return spec;
}

NetworkSpec WithBackend(const NetworkSpec& spec, NumericPolicy numeric) {
  NetworkSpec out = spec;
  out.numeric = numeric;
  const Backend b = numeric.backend;
  out.gamma = spec.gamma.As(b);
  out.phi = spec.phi.As(b);
  out.external_total = spec.external_total.As(b);
  out.interbank_total = spec.interbank_total.As(b);
  for (Amount& w : out.weights) w = w.As(b);
  for (Amount& a : out.alpha) a = a.As(b);
  return out;
}

std::vector<Violation> Validate(const NetworkSpec& spec) {
  std::vector<Violation> out;
  const NumericPolicy& p = spec.numeric;
  const int n = spec.num_nodes();
  const int m = spec.num_edges();

  if (n == 0) out.push_back({"nodes", "network has no nodes"});
  if (!IsPositive(spec.gamma, p)) {
    out.push_back({"gamma", "γ must be positive, got " + spec.gamma.ToString()});
  }
  if (!Exceeds(spec.phi, spec.gamma, p)) {
    out.push_back({"phi", "Φ must exceed γ (Φ=" + spec.phi.ToString() +
                              ", γ=" + spec.gamma.ToString() + ")"});
  }
  if (Exceeds(spec.phi, Amount(1), p)) {
    out.push_back({"phi", "Φ must not exceed 1, got " + spec.phi.ToString()});
  }
  if (IsNegative(spec.external_total, p)) {
    out.push_back({"external_total", "E must be non-negative"});
  }
  if (IsNegative(spec.interbank_total, p)) {
    out.push_back({"interbank_total", "I must be non-negative"});
  }

  std::set<std::string> seen_ids;
  for (const std::string& id : spec.node_ids) {
    if (!seen_ids.insert(id).second) {
      out.push_back({"node " + id, "duplicate node identifier"});
    }
  }

  if (static_cast<int>(spec.weights.size()) != m) {
    out.push_back({"weights", "expected one weight per edge"});
  }
  if (static_cast<int>(spec.alpha.size()) != n) {
    out.push_back({"alpha", "expected one share per node"});
  }

  auto edge_name = [&](const Edge& e) {
    auto name = [&](NodeIndex i) {
      return i >= 0 && i < n ? spec.node_ids[i] : "#" + std::to_string(i);
    };
    return "edge (" + name(e.src) + "," + name(e.dst) + ")";
  };
  std::set<std::pair<NodeIndex, NodeIndex>> seen_edges;
  for (int k = 0; k < m; ++k) {
    const Edge& e = spec.edges[k];
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
      out.push_back({edge_name(e), "endpoint out of range"});
      continue;
    }
    if (e.src == e.dst) out.push_back({edge_name(e), "self-loop"});
    if (!seen_edges.insert({e.src, e.dst}).second) {
      out.push_back({edge_name(e), "parallel edge"});
    }
  }

  if (static_cast<int>(spec.weights.size()) == m) {
    Amount total = Amount::Zero(p.backend);
    for (int k = 0; k < m; ++k) {
      if (!IsPositive(spec.weights[k], p)) {
        out.push_back({edge_name(spec.edges[k]), "weight must be positive"});
      }
      total += spec.weights[k];
    }
    if ((total - spec.interbank_total).Sign(p) != 0) {
      out.push_back({"weights", "edge weights sum to " + total.ToString() +
                                    " but I = " +
                                    spec.interbank_total.ToString()});
    }
    if (spec.mode == Mode::kHomogeneous && m > 0) {
      const Amount uniform = spec.interbank_total / Amount(m);
      for (int k = 0; k < m; ++k) {
        if ((spec.weights[k] - uniform).Sign(p) != 0) {
          out.push_back({edge_name(spec.edges[k]),
                         "homogeneous weight must equal I/m"});
        }
      }
    }
  }

  if (static_cast<int>(spec.alpha.size()) == n && n > 0) {
    Amount total = Amount::Zero(p.backend);
    for (int i = 0; i < n; ++i) {
      if (IsNegative(spec.alpha[i], p)) {
        out.push_back({"node " + spec.node_ids[i], "α must be non-negative"});
      }
      total += spec.alpha[i];
    }
    if ((total - Amount(1)).Sign(p) != 0) {
      out.push_back({"alpha", "α shares sum to " + total.ToString() +
                                  ", expected 1"});
    }
    if (spec.mode == Mode::kHomogeneous) {
      const Amount uniform = Amount(1) / Amount(n);
      for (int i = 0; i < n; ++i) {
        if ((spec.alpha[i] - uniform).Sign(p) != 0) {
          out.push_back({"node " + spec.node_ids[i],
                         "homogeneous α must equal 1/n"});
        }
      }
    }
  }
  return out;
}

void ValidateOrThrow(const NetworkSpec& spec) {
  auto violations = Validate(spec);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

Topology::Topology(const NetworkSpec& spec)
    : lenders_(spec.num_nodes()), borrowers_(spec.num_nodes()) {
  for (const Edge& e : spec.edges) {
    lenders_[e.dst].push_back(e.src);
    borrowers_[e.src].push_back(e.dst);
  }
}

int Topology::max_in_degree() const {
  int best = 0;
  for (const auto& l : lenders_) best = std::max(best, static_cast<int>(l.size()));
  return best;
}

bool Topology::HasEdge(NodeIndex src, NodeIndex dst) const {
  const auto& b = borrowers_[src];
  return std::find(b.begin(), b.end(), dst) != b.end();
}

std::optional<std::vector<NodeIndex>> Topology::TopologicalOrder() const {
  const int n = num_nodes();
  std::vector<int> pending(n);
  std::vector<NodeIndex> order;
  order.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) {
    pending[v] = in_degree(v);
    if (pending[v] == 0) order.push_back(v);
  }
  for (size_t head = 0; head < order.size(); ++head) {
    for (NodeIndex w : borrowers_[order[head]]) {
      if (--pending[w] == 0) order.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::vector<BalanceSheet> DeriveBalanceSheets(const NetworkSpec& spec) {
  const int n = spec.num_nodes();
  const Backend b = spec.numeric.backend;
  std::vector<BalanceSheet> sheets(n);
  for (BalanceSheet& s : sheets) {
    s.interbank_asset = Amount::Zero(b);
    s.interbank_borrowing = Amount::Zero(b);
  }
  for (int k = 0; k < spec.num_edges(); ++k) {
    const Edge& e = spec.edges[k];
    sheets[e.src].interbank_asset += spec.weights[k];
    sheets[e.dst].interbank_borrowing += spec.weights[k];
  }
  for (int v = 0; v < n; ++v) {
    BalanceSheet& s = sheets[v];
    const Amount share = spec.alpha[v] * spec.external_total;
    s.external_asset = (s.interbank_borrowing - s.interbank_asset) + share;
    s.total_asset = s.interbank_borrowing + share;
    s.equity = spec.gamma * s.total_asset;
  }
  return sheets;
}

NetworkSpec NormalizeHomogeneous(const NetworkSpec& spec) {
  if (spec.mode != Mode::kHomogeneous) {
    throw PreconditionError("normalization applies to homogeneous networks only");
  }
  const int m = spec.num_edges();
  if (m == 0) return spec;
  const Amount w = spec.interbank_total / Amount(m);
  if (w == Amount(1)) return spec;
  NetworkSpec out = spec;
  out.interbank_total = Amount(m).As(spec.numeric.backend);
  out.external_total = spec.external_total / w;
  for (Amount& weight : out.weights) weight = Amount(1).As(spec.numeric.backend);
  return out;
}

std::vector<NetworkSpec> WeaklyConnectedComponents(const NetworkSpec& spec) {
  const int n = spec.num_nodes();
  std::vector<NodeIndex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : spec.edges) {
    NodeIndex a = find(e.src), c = find(e.dst);
    if (a != c) parent[std::max(a, c)] = std::min(a, c);
  }

  std::vector<int> component_of(n, -1);
  std::vector<std::vector<NodeIndex>> members;
  for (NodeIndex v = 0; v < n; ++v) {
    const NodeIndex root = find(v);
    if (component_of[root] < 0) {
      component_of[root] = static_cast<int>(members.size());
      members.emplace_back();
    }
    component_of[v] = component_of[root];
    members[component_of[v]].push_back(v);
  }
  if (members.size() <= 1) return {spec};

  const Backend b = spec.numeric.backend;
  std::vector<NetworkSpec> out;
  for (size_t c = 0; c < members.size(); ++c) {
    std::vector<NodeIndex> local(n, -1);
    NetworkSpec part;
    part.mode = spec.mode;
    part.numeric = spec.numeric;
    part.gamma = spec.gamma;
    part.phi = spec.phi;
    Amount mass = Amount::Zero(b);
    for (NodeIndex v : members[c]) {
      local[v] = part.num_nodes();
      part.node_ids.push_back(spec.node_ids[v]);
      mass += spec.alpha[v];
    }
    Amount interbank = Amount::Zero(b);
    for (int k = 0; k < spec.num_edges(); ++k) {
      const Edge& e = spec.edges[k];
      if (component_of[e.src] != static_cast<int>(c)) continue;
      part.edges.push_back({local[e.src], local[e.dst]});
      part.weights.push_back(spec.weights[k]);
      interbank += spec.weights[k];
    }
    part.interbank_total = interbank;
    part.external_total = mass * spec.external_total;
    if (mass.ExactSign() > 0) {
      for (NodeIndex v : members[c]) part.alpha.push_back(spec.alpha[v] / mass);
    } else {
      part.alpha = Uniform(part.num_nodes(), Amount(1), b);
    }
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace fincontagion
