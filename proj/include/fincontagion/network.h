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

// Banking network model. A network is a directed graph whose edge (u, v)
// means bank u lends to bank v, together with the global parameters
//   gamma  equity-to-asset ratio, 0 < gamma < phi
//   phi    shock severity, phi <= 1
//   E      total external assets, I total interbank exposure
// and per-edge weights w(e) (summing to I) and per-node external shares
// alpha_v (summing to 1). In a homogeneous network w(e) = I/m and
// alpha_v = 1/n.

#ifndef FINCONTAGION_NETWORK_H_
#define FINCONTAGION_NETWORK_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincontagion/amount.h"
#include "fincontagion/errors.h"

namespace fincontagion {

using NodeIndex = int32_t;

enum class Mode { kHomogeneous, kHeterogeneous };

std::string_view ModeName(Mode mode);

struct Edge {
  NodeIndex src;  // lender
  NodeIndex dst;  // borrower
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct NetworkSpec {
  Mode mode = Mode::kHomogeneous;
  Amount gamma;
  Amount phi;
  Amount external_total;
  Amount interbank_total;
  std::vector<std::string> node_ids;
  std::vector<Edge> edges;
  std::vector<Amount> weights;  // parallel to `edges`
  std::vector<Amount> alpha;    // parallel to `node_ids`
  NumericPolicy numeric;

  int num_nodes() const { return static_cast<int>(node_ids.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  // Linear scan; use NodeLookup for repeated queries.
  std::optional<NodeIndex> Find(std::string_view id) const;
  NodeIndex IndexOf(std::string_view id) const;  // throws UnknownNodeError

  friend bool operator==(const NetworkSpec& a, const NetworkSpec& b);
};

// Homogeneous network from string ids and (lender, borrower) id pairs.
// Weights are I/m and shares 1/n. Throws UnknownNodeError on a dangling id.
NetworkSpec MakeHomogeneous(
    std::vector<std::string> ids,
    const std::vector<std::pair<std::string, std::string>>& edges,
    Amount gamma, Amount phi, Amount external_total, Amount interbank_total,
    NumericPolicy numeric = {});

// Same, over integer node indices named "v0".."v{n-1}" unless ids given.
NetworkSpec MakeHomogeneous(int n, const std::vector<Edge>& edges, Amount gamma,
                            Amount phi, Amount external_total,
                            Amount interbank_total,
                            std::vector<std::string> ids = {},
                            NumericPolicy numeric = {});

// Heterogeneous network; I is taken as the weight sum.
NetworkSpec MakeHeterogeneous(std::vector<std::string> ids,
                              const std::vector<Edge>& edges,
                              std::vector<Amount> weights,
                              std::vector<Amount> alpha, Amount gamma,
                              Amount phi, Amount external_total,
                              NumericPolicy numeric = {});

// Re-expresses every amount of the network in the given backend.
NetworkSpec WithBackend(const NetworkSpec& spec, NumericPolicy numeric);

// Returns every violated invariant; empty means valid.
std::vector<Violation> Validate(const NetworkSpec& spec);
void ValidateOrThrow(const NetworkSpec& spec);

// In/out adjacency of a network, by node index.
class Topology {
 public:
  explicit Topology(const NetworkSpec& spec);

  int num_nodes() const { return static_cast<int>(lenders_.size()); }
  // Creditors of v: nodes u with an edge (u, v).
  std::span<const NodeIndex> lenders(NodeIndex v) const { return lenders_[v]; }
  // Borrowers of u: nodes v with an edge (u, v).
  std::span<const NodeIndex> borrowers(NodeIndex u) const {
    return borrowers_[u];
  }
  int in_degree(NodeIndex v) const { return static_cast<int>(lenders_[v].size()); }
  int out_degree(NodeIndex v) const {
    return static_cast<int>(borrowers_[v].size());
  }
  int max_in_degree() const;
  bool HasEdge(NodeIndex src, NodeIndex dst) const;

  // Topological order (lenders before borrowers) or nullopt on a cycle.
  std::optional<std::vector<NodeIndex>> TopologicalOrder() const;

 private:
  std::vector<std::vector<NodeIndex>> lenders_;
  std::vector<std::vector<NodeIndex>> borrowers_;
};

struct BalanceSheet {
  Amount interbank_asset;      // iota_v
  Amount interbank_borrowing;  // b_v
  Amount external_asset;       // e_v
  Amount total_asset;          // a_v
  Amount equity;               // c_v
};

std::vector<BalanceSheet> DeriveBalanceSheets(const NetworkSpec& spec);

// Rescales a homogeneous network so every edge has weight 1 (I, E and
// therefore every balance-sheet amount divided by w = I/m). Cascade outcomes
// are unchanged. Networks that already have w = 1, or no edges, are returned
// as is. Throws PreconditionError on heterogeneous input.
NetworkSpec NormalizeHomogeneous(const NetworkSpec& spec);

// Splits the network into weakly connected components, in order of each
// component's smallest node index. Each component keeps its induced edges,
// receives E scaled by its alpha mass and renormalized alpha, and inherits
// gamma and phi.
std::vector<NetworkSpec> WeaklyConnectedComponents(const NetworkSpec& spec);

}  // namespace fincontagion

#endif  // FINCONTAGION_NETWORK_H_
