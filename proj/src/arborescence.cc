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

#include "fincontagion/arborescence.h"

#include <algorithm>

namespace fincontagion {

std::optional<Arborescence> Arborescence::Of(const NetworkSpec& spec) {
  const int n = spec.num_nodes();
  if (n == 0 || spec.num_edges() != n - 1) return std::nullopt;
  Topology topo(spec);
  Arborescence tree;
  tree.parent.assign(n, -1);
  tree.children.assign(n, {});
  tree.depth.assign(n, -1);
  int roots = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    const int out = topo.out_degree(v);
    if (out == 0) {
      tree.root = v;
      ++roots;
    } else if (out == 1) {
      tree.parent[v] = topo.borrowers(v)[0];
    } else {
      return std::nullopt;
    }
  }
  if (roots != 1) return std::nullopt;
  for (NodeIndex v = 0; v < n; ++v) {
    for (NodeIndex c : topo.lenders(v)) tree.children[v].push_back(c);
  }
  // Every node must reach the root; with n-1 edges this rules out cycles.
  tree.preorder.push_back(tree.root);
  tree.depth[tree.root] = 0;
  for (size_t head = 0; head < tree.preorder.size(); ++head) {
    const NodeIndex u = tree.preorder[head];
    for (NodeIndex c : tree.children[u]) {
      if (tree.depth[c] >= 0) return std::nullopt;
      tree.depth[c] = tree.depth[u] + 1;
      tree.preorder.push_back(c);
    }
  }
  if (static_cast<int>(tree.preorder.size()) != n) return std::nullopt;
  return tree;
}

std::vector<NodeIndex> Arborescence::PathToRoot(NodeIndex u) const {
  std::vector<NodeIndex> path;
  for (NodeIndex v = u; v >= 0; v = parent[v]) path.push_back(v);
  return path;
}

std::vector<NodeIndex> Arborescence::Subtree(NodeIndex u) const {
  std::vector<NodeIndex> out{u};
  for (size_t head = 0; head < out.size(); ++head) {
    for (NodeIndex c : children[out[head]]) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IsInArborescence(const NetworkSpec& spec) {
  return Arborescence::Of(spec).has_value();
}

bool EveryNodeFailsWhenShocked(const NetworkSpec& spec) {
  const auto sheets = DeriveBalanceSheets(spec);
  for (const BalanceSheet& s : sheets) {
    if (!Exceeds(spec.phi * s.external_asset, s.equity, spec.numeric)) {
      return false;
    }
  }
  return true;
}

std::vector<NodeIndex> InfluenceZone(const NetworkSpec& spec, NodeIndex u,
                                     int horizon) {
  auto tree = Arborescence::Of(spec);
  if (!tree) throw PreconditionError("influence zone needs an in-arborescence");
  const auto failed = Infl(spec, ShockSet({u}, spec.num_nodes()), horizon);
  std::vector<NodeIndex> zone;
  for (NodeIndex v : tree->Subtree(u)) {
    if (std::binary_search(failed.begin(), failed.end(), v)) zone.push_back(v);
  }
  return zone;
}

namespace {

Amount BoundFactor(const NetworkSpec& spec) {
  const int deg = Topology(spec).max_in_degree();
  return Amount(1) + Amount(deg) * (spec.phi / spec.gamma - Amount(1));
}

}  // namespace

Amount ArborescenceLowerBound(const NetworkSpec& spec) {
  return Amount(1) / BoundFactor(spec);
}

Amount DualArborescenceUpperBound(const NetworkSpec& spec, int kappa) {
  return Amount(kappa) / Amount(spec.num_nodes()) * BoundFactor(spec);
}

}  // namespace fincontagion
