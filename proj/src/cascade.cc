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

#include "fincontagion/cascade.h"

#include <algorithm>
#include <stdexcept>

namespace fincontagion {

ShockSet::ShockSet(std::vector<NodeIndex> nodes, int n) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  if (nodes_.empty()) throw std::invalid_argument("shock set must be non-empty");
  if (nodes_.front() < 0 || nodes_.back() >= n) {
    throw std::invalid_argument("shock set node out of range");
  }
}

ShockSet ShockSet::FromIds(const NetworkSpec& spec,
                           const std::vector<std::string>& ids) {
  std::vector<NodeIndex> nodes;
  nodes.reserve(ids.size());
  for (const std::string& id : ids) nodes.push_back(spec.IndexOf(id));
  return ShockSet(std::move(nodes), spec.num_nodes());
}

ShockSet ShockSet::All(int n) {
  std::vector<NodeIndex> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = i;
  return ShockSet(std::move(nodes), n);
}

bool ShockSet::Contains(NodeIndex v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

std::vector<NodeIndex> CascadeTrace::Failed() const {
  std::vector<NodeIndex> out;
  for (NodeIndex v = 0; v < static_cast<NodeIndex>(failure_step.size()); ++v) {
    if (failure_step[v] > 0) out.push_back(v);
  }
  return out;
}

int CascadeTrace::LastFailureStep() const {
  int last = 0;
  for (int s : failure_step) last = std::max(last, s);
  return last;
}

int HorizonBound(const Topology& topology) {
  const int n = topology.num_nodes();
  auto order = topology.TopologicalOrder();
  if (!order) return std::max(0, n - 1);
  std::vector<int> longest(n, 0);  // longest path ending at v
  int best = 0;
  for (NodeIndex u : *order) {
    for (NodeIndex v : topology.borrowers(u)) {
      longest[v] = std::max(longest[v], longest[u] + 1);
      best = std::max(best, longest[v]);
    }
  }
  return best;
}

int HorizonBound(const NetworkSpec& spec) { return HorizonBound(Topology(spec)); }

CascadeEngine::CascadeEngine(const NetworkSpec& spec)
    : spec_(spec),
      topology_(spec),
      sheets_(DeriveBalanceSheets(spec)),
      horizon_bound_(HorizonBound(topology_)) {}

template <bool kRecord>
void CascadeEngine::Simulate(const std::vector<char>& shocked, int horizon,
                             std::vector<int>& failure_step,
                             std::vector<CascadeStep>* steps) const {
  if (horizon < 1) throw std::invalid_argument("horizon T must be at least 1");
  const int n = num_nodes();
  const NumericPolicy& policy = spec_.numeric;
  const int limit = std::min<long>(horizon, static_cast<long>(horizon_bound_) + 1);

  std::vector<Amount> equity(n);
  for (NodeIndex v = 0; v < n; ++v) {
    equity[v] = sheets_[v].equity;
    if (shocked[v]) equity[v] -= spec_.phi * sheets_[v].external_asset;
  }
  failure_step.assign(n, 0);
  std::vector<char> alive(n, 1);
  int alive_count = n;
  std::vector<NodeIndex> failing;

  for (int t = 1; t <= limit && alive_count > 0; ++t) {
    failing.clear();
    for (NodeIndex v = 0; v < n; ++v) {
      if (alive[v] && IsNegative(equity[v], policy)) failing.push_back(v);
    }
    CascadeStep* step = nullptr;
    if constexpr (kRecord) {
      steps->push_back({t, failing, equity, {}});
      step = &steps->back();
    }
    if (failing.empty()) break;

    // Two-buffer update: every loss reads c(t), writes c(t+1).
    std::vector<Amount> next = equity;
    for (NodeIndex v : failing) {
      int recipients = 0;
      for (NodeIndex u : topology_.lenders(v)) recipients += alive[u];
      if (recipients == 0) continue;
      const Amount loss =
          Min(-equity[v], sheets_[v].interbank_borrowing) / Amount(recipients);
      for (NodeIndex u : topology_.lenders(v)) {
        if (alive[u]) next[u] -= loss;
      }
      if constexpr (kRecord) step->transmissions.push_back({v, loss, recipients});
    }
    for (NodeIndex v : failing) {
      alive[v] = 0;
      failure_step[v] = t;
    }
    alive_count -= static_cast<int>(failing.size());
    equity = std::move(next);
  }
}

CascadeTrace CascadeEngine::Run(const ShockSet& shock, int horizon) const {
  std::vector<char> mask(num_nodes(), 0);
  for (NodeIndex v : shock.nodes()) {
    if (v < 0 || v >= num_nodes()) throw std::invalid_argument("shock node out of range");
    mask[v] = 1;
  }
  CascadeTrace trace;
  trace.horizon = horizon;
  trace.effective_horizon =
      std::min<long>(horizon, static_cast<long>(horizon_bound_) + 1);
  Simulate<true>(mask, horizon, trace.failure_step, &trace.steps);
  for (NodeIndex v = 0; v < num_nodes(); ++v) {
    if (trace.failure_step[v] == 0) trace.survivors.push_back(v);
  }
  trace.dead = trace.survivors.empty();
  return trace;
}

std::vector<int> CascadeEngine::FailureSteps(const std::vector<char>& shocked,
                                             int horizon) const {
  std::vector<int> failure_step;
  Simulate<false>(shocked, horizon, failure_step, nullptr);
  return failure_step;
}

int CascadeEngine::CountFailed(const std::vector<char>& shocked,
                               int horizon) const {
  const auto steps = FailureSteps(shocked, horizon);
  return static_cast<int>(std::count_if(steps.begin(), steps.end(),
                                        [](int s) { return s > 0; }));
}

CascadeTrace Propagate(const NetworkSpec& spec, const ShockSet& shock,
                       int horizon) {
  return CascadeEngine(spec).Run(shock, horizon);
}

std::vector<NodeIndex> Infl(const NetworkSpec& spec, const ShockSet& shock,
                            int horizon) {
  return Propagate(spec, shock, horizon).Failed();
}

}  // namespace fincontagion
