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

#include "fincontagion/stability.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "fincontagion/arborescence.h"
#include "subsets.h"
#include "tree_model.h"

namespace fincontagion {

std::string_view StabMethodName(StabMethod method) {
  switch (method) {
    case StabMethod::kBruteForce:
      return "brute-force";
    case StabMethod::kGreedyT2:
      return "greedy-t2";
    case StabMethod::kDpArborescence:
      return "dp-arborescence";
  }
  return "unknown";
}

Amount StabilityResult::Value() const {
  if (!feasible) throw std::logic_error("infinite stability index");
  return Amount(mpq_class(static_cast<long>(shock_set.size()), num_nodes));
}

std::string StabilityResult::ValueString() const {
  return feasible ? Value().ToString() : "inf";
}

namespace {

bool KillsWithin(const CascadeEngine& engine,
                 const std::vector<NodeIndex>& shock, int horizon) {
  std::vector<char> mask(engine.num_nodes(), 0);
  for (NodeIndex v : shock) mask[v] = 1;
  return engine.CountFailed(mask, horizon) == engine.num_nodes();
}

StabilityResult Finish(const CascadeEngine& engine, StabMethod method,
                       int horizon, std::optional<std::vector<NodeIndex>> set) {
  StabilityResult result;
  result.method = method;
  result.num_nodes = engine.num_nodes();
  result.horizon = horizon;
  if (set) {
    std::sort(set->begin(), set->end());
    result.feasible = true;
    result.shock_set = std::move(*set);
    result.confirmed = KillsWithin(engine, result.shock_set, horizon);
  }
  return result;
}

}  // namespace

std::optional<Amount> Vi(const NetworkSpec& spec, const ShockSet& shock,
                         int horizon) {
  const auto trace = Propagate(spec, shock, horizon);
  if (!trace.dead) return std::nullopt;
  return Amount(mpq_class(shock.size(), spec.num_nodes()));
}

StabilityResult StabExactBruteforce(const NetworkSpec& spec, int horizon,
                                    int node_limit, int threads) {
  const int n = spec.num_nodes();
  if (n > node_limit) {
    throw PreconditionError("brute force limited to " +
                            std::to_string(node_limit) + " nodes, got " +
                            std::to_string(n));
  }
  if (horizon < 1) throw std::invalid_argument("horizon T must be at least 1");
  CascadeEngine engine(spec);
  const Topology& topo = engine.topology();
  std::vector<NodeIndex> mandatory, free;
  for (NodeIndex v = 0; v < n; ++v) {
    (topo.out_degree(v) == 0 ? mandatory : free).push_back(v);
  }
  const int lo = std::max<int>(1, static_cast<int>(mandatory.size()));
  for (int k = lo; k <= n; ++k) {
    const int extra = k - static_cast<int>(mandatory.size());
    auto best = FirstSubsetMatching(
        static_cast<int>(free.size()), extra, threads,
        [&](const std::vector<int>& pick, std::vector<char>& mask) {
          mask.assign(n, 0);
          for (NodeIndex v : mandatory) mask[v] = 1;
          for (int i : pick) mask[free[i]] = 1;
          return engine.CountFailed(mask, horizon) == n;
        });
    if (best) {
      std::vector<NodeIndex> set = mandatory;
      for (int i : *best) set.push_back(free[i]);
      return Finish(engine, StabMethod::kBruteForce, horizon, std::move(set));
    }
  }
  return Finish(engine, StabMethod::kBruteForce, horizon, std::nullopt);
}

Amount CoverInstance::Delta(NodeIndex v, NodeIndex u) const {
  for (const Entry& e : rows[v]) {
    if (e.u == u) return e.delta;
  }
  return Amount::Zero(numeric.backend);
}

Amount CoverInstance::Zeta() const {
  std::optional<Amount> zeta;
  auto take = [&](const Amount& x) {
    if (IsPositive(x, numeric) && (!zeta || x < *zeta)) zeta = x;
  };
  for (const auto& row : rows) {
    for (const Entry& e : row) take(e.delta);
  }
  for (const Amount& c : thresholds) take(c);
  return zeta.value_or(Amount(1));
}

double CoverInstance::RatioBound() const {
  const int n = static_cast<int>(rows.size());
  const Amount zeta = Zeta();
  double best = 0.0;
  for (const auto& row : rows) {
    Amount total = Amount::Zero(numeric.backend);
    for (const Entry& e : row) total += e.delta;
    best = std::max(best, (total / zeta).ToDouble());
  }
  double bound = 2.0 + std::log(static_cast<double>(std::max(n, 1)));
  if (best > 0.0) bound += std::log(best);
  return bound;
}

bool CoverInstance::Covers(const std::vector<NodeIndex>& chosen) const {
  std::vector<Amount> total(thresholds.size(),
                            Amount::Zero(numeric.backend));
  for (NodeIndex v : chosen) {
    for (const Entry& e : rows[v]) total[e.u] += e.delta;
  }
  for (size_t u = 0; u < thresholds.size(); ++u) {
    if (!Exceeds(total[u], thresholds[u], numeric)) return false;
  }
  return true;
}

CoverInstance BuildCoverInstance(const NetworkSpec& spec) {
  const int n = spec.num_nodes();
  const auto sheets = DeriveBalanceSheets(spec);
  Topology topo(spec);
  CoverInstance cover;
  cover.numeric = spec.numeric;
  cover.rows.resize(n);
  cover.thresholds.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) {
    const BalanceSheet& s = sheets[v];
    cover.thresholds.push_back(s.equity);
    const Amount shock = spec.phi * s.external_asset;
    if (IsPositive(shock, spec.numeric)) cover.rows[v].push_back({v, shock});
    if (!Exceeds(shock, s.equity, spec.numeric)) continue;
    const int din = topo.in_degree(v);
    if (din == 0) continue;
    const Amount delta =
        Min(shock - s.equity, s.interbank_borrowing) / Amount(din);
    if (!IsPositive(delta, spec.numeric)) continue;
    for (NodeIndex u : topo.lenders(v)) cover.rows[v].push_back({u, delta});
  }
  return cover;
}

StabilityResult StabGreedyT2(const NetworkSpec& spec) {
  constexpr int kHorizon = 2;
  CascadeEngine engine(spec);
  const CoverInstance cover = BuildCoverInstance(spec);
  const NumericPolicy& policy = cover.numeric;
  const int n = spec.num_nodes();
  std::vector<Amount> covered(n, Amount::Zero(policy.backend));
  std::vector<char> satisfied(n, 0), chosen(n, 0);
  int remaining = n;
  for (NodeIndex u = 0; u < n; ++u) {
    if (IsNegative(cover.thresholds[u], policy)) {
      satisfied[u] = 1;
      --remaining;
    }
  }
  std::vector<NodeIndex> picked;
  while (remaining > 0) {
    NodeIndex best = -1;
    Amount best_gain;
    int best_newly = 0;
    for (NodeIndex v = 0; v < n; ++v) {
      if (chosen[v] || cover.rows[v].empty()) continue;
      Amount gain = Amount::Zero(policy.backend);
      int newly = 0;
      for (const auto& e : cover.rows[v]) {
        if (satisfied[e.u]) continue;
        gain += Min(e.delta, cover.thresholds[e.u] - covered[e.u]);
        newly += Exceeds(covered[e.u] + e.delta, cover.thresholds[e.u], policy);
      }
      const bool useful = IsPositive(gain, policy) || newly > 0;
      if (!useful) continue;
      if (best < 0 || gain > best_gain ||
          (gain == best_gain && newly > best_newly)) {
        best = v;
        best_gain = gain;
        best_newly = newly;
      }
    }
    if (best < 0) {
      return Finish(engine, StabMethod::kGreedyT2, kHorizon, std::nullopt);
    }
    chosen[best] = 1;
    picked.push_back(best);
    for (const auto& e : cover.rows[best]) {
      if (satisfied[e.u]) continue;
      covered[e.u] += e.delta;
      if (Exceeds(covered[e.u], cover.thresholds[e.u], policy)) {
        satisfied[e.u] = 1;
        --remaining;
      }
    }
  }
  return Finish(engine, StabMethod::kGreedyT2, kHorizon, std::move(picked));
}

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

// Exact DP. For an unshocked node the only incoming loss comes from its
// parent, once; the context (loss, step) determines whether it fails and how
// much it forwards, given how many of its own children were shocked.
class ContextDp {
 public:
  ContextDp(const NetworkSpec& spec, int horizon) : m_(spec, horizon) {
    shocked_.assign(spec.num_nodes(), kUnset);
    shocked_choice_.resize(spec.num_nodes());
    unshocked_.resize(spec.num_nodes());
  }

  std::optional<std::vector<NodeIndex>> Solve() {
    const NodeIndex root = m_.tree.root;
    if (Shocked(root) >= kInf) return std::nullopt;
    std::vector<NodeIndex> out;
    CollectShocked(root, out);
    return out;
  }

  const TreeModel& model() const { return m_; }

 private:
  static constexpr long kUnset = -1;

  struct Choice {
    long cost = kInf;
    std::vector<char> shock_child;
  };
  using Key = std::pair<Amount, int>;

  long Shocked(NodeIndex u) {
    if (shocked_[u] != kUnset) return shocked_[u];
    const auto& kids = m_.tree.children[u];
    long total = 1;
    std::vector<char> pick(kids.size(), 0);
    for (size_t i = 0; i < kids.size(); ++i) {
      const long as_shocked = Shocked(kids[i]);
      const long as_fed = Unshocked(kids[i], m_.shock_out[u], 1).cost;
      pick[i] = as_shocked < as_fed;
      total = std::min(kInf, total + std::min(as_shocked, as_fed));
    }
    shocked_choice_[u] = std::move(pick);
    return shocked_[u] = total;
  }

  // u is not shocked and loses `loss` at step t+1 (its parent failed at t).
  const Choice& Unshocked(NodeIndex u, const Amount& loss, int t) {
    auto& memo = unshocked_[u];
    Key key{loss, t};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Choice choice;
    const Amount after = m_.equity(u) - loss;
    if (t + 1 <= m_.limit && IsNegative(after, m_.policy)) {
      const auto& kids = m_.tree.children[u];
      const int din = static_cast<int>(kids.size());
      if (din == 0) {
        choice.cost = 0;
      } else {
        const Amount deficit = Min(-after, m_.borrowing(u));
        std::vector<long> shocked_cost(din);
        for (int i = 0; i < din; ++i) shocked_cost[i] = Shocked(kids[i]);
        for (int s = 0; s <= din; ++s) {
          std::vector<long> fed_cost(din, kInf);
          if (s < din) {
            const Amount share = deficit / Amount(din - s);
            for (int i = 0; i < din; ++i) {
              fed_cost[i] = Unshocked(kids[i], share, t + 1).cost;
            }
          }
          auto [cost, pick] = BestWithShocked(shocked_cost, fed_cost, s);
          if (cost < choice.cost) {
            choice.cost = cost;
            choice.shock_child = std::move(pick);
          }
        }
      }
    }
    return memo.emplace(std::move(key), std::move(choice)).first->second;
  }

  // Cheapest assignment with exactly s shocked children.
  static std::pair<long, std::vector<char>> BestWithShocked(
      const std::vector<long>& shocked, const std::vector<long>& fed, int s) {
    const int din = static_cast<int>(shocked.size());
    std::vector<int> order(din);
    std::iota(order.begin(), order.end(), 0);
    auto extra = [&](int i) {
      if (fed[i] >= kInf) return -kInf;  // must be shocked
      return shocked[i] - fed[i];
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return extra(a) < extra(b); });
    std::vector<char> pick(din, 0);
    long cost = 0;
    for (int j = 0; j < din; ++j) {
      const int i = order[j];
      const long c = j < s ? shocked[i] : fed[i];
      pick[i] = j < s;
      if (c >= kInf) return {kInf, {}};
      cost += c;
    }
    return {std::min(cost, kInf), pick};
  }

  void CollectShocked(NodeIndex u, std::vector<NodeIndex>& out) {
    out.push_back(u);
    const auto& kids = m_.tree.children[u];
    const auto& pick = shocked_choice_[u];
    for (size_t i = 0; i < kids.size(); ++i) {
      if (pick[i]) {
        CollectShocked(kids[i], out);
      } else {
        CollectFed(kids[i], m_.shock_out[u], 1, out);
      }
    }
  }

  void CollectFed(NodeIndex u, const Amount& loss, int t,
                  std::vector<NodeIndex>& out) {
    const Choice& choice = Unshocked(u, loss, t);
    const auto& kids = m_.tree.children[u];
    if (kids.empty()) return;
    int s = 0;
    for (char c : choice.shock_child) s += c;
    const int din = static_cast<int>(kids.size());
    const Amount after = m_.equity(u) - loss;
    const Amount share =
        s < din ? Min(-after, m_.borrowing(u)) / Amount(din - s) : Amount(0);
    for (int i = 0; i < din; ++i) {
      if (choice.shock_child[i]) {
        CollectShocked(kids[i], out);
      } else {
        CollectFed(kids[i], share, t + 1, out);
      }
    }
  }

  TreeModel m_;
  std::vector<long> shocked_;
  std::vector<std::vector<char>> shocked_choice_;
  std::vector<std::map<Key, Choice>> unshocked_;
};

}  // namespace

StabilityResult StabExactInArborescence(const NetworkSpec& spec, int horizon) {
  ContextDp dp(spec, horizon);
  auto set = dp.Solve();
  StabilityResult result = Finish(dp.model().engine, StabMethod::kDpArborescence,
                                  horizon, std::move(set));
  result.lower_bound = ArborescenceLowerBound(spec);
  return result;
}

StabilityResult StabInfluenceZoneDp(const NetworkSpec& spec, int horizon) {
  TreeModel m(spec, horizon);
  const int n = spec.num_nodes();
  const Arborescence& tree = m.tree;
  // in_zone[a][u]: u fails when only a is shocked (u in the subtree of a).
  std::vector<std::vector<char>> in_zone(n, std::vector<char>(n, 0));
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex u : InfluenceZone(spec, a, horizon)) in_zone[a][u] = 1;
  }
  std::vector<long> ss(n, kInf);
  // sns[u][a] for proper ancestors a of u.
  std::vector<std::vector<long>> sns(n, std::vector<long>(n, kInf));
  for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
    const NodeIndex u = *it;
    const auto& kids = tree.children[u];
    long total = 1;
    for (NodeIndex v : kids) total = std::min(kInf, total + std::min(ss[v], sns[v][u]));
    ss[u] = total;
    for (NodeIndex a = tree.parent[u]; a >= 0; a = tree.parent[a]) {
      if (!in_zone[a][u]) continue;
      long sum = 0;
      for (NodeIndex v : kids) sum = std::min(kInf, sum + std::min(ss[v], sns[v][a]));
      sns[u][a] = sum;
    }
  }
  std::optional<std::vector<NodeIndex>> set;
  if (ss[tree.root] < kInf) {
    set.emplace();
    // (node, nearest shocked ancestor or -1 when the node itself is shocked)
    std::vector<std::pair<NodeIndex, NodeIndex>> stack{{tree.root, -1}};
    while (!stack.empty()) {
      auto [u, a] = stack.back();
      stack.pop_back();
      const NodeIndex anchor = a < 0 ? u : a;
      if (a < 0) set->push_back(u);
      for (NodeIndex v : tree.children[u]) {
        const bool fed = sns[v][anchor] <= ss[v];
        stack.push_back({v, fed ? anchor : -1});
      }
    }
  }
  StabilityResult result =
      Finish(m.engine, StabMethod::kDpArborescence, horizon, std::move(set));
  result.lower_bound = ArborescenceLowerBound(spec);
  return result;
}

}  // namespace fincontagion
