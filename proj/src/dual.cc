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

#include "fincontagion/dual.h"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "subsets.h"
#include "tree_model.h"

namespace fincontagion {

std::string_view DualMethodName(DualMethod method) {
  switch (method) {
    case DualMethod::kBruteForce:
      return "brute-force";
    case DualMethod::kGreedy:
      return "greedy";
    case DualMethod::kDpArborescence:
      return "dp-arborescence";
  }
  return "unknown";
}

Amount DualResult::Value() const {
  return Amount(mpq_class(static_cast<long>(failed.size()), kappa));
}

namespace {

void CheckKappa(int n, int kappa) {
  if (kappa < 1 || kappa > n) {
    throw PreconditionError("kappa must be in [1, " + std::to_string(n) +
                            "], got " + std::to_string(kappa));
  }
}

DualResult Finish(const CascadeEngine& engine, DualMethod method, int horizon,
                  int kappa, std::vector<NodeIndex> set, int claimed) {
  std::sort(set.begin(), set.end());
  DualResult result;
  result.method = method;
  result.kappa = kappa;
  result.num_nodes = engine.num_nodes();
  result.horizon = horizon;
  std::vector<char> mask(engine.num_nodes(), 0);
  for (NodeIndex v : set) mask[v] = 1;
  const auto steps = engine.FailureSteps(mask, horizon);
  for (NodeIndex v = 0; v < engine.num_nodes(); ++v) {
    if (steps[v] > 0) result.failed.push_back(v);
  }
  result.shock_set = std::move(set);
  result.claimed_failures = claimed;
  result.confirmed = static_cast<int>(result.shock_set.size()) == kappa &&
                     static_cast<int>(result.failed.size()) == claimed;
  return result;
}

}  // namespace

DualResult DualExactBruteforce(const NetworkSpec& spec, int horizon, int kappa,
                               int node_limit, int threads) {
  const int n = spec.num_nodes();
  if (n > node_limit) {
    throw PreconditionError("brute force limited to " +
                            std::to_string(node_limit) + " nodes, got " +
                            std::to_string(n));
  }
  CheckKappa(n, kappa);
  if (horizon < 1) throw std::invalid_argument("horizon T must be at least 1");
  CascadeEngine engine(spec);
  auto count = [&](const std::vector<int>& pick, std::vector<char>& mask) {
    mask.assign(n, 0);
    for (int v : pick) mask[v] = 1;
    return engine.CountFailed(mask, horizon);
  };

  int best = -1;
  std::vector<int> best_pick;
  if (threads <= 1) {
    std::vector<char> mask;
    ForEachSubset(n, kappa, [&](const std::vector<int>& pick) {
      const int c = count(pick, mask);
      if (c > best) {
        best = c;
        best_pick = pick;
      }
    });
  } else {
    std::vector<std::vector<int>> all;
    ForEachSubset(n, kappa, [&](const std::vector<int>& p) { all.push_back(p); });
    std::vector<std::pair<int, long>> local(threads, {-1, 0});
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        std::vector<char> mask;
        for (long i = t; i < static_cast<long>(all.size()); i += threads) {
          const int c = count(all[i], mask);
          if (c > local[t].first) local[t] = {c, i};
        }
      });
    }
    for (auto& th : pool) th.join();
    long index = -1;
    for (const auto& [c, i] : local) {
      if (c > best || (c == best && i < index)) {
        best = c;
        index = i;
      }
    }
    best_pick = all[index];
  }
  return Finish(engine, DualMethod::kBruteForce, horizon, kappa,
                std::vector<NodeIndex>(best_pick.begin(), best_pick.end()),
                best);
}

DualResult DualGreedy(const NetworkSpec& spec, int horizon, int kappa) {
  const int n = spec.num_nodes();
  CheckKappa(n, kappa);
  CascadeEngine engine(spec);
  std::vector<char> mask(n, 0);
  std::vector<NodeIndex> set;
  int current = 0;
  for (int round = 0; round < kappa; ++round) {
    NodeIndex best = -1;
    int best_count = -1;
    for (NodeIndex v = 0; v < n; ++v) {
      if (mask[v]) continue;
      mask[v] = 1;
      const int c = engine.CountFailed(mask, horizon);
      mask[v] = 0;
      if (c > best_count) {
        best = v;
        best_count = c;
      }
    }
    mask[best] = 1;
    set.push_back(best);
    current = best_count;
  }
  return Finish(engine, DualMethod::kGreedy, horizon, kappa, std::move(set),
                current);
}

namespace {

constexpr long kNegInf = std::numeric_limits<long>::min() / 4;

// table[k] = most failures in a subtree with exactly k shocked nodes.
using Table = std::vector<long>;

long Add(long a, long b) {
  return (a <= kNegInf || b <= kNegInf) ? kNegInf : a + b;
}

// Exact DP for the dual objective. Same context idea as the stability DP:
// an unshocked node is described by the loss it receives and when.
class DualContextDp {
 public:
  DualContextDp(const NetworkSpec& spec, int horizon, int kappa)
      : m_(spec, horizon), kappa_(kappa) {
    const int n = spec.num_nodes();
    size_.assign(n, 1);
    for (auto it = m_.tree.preorder.rbegin(); it != m_.tree.preorder.rend();
         ++it) {
      if (m_.tree.parent[*it] >= 0) size_[m_.tree.parent[*it]] += size_[*it];
    }
    shocked_.resize(n);
    fed_.resize(n);
  }

  const TreeModel& model() const { return m_; }

  // Best count and the chosen shock set.
  std::pair<long, std::vector<NodeIndex>> Solve() {
    const NodeIndex root = m_.tree.root;
    const Amount none = Amount::Zero(m_.policy.backend);
    const long as_shocked = At(Shocked(root), kappa_);
    const long as_quiet = At(Fed(root, none, 0), kappa_);
    std::vector<NodeIndex> out;
    if (as_shocked <= kNegInf && as_quiet <= kNegInf) return {kNegInf, out};
    if (as_shocked >= as_quiet) {
      CollectShocked(root, kappa_, out);
      return {as_shocked, out};
    }
    CollectFed(root, none, 0, kappa_, out);
    return {as_quiet, out};
  }

 private:
  using Key = std::pair<Amount, int>;

  static long At(const Table& t, int k) {
    return k < static_cast<int>(t.size()) ? t[k] : kNegInf;
  }

  int Cap(NodeIndex u) const { return std::min(size_[u], kappa_); }

  const Table& Shocked(NodeIndex u) {
    Table& memo = shocked_[u];
    if (!memo.empty()) return memo;
    const Table children = Combine(u, m_.shock_out[u], 1, -1);
    Table out(Cap(u) + 1, kNegInf);
    for (int k = 1; k <= Cap(u); ++k) out[k] = Add(1, At(children, k - 1));
    return memo = std::move(out);
  }

  bool Fails(NodeIndex u, const Amount& loss, int t) const {
    return t >= 1 && t + 1 <= m_.limit &&
           IsNegative(m_.equity(u) - loss, m_.policy);
  }

  Amount Share(NodeIndex u, const Amount& loss, int s) const {
    const int din = static_cast<int>(m_.tree.children[u].size());
    if (s >= din) return Amount::Zero(m_.policy.backend);
    return Min(loss - m_.equity(u), m_.borrowing(u)) / Amount(din - s);
  }

  // u unshocked, losing `loss` at step t + 1 (t = 0: nothing arrives).
  const Table& Fed(NodeIndex u, const Amount& loss, int t) {
    auto& memo = fed_[u];
    Key key{loss, t};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Table out(Cap(u) + 1, kNegInf);
    if (!Fails(u, loss, t)) {
      const Table children =
          Combine(u, Amount::Zero(m_.policy.backend), 0, -1);
      for (int k = 0; k <= Cap(u); ++k) out[k] = At(children, k);
    } else {
      const int din = static_cast<int>(m_.tree.children[u].size());
      for (int s = 0; s <= din; ++s) {
        const Table children = Combine(u, Share(u, loss, s), t + 1, s);
        for (int k = 0; k <= Cap(u); ++k) {
          out[k] = std::max(out[k], Add(1, At(children, k)));
        }
      }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  }

  // Knapsack over the children of u. Unshocked children receive `loss` at
  // step t + 1. With s >= 0 exactly s children are shocked.
  // layers[i][j][k]: first i children, j shocked among them, k shocks total.
  using Layers = std::vector<std::vector<Table>>;

  Layers Knapsack(NodeIndex u, const Amount& loss, int t, int s) {
    const auto& kids = m_.tree.children[u];
    const int din = static_cast<int>(kids.size());
    const int js = s < 0 ? 1 : s + 1;
    const int cap = std::min(size_[u] - 1, kappa_);
    Layers layers(din + 1, std::vector<Table>(js, Table(cap + 1, kNegInf)));
    layers[0][0][0] = 0;
    for (int i = 0; i < din; ++i) {
      const Table& as_shocked = Shocked(kids[i]);
      const Table& as_fed = Fed(kids[i], loss, t);
      for (int j = 0; j < js; ++j) {
        for (int k = 0; k <= cap; ++k) {
          const long base = layers[i][j][k];
          if (base <= kNegInf) continue;
          for (int ki = 0; k + ki <= cap; ++ki) {
            const long f = At(as_fed, ki);
            if (f > kNegInf) {
              long& slot = layers[i + 1][j][k + ki];
              slot = std::max(slot, base + f);
            }
            const long g = At(as_shocked, ki);
            const int nj = s < 0 ? 0 : j + 1;
            if (g > kNegInf && nj < js) {
              long& slot = layers[i + 1][nj][k + ki];
              slot = std::max(slot, base + g);
            }
          }
        }
      }
    }
    return layers;
  }

  Table Combine(NodeIndex u, const Amount& loss, int t, int s) {
    Layers layers = Knapsack(u, loss, t, s);
    return std::move(layers.back()[s < 0 ? 0 : s]);
  }

  // Walks the knapsack backwards for a target k, descending into children.
  void CollectChildren(NodeIndex u, const Amount& loss, int t, int s, int k,
                       std::vector<NodeIndex>& out) {
    const auto& kids = m_.tree.children[u];
    Layers layers = Knapsack(u, loss, t, s);
    int j = s < 0 ? 0 : s;
    for (int i = static_cast<int>(kids.size()); i > 0; --i) {
      const long target = layers[i][j][k];
      const Table& as_shocked = Shocked(kids[i - 1]);
      const Table& as_fed = Fed(kids[i - 1], loss, t);
      bool done = false;
      for (int ki = 0; ki <= k && !done; ++ki) {
        const long base_fed = layers[i - 1][j][k - ki];
        if (Add(base_fed, At(as_fed, ki)) == target && target > kNegInf) {
          CollectFed(kids[i - 1], loss, t, ki, out);
          k -= ki;
          done = true;
          break;
        }
        const int pj = s < 0 ? 0 : j - 1;
        if (pj < 0) continue;
        const long base_shock = layers[i - 1][pj][k - ki];
        if (Add(base_shock, At(as_shocked, ki)) == target) {
          CollectShocked(kids[i - 1], ki, out);
          k -= ki;
          j = pj;
          done = true;
        }
      }
    }
  }

  void CollectShocked(NodeIndex u, int k, std::vector<NodeIndex>& out) {
    out.push_back(u);
    CollectChildren(u, m_.shock_out[u], 1, -1, k - 1, out);
  }

  void CollectFed(NodeIndex u, const Amount& loss, int t, int k,
                  std::vector<NodeIndex>& out) {
    if (!Fails(u, loss, t)) {
      CollectChildren(u, Amount::Zero(m_.policy.backend), 0, -1, k, out);
      return;
    }
    const long target = At(Fed(u, loss, t), k);
    const int din = static_cast<int>(m_.tree.children[u].size());
    for (int s = 0; s <= din; ++s) {
      const Amount share = Share(u, loss, s);
      if (Add(1, At(Combine(u, share, t + 1, s), k)) == target) {
        CollectChildren(u, share, t + 1, s, k, out);
        return;
      }
    }
  }

  TreeModel m_;
  int kappa_;
  std::vector<int> size_;
  std::vector<Table> shocked_;
  std::vector<std::map<Key, Table>> fed_;
};

}  // namespace

DualResult DualExactInArborescence(const NetworkSpec& spec, int horizon,
                                   int kappa) {
  CheckKappa(spec.num_nodes(), kappa);
  DualContextDp dp(spec, horizon, kappa);
  auto [best, set] = dp.Solve();
  if (best <= kNegInf) throw std::logic_error("no shock set of size kappa");
  return Finish(dp.model().engine, DualMethod::kDpArborescence, horizon, kappa,
                std::move(set), static_cast<int>(best));
}

}  // namespace fincontagion
