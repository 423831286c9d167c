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

#include "fincontagion/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace fincontagion {

namespace {

// Portable draws: std distributions differ between standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t Below(uint64_t bound) { return engine_() % bound; }
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool Chance(double p) { return p >= 1.0 || Unit() < p; }
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

class Checker {
 public:
  void Expect(std::string name, std::string statement, bool holds) {
    checks_.push_back({std::move(name), std::move(statement), holds});
    if (!holds && failed_.empty()) failed_ = checks_.back().name;
  }
  std::vector<InequalityCheck> Finish(const std::string& kind) {
    if (!failed_.empty()) {
      throw GeneratorError(kind + ": parameter inequality '" + failed_ +
                           "' does not hold");
    }
    return std::move(checks_);
  }

 private:
  std::vector<InequalityCheck> checks_;
  std::string failed_;
};

void CheckSimpleGraph(const UndirectedGraph& g, const std::string& kind) {
  if (g.n < 1) throw GeneratorError(kind + ": graph has no vertices");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.n || b >= g.n) {
      throw GeneratorError(kind + ": edge endpoint out of range");
    }
    if (a == b) throw GeneratorError(kind + ": self-loop in source graph");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw GeneratorError(kind + ": repeated edge in source graph");
    }
  }
}

std::vector<int> Degrees(const UndirectedGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

void CheckSetSystem(const SetSystem& s, const std::string& kind) {
  if (s.universe < 1) throw GeneratorError(kind + ": empty universe");
  if (s.sets.empty()) throw GeneratorError(kind + ": no sets");
  for (const auto& set : s.sets) {
    if (set.empty()) throw GeneratorError(kind + ": empty set in family");
    std::set<int> uniq(set.begin(), set.end());
    if (uniq.size() != set.size()) {
      throw GeneratorError(kind + ": repeated element inside a set");
    }
    for (int u : set) {
      if (u < 0 || u >= s.universe) {
        throw GeneratorError(kind + ": element out of range");
      }
    }
  }
}

std::vector<int> Membership(const SetSystem& s) {
  std::vector<int> count(s.universe, 0);
  for (const auto& set : s.sets) {
    for (int u : set) ++count[u];
  }
  return count;
}

std::string Id(const std::string& prefix, int i) {
  return prefix + std::to_string(i);
}

}  // namespace

GeneratedInstance GenFromDominatingSet(const UndirectedGraph& graph) {
  const std::string kind = "dominating-set";
  CheckSimpleGraph(graph, kind);
  const auto deg = Degrees(graph);
  for (int v = 0; v < graph.n; ++v) {
    if (deg[v] == 0) throw GeneratorError(kind + ": isolated vertex " + Id("v", v));
  }
  const int n = graph.n;
  std::vector<Edge> edges;
  for (auto [a, b] : graph.edges) {
    edges.push_back({a, b});
    edges.push_back({b, a});
  }
  std::vector<std::string> ids;
  for (int v = 0; v < n; ++v) ids.push_back(Id("v", v));
  // n^-2 leaves gamma*a_v >= 1 on graphs with at most three vertices.
  const Amount gamma =
      Amount(mpq_class(1, std::max<long>(static_cast<long>(n) * n, n + 10)));
  const Amount phi(1), external(10 * n);
  GeneratedInstance out;
  out.kind = kind;
  out.spec = MakeHomogeneous(n, edges, gamma, phi, external,
                             Amount(static_cast<int>(edges.size())), ids);
  out.source = graph;
  for (int v = 0; v < n; ++v) out.correspondence["vertex"].push_back(v);
  out.predicate =
      "V' is a dominating set of the source graph iff shocking V' kills the "
      "network by T = 2";

  const auto sheets = DeriveBalanceSheets(out.spec);
  Checker check;
  for (int v = 0; v < n; ++v) {
    const Amount shock = phi * sheets[v].external_asset;
    check.Expect("shocked-fails:" + ids[v], "phi*e_v > gamma*a_v",
                 shock > sheets[v].equity);
  }
  for (const Edge& e : edges) {
    const BalanceSheet& u = sheets[e.dst];
    const int din = deg[e.dst];
    const Amount share =
        Min(phi * u.external_asset - u.equity, u.interbank_borrowing) /
        Amount(din);
    check.Expect("neighbor-fails:" + ids[e.src] + "<-" + ids[e.dst],
                 "min{phi*e_u - c_u, b_u}/din(u) > gamma*a_v",
                 share > sheets[e.src].equity);
  }
  out.checks = check.Finish(kind);
  ValidateOrThrow(out.spec);
  return out;
}

GeneratedInstance GenFromNodeCover3Regular(const UndirectedGraph& graph) {
  const std::string kind = "node-cover-3reg";
  CheckSimpleGraph(graph, kind);
  const auto deg = Degrees(graph);
  for (int v = 0; v < graph.n; ++v) {
    if (deg[v] != 3) {
      throw GeneratorError(kind + ": vertex " + Id("v", v) + " has degree " +
                           std::to_string(deg[v]) + ", expected 3");
    }
  }
  const int nv = graph.n;
  std::vector<std::string> ids;
  std::vector<Edge> edges;
  GeneratedInstance out;
  out.kind = kind;
  for (int i = 0; i < nv; ++i) {
    ids.push_back(Id("u", i));
    ids.push_back(Id("u", i) + "p");
    edges.push_back({2 * i, 2 * i + 1});
    out.correspondence["vertex"].push_back(2 * i);
    out.correspondence["super_source"].push_back(2 * i + 1);
    out.fixed_shock.push_back(2 * i + 1);
  }
  for (auto [a, b] : graph.edges) {
    const NodeIndex sink = static_cast<NodeIndex>(ids.size());
    ids.push_back("e" + std::to_string(std::min(a, b)) + "_" +
                  std::to_string(std::max(a, b)));
    edges.push_back({sink, 2 * a});
    edges.push_back({sink, 2 * b});
    out.correspondence["edge"].push_back(sink);
  }
  const int n = static_cast<int>(ids.size());
  const Amount ebar(1), gamma = Amount::Ratio(23, 100), phi = Amount::Ratio(7, 10);
  out.spec = MakeHomogeneous(n, edges, gamma, phi, ebar * Amount(n),
                             Amount(static_cast<int>(edges.size())), ids);
  out.source = graph;
  out.predicate =
      "the source graph has a node cover C iff shocking every super-source "
      "u_i' plus {u_i : v_i in C} kills the network; minimum death set = "
      "n + minimum node cover";

  Checker check;
  const Amount two(2), three(3), four(4);
  check.Expect("nc-1", "phi > gamma", phi > gamma);
  check.Expect("nc-2", "Ebar < 2", ebar < two);
  check.Expect("nc-3", "phi(2+Ebar) > gamma(3+4Ebar)",
               phi * (two + ebar) > gamma * (three + four * ebar));
  check.Expect("nc-4", "gamma*Ebar < 1", gamma * ebar < Amount(1));
  check.Expect("nc-5", "phi(1+Ebar) > gamma(4+2Ebar)",
               phi * (Amount(1) + ebar) > gamma * (four + two * ebar));
  check.Expect("nc-6", "gamma(3+Ebar) < 1", gamma * (three + ebar) < Amount(1));
  check.Expect("nc-7", "phi(1+Ebar) <= gamma(4+5Ebar/2)",
               phi * (Amount(1) + ebar) <=
                   gamma * (four + Amount::Ratio(5, 2) * ebar));
  check.Expect("nc-8", "gamma >= 2/(6+3Ebar)",
               gamma >= two / (Amount(6) + three * ebar));
  out.checks = check.Finish(kind);
  ValidateOrThrow(out.spec);
  return out;
}

GeneratedInstance GenFromSetCover(const SetSystem& system,
                                  const Amount& epsilon) {
  const std::string kind = "set-cover";
  CheckSetSystem(system, kind);
  const auto member = Membership(system);
  for (int u = 0; u < system.universe; ++u) {
    if (member[u] == 0) {
      throw GeneratorError(kind + ": element " + Id("u", u + 1) +
                           " lies in no set");
    }
  }
  if (!IsPositive(epsilon, {})) {
    throw GeneratorError(kind + ": epsilon must be positive");
  }
  const int m = static_cast<int>(system.sets.size());
  const int nu = system.universe;
  GeneratedInstance out;
  out.kind = kind;
  std::vector<std::string> ids{"B"};
  out.fixed_shock.push_back(0);
  out.correspondence["hub"].push_back(0);
  for (int s = 0; s < m; ++s) {
    out.correspondence["set"].push_back(static_cast<NodeIndex>(ids.size()));
    ids.push_back(Id("S", s + 1));
  }
  for (int u = 0; u < nu; ++u) {
    out.correspondence["element"].push_back(static_cast<NodeIndex>(ids.size()));
    ids.push_back(Id("u", u + 1));
  }
  std::vector<Edge> edges;
  std::vector<Amount> weights;
  for (int s = 0; s < m; ++s) {
    edges.push_back({1 + s, 0});
    weights.push_back(Amount(1));
  }
  for (int s = 0; s < m; ++s) {
    const Amount w = Amount(mpq_class(3, static_cast<long>(system.sets[s].size())));
    for (int u : system.sets[s]) {
      edges.push_back({1 + m + u, 1 + s});
      weights.push_back(w);
    }
  }
  const int n = static_cast<int>(ids.size());
  std::vector<Amount> alpha(n, Amount(0));
  for (int u = 0; u < nu; ++u) alpha[1 + m + u] = Amount(mpq_class(1, nu));
  const Amount external = Amount::Ratio(1, 100);
  const Amount gamma = Amount::Ratio(1, 10);
  const Amount phi = Amount::Ratio(2, 5) + epsilon;
  out.spec = MakeHeterogeneous(ids, edges, weights, alpha, gamma, phi, external);
  out.source = system;
  out.predicate =
      "S' covers the universe iff shocking {B} plus the nodes of S' kills the "
      "network; minimum death set = minimum cover + 1";

  // Per-node shares as named in the construction.
  const Amount e_set(0), e_hub(0);
  const Amount e_elem = external / Amount(nu);
  const Amount nn(nu), mm(m), one(1), three(3), four(4);
  Checker check;
  check.Expect("sc-1", "phi > gamma", phi > gamma);
  for (int s = 0; s < m; ++s) {
    const Amount k(static_cast<int>(system.sets[s].size()));
    const std::string tag = ":" + ids[1 + s];
    check.Expect("sc-2" + tag, "phi(2+E_S) > gamma(3+E_S+|S|E_u)",
                 phi * (Amount(2) + e_set) > gamma * (three + e_set + k * e_elem));
    check.Expect("sc-3" + tag, "phi(2+E_S) - gamma(3+E_S) <= 3",
                 phi * (Amount(2) + e_set) - gamma * (three + e_set) <= three);
  }
  const Amount hub = one + e_hub / mm;
  check.Expect("sc-4", "phi(1+E_B/m) > gamma(4+E_S+E_B/m)",
               phi * hub > gamma * (four + e_set + e_hub / mm));
  check.Expect("sc-5", "gamma(3+E_S) < 1", gamma * (three + e_set) < one);
  check.Expect("sc-6", "phi(1+E_B/m) <= gamma(4+E_S+E_B/m+E_u/n)",
               phi * hub <= gamma * (four + e_set + e_hub / mm + e_elem / nn));
  check.Expect("sc-7", "gamma >= phi - 1/(1+E_B/m)", gamma >= phi - one / hub);
  out.checks = check.Finish(kind);
  ValidateOrThrow(out.spec);
  return out;
}

GeneratedInstance GenFromMaxCoverage(const SetSystem& system, int kappa) {
  const std::string kind = "max-coverage";
  CheckSetSystem(system, kind);
  const int m = static_cast<int>(system.sets.size());
  const int nu = system.universe;
  if (kappa < 1 || kappa > m) {
    throw GeneratorError(kind + ": kappa must be in [1, number of sets]");
  }
  const auto member = Membership(system);
  for (int u = 0; u < nu; ++u) {
    if (member[u] == 0) {
      throw GeneratorError(kind + ": element " + Id("u", u + 1) +
                           " lies in no set");
    }
  }
  GeneratedInstance out;
  out.kind = kind;
  out.kappa = kappa;
  std::vector<std::string> ids;
  for (int u = 0; u < nu; ++u) {
    out.correspondence["element"].push_back(u);
    ids.push_back(Id("u", u + 1));
  }
  for (int s = 0; s < m; ++s) {
    out.correspondence["set"].push_back(nu + s);
    ids.push_back(Id("S", s + 1));
  }
  std::vector<Edge> edges;
  for (int s = 0; s < m; ++s) {
    for (int u : system.sets[s]) edges.push_back({u, nu + s});
  }
  const int n = nu + m;
  // n^-2 leaves gamma*a_v >= 1 on graphs with at most three vertices.
  const Amount gamma =
      Amount(mpq_class(1, std::max<long>(static_cast<long>(n) * n, n + 10)));
  const Amount phi(1);
  out.spec = MakeHomogeneous(n, edges, gamma, phi, Amount(n),
                             Amount(static_cast<int>(edges.size())), ids);
  out.source = system;
  out.predicate =
      "dvi*(G, T, kappa) * kappa = (maximum number of elements covered by "
      "kappa sets) + kappa";

  const auto sheets = DeriveBalanceSheets(out.spec);
  Topology topo(out.spec);
  Checker check;
  for (int u = 0; u < nu; ++u) {
    check.Expect("element-survives-shock:" + ids[u], "phi*e_u <= c_u",
                 phi * sheets[u].external_asset <= sheets[u].equity);
  }
  for (int s = 0; s < m; ++s) {
    const NodeIndex v = nu + s;
    const BalanceSheet& b = sheets[v];
    check.Expect("set-fails-shocked:" + ids[v], "phi*e_S > c_S",
                 phi * b.external_asset > b.equity);
    const Amount share = Min(phi * b.external_asset - b.equity,
                             b.interbank_borrowing) /
                         Amount(topo.in_degree(v));
    for (NodeIndex u : topo.lenders(v)) {
      check.Expect("element-fails:" + ids[u] + "<-" + ids[v],
                   "min{phi*e_S - c_S, b_S}/din(S) > c_u",
                   share > sheets[u].equity);
    }
  }
  out.checks = check.Finish(kind);
  ValidateOrThrow(out.spec);
  return out;
}

GeneratedInstance GenFromDensestSubhypergraph(const Hypergraph& hypergraph,
                                              int kappa) {
  const std::string kind = "densest-hypergraph";
  if (hypergraph.n < 1) throw GeneratorError(kind + ": no vertices");
  if (hypergraph.edges.empty()) throw GeneratorError(kind + ": no hyperedges");
  const int d = static_cast<int>(hypergraph.edges.front().size());
  if (d < 2) throw GeneratorError(kind + ": arity must be at least 2");
  std::set<std::vector<int>> seen;
  for (const auto& e : hypergraph.edges) {
    if (static_cast<int>(e.size()) != d) {
      throw GeneratorError(kind + ": hypergraph is not uniform");
    }
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw GeneratorError(kind + ": repeated vertex inside a hyperedge");
    }
    if (sorted.front() < 0 || sorted.back() >= hypergraph.n) {
      throw GeneratorError(kind + ": vertex out of range");
    }
    if (!seen.insert(sorted).second) {
      throw GeneratorError(kind + ": repeated hyperedge");
    }
  }
  if (kappa < 1 || kappa > hypergraph.n) {
    throw GeneratorError(kind + ": kappa must be in [1, number of vertices]");
  }
  const int nv = hypergraph.n;
  const int ne = static_cast<int>(hypergraph.edges.size());
  GeneratedInstance out;
  out.kind = kind;
  out.kappa = kappa;
  std::vector<std::string> ids;
  for (int v = 0; v < nv; ++v) {
    out.correspondence["vertex"].push_back(v);
    ids.push_back(Id("x", v + 1));
  }
  for (int e = 0; e < ne; ++e) {
    out.correspondence["hyperedge"].push_back(nv + e);
    ids.push_back(Id("h", e + 1));
  }
  std::vector<Edge> edges;
  std::vector<Amount> weights;
  for (int e = 0; e < ne; ++e) {
    for (int v : hypergraph.edges[e]) {
      edges.push_back({nv + e, v});
      weights.push_back(Amount(2));
    }
  }
  const int n = nv + ne;
  const Amount per_edge = Amount::Ratio(199, 100) * Amount(d);
  std::vector<Amount> alpha(n, Amount(0));
  for (int e = 0; e < ne; ++e) alpha[nv + e] = Amount(mpq_class(1, ne));
  const Amount gamma = Amount::Ratio(1, 2), phi(1);
  out.spec = MakeHeterogeneous(ids, edges, weights, alpha, gamma, phi,
                               per_edge * Amount(ne));
  out.source = hypergraph;
  out.predicate =
      "shocking kappa vertex nodes fails exactly those shocked vertices with "
      "degree >= 1 and the hyperedge nodes whose hyperedge lies inside the "
      "shocked set; dvi* * kappa = kappa + max contained hyperedges when some "
      "optimal kappa-subset has no isolated vertex";

  const auto sheets = DeriveBalanceSheets(out.spec);
  Checker check;
  check.Expect("phi-above-gamma", "phi > gamma", phi > gamma);
  const Amount dd(d);
  // A hyperedge node loses 1 per failed endpoint and holds equity 0.995d.
  const Amount hedge_equity = sheets[nv].equity;
  check.Expect("contained-fails", "d > 0.995d", dd > hedge_equity);
  check.Expect("partial-survives", "d - 1 <= 0.995d",
               dd - Amount(1) <= hedge_equity);
  for (int v = 0; v < nv; ++v) {
    const BalanceSheet& b = sheets[v];
    if (!IsPositive(b.interbank_borrowing, {})) continue;
    check.Expect("vertex-fails-shocked:" + ids[v], "phi*e_u > c_u",
                 phi * b.external_asset > b.equity);
  }
  for (int e = 0; e < ne; ++e) {
    const BalanceSheet& b = sheets[nv + e];
    check.Expect("hyperedge-survives-shock:" + ids[nv + e], "phi*e_h <= c_h",
                 phi * b.external_asset <= b.equity);
  }
  out.checks = check.Finish(kind);
  ValidateOrThrow(out.spec);
  return out;
}

NetworkSpec GenRandomInArborescence(int n, int max_in_degree,
                                    const Amount& gamma, const Amount& phi,
                                    const Amount& external_total,
                                    uint64_t seed) {
  if (n < 1) throw GeneratorError("random-arborescence: n must be at least 1");
  if (max_in_degree < 1) {
    throw GeneratorError("random-arborescence: degree cap must be at least 1");
  }
  Rng rng(seed);
  std::vector<int> children(n, 0);
  std::vector<Edge> edges;
  std::vector<NodeIndex> open;
  for (NodeIndex v = 1; v < n; ++v) {
    open.clear();
    for (NodeIndex p = 0; p < v; ++p) {
      if (children[p] < max_in_degree) open.push_back(p);
    }
    const NodeIndex parent = open[rng.Below(open.size())];
    ++children[parent];
    edges.push_back({v, parent});
  }
  return MakeHomogeneous(n, edges, gamma, phi, external_total,
                         Amount(static_cast<int>(edges.size())));
}

NetworkSpec GenRandomDag(int n, double edge_prob, const RandomParams& params,
                         uint64_t seed) {
  if (n < 1) throw GeneratorError("random-dag: n must be at least 1");
  if (edge_prob < 0.0 || edge_prob > 1.0) {
    throw GeneratorError("random-dag: edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Chance(edge_prob)) edges.push_back({order[i], order[j]});
    }
  }
  const Amount interbank =
      edges.empty() ? Amount(0)
                    : params.weight * Amount(static_cast<int>(edges.size()));
  return MakeHomogeneous(n, edges, params.gamma, params.phi,
                         params.external_total, interbank);
}

UndirectedGraph RandomConnectedGraph(int n, double edge_prob, uint64_t seed) {
  Rng rng(seed);
  UndirectedGraph g;
  g.n = n;
  std::set<std::pair<int, int>> have;
  // Random spanning tree first, then extra edges.
  for (int v = 1; v < n; ++v) {
    const int p = static_cast<int>(rng.Below(v));
    have.insert({p, v});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!have.count({a, b}) && rng.Chance(edge_prob)) have.insert({a, b});
    }
  }
  g.edges.assign(have.begin(), have.end());
  return g;
}

SetSystem RandomSetSystem(int universe, int num_sets, int min_membership,
                          uint64_t seed) {
  if (min_membership > num_sets) {
    throw GeneratorError("random set system: membership exceeds set count");
  }
  Rng rng(seed);
  std::vector<std::set<int>> sets(num_sets);
  for (int u = 0; u < universe; ++u) {
    std::vector<int> pool(num_sets);
    std::iota(pool.begin(), pool.end(), 0);
    rng.Shuffle(pool);
    for (int i = 0; i < min_membership; ++i) sets[pool[i]].insert(u);
    for (int s = 0; s < num_sets; ++s) {
      if (rng.Chance(0.3)) sets[s].insert(u);
    }
  }
  SetSystem out;
  out.universe = universe;
  for (auto& s : sets) {
    if (s.empty()) s.insert(static_cast<int>(rng.Below(universe)));
    out.sets.emplace_back(s.begin(), s.end());
  }
  return out;
}

Hypergraph RandomUniformHypergraph(int n, int arity, int num_edges,
                                   uint64_t seed) {
  Rng rng(seed);
  Hypergraph h;
  h.n = n;
  std::set<std::vector<int>> have;
  for (int attempt = 0; attempt < 50 * num_edges &&
                        static_cast<int>(have.size()) < num_edges;
       ++attempt) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    rng.Shuffle(pool);
    std::vector<int> e(pool.begin(), pool.begin() + arity);
    std::sort(e.begin(), e.end());
    have.insert(e);
  }
  h.edges.assign(have.begin(), have.end());
  return h;
}

}  // namespace fincontagion
