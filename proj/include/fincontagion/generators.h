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

// Banking networks built from classical combinatorial instances, plus random
// topologies for tests. Every reduction re-checks its parameter inequalities
// exactly and throws GeneratorError when one fails.

#ifndef FINCONTAGION_GENERATORS_H_
#define FINCONTAGION_GENERATORS_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fincontagion/amount.h"
#include "fincontagion/network.h"

namespace fincontagion {

struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Elements are 0..universe-1.
struct SetSystem {
  int universe = 0;
  std::vector<std::vector<int>> sets;
};

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;
};

using SourceObject =
    std::variant<std::monostate, UndirectedGraph, SetSystem, Hypergraph>;

struct InequalityCheck {
  std::string name;
  std::string statement;
  bool holds = false;
};

struct GeneratedInstance {
  std::string kind;
  NetworkSpec spec;
  SourceObject source;
  // Role name -> network nodes, parallel to the source items of that role
  // (e.g. "vertex", "set", "element", "hyperedge").
  std::map<std::string, std::vector<NodeIndex>> correspondence;
  // Nodes every death set in the correspondence includes.
  std::vector<NodeIndex> fixed_shock;
  std::string predicate;
  std::vector<InequalityCheck> checks;
  int kappa = 0;  // dual generators only
};

// Every undirected edge becomes two opposite edges; E = 10n,
// gamma = min(1/n^2, 1/(n+10)), phi = 1, unit weights.
GeneratedInstance GenFromDominatingSet(const UndirectedGraph& graph);

// Nodes u_i, u_i' per vertex and a sink e_ij per edge with edges (u_i, u_i'),
// (e_ij, u_i), (e_ij, u_j); E = number of nodes, gamma = 0.23, phi = 0.7.
GeneratedInstance GenFromNodeCover3Regular(const UndirectedGraph& graph);

// Hub B, set nodes with (S, B) of weight 1, element nodes with (u, S) of
// weight 3/|S|; each element holds E/|U| with E = 1/100, gamma = 1/10,
// phi = 2/5 + epsilon. Every element must lie in at least one set.
GeneratedInstance GenFromSetCover(const SetSystem& system,
                                  const Amount& epsilon = Amount::Ratio(1, 1000000000));

// Element nodes lend to the set nodes containing them; E = n,
// gamma = 1/n^2, phi = 1, unit weights.
GeneratedInstance GenFromMaxCoverage(const SetSystem& system, int kappa);

// Hyperedge nodes lend 2 to each of their d vertices; hyperedge nodes hold
// external assets 1.99d each, vertices none; phi = 1, gamma = 1/2.
GeneratedInstance GenFromDensestSubhypergraph(const Hypergraph& hypergraph,
                                              int kappa);

struct RandomParams {
  Amount gamma = Amount::Ratio(1, 10);
  Amount phi = Amount::Ratio(1, 2);
  Amount external_total = Amount(10);
  Amount weight = Amount(1);  // homogeneous edge weight, I = weight * m
};

// Node 0 is the root; node v > 0 picks a parent among 0..v-1 with fewer
// than max_in_degree children. Unit edge weights.
NetworkSpec GenRandomInArborescence(int n, int max_in_degree,
                                    const Amount& gamma, const Amount& phi,
                                    const Amount& external_total,
                                    uint64_t seed);

// Random node order; each forward pair becomes an edge with probability
// edge_prob.
NetworkSpec GenRandomDag(int n, double edge_prob, const RandomParams& params,
                         uint64_t seed);

// Small helpers for random sources used by tests and the CLI.
UndirectedGraph RandomConnectedGraph(int n, double edge_prob, uint64_t seed);
SetSystem RandomSetSystem(int universe, int num_sets, int min_membership,
                          uint64_t seed);
Hypergraph RandomUniformHypergraph(int n, int arity, int num_edges,
                                   uint64_t seed);

}  // namespace fincontagion

#endif  // FINCONTAGION_GENERATORS_H_
