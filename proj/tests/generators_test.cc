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

#include "doctest.h"
#include "fincontagion/arborescence.h"
#include "fincontagion/dual.h"
#include "fincontagion/errors.h"
#include "fincontagion/stability.h"
#include "oracles.h"

namespace fincontagion {
namespace {

UndirectedGraph K4() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}; }

UndirectedGraph K33() {
  UndirectedGraph g{6, {}};
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) g.edges.push_back({a, b});
  }
  return g;
}

int DeathSetSize(const GeneratedInstance& instance, int horizon) {
  const auto r = StabExactBruteforce(instance.spec, horizon, 24);
  REQUIRE(r.feasible);
  return static_cast<int>(r.shock_set.size());
}

TEST_CASE("dominating set") {
  const auto p3 = GenFromDominatingSet({3, {{0, 1}, {1, 2}}});
  CHECK(p3.spec.num_nodes() == 3);
  CHECK(p3.spec.num_edges() == 4);
  CHECK(DeathSetSize(p3, 2) == 1);
  CHECK(DeathSetSize(GenFromDominatingSet({2, {{0, 1}}}), 2) == 1);
  CHECK_THROWS_AS(GenFromDominatingSet({3, {{0, 1}}}), GeneratorError);
  for (const auto& check : p3.checks) CHECK(check.holds);
}

TEST_CASE("node cover on cubic graphs") {
  const auto k4 = GenFromNodeCover3Regular(K4());
  CHECK(k4.spec.num_nodes() == 14);
  CHECK(k4.fixed_shock.size() == 4);
  CHECK(DeathSetSize(k4, kUnboundedHorizon) == 4 + oracles::MinVertexCover(K4()));
  CHECK(DeathSetSize(k4, kUnboundedHorizon) == 7);
  const auto k33 = GenFromNodeCover3Regular(K33());
  CHECK(DeathSetSize(k33, kUnboundedHorizon) == 9);
  std::vector<std::string> names;
  for (const auto& check : k4.checks) names.push_back(check.name);
  CHECK(names.size() >= 8);
  CHECK_THROWS_AS(GenFromNodeCover3Regular({3, {{0, 1}, {1, 2}}}),
                  GeneratorError);
}

TEST_CASE("set cover") {
  const SetSystem four_sets{4, {{0, 1, 2}, {2, 3}, {2}, {0, 1}}};
  const auto instance = GenFromSetCover(four_sets);
  CHECK(instance.spec.num_nodes() == 9);
  CHECK(DeathSetSize(instance, kUnboundedHorizon) == 3);
  CHECK(oracles::MinSetCover(four_sets) == 2);
  CHECK(DeathSetSize(GenFromSetCover({3, {{0, 1, 2}, {0, 1}}}),
                     kUnboundedHorizon) == 2);
  CHECK_THROWS_AS(GenFromSetCover({3, {{0, 1}}}), GeneratorError);
}

TEST_CASE("max coverage") {
  const SetSystem s{3, {{0, 1}, {1, 2}}};
  const auto instance = GenFromMaxCoverage(s, 1);
  const auto r = DualExactBruteforce(instance.spec, kUnboundedHorizon, 1);
  CHECK(static_cast<int>(r.failed.size()) == oracles::MaxCoverage(s, 1) + 1);
  CHECK_THROWS_AS(GenFromMaxCoverage(s, 3), GeneratorError);
}

TEST_CASE("densest subhypergraph") {
  const Hypergraph h{3, {{0, 1}, {1, 2}}};
  const auto instance = GenFromDensestSubhypergraph(h, 2);
  const auto r = DualExactBruteforce(instance.spec, 2, 2);
  CHECK(static_cast<int>(r.failed.size()) ==
        2 + oracles::MaxContainedHyperedges(h, 2));
  CHECK_THROWS_AS(GenFromDensestSubhypergraph({3, {{0, 1}, {0, 1, 2}}}, 1),
                  GeneratorError);
}

TEST_CASE("random arborescence") {
  const Amount g = Amount::Ratio(1, 10), p = Amount::Ratio(1, 2);
  CHECK(GenRandomInArborescence(1, 2, g, p, Amount(1), 3).num_nodes() == 1);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const NetworkSpec a = GenRandomInArborescence(12, 2, g, p, Amount(20), seed);
    CHECK(IsInArborescence(a));
    CHECK(Topology(a).max_in_degree() <= 2);
    CHECK(a == GenRandomInArborescence(12, 2, g, p, Amount(20), seed));
  }
  CHECK_THROWS(GenRandomInArborescence(3, 0, g, p, Amount(1), 1));
}

TEST_CASE("random dag") {
  RandomParams params;
  CHECK(GenRandomDag(6, 0.0, params, 1).num_edges() == 0);
  CHECK(GenRandomDag(6, 1.0, params, 1).num_edges() == 15);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const NetworkSpec d = GenRandomDag(10, 0.4, params, seed);
    CHECK(Topology(d).TopologicalOrder());
    CHECK(Validate(d).empty());
  }
}

TEST_CASE("random sources") {
  const UndirectedGraph g = RandomConnectedGraph(7, 0.3, 5);
  CHECK(g.n == 7);
  CHECK(oracles::MinDominatingSet(g) >= 1);
  const SetSystem s = RandomSetSystem(5, 4, 2, 9);
  std::vector<int> count(5, 0);
  for (const auto& set : s.sets) {
    for (int x : set) ++count[x];
  }
  for (int c : count) CHECK(c >= 2);
  const Hypergraph h = RandomUniformHypergraph(6, 3, 4, 2);
  for (const auto& e : h.edges) CHECK(e.size() == 3);
}

}  // namespace
}  // namespace fincontagion
