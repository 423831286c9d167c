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

// Dual stability index: the largest number of failures per shocked node over
// shock sets of a fixed size kappa.

#ifndef FINCONTAGION_DUAL_H_
#define FINCONTAGION_DUAL_H_

#include <string>
#include <string_view>
#include <vector>

#include "fincontagion/amount.h"
#include "fincontagion/cascade.h"
#include "fincontagion/network.h"

namespace fincontagion {

enum class DualMethod { kBruteForce, kGreedy, kDpArborescence };

std::string_view DualMethodName(DualMethod method);

struct DualResult {
  std::vector<NodeIndex> shock_set;  // exactly kappa nodes, sorted
  std::vector<NodeIndex> failed;     // infl(shock_set), sorted
  int kappa = 0;
  int num_nodes = 0;
  int horizon = 0;
  DualMethod method = DualMethod::kBruteForce;
  // Solver's own count; equals failed.size() when confirmed.
  int claimed_failures = 0;
  bool confirmed = false;

  // |failed| / kappa.
  Amount Value() const;
  std::string ValueString() const { return Value().ToString(); }
};

// Exact maximum over all kappa-subsets; ties go to the lexicographically
// first set. Throws PreconditionError if n exceeds node_limit or kappa is
// out of [1, n].
DualResult DualExactBruteforce(const NetworkSpec& spec, int horizon, int kappa,
                               int node_limit = 20, int threads = 1);

// Adds, kappa times, the node whose addition fails the most nodes (lowest
// index on ties). No quality guarantee.
DualResult DualGreedy(const NetworkSpec& spec, int horizon, int kappa);

// Exact tree DP with an exactly-k knapsack over children. Requires an
// in-arborescence where every node fails when shocked alone.
DualResult DualExactInArborescence(const NetworkSpec& spec, int horizon,
                                   int kappa);

}  // namespace fincontagion

#endif  // FINCONTAGION_DUAL_H_
