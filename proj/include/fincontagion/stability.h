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

// Stability index: the smallest fraction of nodes whose shocking kills the
// whole network within T steps.

#ifndef FINCONTAGION_STABILITY_H_
#define FINCONTAGION_STABILITY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincontagion/amount.h"
#include "fincontagion/cascade.h"
#include "fincontagion/network.h"

namespace fincontagion {

enum class StabMethod { kBruteForce, kGreedyT2, kDpArborescence };

std::string_view StabMethodName(StabMethod method);

struct StabilityResult {
  bool feasible = false;  // false means the index is infinite
  std::vector<NodeIndex> shock_set;
  int num_nodes = 0;
  int horizon = 0;
  StabMethod method = StabMethod::kBruteForce;
  // Re-simulation of `shock_set` killed the network within `horizon`.
  bool confirmed = false;
  // Closed-form lower bound on the index (tree DP only).
  std::optional<Amount> lower_bound;

  // |V*| / n as an exact rational; requires feasible.
  Amount Value() const;
  // "p/q" or "inf".
  std::string ValueString() const;
};

// |V'| / n when shocking V' kills the network within T, else nullopt.
std::optional<Amount> Vi(const NetworkSpec& spec, const ShockSet& shock,
                         int horizon);

// Exhaustive search by cardinality, then lexicographic order. All nodes with
// no borrowers are always included. Throws PreconditionError if n exceeds
// node_limit.
StabilityResult StabExactBruteforce(const NetworkSpec& spec, int horizon,
                                    int node_limit = 20, int threads = 1);

// Covering formulation for T = 2: row v holds delta_{v,u} for every u whose
// threshold v contributes to.
struct CoverInstance {
  struct Entry {
    NodeIndex u;
    Amount delta;
  };
  std::vector<std::vector<Entry>> rows;  // indexed by v, only delta > 0
  std::vector<Amount> thresholds;        // c_u
  NumericPolicy numeric;

  Amount Delta(NodeIndex v, NodeIndex u) const;
  // min over all positive deltas and positive thresholds.
  Amount Zeta() const;
  // 2 + ln n + ln(max_v sum_u delta_{v,u} / zeta).
  double RatioBound() const;
  // sum_v delta_{v,u} x_v > c_u for every u.
  bool Covers(const std::vector<NodeIndex>& chosen) const;
};

CoverInstance BuildCoverInstance(const NetworkSpec& spec);

// Greedy covering for T = 2, verified by re-simulation.
StabilityResult StabGreedyT2(const NetworkSpec& spec);

// Exact tree DP. Requires an in-arborescence where every node fails when
// shocked alone; throws PreconditionError otherwise. The DP tracks the loss
// a node receives from its nearest shocked ancestor and the step it arrives,
// so shocked siblings that leave the network early are accounted for.
StabilityResult StabExactInArborescence(const NetworkSpec& spec, int horizon);

// The simpler variant that decides failure of unshocked nodes purely by
// membership in the influence zone of their nearest shocked ancestor. It can
// overestimate the index; kept for comparison.
StabilityResult StabInfluenceZoneDp(const NetworkSpec& spec, int horizon);

}  // namespace fincontagion

#endif  // FINCONTAGION_STABILITY_H_
