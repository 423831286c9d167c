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

// Shared setup for the exact tree DPs.

#ifndef FINCONTAGION_SRC_TREE_MODEL_H_
#define FINCONTAGION_SRC_TREE_MODEL_H_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fincontagion/arborescence.h"
#include "fincontagion/cascade.h"

namespace fincontagion {

struct TreeModel {
  TreeModel(const NetworkSpec& spec, int horizon)
      : engine(spec), policy(spec.numeric) {
    auto view = Arborescence::Of(spec);
    if (!view) throw PreconditionError("network is not an in-arborescence");
    if (!EveryNodeFailsWhenShocked(spec)) {
      throw PreconditionError("some node does not fail when shocked alone");
    }
    if (horizon < 1) throw std::invalid_argument("horizon T must be at least 1");
    tree = std::move(*view);
    limit = static_cast<int>(
        std::min<long>(horizon, static_cast<long>(engine.horizon_bound()) + 1));
    const auto& sheets = engine.sheets();
    for (NodeIndex v = 0; v < engine.num_nodes(); ++v) {
      const Amount loss = spec.phi * sheets[v].external_asset - sheets[v].equity;
      const int din = static_cast<int>(tree.children[v].size());
      shock_out.push_back(din == 0 ? Amount::Zero(policy.backend)
                                   : Min(loss, sheets[v].interbank_borrowing) /
                                         Amount(din));
    }
  }

  const Amount& equity(NodeIndex v) const { return engine.sheets()[v].equity; }
  const Amount& borrowing(NodeIndex v) const {
    return engine.sheets()[v].interbank_borrowing;
  }

  CascadeEngine engine;
  NumericPolicy policy;
  Arborescence tree;
  int limit = 1;
  std::vector<Amount> shock_out;  // per-child loss sent by a shocked node
};

}  // namespace fincontagion

#endif  // FINCONTAGION_SRC_TREE_MODEL_H_
