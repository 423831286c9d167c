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

#ifndef FINCONTAGION_ARBORESCENCE_H_
#define FINCONTAGION_ARBORESCENCE_H_

#include <optional>
#include <vector>

#include "fincontagion/amount.h"
#include "fincontagion/cascade.h"
#include "fincontagion/network.h"

namespace fincontagion {

// A network whose graph is a rooted tree with every edge pointing from a
// child (lender) to its parent (borrower).
struct Arborescence {
  NodeIndex root = 0;
  std::vector<NodeIndex> parent;  // -1 for the root
  std::vector<std::vector<NodeIndex>> children;
  std::vector<int> depth;          // root has depth 0
  std::vector<NodeIndex> preorder;  // parents before children

  // Builds the view, or nullopt when the network is not an in-arborescence.
  static std::optional<Arborescence> Of(const NetworkSpec& spec);

  // u followed by its proper ancestors up to the root.
  std::vector<NodeIndex> PathToRoot(NodeIndex u) const;
  // u and all its descendants.
  std::vector<NodeIndex> Subtree(NodeIndex u) const;
};

bool IsInArborescence(const NetworkSpec& spec);

// Phi * e_v > c_v for every node (strict).
bool EveryNodeFailsWhenShocked(const NetworkSpec& spec);

// Failed nodes among u and its descendants when u alone is shocked.
// Throws PreconditionError when the network is not an in-arborescence.
std::vector<NodeIndex> InfluenceZone(const NetworkSpec& spec, NodeIndex u,
                                     int horizon = kUnboundedHorizon);

// 1 / (1 + deg_in_max * (phi/gamma - 1)); 1 for a single node. Rational
// under the rational backend.
Amount ArborescenceLowerBound(const NetworkSpec& spec);

// (kappa / n) * (1 + deg_in_max * (phi/gamma - 1)).
Amount DualArborescenceUpperBound(const NetworkSpec& spec, int kappa);

}  // namespace fincontagion

#endif  // FINCONTAGION_ARBORESCENCE_H_
