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

// Discrete-time synchronous shock propagation.
//
// At t = 1 every shocked node v loses phi * e_v of equity. Then, while
// t <= T and some node is alive, every alive node u loses
//   min{|c_v(t)|, b_v} / din(v, t)
// for each alive borrower v with c_v(t) < 0, where din(v, t) counts v's alive
// lenders; afterwards all nodes with c_v(t) < 0 are removed. Equity exactly
// zero survives. A failed node transmits once, at the step it fails.

#ifndef FINCONTAGION_CASCADE_H_
#define FINCONTAGION_CASCADE_H_

#include <limits>
#include <string>
#include <vector>

#include "fincontagion/network.h"

namespace fincontagion {

// Passing this as T runs the cascade to completion (T is capped at
// HorizonBound(spec) + 1 internally).
inline constexpr int kUnboundedHorizon = std::numeric_limits<int>::max();

// Non-empty, sorted, duplicate-free set of node indices.
class ShockSet {
 public:
  ShockSet() = default;
  // Throws std::invalid_argument when empty or out of range for `n` nodes.
  ShockSet(std::vector<NodeIndex> nodes, int n);
  static ShockSet FromIds(const NetworkSpec& spec,
                          const std::vector<std::string>& ids);
  static ShockSet All(int n);

  const std::vector<NodeIndex>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool Contains(NodeIndex v) const;

 private:
  std::vector<NodeIndex> nodes_;
};

struct Transmission {
  NodeIndex source;
  Amount per_lender;  // loss charged to each alive lender of `source`
  int recipients;     // din(source, t)
};

struct CascadeStep {
  int t;
  std::vector<NodeIndex> failed;  // nodes with c_v(t) < 0, removed at t
  // c_v(t) for every node alive at step t, indexed by node (dead nodes keep
  // the value they had when they failed).
  std::vector<Amount> equity;
  std::vector<Transmission> transmissions;
};

struct CascadeTrace {
  int horizon = 0;            // T as requested
  int effective_horizon = 0;  // min(T, HorizonBound + 1)
  std::vector<CascadeStep> steps;
  std::vector<int> failure_step;  // per node; 0 = survived
  std::vector<NodeIndex> survivors;
  bool dead = false;

  // Union of all newly failed sets, sorted.
  std::vector<NodeIndex> Failed() const;
  int LastFailureStep() const;
};

// Precomputes balance sheets and adjacency so many shock sets can be run
// against one network. Immutable after construction.
class CascadeEngine {
 public:
  explicit CascadeEngine(const NetworkSpec& spec);

  const NetworkSpec& spec() const { return spec_; }
  const Topology& topology() const { return topology_; }
  const std::vector<BalanceSheet>& sheets() const { return sheets_; }
  int horizon_bound() const { return horizon_bound_; }
  int num_nodes() const { return topology_.num_nodes(); }

  // Full trace with per-step equity snapshots.
  CascadeTrace Run(const ShockSet& shock, int horizon) const;

  // Failure step per node (0 = survived), without snapshots. `shocked` is a
  // per-node membership mask.
  std::vector<int> FailureSteps(const std::vector<char>& shocked,
                                int horizon) const;

  // Number of failed nodes.
  int CountFailed(const std::vector<char>& shocked, int horizon) const;

 private:
  template <bool kRecord>
  void Simulate(const std::vector<char>& shocked, int horizon,
                std::vector<int>& failure_step,
                std::vector<CascadeStep>* steps) const;

  NetworkSpec spec_;
  Topology topology_;
  std::vector<BalanceSheet> sheets_;
  int horizon_bound_;
};

// Longest directed path (in edges) for a DAG; n - 1 for a cyclic graph.
int HorizonBound(const NetworkSpec& spec);
int HorizonBound(const Topology& topology);

// Throws std::invalid_argument if horizon < 1, UnknownNodeError is raised by
// ShockSet::FromIds for bad ids.
CascadeTrace Propagate(const NetworkSpec& spec, const ShockSet& shock,
                       int horizon);

std::vector<NodeIndex> Infl(const NetworkSpec& spec, const ShockSet& shock,
                            int horizon);

inline bool IsDead(const CascadeTrace& trace) { return trace.dead; }

}  // namespace fincontagion

#endif  // FINCONTAGION_CASCADE_H_
