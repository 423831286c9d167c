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

#include "oracles.h"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace fincontagion::oracles {

namespace {

// Smallest popcount of a mask over n bits that satisfies pred, or -1.
int MinMask(int n, const std::function<bool(uint32_t)>& pred) {
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    if (pred(mask)) best = size;
  }
  return best;
}

// Largest score over masks of exactly k bits.
int MaxMaskOfSize(int n, int k, const std::function<int(uint32_t)>& score) {
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    best = std::max(best, score(mask));
  }
  return best;
}

}  // namespace

int MinDominatingSet(const UndirectedGraph& graph) {
  std::vector<uint32_t> closed(graph.n);
  for (int v = 0; v < graph.n; ++v) closed[v] = 1u << v;
  for (auto [a, b] : graph.edges) {
    closed[a] |= 1u << b;
    closed[b] |= 1u << a;
  }
  return MinMask(graph.n, [&](uint32_t mask) {
    for (int v = 0; v < graph.n; ++v) {
      if (!(closed[v] & mask)) return false;
    }
    return true;
  });
}

int MinVertexCover(const UndirectedGraph& graph) {
  return MinMask(graph.n, [&](uint32_t mask) {
    for (auto [a, b] : graph.edges) {
      if (!(mask >> a & 1) && !(mask >> b & 1)) return false;
    }
    return true;
  });
}

int MinSetCover(const SetSystem& system) {
  const int m = static_cast<int>(system.sets.size());
  return MinMask(m, [&](uint32_t mask) {
    std::vector<char> covered(system.universe, 0);
    for (int s = 0; s < m; ++s) {
      if (mask >> s & 1) {
        for (int x : system.sets[s]) covered[x] = 1;
      }
    }
    return std::all_of(covered.begin(), covered.end(),
                       [](char c) { return c != 0; });
  });
}

int MaxCoverage(const SetSystem& system, int kappa) {
  const int m = static_cast<int>(system.sets.size());
  return MaxMaskOfSize(m, std::min(kappa, m), [&](uint32_t mask) {
    std::vector<char> covered(system.universe, 0);
    for (int s = 0; s < m; ++s) {
      if (mask >> s & 1) {
        for (int x : system.sets[s]) covered[x] = 1;
      }
    }
    return static_cast<int>(std::count(covered.begin(), covered.end(), 1));
  });
}

int MaxContainedHyperedges(const Hypergraph& hypergraph, int kappa) {
  return MaxMaskOfSize(
      hypergraph.n, std::min(kappa, hypergraph.n), [&](uint32_t mask) {
        int inside = 0;
        for (const auto& edge : hypergraph.edges) {
          inside += std::all_of(edge.begin(), edge.end(),
                                [&](int v) { return mask >> v & 1; });
        }
        return inside;
      });
}

}  // namespace fincontagion::oracles
