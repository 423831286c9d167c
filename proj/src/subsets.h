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

// Fixed-size subset enumeration in lexicographic order, optionally spread
// over worker threads with a deterministic result.

#ifndef FINCONTAGION_SRC_SUBSETS_H_
#define FINCONTAGION_SRC_SUBSETS_H_

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <vector>

namespace fincontagion {

// Advances `pick` (sorted k-subset of [0, m)) to the next one in
// lexicographic order; false after the last.
inline bool NextSubset(std::vector<int>& pick, int m) {
  const int k = static_cast<int>(pick.size());
  int i = k - 1;
  while (i >= 0 && pick[i] == m - k + i) --i;
  if (i < 0) return false;
  ++pick[i];
  for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

inline std::vector<int> FirstSubset(int k) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  return pick;
}

// Visits every k-subset of [0, m) in lexicographic order.
template <typename Fn>
void ForEachSubset(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> pick = FirstSubset(k);
  do {
    fn(pick);
  } while (NextSubset(pick, m));
}

// Lexicographically first k-subset of [0, m) accepted by
// pred(pick, scratch_mask). Workers each own a scratch buffer.
template <typename Pred>
std::optional<std::vector<int>> FirstSubsetMatching(int m, int k, int threads,
                                                    Pred&& pred) {
  if (k < 0 || k > m) return std::nullopt;
  if (threads <= 1) {
    std::vector<char> scratch;
    std::vector<int> pick = FirstSubset(k);
    do {
      if (pred(pick, scratch)) return pick;
    } while (NextSubset(pick, m));
    return std::nullopt;
  }
  std::vector<std::vector<int>> all;
  ForEachSubset(m, k, [&](const std::vector<int>& p) { all.push_back(p); });
  const long total = static_cast<long>(all.size());
  std::atomic<long> next{0};
  std::atomic<long> best{total};
  auto work = [&] {
    std::vector<char> scratch;
    for (long i = next++; i < total; i = next++) {
      if (i >= best.load()) break;
      if (pred(all[i], scratch)) {
        long cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (best.load() == total) return std::nullopt;
  return all[best.load()];
}

}  // namespace fincontagion

#endif  // FINCONTAGION_SRC_SUBSETS_H_
