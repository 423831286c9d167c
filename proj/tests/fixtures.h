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

// Small networks shared by the unit and acceptance tests.

#ifndef FINCONTAGION_TESTS_FIXTURES_H_
#define FINCONTAGION_TESTS_FIXTURES_H_

#include <vector>

#include "fincontagion/network.h"

namespace fincontagion::fixtures {

// Five banks a..e; c borrows from d and e and lends to a and b.
inline NetworkSpec ExampleNetwork() {
  return MakeHomogeneous({"a", "b", "c", "d", "e"},
                         {{"c", "b"}, {"c", "a"}, {"e", "c"}, {"d", "c"}},
                         Amount::Ratio(1, 10), Amount::Ratio(2, 5), Amount(5),
                         Amount(4));
}

// Five banks v1..v5 and seven loans f1..f7.
inline std::vector<Edge> LoopEdges() {
  return {{1, 0}, {0, 3}, {3, 1}, {2, 0}, {2, 3}, {4, 3}, {4, 2}};
}

inline std::vector<std::string> LoopIds() {
  return {"v1", "v2", "v3", "v4", "v5"};
}

inline NetworkSpec LoopHomogeneous() {
  return MakeHomogeneous(5, LoopEdges(), Amount::Ratio(1, 10),
                         Amount::Ratio(1, 2), Amount(14), Amount(7),
                         LoopIds());
}

// 95% of E on v1 and v2, 95% of I on f1..f3.
inline NetworkSpec LoopHeterogeneous() {
  const Amount big_w = Amount::Ratio(95, 100) * Amount(7) / Amount(3);
  const Amount small_w = Amount::Ratio(5, 100) * Amount(7) / Amount(4);
  const Amount big_a = Amount::Ratio(95, 200);
  const Amount small_a = Amount::Ratio(5, 300);
  return MakeHeterogeneous(
      LoopIds(), LoopEdges(),
      {big_w, big_w, big_w, small_w, small_w, small_w, small_w},
      {big_a, big_a, small_a, small_a, small_a}, Amount::Ratio(1, 10),
      Amount::Ratio(1, 2), Amount(14));
}

}  // namespace fincontagion::fixtures

#endif  // FINCONTAGION_TESTS_FIXTURES_H_
