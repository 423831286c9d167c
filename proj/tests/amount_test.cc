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

#include "fincontagion/amount.h"

#include "doctest.h"

namespace fincontagion {
namespace {

TEST_CASE("parse rationals and decimals exactly") {
  CHECK(Amount::Parse("3/9")->ToString() == "1/3");
  CHECK(Amount::Parse("-2/4")->ToString() == "-1/2");
  CHECK(Amount::Parse("0.95")->ToString() == "19/20");
  CHECK(Amount::Parse("1e-9")->ToString() == "1/1000000000");
  CHECK(Amount::Parse("-2.5E3")->ToString() == "-2500");
  CHECK(Amount::Parse("7")->ToString() == "7");
}

TEST_CASE("malformed amounts are rejected") {
  CHECK_FALSE(Amount::Parse(""));
  CHECK_FALSE(Amount::Parse("1/0"));
  CHECK_FALSE(Amount::Parse("abc"));
  CHECK_FALSE(Amount::Parse("1/2/3"));
}

TEST_CASE("decimal rendering") {
  CHECK(Amount::Ratio(12, 25).ToDecimalString() == "0.48");
  CHECK(Amount::Ratio(1, 3).ToDecimalString() == "1/3");
  CHECK(Amount(5).ToDecimalString() == "5");
}

TEST_CASE("exact arithmetic has no rounding") {
  Amount x = Amount::Ratio(1, 10) + Amount::Ratio(2, 10);
  CHECK(x == Amount::Ratio(3, 10));
  CHECK(Amount::Ratio(1, 3) * Amount(3) == Amount(1));
  CHECK(Min(Amount(2), Amount::Ratio(3, 2)) == Amount::Ratio(3, 2));
  CHECK(Max(Amount(2), Amount::Ratio(3, 2)) == Amount(2));
  CHECK(Abs(Amount(-4)) == Amount(4));
}

TEST_CASE("sign under policies") {
  NumericPolicy exact;
  NumericPolicy loose{Backend::kFloat, 1e-12};
  const Amount tiny(-1e-15);
  CHECK(IsNegative(Amount::Ratio(-1, 1000000000), exact));
  CHECK_FALSE(IsNegative(Amount(0), exact));
  CHECK_FALSE(IsNegative(tiny, loose));
  CHECK(IsNegative(Amount(-1e-9), loose));
  CHECK(Exceeds(Amount::Ratio(3, 10), Amount::Ratio(1, 10) * Amount(3), exact) ==
        false);
}

TEST_CASE("backend conversion") {
  const Amount q = Amount::Ratio(1, 4);
  const Amount d = q.As(Backend::kFloat);
  CHECK_FALSE(d.is_rational());
  CHECK(d.ToDouble() == doctest::Approx(0.25));
  CHECK(d.As(Backend::kRational) == q);
  CHECK(Amount::Parse("0.1", Backend::kFloat)->ToDouble() ==
        doctest::Approx(0.1));
}

}  // namespace
}  // namespace fincontagion
