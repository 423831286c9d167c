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

#ifndef FINCONTAGION_AMOUNT_H_
#define FINCONTAGION_AMOUNT_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fincontagion {

enum class Backend { kRational, kFloat };

// Numeric settings carried by a network. Under the float backend every sign
// test is taken relative to `tolerance`: "x < 0" means x < -tolerance.
struct NumericPolicy {
  Backend backend = Backend::kRational;
  double tolerance = 1e-12;
};

// A currency amount or model parameter. Holds either an exact rational or a
// double. Mixed arithmetic degrades to double.
class Amount {
 public:
  Amount() : value_(mpq_class(0)) {}
  Amount(int v) : value_(mpq_class(v)) {}  // NOLINT: implicit on purpose
  explicit Amount(mpq_class v) : value_(std::move(v)) { Canonical(); }
  explicit Amount(double v) : value_(v) {}

  static Amount Ratio(long num, long den);
  static Amount Zero(Backend backend);

  // Parses "p/q", "-p/q", integer and decimal strings ("0.95", "1e-9",
  // "-2.5E3"). Decimal strings are read exactly before any conversion to the
  // requested backend. Returns nullopt on malformed input or zero denominator.
  static std::optional<Amount> Parse(std::string_view text,
                                     Backend backend = Backend::kRational);

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  double ToDouble() const;

  // Converts to the given backend (exact -> float loses precision).
  Amount As(Backend backend) const;

  // "p/q" (or "p") for rationals, shortest round-trip decimal for floats.
  std::string ToString() const;
  // Exact decimal when the value has a terminating expansion, else "p/q".
  // Floats print as ToString().
  std::string ToDecimalString() const;

  // Sign under a policy: -1, 0, +1. Exact for rationals.
  int Sign(const NumericPolicy& policy) const;
  int ExactSign() const;

  Amount operator-() const;
  Amount& operator+=(const Amount& o);
  Amount& operator-=(const Amount& o);
  Amount& operator*=(const Amount& o);
  Amount& operator/=(const Amount& o);

  friend Amount operator+(Amount a, const Amount& b) { return a += b; }
  friend Amount operator-(Amount a, const Amount& b) { return a -= b; }
  friend Amount operator*(Amount a, const Amount& b) { return a *= b; }
  friend Amount operator/(Amount a, const Amount& b) { return a /= b; }

  // Exact comparisons (no tolerance). Use the policy helpers below for
  // model decisions.
  friend bool operator==(const Amount& a, const Amount& b);
  friend bool operator<(const Amount& a, const Amount& b);
  friend bool operator!=(const Amount& a, const Amount& b) { return !(a == b); }
  friend bool operator>(const Amount& a, const Amount& b) { return b < a; }
  friend bool operator<=(const Amount& a, const Amount& b) { return !(b < a); }
  friend bool operator>=(const Amount& a, const Amount& b) { return !(a < b); }

 private:
  void Canonical();

  std::variant<mpq_class, double> value_;
};

Amount Min(const Amount& a, const Amount& b);
Amount Max(const Amount& a, const Amount& b);
Amount Abs(const Amount& a);

// Model-level comparisons honoring the float tolerance.
inline bool IsNegative(const Amount& x, const NumericPolicy& p) {
  return x.Sign(p) < 0;
}
inline bool IsPositive(const Amount& x, const NumericPolicy& p) {
  return x.Sign(p) > 0;
}
// a > b strictly (by more than the tolerance under floats).
inline bool Exceeds(const Amount& a, const Amount& b, const NumericPolicy& p) {
  return (a - b).Sign(p) > 0;
}

std::string RationalToString(const mpq_class& q);

}  // namespace fincontagion

#endif  // FINCONTAGION_AMOUNT_H_
