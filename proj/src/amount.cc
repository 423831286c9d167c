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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace fincontagion {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class Pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Exact parse of [-+]digits[.digits][e[-+]digits].
std::optional<mpq_class> ParseDecimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!AllDigits(exp) || exp.size() > 6) return std::nullopt;
    std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !AllDigits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !AllDigits(frac_part)) return std::nullopt;
  std::string digits(int_part);
  digits.append(frac_part);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  long scale = exponent - static_cast<long>(frac_part.size());
  mpq_class q;
  if (scale >= 0) {
    q = mpq_class(mantissa * Pow10(static_cast<unsigned long>(scale)));
  } else {
    q = mpq_class(mantissa, Pow10(static_cast<unsigned long>(-scale)));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

}  // namespace

std::string RationalToString(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Amount Amount::Ratio(long num, long den) { return Amount(mpq_class(num, den)); }

Amount Amount::Zero(Backend backend) {
  return backend == Backend::kRational ? Amount(mpq_class(0)) : Amount(0.0);
}

std::optional<Amount> Amount::Parse(std::string_view text, Backend backend) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  std::optional<mpq_class> q;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = ParseDecimal(text.substr(0, slash));
    auto den = ParseDecimal(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    q = *num / *den;
  } else {
    q = ParseDecimal(text);
  }
  if (!q) return std::nullopt;
  Amount a(*q);
  return a.As(backend);
}

void Amount::Canonical() {
  if (auto* q = std::get_if<mpq_class>(&value_)) q->canonicalize();
}

double Amount::ToDouble() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Amount Amount::As(Backend backend) const {
  if (backend == Backend::kFloat) return Amount(ToDouble());
  if (is_rational()) return *this;
  return Amount(mpq_class(std::get<double>(value_)));
}

std::string Amount::ToString() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return RationalToString(*q);
  }
  char buf[64];
  const double d = std::get<double>(value_);
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

std::string Amount::ToDecimalString() const {
  if (!is_rational()) return ToString();
  const mpq_class& q = rational();
  mpz_class den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return RationalToString(q);
  const unsigned long places = std::max(twos, fives);
  if (places == 0) return q.get_num().get_str();
  mpz_class scaled = q.get_num() * Pow10(places) / q.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  std::string out = digits.substr(0, digits.size() - places) + "." +
                    digits.substr(digits.size() - places);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return negative ? "-" + out : out;
}

int Amount::ExactSign() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  const double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

int Amount::Sign(const NumericPolicy& policy) const {
  if (is_rational()) return ExactSign();
  const double d = std::get<double>(value_);
  if (d > policy.tolerance) return 1;
  if (d < -policy.tolerance) return -1;
  return 0;
}

Amount Amount::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Amount(mpq_class(-*q));
  return Amount(-std::get<double>(value_));
}

#define FINCONTAGION_AMOUNT_OP(op)                                        \
  Amount& Amount::operator op##=(const Amount& o) {                      \
    if (is_rational() && o.is_rational()) {                              \
      std::get<mpq_class>(value_) op##= o.rational();                    \
    } else {                                                             \
      value_ = ToDouble() op o.ToDouble();                               \
    }                                                                    \
    return *this;                                                        \
  }

FINCONTAGION_AMOUNT_OP(+)
FINCONTAGION_AMOUNT_OP(-)
FINCONTAGION_AMOUNT_OP(*)
FINCONTAGION_AMOUNT_OP(/)

#undef FINCONTAGION_AMOUNT_OP

bool operator==(const Amount& a, const Amount& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  return a.ToDouble() == b.ToDouble();
}

bool operator<(const Amount& a, const Amount& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() < b.rational();
  return a.ToDouble() < b.ToDouble();
}

Amount Min(const Amount& a, const Amount& b) { return b < a ? b : a; }
Amount Max(const Amount& a, const Amount& b) { return a < b ? b : a; }
Amount Abs(const Amount& a) { return a.ExactSign() < 0 ? -a : a; }

}  // namespace fincontagion
