// Copyright 2026 The Tropicalis Authors
//
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

#include "tropicalis/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tropicalis {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

bool is_integral(double v) {
  return std::isfinite(v) && std::nearbyint(v) == v &&
         std::abs(v) <= 0x1.0p53;
}
}  // namespace

Value::Value(double payload) : v_(payload) {
  if (std::isnan(payload)) {
    throw TropError(ErrorKind::Domain, "NaN payload rejected");
  }
  if (v_ == 0.0) v_ = 0.0;  // normalize -0.0 for bit-stable output
}

std::optional<Semiring> Semiring::parse(std::string_view token) {
  if (token == "rmax") return Semiring(SemiringKind::RMax);
  if (token == "rmaxhat") return Semiring(SemiringKind::RMaxHat);
  if (token == "rmin") return Semiring(SemiringKind::RMin);
  if (token == "rminhat") return Semiring(SemiringKind::RMinHat);
  if (token == "bool") return Semiring(SemiringKind::Boolean);
  if (token == "minmax") return Semiring(SemiringKind::MinMax);
  if (token == "zmax") return Semiring(SemiringKind::ZMax);
  return std::nullopt;
}

std::string_view Semiring::name() const noexcept {
  switch (kind_) {
    case SemiringKind::RMax: return "rmax";
    case SemiringKind::RMaxHat: return "rmaxhat";
    case SemiringKind::RMin: return "rmin";
    case SemiringKind::RMinHat: return "rminhat";
    case SemiringKind::Boolean: return "bool";
    case SemiringKind::MinMax: return "minmax";
    case SemiringKind::ZMax: return "zmax";
  }
  return "?";
}

bool Semiring::min_oriented() const noexcept {
  return kind_ == SemiringKind::RMin || kind_ == SemiringKind::RMinHat;
}

bool Semiring::has_top() const noexcept {
  switch (kind_) {
    case SemiringKind::RMaxHat:
    case SemiringKind::RMinHat:
    case SemiringKind::Boolean:
    case SemiringKind::MinMax:
      return true;
    default:
      return false;
  }
}

bool Semiring::invertible_nonzero() const noexcept {
  return kind_ != SemiringKind::MinMax;
}

Value Semiring::zero() const {
  return Value(min_oriented() ? kPosInf : kNegInf);
}

Value Semiring::one() const {
  switch (kind_) {
    case SemiringKind::MinMax: return Value(kPosInf);
    case SemiringKind::Boolean: return Value(0.0);
    default: return Value(0.0);
  }
}

Value Semiring::top() const {
  switch (kind_) {
    case SemiringKind::RMaxHat: return Value(kPosInf);
    case SemiringKind::RMinHat: return Value(kNegInf);
    case SemiringKind::Boolean: return Value(0.0);
    case SemiringKind::MinMax: return Value(kPosInf);
    default:
      throw TropError(ErrorKind::NoBound,
                      std::string(name()) + " has no top element");
  }
}

bool Semiring::admissible(double v) const noexcept {
  if (std::isnan(v)) return false;
  switch (kind_) {
    case SemiringKind::RMax: return v != kPosInf;
    case SemiringKind::RMaxHat: return true;
    case SemiringKind::RMin: return v != kNegInf;
    case SemiringKind::RMinHat: return true;
    case SemiringKind::Boolean: return v == kNegInf || v == 0.0;
    case SemiringKind::MinMax: return true;
    case SemiringKind::ZMax: return v == kNegInf || is_integral(v);
  }
  return false;
}

Value Semiring::value(double v) const {
  if (!admissible(v)) {
    throw TropError(ErrorKind::Domain, "payload inadmissible for " +
                                           std::string(name()));
  }
  return Value(v);
}

void Semiring::check(Value a) const {
  if (!admissible(a.payload())) {
    throw TropError(ErrorKind::Domain, "value inadmissible for " +
                                           std::string(name()));
  }
}

Value Semiring::add(Value a, Value b) const {
  check(a);
  check(b);
  double x = a.payload(), y = b.payload();
  return Value(min_oriented() ? std::min(x, y) : std::max(x, y));
}

Value Semiring::mul(Value a, Value b) const {
  check(a);
  check(b);
  double x = a.payload(), y = b.payload();
  if (kind_ == SemiringKind::MinMax) return Value(std::min(x, y));
  // Tropical product is +, with the semiring zero absorbing before the top;
  // this fixes the 0 (x) I = 0 convention of the Hat completions.
  const double z = zero().payload();
  if (x == z || y == z) return Value(z);
  if (std::isinf(x)) return Value(x);
  if (std::isinf(y)) return Value(y);
  return Value(x + y);
}

bool Semiring::leq(Value a, Value b) const {
  return add(a, b) == b;
}

Value Semiring::inv(Value a) const {
  check(a);
  if (!invertible_nonzero()) {
    throw TropError(ErrorKind::NotInvertible,
                    std::string(name()) + " is not a division semiring");
  }
  if (a == zero()) {
    throw TropError(ErrorKind::NotInvertible, "zero has no inverse");
  }
  if (has_top() && a == top() && !(top() == one())) {
    throw TropError(ErrorKind::NotInvertible, "the top element has no inverse");
  }
  return Value(-a.payload());
}

Value Semiring::sup(std::span<const Value> xs) const {
  Value acc = zero();
  for (Value x : xs) acc = add(acc, x);
  return acc;
}

Value Semiring::inf(std::span<const Value> xs) const {
  if (xs.empty()) {
    if (!has_top()) {
      throw TropError(ErrorKind::NoBound,
                      "inf of the empty set needs a top element");
    }
    return top();
  }
  // The carriers are totally ordered, so the greatest lower bound is the
  // plain numeric min/max.
  check(xs.front());
  double acc = xs.front().payload();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    check(xs[i]);
    double v = xs[i].payload();
    acc = min_oriented() ? std::max(acc, v) : std::min(acc, v);
  }
  return Value(acc);
}

Value Semiring::residual(Value a, Value b) const {
  check(a);
  check(b);
  if (!invertible_nonzero()) {
    throw TropError(ErrorKind::Domain,
                    "residuation needs a division semiring");
  }
  const double z = zero().payload();
  double x = a.payload(), y = b.payload();
  // b = 0: every k qualifies and inf(carrier) = 0.
  if (y == z) return zero();
  // a = 0: no k works; inf of the empty up-set is the top.
  if (x == z) {
    if (!has_top()) {
      throw TropError(ErrorKind::NoBound,
                      "residual escapes to the top; use the hat completion");
    }
    return top();
  }
  // a = top (distinct from one): every nonzero k satisfies b <= k (x) I,
  // and the nonzero elements have infimum 0.
  if (has_top() && !(top() == one()) && x == top().payload()) return zero();
  return Value(y - x);  // IEEE handles the remaining mixed-infinity cases
}

Value Semiring::dual_residual(Value a, Value b) const {
  check(a);
  check(b);
  if (!invertible_nonzero()) {
    throw TropError(ErrorKind::Domain,
                    "residuation needs a division semiring");
  }
  const double z = zero().payload();
  double x = a.payload(), y = b.payload();
  // a = 0: k (x) 0 = 0 <= b always.
  if (x == z) {
    if (!has_top()) {
      throw TropError(ErrorKind::NoBound,
                      "dual residual escapes to the top; use the hat completion");
    }
    return top();
  }
  // b = 0 with a != 0: only k = 0 works.
  if (y == z) return zero();
  if (has_top() && !(top() == one())) {
    const double t = top().payload();
    if (x == t) return y == t ? top() : zero();
    if (y == t) return top();
  }
  return Value(y - x);
}

Semiring Semiring::completed() const {
  switch (kind_) {
    case SemiringKind::RMax: return Semiring(SemiringKind::RMaxHat);
    case SemiringKind::RMin: return Semiring(SemiringKind::RMinHat);
    case SemiringKind::RMaxHat:
    case SemiringKind::RMinHat:
    case SemiringKind::Boolean:
    case SemiringKind::MinMax:
      return *this;
    case SemiringKind::ZMax:
      throw TropError(ErrorKind::Unsupported,
                      "zmax has no built-in completion");
  }
  return *this;
}

double deformed_add(double u, double v, double h) {
  if (!(h > 0.0)) {
    throw TropError(ErrorKind::Domain, "deformed addition needs h > 0");
  }
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw TropError(ErrorKind::Domain, "deformed addition needs finite summands");
  }
  const double hi = std::max(u, v);
  const double gap = std::abs(u - v);
  return hi + h * std::log1p(std::exp(-gap / h));
}

BottomAdjoinedGroup::BottomAdjoinedGroup(LatticeGroupKind kind) : kind_(kind) {}

double BottomAdjoinedGroup::zero() const { return kNegInf; }

double BottomAdjoinedGroup::one() const { return 0.0; }

double BottomAdjoinedGroup::add(double a, double b) const {
  // sup in the group order, with the adjoined bottom neutral
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  return std::max(a, b);
}

double BottomAdjoinedGroup::mul(double a, double b) const {
  if (a == kNegInf || b == kNegInf) return kNegInf;
  return a + b;
}

bool BottomAdjoinedGroup::leq(double a, double b) const {
  return add(a, b) == b;
}

double BottomAdjoinedGroup::inv(double a) const {
  if (a == kNegInf) {
    throw TropError(ErrorKind::NotInvertible, "the adjoined bottom has no inverse");
  }
  return -a;
}

Semiring BottomAdjoinedGroup::equivalent() const {
  switch (kind_) {
    case LatticeGroupKind::Reals: return Semiring(SemiringKind::RMax);
    case LatticeGroupKind::Integers: return Semiring(SemiringKind::ZMax);
  }
  throw TropError(ErrorKind::Unsupported, "unsupported group carrier");
}

BottomAdjoinedGroup adjoin_bottom(LatticeGroupKind kind) {
  if (kind != LatticeGroupKind::Reals && kind != LatticeGroupKind::Integers) {
    throw TropError(ErrorKind::Unsupported, "unsupported group carrier");
  }
  return BottomAdjoinedGroup(kind);
}

}  // namespace tropicalis
