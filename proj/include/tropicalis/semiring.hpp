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

#ifndef TROPICALIS_SEMIRING_HPP_
#define TROPICALIS_SEMIRING_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "tropicalis/error.hpp"

namespace tropicalis {

enum class SemiringKind {
  RMax,     // reals with -inf; (max, +), 0 = -inf, 1 = 0
  RMaxHat,  // RMax plus the top element +inf
  RMin,     // reals with +inf; (min, +), 0 = +inf, 1 = 0
  RMinHat,  // RMin plus the top element -inf
  Boolean,  // {0, 1}, realized as payloads {-inf, 0} inside RMax
  MinMax,   // reals with both infinities; (max, min), 0 = -inf, 1 = +inf
  ZMax,     // integers with -inf; (max, +)
};

// Extended-real payload. NaN is rejected here so every semiring operation
// is total on constructed values.
class Value {
 public:
  explicit Value(double payload);

  double payload() const noexcept { return v_; }

  friend bool operator==(Value a, Value b) noexcept { return a.v_ == b.v_; }
  friend bool operator!=(Value a, Value b) noexcept { return a.v_ != b.v_; }

 private:
  double v_;
};

// Descriptor of one of the built-in idempotent semirings. Stateless and
// copy-cheap; all operations are pure. The standard order a <= b means
// a (+) b = b.
class Semiring {
 public:
  explicit Semiring(SemiringKind kind) : kind_(kind) {}

  static std::optional<Semiring> parse(std::string_view token);

  SemiringKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  bool has_top() const noexcept;
  bool invertible_nonzero() const noexcept;

  Value zero() const;
  Value one() const;
  Value top() const;  // throws NoBound when the carrier has no top

  bool admissible(double payload) const noexcept;
  // Checked constructor: admissibility per this descriptor.
  Value value(double payload) const;

  Value add(Value a, Value b) const;
  Value mul(Value a, Value b) const;
  bool leq(Value a, Value b) const;
  Value inv(Value a) const;

  Value sup(std::span<const Value> xs) const;
  Value inf(std::span<const Value> xs) const;

  // inf{k in carrier : b <= k (x) a} in the standard order.
  Value residual(Value a, Value b) const;
  // sup{k in carrier : k (x) a <= b}; the lower adjoint used by span
  // projections.
  Value dual_residual(Value a, Value b) const;

  // Hat completion of this descriptor (identity for carriers that already
  // have a top). ZMax has no built-in completion and is rejected.
  Semiring completed() const;

  friend bool operator==(Semiring a, Semiring b) noexcept {
    return a.kind_ == b.kind_;
  }
  friend bool operator!=(Semiring a, Semiring b) noexcept {
    return a.kind_ != b.kind_;
  }

 private:
  bool min_oriented() const noexcept;  // RMin / RMinHat
  void check(Value a) const;

  SemiringKind kind_;
};

// h-deformed addition u (+)_h v = h ln(exp(u/h) + exp(v/h)), computed in
// the shifted overflow-safe form. Requires h > 0 and finite u, v.
double deformed_add(double u, double v, double h);

enum class LatticeGroupKind { Reals, Integers };

// The division semiring G_0 obtained by adjoining a bottom element to a
// lattice-ordered group, for the built-in groups (R, +, <=) and (Z, +, <=).
// Operations are defined from the group data alone; equivalent() names the
// built-in descriptor it reproduces.
class BottomAdjoinedGroup {
 public:
  explicit BottomAdjoinedGroup(LatticeGroupKind kind);

  double zero() const;  // the adjoined bottom
  double one() const;   // the group identity
  double add(double a, double b) const;
  double mul(double a, double b) const;
  bool leq(double a, double b) const;
  double inv(double a) const;

  Semiring equivalent() const;

 private:
  LatticeGroupKind kind_;
};

BottomAdjoinedGroup adjoin_bottom(LatticeGroupKind kind);

}  // namespace tropicalis

#endif  // TROPICALIS_SEMIRING_HPP_
