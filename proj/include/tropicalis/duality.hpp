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

#ifndef TROPICALIS_DUALITY_HPP_
#define TROPICALIS_DUALITY_HPP_

#include <span>
#include <vector>

#include "tropicalis/linalg.hpp"
#include "tropicalis/rng.hpp"
#include "tropicalis/semiring.hpp"

namespace tropicalis {

// An a-linear functional on the free finite semimodule, stored as the
// coefficient vector of f(y) = (+)_i c_i (x) y_i. Coefficients live in the
// hat completion of the scalar domain.
struct FunctionalRep {
  TropVector coeffs;

  Semiring descriptor() const { return coeffs.descriptor(); }
  int dim() const { return coeffs.size(); }
};

enum class ClosureKind { SupSpan, InfClosure };

struct GeneratorSet {
  std::vector<TropVector> generators;
  ClosureKind kind = ClosureKind::SupSpan;

  Semiring descriptor() const { return generators.front().descriptor(); }
  int dim() const { return generators.front().size(); }
};

GeneratorSet make_generator_set(std::vector<TropVector> gens, ClosureKind kind,
                                bool allow_zero_generator = false);

// Scalar domains accepted by this module: rmax/rmaxhat are promoted to
// rmaxhat, bool passes through. Everything else is rejected.
Semiring duality_domain(Semiring d);
TropVector promote_hat(const TropVector& x);

// Entrywise inverse in the completion, with the zero/top swap. Over the
// Boolean semifield this is the set complement realizing the K = {0,1}
// branch of the functional-structure theorem.
Value hat_inv(Semiring hat, Value v);
TropVector hat_inv(const TropVector& x);

// x*(y) = inf{k : y <= k (x) x}, evaluated as the join of per-coordinate
// residuals.
Value xstar_eval(const TropVector& x, const TropVector& y);

Value functional_apply(const FunctionalRep& f, const TropVector& y);

// The generator x with x* = f; unique once all-top rows are excluded.
TropVector recover_generator(const FunctionalRep& f);
// The functional x* of a generator, as a coefficient vector.
FunctionalRep functional_of_generator(const TropVector& x);

// Extension of f, prescribed on the generators of a sup-span W, to the
// whole space. Consistency of the prescription is verified by evaluating
// sampled span elements through two representations.
FunctionalRep hahn_banach_extend(std::span<const Value> values,
                                 const GeneratorSet& w, int dim,
                                 Rng& rng, int consistency_samples = 64);

// A functional separating two distinct vectors.
FunctionalRep separate(const TropVector& x, const TropVector& y);

// <f1,f2> = (+)_i f1_i (x) f2_i, the sup of the pointwise product.
Value scalar_product(const TropVector& f1, const TropVector& f2);
// [x,y] = x*(y).
Value skew_product(const TropVector& x, const TropVector& y);

struct ProjectionResult {
  TropVector value;
  // set when some coordinate is zero across all generators while x is not;
  // the projection then escapes to the top on the affected generators
  bool top_padded = false;
};

// Upper projection onto the inf-closure of W: the least element of W
// dominating x, computed as the meet of the residual-scaled generators.
ProjectionResult project_upper(const TropVector& x, const GeneratorSet& w);

// Largest element of the sup-span of W below x.
TropVector project_lower(const TropVector& x, const GeneratorSet& w);

// The element of V underlying the functional x*; dual-space arithmetic per
// the duality theorem: sums become meets and scaling inverts.
struct DualVector {
  TropVector x;
};

DualVector dual_add(const DualVector& a, const DualVector& b);
DualVector dual_scale(Value k, const DualVector& a);
TropVector double_dual(const TropVector& x);

// Riesz-Fischer representer: psi with f(y) = <psi, y> for all y.
TropVector riesz_fischer(const FunctionalRep& f);

}  // namespace tropicalis

#endif  // TROPICALIS_DUALITY_HPP_
