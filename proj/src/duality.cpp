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

#include "tropicalis/duality.hpp"

#include <algorithm>

namespace tropicalis {

GeneratorSet make_generator_set(std::vector<TropVector> gens, ClosureKind kind,
                                bool allow_zero_generator) {
  if (gens.empty()) {
    throw TropError(ErrorKind::Domain, "generator set must be nonempty");
  }
  GeneratorSet w;
  w.kind = kind;
  for (auto& g : gens) {
    if (g.size() != gens.front().size()) {
      throw TropError(ErrorKind::Shape, "generators have mixed dimensions");
    }
    TropVector p = promote_hat(g);
    bool all_zero = true;
    for (int i = 0; i < p.size(); ++i) {
      all_zero = all_zero && p.at(i) == p.descriptor().zero();
    }
    if (all_zero && !allow_zero_generator) {
      throw TropError(ErrorKind::Domain,
                      "all-zero generator (pass allow_zero_generator to keep it)");
    }
    w.generators.push_back(std::move(p));
  }
  return w;
}

Semiring duality_domain(Semiring d) {
  switch (d.kind()) {
    case SemiringKind::RMax:
    case SemiringKind::RMaxHat:
      return Semiring(SemiringKind::RMaxHat);
    case SemiringKind::Boolean:
      return d;
    default:
      throw TropError(ErrorKind::Unsupported,
                      "duality is built over rmax/rmaxhat/bool");
  }
}

TropVector promote_hat(const TropVector& x) {
  Semiring hat = duality_domain(x.descriptor());
  if (hat == x.descriptor()) return x;
  std::vector<Value> v(x.values().begin(), x.values().end());
  return TropVector(hat, std::move(v));
}

Value hat_inv(Semiring hat, Value v) {
  if (hat.kind() == SemiringKind::Boolean) {
    return v == hat.zero() ? hat.one() : hat.zero();
  }
  if (v == hat.zero()) return hat.top();
  if (v == hat.top()) return hat.zero();
  return hat.inv(v);
}

TropVector hat_inv(const TropVector& x) {
  TropVector v = promote_hat(x);
  Semiring hat = v.descriptor();
  std::vector<Value> out;
  out.reserve(v.size());
  for (int i = 0; i < v.size(); ++i) out.push_back(hat_inv(hat, v.at(i)));
  return TropVector(hat, std::move(out));
}

namespace {

void require_same_shape(const TropVector& a, const TropVector& b) {
  if (a.size() != b.size()) {
    throw TropError(ErrorKind::Shape, "vector dimensions differ");
  }
}

bool is_zero_vector(const TropVector& x) {
  for (int i = 0; i < x.size(); ++i) {
    if (!(x.at(i) == x.descriptor().zero())) return false;
  }
  return true;
}

bool is_top_vector(const TropVector& x) {
  if (!x.descriptor().has_top()) return false;
  for (int i = 0; i < x.size(); ++i) {
    if (!(x.at(i) == x.descriptor().top())) return false;
  }
  return true;
}

}  // namespace

Value xstar_eval(const TropVector& x0, const TropVector& y0) {
  TropVector x = promote_hat(x0), y = promote_hat(y0);
  require_same_shape(x, y);
  Semiring d = x.descriptor();
  Value acc = d.zero();
  for (int i = 0; i < x.size(); ++i) {
    acc = d.add(acc, d.residual(x.at(i), y.at(i)));
  }
  return acc;
}

Value functional_apply(const FunctionalRep& f, const TropVector& y0) {
  TropVector y = promote_hat(y0);
  require_same_shape(f.coeffs, y);
  Semiring d = f.descriptor();
  Value acc = d.zero();
  for (int i = 0; i < y.size(); ++i) {
    acc = d.add(acc, d.mul(f.coeffs.at(i), y.at(i)));
  }
  return acc;
}

TropVector recover_generator(const FunctionalRep& f) {
  if (is_zero_vector(f.coeffs)) {
    throw TropError(ErrorKind::ZeroFunctional,
                    "the zero functional has no generator");
  }
  return hat_inv(f.coeffs);
}

FunctionalRep functional_of_generator(const TropVector& x) {
  // the all-top vector yields the zero functional (all-zero coefficients)
  return FunctionalRep{hat_inv(x)};
}

FunctionalRep hahn_banach_extend(std::span<const Value> values,
                                 const GeneratorSet& w, int dim, Rng& rng,
                                 int consistency_samples) {
  if (w.kind != ClosureKind::SupSpan) {
    throw TropError(ErrorKind::Domain, "extension needs a sup-span subspace");
  }
  if (values.size() != w.generators.size()) {
    throw TropError(ErrorKind::Shape,
                    "one prescribed value per generator required");
  }
  if (dim != w.dim()) {
    throw TropError(ErrorKind::Shape,
                    "space dimension does not match the generators");
  }
  Semiring d = w.descriptor();
  if (d.kind() != SemiringKind::RMaxHat) {
    throw TropError(ErrorKind::Unsupported,
                    "extension is built over rmax/rmaxhat");
  }
  const int m = static_cast<int>(w.generators.size());

  bool all_zero = true;
  for (const Value& v : values) {
    if (!d.admissible(v.payload())) {
      throw TropError(ErrorKind::Domain, "prescribed value inadmissible");
    }
    all_zero = all_zero && v == d.zero();
  }
  if (all_zero) {
    throw TropError(ErrorKind::ZeroFunctional,
                    "all prescribed values are zero");
  }

  // x = (+)_j v_j^{-1} (x) g_j, the sup of the f-unit-ball of the span;
  // coordinates outside the support of every generator are unconstrained
  // and filled with the top, which picks the least extension
  TropVector x = TropVector::zeros(d, dim);
  for (int j = 0; j < m; ++j) {
    x = vec_add(x, vec_scale(hat_inv(d, values[j]), w.generators[j]));
  }
  for (int i = 0; i < dim; ++i) {
    bool touched = false;
    for (int j = 0; j < m && !touched; ++j) {
      touched = !(w.generators[j].at(i) == d.zero());
    }
    if (!touched) x.set(i, d.top());
  }
  FunctionalRep ext = functional_of_generator(x);

  auto span_value = [&](std::span<const Value> lambda) {
    Value acc = d.zero();
    for (int j = 0; j < m; ++j) acc = d.add(acc, d.mul(lambda[j], values[j]));
    return acc;
  };
  auto span_element = [&](std::span<const Value> lambda) {
    TropVector e = TropVector::zeros(d, dim);
    for (int j = 0; j < m; ++j) {
      e = vec_add(e, vec_scale(lambda[j], w.generators[j]));
    }
    return e;
  };

  // consistency: a sampled element evaluated through its drawn coefficients
  // and through the canonical (largest) coefficients must agree, and the
  // extension must restrict to it
  const int trials = std::max(consistency_samples, m);
  for (int t = 0; t < trials; ++t) {
    std::vector<Value> lambda;
    for (int j = 0; j < m; ++j) {
      lambda.push_back(rng.bernoulli(0.15)
                           ? d.zero()
                           : d.value(static_cast<double>(rng.uniform_int(-8, 8))));
    }
    if (t < m) {
      // make sure each plain generator is among the samples
      for (int j = 0; j < m; ++j) lambda[j] = j == t ? d.one() : d.zero();
    }
    TropVector e = span_element(lambda);
    Value drawn = span_value(lambda);

    std::vector<Value> canonical;
    for (int j = 0; j < m; ++j) {
      Value mu = d.top();
      for (int i = 0; i < dim; ++i) {
        Value bound = d.dual_residual(w.generators[j].at(i), e.at(i));
        Value two[2] = {mu, bound};
        mu = d.inf(two);
      }
      canonical.push_back(mu);
    }
    Value canon = span_value(canonical);
    if (!(canon == drawn)) {
      throw TropError(ErrorKind::Inconsistent,
                      "prescription is not well defined on the span (trial " +
                          std::to_string(t) + ")");
    }
    if (!(functional_apply(ext, e) == drawn)) {
      throw TropError(ErrorKind::Inconsistent,
                      "extension fails to restrict to the prescription (trial " +
                          std::to_string(t) + ")");
    }
  }
  return ext;
}

FunctionalRep separate(const TropVector& x0, const TropVector& y0) {
  TropVector x = promote_hat(x0), y = promote_hat(y0);
  require_same_shape(x, y);
  if (x == y) {
    throw TropError(ErrorKind::NotSeparable, "the elements are equal");
  }
  Semiring d = x.descriptor();
  if (d.kind() == SemiringKind::Boolean) {
    // the residual functionals collapse over {0,1}; a coordinate functional
    // separates instead
    for (int i = 0; i < x.size(); ++i) {
      if (!(x.at(i) == y.at(i))) {
        TropVector c = TropVector::zeros(d, x.size());
        c.set(i, d.one());
        return FunctionalRep{c};
      }
    }
  }
  // proof case split: x > y picks y*, otherwise y is not below x and x*
  // takes a value above one at y
  if (vec_leq(y, x)) {
    return functional_of_generator(y);
  }
  return functional_of_generator(x);
}

Value scalar_product(const TropVector& a0, const TropVector& b0) {
  TropVector a = promote_hat(a0), b = promote_hat(b0);
  require_same_shape(a, b);
  Semiring d = a.descriptor();
  Value acc = d.zero();
  for (int i = 0; i < a.size(); ++i) {
    acc = d.add(acc, d.mul(a.at(i), b.at(i)));
  }
  return acc;
}

Value skew_product(const TropVector& x, const TropVector& y) {
  return xstar_eval(x, y);
}

ProjectionResult project_upper(const TropVector& x0, const GeneratorSet& w) {
  if (w.kind != ClosureKind::InfClosure) {
    throw TropError(ErrorKind::Domain, "upper projection needs an inf-closure");
  }
  TropVector x = promote_hat(x0);
  if (x.size() != w.dim()) {
    throw TropError(ErrorKind::Shape, "dimension mismatch with generators");
  }
  Semiring d = x.descriptor();

  ProjectionResult res{TropVector::filled(d, x.size(), d.has_top() ? d.top() : d.zero()),
                       false};
  for (const TropVector& g : w.generators) {
    Value k = xstar_eval(g, x);
    if (k == d.top()) res.top_padded = true;
    TropVector scaled = vec_scale(k, g);
    std::vector<Value> meet;
    meet.reserve(x.size());
    for (int i = 0; i < x.size(); ++i) {
      Value two[2] = {res.value.at(i), scaled.at(i)};
      meet.push_back(d.inf(two));
    }
    res.value = TropVector(d, std::move(meet));
  }
  if (res.top_padded) {
    res.top_padded = !vec_leq(x, res.value);
  } else {
    res.top_padded = false;
  }
  return res;
}

TropVector project_lower(const TropVector& x0, const GeneratorSet& w) {
  if (w.kind != ClosureKind::SupSpan) {
    throw TropError(ErrorKind::Domain, "lower projection needs a sup-span");
  }
  TropVector x = promote_hat(x0);
  if (x.size() != w.dim()) {
    throw TropError(ErrorKind::Shape, "dimension mismatch with generators");
  }
  Semiring d = x.descriptor();
  TropVector out = TropVector::zeros(d, x.size());
  for (const TropVector& g : w.generators) {
    Value lambda = d.top();
    for (int i = 0; i < x.size(); ++i) {
      Value two[2] = {lambda, d.dual_residual(g.at(i), x.at(i))};
      lambda = d.inf(two);
    }
    out = vec_add(out, vec_scale(lambda, g));
  }
  return out;
}

DualVector dual_add(const DualVector& a, const DualVector& b) {
  TropVector x = promote_hat(a.x), y = promote_hat(b.x);
  require_same_shape(x, y);
  Semiring d = x.descriptor();
  std::vector<Value> out;
  out.reserve(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Value two[2] = {x.at(i), y.at(i)};
    out.push_back(d.inf(two));
  }
  return DualVector{TropVector(d, std::move(out))};
}

DualVector dual_scale(Value k, const DualVector& a) {
  TropVector x = promote_hat(a.x);
  Semiring d = x.descriptor();
  if (k == d.zero()) {
    throw TropError(ErrorKind::Domain, "dual scaling needs an invertible scalar");
  }
  return DualVector{vec_scale(hat_inv(d, k), x)};
}

TropVector double_dual(const TropVector& x0) {
  TropVector x = promote_hat(x0);
  if (is_top_vector(x)) {
    throw TropError(ErrorKind::Domain, "the all-top vector has no dual");
  }
  return hat_inv(hat_inv(x));
}

TropVector riesz_fischer(const FunctionalRep& f) {
  if (is_zero_vector(f.coeffs)) {
    throw TropError(ErrorKind::ZeroFunctional,
                    "the zero functional has no representer");
  }
  return f.coeffs;
}

}  // namespace tropicalis
