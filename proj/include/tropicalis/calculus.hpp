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

#ifndef TROPICALIS_CALCULUS_HPP_
#define TROPICALIS_CALCULUS_HPP_

#include <span>
#include <string>
#include <vector>

#include "tropicalis/error.hpp"

namespace tropicalis {

enum class Orientation { MaxPlus, MinPlus };

// A function R -> completed semiring sampled on a uniform grid. MaxPlus
// grids may hold -inf (the rmax zero), MinPlus grids +inf.
class SampledFunction {
 public:
  SampledFunction(double origin, double step, std::vector<double> values,
                  Orientation orientation);

  double origin() const { return origin_; }
  double step() const { return step_; }
  Orientation orientation() const { return orient_; }
  int size() const { return static_cast<int>(v_.size()); }
  double x_at(int i) const { return origin_ + step_ * i; }
  double at(int i) const { return v_[i]; }
  std::span<const double> values() const { return v_; }
  void set(int i, double v);

  // the annihilating element for this orientation (-inf or +inf)
  double annihilator() const;

 private:
  double origin_, step_;
  std::vector<double> v_;
  Orientation orient_;
};

struct GridSpec {
  double origin = 0.0;
  double step = 1.0;
  int count = 0;

  double at(int i) const { return origin + step * i; }
};

// sup of the samples for max-plus, inf for min-plus.
double idem_integral(const SampledFunction& phi);

// sup of psi over an index subset; the empty subset gives the zero.
double idem_measure(const SampledFunction& psi, std::span<const int> indices);

// sup (or inf) of the pointwise product phi (x) psi on a shared grid.
double idem_integral_wrt(const SampledFunction& phi, const SampledFunction& psi);

struct LegendreOptions {
  bool fenchel = false;  // sup(xi x - phi) instead of the default sup(xi x + phi)
  bool fast = false;     // linear-time scan; needs a concave effective input
};

struct LegendreResult {
  SampledFunction fn;
  bool used_fast = false;
  std::string note;  // set when the fast path was refused
};

LegendreResult legendre(const SampledFunction& phi, const GridSpec& xi,
                        const LegendreOptions& opts = {});

// Inverse of the default-sign transform: phi(x) = inf_xi(phit(xi) - xi x).
// Recovers concave inputs up to grid tolerance.
SampledFunction legendre_inverse(const SampledFunction& phit,
                                 const GridSpec& xgrid);

struct ConvolutionResult {
  SampledFunction fn;
  // flags outputs whose optimizer sits on the edge of the feasible window;
  // those samples are grid-truncation artifacts
  std::vector<char> boundary;
};

// (phi1 * phi2)(x) = sup_y(phi1(y) + phi2(x - y)) on phi1's grid.
ConvolutionResult sup_convolution(const SampledFunction& phi1,
                                  const SampledFunction& phi2);
// inf_y(phi1(y) + phi2(x - y)); both inputs min-plus.
ConvolutionResult inf_convolution(const SampledFunction& phi1,
                                  const SampledFunction& phi2);

struct HJState {
  SampledFunction action;  // min-plus S(., t)
  double t = 0.0;
  double mass = 1.0;
};

struct HJStepResult {
  HJState state;
  std::vector<char> boundary;
};

// Lax-Oleinik propagation for the free particle:
// S(x, t+dt) = inf_y [S(y,t) + m (x-y)^2 / (2 dt)].
HJStepResult hopf_lax_step(const HJState& state, double dt);

// Heat-kernel smoothing of u = exp(-S0/h) in the log domain, returning
// S_h = -h ln u at time t (free particle, unit mass). Trapezoid quadrature
// with the shifted log-sum-exp.
SampledFunction cole_hopf_evolve(const SampledFunction& s0, double t, double h);

}  // namespace tropicalis

#endif  // TROPICALIS_CALCULUS_HPP_
