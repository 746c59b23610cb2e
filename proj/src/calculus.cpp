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

#include "tropicalis/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tropicalis {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();
}  // namespace

SampledFunction::SampledFunction(double origin, double step,
                                 std::vector<double> values,
                                 Orientation orientation)
    : origin_(origin), step_(step), v_(std::move(values)), orient_(orientation) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(origin)) {
    throw TropError(ErrorKind::Domain, "grid needs a finite origin and step > 0");
  }
  if (v_.size() < 2) {
    throw TropError(ErrorKind::Domain, "grid needs at least 2 samples");
  }
  const double banned =
      orient_ == Orientation::MaxPlus ? kPosInf : kNegInf;
  for (double x : v_) {
    if (std::isnan(x)) {
      throw TropError(ErrorKind::Domain, "NaN sample rejected");
    }
    if (x == banned) {
      throw TropError(ErrorKind::Domain,
                      "sample equals the top of the orientation carrier");
    }
  }
}

void SampledFunction::set(int i, double v) {
  if (std::isnan(v)) {
    throw TropError(ErrorKind::Domain, "NaN sample rejected");
  }
  v_[i] = v;
}

double SampledFunction::annihilator() const {
  return orient_ == Orientation::MaxPlus ? kNegInf : kPosInf;
}

double idem_integral(const SampledFunction& phi) {
  const bool mx = phi.orientation() == Orientation::MaxPlus;
  double acc = phi.annihilator();
  for (double v : phi.values()) acc = mx ? std::max(acc, v) : std::min(acc, v);
  return acc;
}

double idem_measure(const SampledFunction& psi, std::span<const int> indices) {
  const bool mx = psi.orientation() == Orientation::MaxPlus;
  double acc = psi.annihilator();
  for (int i : indices) {
    if (i < 0 || i >= psi.size()) {
      throw TropError(ErrorKind::Domain, "measure index out of range");
    }
    acc = mx ? std::max(acc, psi.at(i)) : std::min(acc, psi.at(i));
  }
  return acc;
}

namespace {

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (a.size() != b.size() || a.origin() != b.origin() || a.step() != b.step() ||
      a.orientation() != b.orientation()) {
    throw TropError(ErrorKind::Shape, "sampled functions live on different grids");
  }
}

}  // namespace

double idem_integral_wrt(const SampledFunction& phi, const SampledFunction& psi) {
  require_same_grid(phi, psi);
  const bool mx = phi.orientation() == Orientation::MaxPlus;
  const double ann = phi.annihilator();
  double acc = ann;
  for (int i = 0; i < phi.size(); ++i) {
    double a = phi.at(i), b = psi.at(i);
    if (a == ann || b == ann) continue;  // the zero annihilates the product
    acc = mx ? std::max(acc, a + b) : std::min(acc, a + b);
  }
  return acc;
}

namespace {

// Brute conjugate value at one xi. Values with the annihilator are outside
// the effective support.
double conjugate_at(const SampledFunction& phi, std::span<const double> vals,
                    double xi) {
  double best = kNegInf;
  for (int i = 0; i < phi.size(); ++i) {
    if (vals[i] == kNegInf) continue;
    best = std::max(best, xi * phi.x_at(i) + vals[i]);
  }
  return best;
}

// Effective support must be one contiguous finite window with nonincreasing
// slopes for the fast scan to apply.
bool concave_on_support(std::span<const double> vals, int* lo_out, int* hi_out) {
  const int n = static_cast<int>(vals.size());
  int lo = -1, hi = -1;
  for (int i = 0; i < n; ++i) {
    if (vals[i] != kNegInf) {
      if (lo < 0) lo = i;
      hi = i;
    }
  }
  if (lo < 0) return false;
  for (int i = lo; i <= hi; ++i) {
    if (vals[i] == kNegInf) return false;  // support has a gap
  }
  double prev_slope = kPosInf;
  for (int i = lo; i < hi; ++i) {
    double slope = vals[i + 1] - vals[i];
    if (slope > prev_slope + 1e-12 * std::max(1.0, std::abs(prev_slope))) {
      return false;
    }
    prev_slope = slope;
  }
  *lo_out = lo;
  *hi_out = hi;
  return true;
}

}  // namespace

LegendreResult legendre(const SampledFunction& phi, const GridSpec& xi,
                        const LegendreOptions& opts) {
  if (phi.orientation() != Orientation::MaxPlus) {
    throw TropError(ErrorKind::Domain, "the transform acts on max-plus data");
  }
  if (xi.count < 1 || !(xi.step > 0.0)) {
    throw TropError(ErrorKind::Domain, "empty xi grid");
  }
  // storage needs two samples; a single requested point gets a real
  // evaluation at xi0 + step as the second one
  const int count = std::max(xi.count, 2);

  std::vector<double> vals(phi.values().begin(), phi.values().end());
  if (opts.fenchel) {
    for (double& v : vals) {
      if (v != kNegInf) v = -v;
    }
  }

  std::vector<double> out(count, kNegInf);
  int lo = 0, hi = 0;
  bool fast_ok = opts.fast && concave_on_support(vals, &lo, &hi);
  std::string note;
  if (opts.fast && !fast_ok) {
    note = "input not concave on its support; brute scan used";
  }

  if (fast_ok) {
    int ptr = lo;
    for (int q = 0; q < count; ++q) {
      const double x = xi.at(q);
      while (ptr < hi &&
             x * phi.x_at(ptr + 1) + vals[ptr + 1] >=
                 x * phi.x_at(ptr) + vals[ptr]) {
        ++ptr;
      }
      out[q] = x * phi.x_at(ptr) + vals[ptr];
    }
  } else {
    for (int q = 0; q < count; ++q) {
      out[q] = conjugate_at(phi, vals, xi.at(q));
    }
  }

  return LegendreResult{
      SampledFunction(xi.origin, xi.step, std::move(out), Orientation::MaxPlus),
      fast_ok, note};
}

SampledFunction legendre_inverse(const SampledFunction& phit,
                                 const GridSpec& xgrid) {
  if (phit.orientation() != Orientation::MaxPlus) {
    throw TropError(ErrorKind::Domain, "the transform acts on max-plus data");
  }
  if (xgrid.count < 2 || !(xgrid.step > 0.0)) {
    throw TropError(ErrorKind::Domain, "output grid needs at least 2 points");
  }
  std::vector<double> out(xgrid.count, kPosInf);
  for (int q = 0; q < xgrid.count; ++q) {
    const double x = xgrid.at(q);
    double best = kPosInf;
    for (int i = 0; i < phit.size(); ++i) {
      double v = phit.at(i);
      best = std::min(best, v == kNegInf ? kNegInf : v - phit.x_at(i) * x);
    }
    out[q] = best;
  }
  return SampledFunction(xgrid.origin, xgrid.step, std::move(out),
                         Orientation::MaxPlus);
}

namespace {

ConvolutionResult convolve(const SampledFunction& f, const SampledFunction& g,
                           Orientation want) {
  if (f.orientation() != want || g.orientation() != want) {
    throw TropError(ErrorKind::Domain, "convolution orientation mismatch");
  }
  const double h = f.step();
  if (std::abs(g.step() - h) > 1e-12 * std::max(h, g.step())) {
    throw TropError(ErrorKind::Shape, "convolution needs equal steps");
  }
  // x - y must land on g's grid: x = o_f + i h, y = o_f + k h, so the
  // offset (x - y - o_g)/h = (i - k) - o_g/h must be an integer
  const double delta = -g.origin() / h;
  const long d0 = std::lround(delta);
  if (std::abs(delta - static_cast<double>(d0)) > 1e-6) {
    throw TropError(ErrorKind::Shape, "convolution grids are not aligned");
  }

  const bool mx = want == Orientation::MaxPlus;
  const double ann = f.annihilator();
  const int n = f.size(), m = g.size();
  std::vector<double> out(n, ann);
  std::vector<char> boundary(n, 0);

  for (int i = 0; i < n; ++i) {
    // feasible window: 0 <= k < n and 0 <= (i - k) + d0 < m
    long kmin = std::max<long>(0, i + d0 - (m - 1));
    long kmax = std::min<long>(n - 1, i + d0);
    double best = ann;
    bool interior_opt = false;
    bool edge_opt = false;
    for (long k = kmin; k <= kmax; ++k) {
      double a = f.at(static_cast<int>(k));
      double b = g.at(static_cast<int>(i - k + d0));
      if (a == ann || b == ann) continue;
      double cand = a + b;
      bool better = mx ? cand > best : cand < best;
      bool tie = cand == best;
      if (better || best == ann) {
        best = cand;
        interior_opt = k != kmin && k != kmax;
        edge_opt = !interior_opt;
      } else if (tie) {
        if (k != kmin && k != kmax) interior_opt = true;
      }
    }
    out[i] = best;
    boundary[i] = best != ann && edge_opt && !interior_opt;
  }
  return ConvolutionResult{
      SampledFunction(f.origin(), h, std::move(out), want), std::move(boundary)};
}

}  // namespace

ConvolutionResult sup_convolution(const SampledFunction& phi1,
                                  const SampledFunction& phi2) {
  return convolve(phi1, phi2, Orientation::MaxPlus);
}

ConvolutionResult inf_convolution(const SampledFunction& phi1,
                                  const SampledFunction& phi2) {
  return convolve(phi1, phi2, Orientation::MinPlus);
}

HJStepResult hopf_lax_step(const HJState& state, double dt) {
  if (!(dt > 0.0)) {
    throw TropError(ErrorKind::Domain, "time step must be positive");
  }
  if (state.action.orientation() != Orientation::MinPlus) {
    throw TropError(ErrorKind::Domain, "action data must be min-plus");
  }
  const int n = state.action.size();
  const double h = state.action.step();
  const int span = n - 1;
  std::vector<double> kvals(2 * span + 1);
  for (int j = 0; j <= 2 * span; ++j) {
    const double z = (j - span) * h;
    kvals[j] = state.mass * z * z / (2.0 * dt);
  }
  SampledFunction kernel(-span * h, h, std::move(kvals), Orientation::MinPlus);
  ConvolutionResult conv = inf_convolution(state.action, kernel);
  return HJStepResult{HJState{conv.fn, state.t + dt, state.mass},
                      std::move(conv.boundary)};
}

SampledFunction cole_hopf_evolve(const SampledFunction& s0, double t, double h) {
  if (!(t > 0.0) || !(h > 0.0)) {
    throw TropError(ErrorKind::Domain, "evolution needs t > 0 and h > 0");
  }
  if (s0.orientation() != Orientation::MinPlus) {
    throw TropError(ErrorKind::Domain, "action data must be min-plus");
  }
  const int n = s0.size();
  const double step = s0.step();
  const double log_norm = 0.5 * std::log(2.0 * std::numbers::pi * h * t);

  std::vector<double> out(n, kPosInf);
  std::vector<double> args(n);
  for (int i = 0; i < n; ++i) {
    const double x = s0.x_at(i);
    int cnt = 0;
    double mx = kNegInf;
    for (int j = 0; j < n; ++j) {
      if (s0.at(j) == kPosInf) continue;
      const double y = s0.x_at(j);
      const double action = (x - y) * (x - y) / (2.0 * t) + s0.at(j);
      const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      const double a = -action / h + std::log(w * step);
      args[cnt++] = a;
      mx = std::max(mx, a);
    }
    if (cnt == 0) continue;
    double acc = 0.0;
    for (int j = 0; j < cnt; ++j) acc += std::exp(args[j] - mx);
    const double log_u = mx + std::log(acc) - log_norm;
    out[i] = -h * log_u;
  }
  return SampledFunction(s0.origin(), step, std::move(out), Orientation::MinPlus);
}

}  // namespace tropicalis
