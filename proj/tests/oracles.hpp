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

// Test-only reference implementations, kept independent of the library
// paths they check.

#ifndef TROPICALIS_TESTS_ORACLES_HPP_
#define TROPICALIS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace oracles {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Dijkstra over nonnegative weights; adjacency by dense matrix, kInf for
// missing edges.
inline std::vector<double> dijkstra(const std::vector<std::vector<double>>& w,
                                    int source) {
  const int n = static_cast<int>(w.size());
  std::vector<double> dist(n, kInf);
  std::vector<bool> done(n, false);
  dist[source] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = true;
    for (int v = 0; v < n; ++v) {
      if (w[u][v] == kInf) continue;
      if (d + w[u][v] < dist[v]) {
        dist[v] = d + w[u][v];
        pq.push({dist[v], v});
      }
    }
  }
  return dist;
}

// Boolean transitive-reflexive closure by repeated squaring.
inline std::vector<std::vector<bool>> warshall_closure(
    std::vector<std::vector<bool>> r) {
  const int n = static_cast<int>(r.size());
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (r[i][j]) continue;
        for (int k = 0; k < n; ++k) {
          if (r[i][k] && r[k][j]) {
            r[i][j] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return r;
}

// All simple paths from s to t, reduced by a fold over edge weights; used
// for exhaustive small-graph checks (min-plus, max-min, ...).
template <typename Fold>
void enumerate_paths(const std::vector<std::vector<double>>& w, int s, int t,
                     std::vector<bool>& used, double acc, Fold&& fold) {
  if (s == t) {
    fold(acc);
  }
  const int n = static_cast<int>(w.size());
  for (int v = 0; v < n; ++v) {
    if (used[v] || w[s][v] == kInf) continue;
    used[v] = true;
    enumerate_paths(w, v, t, used, acc + w[s][v], fold);
    used[v] = false;
  }
}

// min over simple paths of the path sum
inline double min_plus_path(const std::vector<std::vector<double>>& w, int s,
                            int t) {
  std::vector<bool> used(w.size(), false);
  used[s] = true;
  double best = kInf;
  enumerate_paths(w, s, t, used, 0.0, [&](double v) { best = std::min(best, v); });
  return best;
}

// max over simple paths of the min edge (bottleneck); -inf when unreachable
inline double max_min_path(const std::vector<std::vector<double>>& w, int s,
                           int t) {
  const int n = static_cast<int>(w.size());
  std::vector<bool> used(n, false);
  double best = -kInf;
  std::vector<double> stack;
  std::function<void(int, double)> go = [&](int u, double bottleneck) {
    if (u == t) {
      best = std::max(best, bottleneck);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || w[u][v] == kInf) continue;
      used[v] = true;
      go(v, std::min(bottleneck, w[u][v]));
      used[v] = false;
    }
  };
  used[s] = true;
  go(s, kInf);
  return best;
}

// Brute residuation: least k on a fine grid with b <= k + a (max-plus
// reading); scans k in [-bound, bound].
inline double brute_residual_grid(double a, double b, double bound = 64.0,
                                  double step = 1.0 / 64.0) {
  for (double k = -bound; k <= bound; k += step) {
    double prod = (a == -kInf) ? -kInf : k + a;
    if (b <= prod) return k;
  }
  return kInf;
}

// Upper concave envelope of (x_i, y_i) samples by a monotone-chain hull
// scan; returns the envelope values at the sample abscissas.
inline std::vector<double> concave_envelope(const std::vector<double>& xs,
                                            const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  std::vector<int> hull;
  auto cross = [&](int a, int b, int c) {
    return (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a]);
  };
  for (int i = 0; i < n; ++i) {
    if (ys[i] == -kInf) continue;
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), i) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(i);
  }
  std::vector<double> out(n, -kInf);
  for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
    int a = hull[seg], b = hull[seg + 1];
    for (int i = a; i <= b; ++i) {
      double t = (xs[i] - xs[a]) / (xs[b] - xs[a]);
      out[i] = ys[a] + t * (ys[b] - ys[a]);
    }
  }
  if (hull.size() == 1) out[hull[0]] = ys[hull[0]];
  return out;
}

}  // namespace oracles

#endif  // TROPICALIS_TESTS_ORACLES_HPP_
