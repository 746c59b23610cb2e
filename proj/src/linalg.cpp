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

#include "tropicalis/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace tropicalis {

namespace {
std::atomic<unsigned> g_max_threads{1};

void parallel_rows(int rows, const std::function<void(int)>& body) {
  const unsigned want = max_threads();
  if (want <= 1 || rows < 64) {
    for (int i = 0; i < rows; ++i) body(i);
    return;
  }
  const unsigned nthreads = std::min<unsigned>(want, rows);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < rows; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

void require_same_descriptor(Semiring a, Semiring b) {
  if (a != b) {
    throw TropError(ErrorKind::Shape, "descriptor mismatch");
  }
}
}  // namespace

void set_max_threads(unsigned n) { g_max_threads.store(n == 0 ? 1 : n); }
unsigned max_threads() { return g_max_threads.load(); }

TropVector::TropVector(Semiring d, std::vector<Value> values)
    : d_(d), v_(std::move(values)) {
  for (Value x : v_) {
    if (!d_.admissible(x.payload())) {
      throw TropError(ErrorKind::Domain, "vector entry inadmissible");
    }
  }
}

TropVector TropVector::filled(Semiring d, int n, Value v) {
  return TropVector(d, std::vector<Value>(n, v));
}

TropVector TropVector::zeros(Semiring d, int n) {
  return filled(d, n, d.zero());
}

void TropVector::set(int i, Value v) {
  if (!d_.admissible(v.payload())) {
    throw TropError(ErrorKind::Domain, "vector entry inadmissible");
  }
  v_[i] = v;
}

bool operator==(const TropVector& a, const TropVector& b) {
  return a.d_ == b.d_ && a.v_ == b.v_;
}

TropMatrix::TropMatrix(Semiring d, int rows, int cols, std::vector<Value> values)
    : d_(d), rows_(rows), cols_(cols), v_(std::move(values)) {
  if (rows < 0 || cols < 0 ||
      v_.size() != static_cast<std::size_t>(rows) * cols) {
    throw TropError(ErrorKind::Shape, "matrix storage does not match its shape");
  }
  for (Value x : v_) {
    if (!d_.admissible(x.payload())) {
      throw TropError(ErrorKind::Domain, "matrix entry inadmissible");
    }
  }
}

TropMatrix TropMatrix::filled(Semiring d, int rows, int cols, Value v) {
  return TropMatrix(d, rows, cols,
                    std::vector<Value>(static_cast<std::size_t>(rows) * cols, v));
}

TropMatrix TropMatrix::zeros(Semiring d, int rows, int cols) {
  return filled(d, rows, cols, d.zero());
}

TropMatrix TropMatrix::identity(Semiring d, int n) {
  TropMatrix m = zeros(d, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, d.one());
  return m;
}

void TropMatrix::set(int i, int j, Value v) {
  if (!d_.admissible(v.payload())) {
    throw TropError(ErrorKind::Domain, "matrix entry inadmissible");
  }
  v_[static_cast<std::size_t>(i) * cols_ + j] = v;
}

TropVector TropMatrix::row(int i) const {
  std::vector<Value> out;
  out.reserve(cols_);
  for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return TropVector(d_, std::move(out));
}

TropVector TropMatrix::col(int j) const {
  std::vector<Value> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return TropVector(d_, std::move(out));
}

bool operator==(const TropMatrix& a, const TropMatrix& b) {
  return a.d_ == b.d_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.v_ == b.v_;
}

TropVector vec_add(const TropVector& a, const TropVector& b) {
  require_same_descriptor(a.descriptor(), b.descriptor());
  if (a.size() != b.size()) {
    throw TropError(ErrorKind::Shape, "vector sizes differ");
  }
  Semiring d = a.descriptor();
  std::vector<Value> out;
  out.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) out.push_back(d.add(a.at(i), b.at(i)));
  return TropVector(d, std::move(out));
}

TropVector vec_scale(Value k, const TropVector& x) {
  Semiring d = x.descriptor();
  std::vector<Value> out;
  out.reserve(x.size());
  for (int i = 0; i < x.size(); ++i) out.push_back(d.mul(k, x.at(i)));
  return TropVector(d, std::move(out));
}

bool vec_leq(const TropVector& a, const TropVector& b) {
  require_same_descriptor(a.descriptor(), b.descriptor());
  if (a.size() != b.size()) {
    throw TropError(ErrorKind::Shape, "vector sizes differ");
  }
  for (int i = 0; i < a.size(); ++i) {
    if (!a.descriptor().leq(a.at(i), b.at(i))) return false;
  }
  return true;
}

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) {
  require_same_descriptor(a.descriptor(), b.descriptor());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw TropError(ErrorKind::Shape, "matrix shapes differ");
  }
  Semiring d = a.descriptor();
  std::vector<Value> out;
  out.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    out.push_back(d.add(a.values()[i], b.values()[i]));
  }
  return TropMatrix(d, a.rows(), a.cols(), std::move(out));
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  require_same_descriptor(a.descriptor(), b.descriptor());
  if (a.cols() != b.rows()) {
    throw TropError(ErrorKind::Shape, "inner dimensions differ");
  }
  Semiring d = a.descriptor();
  TropMatrix out = TropMatrix::zeros(d, a.rows(), b.cols());
  parallel_rows(a.rows(), [&](int i) {
    for (int k = 0; k < b.cols(); ++k) {
      Value acc = d.zero();
      for (int j = 0; j < a.cols(); ++j) {
        acc = d.add(acc, d.mul(a.at(i, j), b.at(j, k)));
      }
      out.set(i, k, acc);
    }
  });
  return out;
}

TropMatrix mat_scale(Value k, const TropMatrix& a) {
  Semiring d = a.descriptor();
  std::vector<Value> out;
  out.reserve(a.values().size());
  for (Value v : a.values()) out.push_back(d.mul(k, v));
  return TropMatrix(d, a.rows(), a.cols(), std::move(out));
}

bool mat_leq(const TropMatrix& a, const TropMatrix& b) {
  require_same_descriptor(a.descriptor(), b.descriptor());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw TropError(ErrorKind::Shape, "matrix shapes differ");
  }
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (!a.descriptor().leq(a.values()[i], b.values()[i])) return false;
  }
  return true;
}

namespace {

// Witness extraction: relaxation sweeps over the weight matrix with
// predecessor tracking; after n sweeps a still-improving node sits on or
// behind an improving cycle reachable through pred[].
std::vector<int> find_improving_cycle(const TropMatrix& h) {
  Semiring d = h.descriptor();
  const int n = h.rows();
  std::vector<Value> dist(n, d.one());
  std::vector<int> pred(n, -1);
  int last_improved = -1;
  for (int pass = 0; pass < n + 1; ++pass) {
    last_improved = -1;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (h.at(u, v) == d.zero()) continue;
        Value cand = d.mul(dist[u], h.at(u, v));
        Value merged = d.add(dist[v], cand);
        if (!(merged == dist[v])) {
          dist[v] = merged;
          pred[v] = u;
          last_improved = v;
        }
      }
    }
    if (last_improved < 0) return {};
  }
  // walk back n steps to land inside the cycle, then collect it
  int node = last_improved;
  for (int i = 0; i < n && node >= 0; ++i) node = pred[node];
  if (node < 0) return {};
  std::vector<int> cycle;
  int cur = node;
  do {
    cycle.push_back(cur);
    cur = pred[cur];
  } while (cur >= 0 && cur != node && static_cast<int>(cycle.size()) <= n);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

[[noreturn]] void throw_divergence(const TropMatrix& h) {
  std::vector<int> cycle = find_improving_cycle(h);
  std::string msg = "iteration diverges; improving cycle:";
  for (int v : cycle) msg += " " + std::to_string(v);
  throw DivergenceError(msg, std::move(cycle));
}

// Closure of a scalar: one when c <= one, c itself when c is idempotent
// (e.g. the top element), otherwise the powers are unbounded.
std::optional<Value> scalar_star(Semiring d, Value c) {
  if (d.leq(c, d.one())) return d.one();
  if (d.mul(c, c) == c) return d.add(d.one(), c);
  return std::nullopt;
}

}  // namespace

TropMatrix kleene_star(const TropMatrix& a) {
  if (a.rows() != a.cols()) {
    throw TropError(ErrorKind::Shape, "star needs a square matrix");
  }
  Semiring d = a.descriptor();
  const int n = a.rows();
  TropMatrix m = a;
  for (int k = 0; k < n; ++k) {
    auto st = scalar_star(d, m.at(k, k));
    if (!st) throw_divergence(a);
    const Value s = *st;
    // snapshot the pivot row and column so the sweep is order-independent
    std::vector<Value> rowk, colk;
    rowk.reserve(n);
    colk.reserve(n);
    for (int j = 0; j < n; ++j) rowk.push_back(d.mul(s, m.at(k, j)));
    for (int i = 0; i < n; ++i) colk.push_back(m.at(i, k));
    parallel_rows(n, [&](int i) {
      for (int j = 0; j < n; ++j) {
        m.set(i, j, d.add(m.at(i, j), d.mul(colk[i], rowk[j])));
      }
    });
  }
  TropMatrix star = mat_add(TropMatrix::identity(d, n), m);
  // merge sweeps settle the fixpoint and double as the divergence test: an
  // instance whose entries still improve after n extra sweeps has an
  // improving cycle (the pivot test alone can miss one that closes late)
  for (int sweep = 0; sweep <= n; ++sweep) {
    TropMatrix merged = mat_add(
        star, mat_add(TropMatrix::identity(d, n), mat_mul(a, star)));
    if (merged == star) return star;
    star = merged;
  }
  throw_divergence(a);
}

std::string_view bellman_method_name(BellmanMethod m) {
  switch (m) {
    case BellmanMethod::Jacobi: return "jacobi";
    case BellmanMethod::GaussSeidel: return "gauss_seidel";
    case BellmanMethod::Closure: return "closure";
  }
  return "?";
}

BellmanSolution solve_bellman(const TropMatrix& h, const TropMatrix& f,
                              BellmanMethod method) {
  if (h.rows() != h.cols()) {
    throw TropError(ErrorKind::Shape, "system matrix must be square");
  }
  require_same_descriptor(h.descriptor(), f.descriptor());
  if (f.rows() != h.rows()) {
    throw TropError(ErrorKind::Shape, "right-hand side rows differ");
  }
  Semiring d = h.descriptor();
  const int n = h.rows();

  if (method == BellmanMethod::Closure) {
    TropMatrix x = mat_mul(kleene_star(h), f);
    return BellmanSolution{x, method, 0, true};
  }

  TropMatrix x = f;
  // the iterates are nondecreasing and reach the least fixpoint within n
  // sweeps when the powers of h are bounded
  for (int it = 1; it <= n + 1; ++it) {
    bool changed = false;
    if (method == BellmanMethod::Jacobi) {
      TropMatrix next = mat_add(mat_mul(h, x), f);
      changed = !(next == x);
      x = next;
    } else {
      for (int i = 0; i < n; ++i) {
        for (int c = 0; c < f.cols(); ++c) {
          Value acc = f.at(i, c);
          for (int j = 0; j < n; ++j) {
            acc = d.add(acc, d.mul(h.at(i, j), x.at(j, c)));
          }
          if (!(acc == x.at(i, c))) {
            x.set(i, c, acc);
            changed = true;
          }
        }
      }
    }
    if (!changed) {
      return BellmanSolution{x, method, it, true};
    }
  }
  throw_divergence(h);
}

PathResult shortest_paths(const Graph& g, Semiring d, int source) {
  if (source < 0 || source >= g.n) {
    throw TropError(ErrorKind::Domain, "source node out of range");
  }
  const bool longest = d.kind() == SemiringKind::RMax ||
                       d.kind() == SemiringKind::RMaxHat ||
                       d.kind() == SemiringKind::ZMax;
  if (longest) {
    // Kahn topological check: longest path is only defined on a DAG
    std::vector<int> indeg(g.n, 0);
    for (const auto& e : g.edges) ++indeg[e.v];
    std::vector<int> queue;
    for (int i = 0; i < g.n; ++i) {
      if (indeg[i] == 0) queue.push_back(i);
    }
    int seen = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      ++seen;
      for (const auto& e : g.edges) {
        if (e.u == queue[qi] && --indeg[e.v] == 0) queue.push_back(e.v);
      }
    }
    if (seen != g.n) {
      throw TropError(ErrorKind::Domain,
                      "longest path asked on a cyclic graph");
    }
  }

  TropMatrix h = TropMatrix::zeros(d, g.n, g.n);
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n) {
      throw TropError(ErrorKind::Domain, "edge endpoint out of range");
    }
    h.set(e.u, e.v, d.add(h.at(e.u, e.v), d.value(e.w)));
  }

  PathResult r;
  r.d = d;
  r.source = source;
  r.dist.assign(g.n, d.zero());
  r.pred.assign(g.n, -1);
  r.dist[source] = d.one();

  // relaxation sweeps (Bellman / Ford); predecessors recorded at strict
  // improvements, the ascending edge scan breaks ties toward the smallest
  // predecessor index
  for (int pass = 0; pass < g.n + 1; ++pass) {
    bool changed = false;
    for (int u = 0; u < g.n; ++u) {
      for (int v = 0; v < g.n; ++v) {
        if (h.at(u, v) == d.zero()) continue;
        Value cand = d.mul(r.dist[u], h.at(u, v));
        Value merged = d.add(r.dist[v], cand);
        if (!(merged == r.dist[v])) {
          r.dist[v] = merged;
          r.pred[v] = u;
          changed = true;
        }
      }
    }
    if (!changed) return r;
  }
  throw_divergence(h);
}

std::vector<int> reconstruct_path(const PathResult& r, int target) {
  if (target < 0 || target >= static_cast<int>(r.dist.size())) {
    throw TropError(ErrorKind::Domain, "target node out of range");
  }
  if (r.dist[target] == r.d.zero()) return {};
  std::vector<int> path;
  int cur = target;
  while (cur != -1) {
    path.push_back(cur);
    if (cur == r.source) break;
    cur = r.pred[cur];
    if (path.size() > r.dist.size()) {
      throw TropError(ErrorKind::Domain, "predecessor walk does not terminate");
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

SemimoduleSpec free_semimodule(Semiring d, int dim) {
  SemimoduleSpec m;
  m.name = "free-" + std::string(d.name()) + "-" + std::to_string(dim);
  m.scalars = d;
  m.sample = [d, dim](Rng& rng) {
    std::vector<Value> v;
    v.reserve(dim);
    for (int i = 0; i < dim; ++i) {
      double roll = rng.unit();
      if (roll < 0.1) {
        v.push_back(d.zero());
      } else if (roll < 0.2 && d.has_top()) {
        v.push_back(d.top());
      } else {
        v.push_back(d.value(static_cast<double>(rng.uniform_int(-20, 20))));
      }
    }
    return TropVector(d, std::move(v));
  };
  m.sample_scalar = [d](Rng& rng) {
    double roll = rng.unit();
    if (roll < 0.1) return d.zero();
    return d.value(static_cast<double>(rng.uniform_int(-20, 20)));
  };
  m.act = [](Value k, const TropVector& x) { return vec_scale(k, x); };
  m.join = [](const TropVector& a, const TropVector& b) {
    return vec_add(a, b);
  };
  m.meet = [d](const TropVector& a, const TropVector& b) {
    std::vector<Value> out;
    out.reserve(a.size());
    for (int i = 0; i < a.size(); ++i) {
      Value xs[2] = {a.at(i), b.at(i)};
      out.push_back(d.inf(xs));
    }
    return TropVector(d, std::move(out));
  };
  m.contains = [](const TropVector&) { return true; };
  m.zero_vector = TropVector::zeros(d, dim);
  m.is_top = [d, dim](const TropVector& x) {
    if (!d.has_top()) return false;
    for (int i = 0; i < dim; ++i) {
      if (!(x.at(i) == d.top())) return false;
    }
    return true;
  };
  return m;
}

SemimoduleSpec band_semimodule(double width) {
  // the (V,K)-type fixture: pairs within a fixed distance of the diagonal,
  // acted on by the constant functions
  Semiring d(SemiringKind::RMax);
  SemimoduleSpec m;
  m.name = "band";
  m.scalars = d;
  m.sample = [d, width](Rng& rng) {
    // dyadic samples strictly inside the band: sums stay exact and the
    // membership boundary cannot be crossed by rounding
    double x = static_cast<double>(rng.uniform_int(-160, 160)) / 16.0;
    double delta =
        width * static_cast<double>(rng.uniform_int(-15, 15)) / 16.0;
    std::vector<Value> v{d.value(x), d.value(x + delta)};
    return TropVector(d, std::move(v));
  };
  m.sample_scalar = [d](Rng& rng) {
    return d.value(static_cast<double>(rng.uniform_int(-80, 80)) / 16.0);
  };
  m.act = [](Value k, const TropVector& x) { return vec_scale(k, x); };
  m.join = [](const TropVector& a, const TropVector& b) {
    return vec_add(a, b);
  };
  m.contains = [width](const TropVector& v) {
    return std::abs(v.at(0).payload() - v.at(1).payload()) <= width;
  };
  m.is_top = [](const TropVector&) { return false; };
  return m;
}

SemimoduleSpec broken_action_semimodule(Semiring d, int dim) {
  SemimoduleSpec m = free_semimodule(d, dim);
  m.name = "broken-action";
  m.act = [d, dim](Value k, const TropVector&) {
    return TropVector::filled(d, dim, k);
  };
  m.meet = nullptr;
  m.zero_vector.reset();
  return m;
}

ValidationReport validate_semimodule(const SemimoduleSpec& m, int samples,
                                     Rng& rng) {
  ValidationReport rep;
  rep.subject = "semimodule " + m.name;
  Semiring d = m.scalars;

  CheckEntry assoc{"action-associative", true, ""};    // (k1 k2) x = k1 (k2 x)
  CheckEntry dist_k{"distributes-scalars", true, ""};  // (k1+k2) x
  CheckEntry dist_v{"distributes-vectors", true, ""};  // k (x+y)
  CheckEntry unit{"unit-action", true, ""};            // 1 x = x
  CheckEntry zero{"zero-action", true, ""};            // 0_K x = 0_V
  CheckEntry standard{"standardness", true, ""};       // (inf Q) x = inf (Q x)
  CheckEntry closed{"closed", true, ""};

  for (int t = 0; t < samples; ++t) {
    TropVector x = m.sample(rng);
    TropVector y = m.sample(rng);
    Value k1 = m.sample_scalar(rng);
    Value k2 = m.sample_scalar(rng);

    if (assoc.pass &&
        !(m.act(d.mul(k1, k2), x) == m.act(k1, m.act(k2, x)))) {
      assoc.pass = false;
      assoc.witness = "trial " + std::to_string(t);
    }
    if (dist_k.pass &&
        !(m.act(d.add(k1, k2), x) == m.join(m.act(k1, x), m.act(k2, x)))) {
      dist_k.pass = false;
      dist_k.witness = "trial " + std::to_string(t);
    }
    if (dist_v.pass &&
        !(m.act(k1, m.join(x, y)) == m.join(m.act(k1, x), m.act(k1, y)))) {
      dist_v.pass = false;
      dist_v.witness = "trial " + std::to_string(t);
    }
    if (unit.pass && !(m.act(d.one(), x) == x)) {
      unit.pass = false;
      unit.witness = "trial " + std::to_string(t);
    }
    if (m.zero_vector && zero.pass &&
        !(m.act(d.zero(), x) == *m.zero_vector)) {
      zero.pass = false;
      zero.witness = "trial " + std::to_string(t);
    }
    if (m.meet && standard.pass && !m.is_top(x)) {
      const int qn = 2 + static_cast<int>(rng.uniform_int(0, 3));
      std::vector<Value> q;
      for (int i = 0; i < qn; ++i) q.push_back(m.sample_scalar(rng));
      Value qinf = d.inf(q);
      TropVector lhs = m.act(qinf, x);
      TropVector rhs = m.act(q[0], x);
      for (int i = 1; i < qn; ++i) rhs = m.meet(rhs, m.act(q[i], x));
      if (!(lhs == rhs)) {
        standard.pass = false;
        standard.witness = "trial " + std::to_string(t);
      }
    }
    if (m.contains && closed.pass) {
      if (!m.contains(m.act(k1, x)) || !m.contains(m.join(x, y))) {
        closed.pass = false;
        closed.witness = "trial " + std::to_string(t);
      }
    }
  }

  rep.checks.push_back(assoc);
  rep.checks.push_back(dist_k);
  rep.checks.push_back(dist_v);
  rep.checks.push_back(unit);
  if (m.zero_vector) rep.checks.push_back(zero);
  if (m.meet) rep.checks.push_back(standard);
  if (m.contains) rep.checks.push_back(closed);
  return rep;
}

}  // namespace tropicalis
