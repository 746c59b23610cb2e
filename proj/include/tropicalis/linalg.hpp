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

#ifndef TROPICALIS_LINALG_HPP_
#define TROPICALIS_LINALG_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropicalis/cayley.hpp"
#include "tropicalis/rng.hpp"
#include "tropicalis/semiring.hpp"

namespace tropicalis {

// Caps library-internal parallelism; 0 or 1 means sequential. Results are
// schedule-independent (max/min reductions are exact), so this only affects
// wall time.
void set_max_threads(unsigned n);
unsigned max_threads();

class TropVector {
 public:
  TropVector(Semiring d, std::vector<Value> values);
  static TropVector filled(Semiring d, int n, Value v);
  static TropVector zeros(Semiring d, int n);

  Semiring descriptor() const { return d_; }
  int size() const { return static_cast<int>(v_.size()); }
  Value at(int i) const { return v_[i]; }
  void set(int i, Value v);
  std::span<const Value> values() const { return v_; }

  friend bool operator==(const TropVector& a, const TropVector& b);

 private:
  Semiring d_;
  std::vector<Value> v_;
};

class TropMatrix {
 public:
  TropMatrix(Semiring d, int rows, int cols, std::vector<Value> values);
  static TropMatrix filled(Semiring d, int rows, int cols, Value v);
  static TropMatrix zeros(Semiring d, int rows, int cols);
  static TropMatrix identity(Semiring d, int n);

  Semiring descriptor() const { return d_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Value at(int i, int j) const {
    return v_[static_cast<std::size_t>(i) * cols_ + j];
  }
  void set(int i, int j, Value v);
  std::span<const Value> values() const { return v_; }

  TropVector row(int i) const;
  TropVector col(int j) const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b);

 private:
  Semiring d_;
  int rows_, cols_;
  std::vector<Value> v_;
};

TropVector vec_add(const TropVector& a, const TropVector& b);
TropVector vec_scale(Value k, const TropVector& x);
bool vec_leq(const TropVector& a, const TropVector& b);

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b);
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);
TropMatrix mat_scale(Value k, const TropMatrix& a);
bool mat_leq(const TropMatrix& a, const TropMatrix& b);

// A* = I (+) A (+) A^2 (+) ... via the Floyd-Warshall-Kleene closure.
// Throws DivergenceError (with a witness cycle) when powers are unbounded,
// e.g. a negative cycle over rmin.
TropMatrix kleene_star(const TropMatrix& a);

enum class BellmanMethod { Jacobi, GaussSeidel, Closure };

std::string_view bellman_method_name(BellmanMethod m);

struct BellmanSolution {
  TropMatrix x;
  BellmanMethod method;
  int iterations = 0;
  bool converged = false;
};

// Least solution of X = H (x) X (+) F.
BellmanSolution solve_bellman(const TropMatrix& h, const TropMatrix& f,
                              BellmanMethod method);

struct Graph {
  struct Edge {
    int u, v;
    double w;
  };
  int n = 0;
  std::vector<Edge> edges;
};

struct PathResult {
  Semiring d{SemiringKind::RMin};
  int source = 0;
  std::vector<Value> dist;
  std::vector<int> pred;  // -1 at the source and at unreachable nodes
};

// Single-source distances via relaxation sweeps (the row of H* picked out
// by the source). rmax asks for longest paths and is rejected on cyclic
// graphs; rmin detects negative cycles.
PathResult shortest_paths(const Graph& g, Semiring d, int source);

// Walks predecessors back from target; empty when unreachable.
std::vector<int> reconstruct_path(const PathResult& r, int target);

// A semimodule presented by callables, for axiom validation. `meet` is
// only needed for the standardness law and may be absent.
struct SemimoduleSpec {
  std::string name;
  Semiring scalars{SemiringKind::RMax};
  std::function<TropVector(Rng&)> sample;
  std::function<Value(Rng&)> sample_scalar;
  std::function<TropVector(Value, const TropVector&)> act;
  std::function<TropVector(const TropVector&, const TropVector&)> join;
  std::function<TropVector(const TropVector&, const TropVector&)> meet;
  std::function<bool(const TropVector&)> contains;
  std::optional<TropVector> zero_vector;
  std::function<bool(const TropVector&)> is_top;
};

SemimoduleSpec free_semimodule(Semiring d, int dim);
// Example fixture: the band M = {(x,y) : |x-y| <= width} under the action
// of the constants.
SemimoduleSpec band_semimodule(double width);
// Deliberately broken action k (x) x := (k,...,k); fails the unit law.
SemimoduleSpec broken_action_semimodule(Semiring d, int dim);

ValidationReport validate_semimodule(const SemimoduleSpec& m, int samples,
                                     Rng& rng);

}  // namespace tropicalis

#endif  // TROPICALIS_LINALG_HPP_
