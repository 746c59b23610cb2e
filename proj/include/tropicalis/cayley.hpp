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

#ifndef TROPICALIS_CAYLEY_HPP_
#define TROPICALIS_CAYLEY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropicalis/error.hpp"
#include "tropicalis/rng.hpp"

namespace tropicalis {

// Element subsets of a structure with at most 16 elements.
using Subset = std::uint32_t;

inline constexpr int kMaxCayleyElements = 16;
// Exhaustive subset enumeration is refused above this size; checks fall
// back to documented sampling.
inline constexpr int kMaxExhaustiveElements = 12;

// A finite ordered algebraic structure given by explicit operation tables.
struct CayleyStructure {
  int n = 0;
  std::vector<std::uint8_t> add;                 // n*n, row-major
  std::optional<std::vector<std::uint8_t>> mul;  // n*n when present
  std::optional<int> zero_idx;
  std::optional<int> one_idx;
  std::vector<std::string> labels;

  static CayleyStructure make(int n, std::vector<std::uint8_t> add,
                              std::optional<std::vector<std::uint8_t>> mul = {},
                              std::optional<int> zero = {},
                              std::optional<int> one = {},
                              std::vector<std::string> labels = {});

  int add_at(int i, int j) const { return add[static_cast<std::size_t>(i) * n + j]; }
  int mul_at(int i, int j) const {
    return (*mul)[static_cast<std::size_t>(i) * n + j];
  }
  const std::string& label(int i) const { return labels[i]; }
};

class FinitePoset {
 public:
  // leq is the n*n relation matrix; poset axioms are validated here.
  FinitePoset(int n, const std::vector<bool>& leq);

  int size() const noexcept { return n_; }
  bool leq(int i, int j) const { return (up_[i] >> j) & 1u; }

  Subset full() const { return n_ == 32 ? ~0u : ((1u << n_) - 1u); }

  // Set of upper bounds of X (the cut I(X)); Up(empty) is the full carrier.
  Subset up_set(Subset x) const;
  // Set of lower bounds of X.
  Subset low_set(Subset x) const;
  // Low(Up(X)), the o-closure.
  Subset o_closure(Subset x) const;

  // Least upper / greatest lower bound of X when it exists in the carrier.
  std::optional<int> sup(Subset x) const;
  std::optional<int> inf(Subset x) const;
  std::optional<int> top() const;
  std::optional<int> bottom() const;

 private:
  int n_;
  std::vector<Subset> up_;   // up_[i] = { j : i <= j }
  std::vector<Subset> low_;  // low_[i] = { j : j <= i }
};

// Standard order of a validated idempotent-semigroup table:
// i <= j iff i (+) j = j. Throws Axiom naming the failing pair/triple when
// the table is not an idempotent commutative semigroup.
FinitePoset standard_order(const CayleyStructure& s);

// Normal (Dedekind-MacNeille) completion: the lattice of cuts I(X),
// ordered by reversed inclusion.
class CutLattice {
 public:
  CutLattice(const FinitePoset& source, std::vector<Subset> cuts);

  int size() const { return static_cast<int>(cuts_.size()); }
  Subset cut(int i) const { return cuts_[i]; }
  const FinitePoset& source() const { return source_; }

  // cut order: I1 <= I2 iff I1 contains I2
  bool leq(int i, int j) const { return (cuts_[i] & cuts_[j]) == cuts_[j]; }

  // Index of I(X) for a subset X of the source carrier.
  int cut_of(Subset x) const;
  // Index of the embedded element i(x) = I({x}).
  int embed(int element) const { return embedding_[element]; }

  int sup_cuts(std::span<const int> idx) const;  // empty -> bottom
  int inf_cuts(std::span<const int> idx) const;  // empty -> top
  int bottom() const { return bottom_; }
  int top_cut() const { return top_; }

  FinitePoset as_poset() const;

 private:
  int index_of(Subset cut) const;

  FinitePoset source_;
  std::vector<Subset> cuts_;  // sorted ascending by mask value
  std::vector<int> embedding_;
  int bottom_ = -1;
  int top_ = -1;
};

CutLattice macneille_completion(const FinitePoset& p);

struct CheckEntry {
  std::string axiom;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct ValidationReport {
  std::string subject;
  std::vector<CheckEntry> checks;

  bool all_passed() const;
  int passed_count() const;
};

ValidationReport validate_semigroup(const CayleyStructure& s);
ValidationReport validate_semiring(const CayleyStructure& s);
ValidationReport validate_semifield(const CayleyStructure& s);

// Bounded powers must force x <= one (Def of integral closedness on a
// finite monoid; the power set of each element is finite and eventually
// periodic).
ValidationReport is_integrally_closed(const CayleyStructure& s);

struct HomReport {
  bool plain_homomorphism = false;
  bool a_homomorphism = false;
  bool b_homomorphism = false;
  bool a_regular = false;
  bool zero_preserving = false;
  bool exhaustive = true;  // false when subset enumeration was refused
  int subsets_checked = 0;
  std::string witness;  // first failing subset, printable
};

// Checks g((+)X) = (+)g(X) over subsets of s (exhaustive for n <= 12,
// sampled above), plus plain/b-homomorphism status and a-regularity.
// Requires both structures to be validated idempotent semigroups with zero
// (finite complete lattices).
HomReport is_a_homomorphism(const std::vector<int>& f, const CayleyStructure& s,
                            const CayleyStructure& t,
                            std::uint64_t sample_seed = 0);

// Semiring structure on the MacNeille cut lattice with the product extended
// by sups of element products. Requires the homotheties of s to be
// a-homomorphisms; otherwise throws with a witness.
CayleyStructure complete_semiring(const CayleyStructure& s);

}  // namespace tropicalis

#endif  // TROPICALIS_CAYLEY_HPP_
