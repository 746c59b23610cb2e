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

#include "tropicalis/cayley.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tropicalis {

namespace {

std::string subset_to_string(Subset x, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if ((x >> i) & 1u) {
      if (!first) os << ",";
      os << labels[i];
      first = false;
    }
  }
  os << "}";
  return os.str();
}

}  // namespace

CayleyStructure CayleyStructure::make(int n, std::vector<std::uint8_t> add,
                                      std::optional<std::vector<std::uint8_t>> mul,
                                      std::optional<int> zero,
                                      std::optional<int> one,
                                      std::vector<std::string> labels) {
  if (n < 1 || n > kMaxCayleyElements) {
    throw TropError(ErrorKind::Size,
                    "element count must be between 1 and 16");
  }
  auto check_table = [n](const std::vector<std::uint8_t>& t, const char* what) {
    if (static_cast<int>(t.size()) != n * n) {
      throw TropError(ErrorKind::Size, std::string(what) + " table is not n*n");
    }
    for (auto v : t) {
      if (v >= n) {
        throw TropError(ErrorKind::Domain,
                        std::string(what) + " table entry out of range");
      }
    }
  };
  check_table(add, "add");
  if (mul) check_table(*mul, "mul");
  auto check_idx = [n](std::optional<int> idx, const char* what) {
    if (idx && (*idx < 0 || *idx >= n)) {
      throw TropError(ErrorKind::Domain,
                      std::string(what) + " index out of range");
    }
  };
  check_idx(zero, "zero");
  check_idx(one, "one");
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw TropError(ErrorKind::Domain, "label count does not match n");
  }
  CayleyStructure s;
  s.n = n;
  s.add = std::move(add);
  s.mul = std::move(mul);
  s.zero_idx = zero;
  s.one_idx = one;
  s.labels = std::move(labels);
  return s;
}

FinitePoset::FinitePoset(int n, const std::vector<bool>& leq) : n_(n) {
  if (n < 1 || n > kMaxCayleyElements) {
    throw TropError(ErrorKind::Size, "poset size must be between 1 and 16");
  }
  if (static_cast<int>(leq.size()) != n * n) {
    throw TropError(ErrorKind::Size, "relation matrix is not n*n");
  }
  up_.assign(n, 0);
  low_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (leq[static_cast<std::size_t>(i) * n + j]) {
        up_[i] |= 1u << j;
        low_[j] |= 1u << i;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!this->leq(i, i)) {
      throw TropError(ErrorKind::Domain, "order not reflexive");
    }
    for (int j = 0; j < n; ++j) {
      if (i != j && this->leq(i, j) && this->leq(j, i)) {
        throw TropError(ErrorKind::Domain, "order not antisymmetric");
      }
      if (this->leq(i, j) && (up_[j] & ~up_[i]) != 0) {
        throw TropError(ErrorKind::Domain, "order not transitive");
      }
    }
  }
}

Subset FinitePoset::up_set(Subset x) const {
  Subset acc = full();
  for (int i = 0; i < n_; ++i) {
    if ((x >> i) & 1u) acc &= up_[i];
  }
  return acc;
}

Subset FinitePoset::low_set(Subset x) const {
  Subset acc = full();
  for (int i = 0; i < n_; ++i) {
    if ((x >> i) & 1u) acc &= low_[i];
  }
  return acc;
}

Subset FinitePoset::o_closure(Subset x) const { return low_set(up_set(x)); }

std::optional<int> FinitePoset::sup(Subset x) const {
  Subset bounds = up_set(x);
  for (int m = 0; m < n_; ++m) {
    if (((bounds >> m) & 1u) && (bounds & ~up_[m]) == 0) return m;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::inf(Subset x) const {
  Subset bounds = low_set(x);
  for (int m = 0; m < n_; ++m) {
    if (((bounds >> m) & 1u) && (bounds & ~low_[m]) == 0) return m;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const { return sup(full()); }

std::optional<int> FinitePoset::bottom() const { return inf(full()); }

FinitePoset standard_order(const CayleyStructure& s) {
  const int n = s.n;
  for (int i = 0; i < n; ++i) {
    if (s.add_at(i, i) != i) {
      throw TropError(ErrorKind::Axiom,
                      "addition not idempotent at " + s.label(i));
    }
    for (int j = 0; j < n; ++j) {
      if (s.add_at(i, j) != s.add_at(j, i)) {
        throw TropError(ErrorKind::Axiom, "addition not commutative at (" +
                                              s.label(i) + "," + s.label(j) + ")");
      }
      for (int k = 0; k < n; ++k) {
        if (s.add_at(s.add_at(i, j), k) != s.add_at(i, s.add_at(j, k))) {
          throw TropError(ErrorKind::Axiom,
                          "addition not associative at (" + s.label(i) + "," +
                              s.label(j) + "," + s.label(k) + ")");
        }
      }
    }
  }
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq[static_cast<std::size_t>(i) * n + j] = s.add_at(i, j) == j;
    }
  }
  return FinitePoset(n, leq);
}

CutLattice::CutLattice(const FinitePoset& source, std::vector<Subset> cuts)
    : source_(source), cuts_(std::move(cuts)) {
  // descending mask order is a linear extension of the cut order (smaller
  // cuts are larger subsets), so the bottom sits at index 0
  std::sort(cuts_.begin(), cuts_.end(), std::greater<>());
  cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
  embedding_.resize(source_.size());
  for (int x = 0; x < source_.size(); ++x) {
    embedding_[x] = index_of(source_.up_set(1u << x));
  }
  bottom_ = index_of(source_.up_set(0));
  top_ = index_of(source_.up_set(source_.full()));
}

int CutLattice::index_of(Subset cut) const {
  auto it = std::lower_bound(cuts_.begin(), cuts_.end(), cut, std::greater<>());
  if (it == cuts_.end() || *it != cut) {
    throw TropError(ErrorKind::Domain, "subset is not a cut of the lattice");
  }
  return static_cast<int>(it - cuts_.begin());
}

int CutLattice::cut_of(Subset x) const { return index_of(source_.up_set(x)); }

int CutLattice::sup_cuts(std::span<const int> idx) const {
  // sup of cuts I(X_a) is I(union X_a), i.e. the intersection of the cuts
  Subset acc = source_.full();
  bool any = false;
  for (int i : idx) {
    acc &= cuts_[i];
    any = true;
  }
  if (!any) return bottom_;
  return index_of(acc);
}

int CutLattice::inf_cuts(std::span<const int> idx) const {
  // inf is the smallest cut containing the union, Up(Low(union))
  Subset acc = 0;
  bool any = false;
  for (int i : idx) {
    acc |= cuts_[i];
    any = true;
  }
  if (!any) return top_;
  return index_of(source_.up_set(source_.low_set(acc)));
}

FinitePoset CutLattice::as_poset() const {
  const int m = size();
  if (m > kMaxCayleyElements) {
    throw TropError(ErrorKind::Size, "cut lattice too large for a poset view");
  }
  std::vector<bool> rel(static_cast<std::size_t>(m) * m, false);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      rel[static_cast<std::size_t>(i) * m + j] = leq(i, j);
    }
  }
  return FinitePoset(m, rel);
}

CutLattice macneille_completion(const FinitePoset& p) {
  if (p.size() > kMaxCayleyElements) {
    throw TropError(ErrorKind::Size, "completion supports at most 16 elements");
  }
  std::vector<Subset> cuts;
  const Subset full = p.full();
  for (Subset x = 0;; ++x) {
    cuts.push_back(p.up_set(x));
    if (x == full) break;
  }
  return CutLattice(p, std::move(cuts));
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckEntry& c) { return c.pass; });
}

int ValidationReport::passed_count() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(),
                    [](const CheckEntry& c) { return c.pass; }));
}

namespace {

void check_semigroup_axioms(const CayleyStructure& s, ValidationReport& rep) {
  CheckEntry idem{"add-idempotent", true, ""};
  CheckEntry comm{"add-commutative", true, ""};
  CheckEntry assoc{"add-associative", true, ""};
  for (int i = 0; i < s.n && idem.pass; ++i) {
    if (s.add_at(i, i) != i) {
      idem.pass = false;
      idem.witness = s.label(i);
    }
  }
  for (int i = 0; i < s.n && comm.pass; ++i) {
    for (int j = 0; j < s.n && comm.pass; ++j) {
      if (s.add_at(i, j) != s.add_at(j, i)) {
        comm.pass = false;
        comm.witness = "(" + s.label(i) + "," + s.label(j) + ")";
      }
    }
  }
  for (int i = 0; i < s.n && assoc.pass; ++i) {
    for (int j = 0; j < s.n && assoc.pass; ++j) {
      for (int k = 0; k < s.n && assoc.pass; ++k) {
        if (s.add_at(s.add_at(i, j), k) != s.add_at(i, s.add_at(j, k))) {
          assoc.pass = false;
          assoc.witness =
              "(" + s.label(i) + "," + s.label(j) + "," + s.label(k) + ")";
        }
      }
    }
  }
  rep.checks.push_back(idem);
  rep.checks.push_back(comm);
  rep.checks.push_back(assoc);
}

std::optional<int> detect_zero(const CayleyStructure& s) {
  if (s.zero_idx) return s.zero_idx;
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) ok = s.add_at(e, x) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<int> detect_one(const CayleyStructure& s) {
  if (s.one_idx) return s.one_idx;
  if (!s.mul) return std::nullopt;
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) {
      ok = s.mul_at(e, x) == x && s.mul_at(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

void check_semiring_axioms(const CayleyStructure& s, ValidationReport& rep) {
  check_semigroup_axioms(s, rep);
  if (!s.mul) {
    throw TropError(ErrorKind::Domain,
                    "semiring validation needs a mul table");
  }
  CheckEntry massoc{"mul-associative", true, ""};
  CheckEntry distl{"distributes-left", true, ""};
  CheckEntry distr{"distributes-right", true, ""};
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      for (int k = 0; k < s.n; ++k) {
        std::string w =
            "(" + s.label(i) + "," + s.label(j) + "," + s.label(k) + ")";
        if (massoc.pass &&
            s.mul_at(s.mul_at(i, j), k) != s.mul_at(i, s.mul_at(j, k))) {
          massoc.pass = false;
          massoc.witness = w;
        }
        if (distl.pass && s.mul_at(i, s.add_at(j, k)) !=
                              s.add_at(s.mul_at(i, j), s.mul_at(i, k))) {
          distl.pass = false;
          distl.witness = w;
        }
        if (distr.pass && s.mul_at(s.add_at(j, k), i) !=
                              s.add_at(s.mul_at(j, i), s.mul_at(k, i))) {
          distr.pass = false;
          distr.witness = w;
        }
      }
    }
  }
  rep.checks.push_back(massoc);
  rep.checks.push_back(distl);
  rep.checks.push_back(distr);

  auto zero = detect_zero(s);
  CheckEntry zneut{"zero-add-neutral", false, "no zero element"};
  CheckEntry zabsl{"zero-absorbs-left", false, "no zero element"};
  CheckEntry zabsr{"zero-absorbs-right", false, "no zero element"};
  if (zero) {
    const int z = *zero;
    zneut = {"zero-add-neutral", true, ""};
    for (int x = 0; x < s.n && zneut.pass; ++x) {
      if (s.add_at(z, x) != x) {
        zneut.pass = false;
        zneut.witness = s.label(x);
      }
    }
    zabsl = {"zero-absorbs-left", true, ""};
    zabsr = {"zero-absorbs-right", true, ""};
    for (int x = 0; x < s.n; ++x) {
      if (zabsl.pass && s.mul_at(z, x) != z) {
        zabsl.pass = false;
        zabsl.witness = s.label(x);
      }
      if (zabsr.pass && s.mul_at(x, z) != z) {
        zabsr.pass = false;
        zabsr.witness = s.label(x);
      }
    }
  }
  rep.checks.push_back(zneut);
  rep.checks.push_back(zabsl);
  rep.checks.push_back(zabsr);

  auto one = detect_one(s);
  CheckEntry oneutl{"one-neutral-left", false, "no unit element"};
  CheckEntry oneutr{"one-neutral-right", false, "no unit element"};
  if (one) {
    const int u = *one;
    oneutl = {"one-neutral-left", true, ""};
    oneutr = {"one-neutral-right", true, ""};
    for (int x = 0; x < s.n; ++x) {
      if (oneutl.pass && s.mul_at(u, x) != x) {
        oneutl.pass = false;
        oneutl.witness = s.label(x);
      }
      if (oneutr.pass && s.mul_at(x, u) != x) {
        oneutr.pass = false;
        oneutr.witness = s.label(x);
      }
    }
  }
  rep.checks.push_back(oneutl);
  rep.checks.push_back(oneutr);

  CheckEntry distinct{"zero-distinct-from-one", false, "missing element"};
  if (zero && one) {
    distinct.pass = *zero != *one;
    distinct.witness = distinct.pass ? "" : s.label(*zero);
  }
  rep.checks.push_back(distinct);
}

}  // namespace

ValidationReport validate_semigroup(const CayleyStructure& s) {
  ValidationReport rep;
  rep.subject = "semigroup";
  check_semigroup_axioms(s, rep);
  return rep;
}

ValidationReport validate_semiring(const CayleyStructure& s) {
  ValidationReport rep;
  rep.subject = "semiring";
  check_semiring_axioms(s, rep);
  return rep;
}

ValidationReport validate_semifield(const CayleyStructure& s) {
  ValidationReport rep;
  rep.subject = "semifield";
  check_semiring_axioms(s, rep);

  CheckEntry mcomm{"mul-commutative", true, ""};
  for (int i = 0; i < s.n && mcomm.pass; ++i) {
    for (int j = 0; j < s.n && mcomm.pass; ++j) {
      if (s.mul_at(i, j) != s.mul_at(j, i)) {
        mcomm.pass = false;
        mcomm.witness = "(" + s.label(i) + "," + s.label(j) + ")";
      }
    }
  }
  rep.checks.push_back(mcomm);

  CheckEntry inv{"nonzero-invertible", false, "no zero or unit"};
  auto zero = detect_zero(s);
  auto one = detect_one(s);
  if (zero && one) {
    inv = {"nonzero-invertible", true, ""};
    for (int x = 0; x < s.n && inv.pass; ++x) {
      if (x == *zero) continue;
      bool found = false;
      for (int y = 0; y < s.n && !found; ++y) {
        found = s.mul_at(x, y) == *one && s.mul_at(y, x) == *one;
      }
      if (!found) {
        inv.pass = false;
        inv.witness = s.label(x);
      }
    }
  }
  rep.checks.push_back(inv);
  return rep;
}

ValidationReport is_integrally_closed(const CayleyStructure& s) {
  if (!s.mul) {
    throw TropError(ErrorKind::Domain,
                    "integral closedness needs a mul table");
  }
  auto one = detect_one(s);
  if (!one) {
    throw TropError(ErrorKind::Domain,
                    "integral closedness needs a unit element");
  }
  FinitePoset order = standard_order(s);
  ValidationReport rep;
  rep.subject = "integrally-closed";
  for (int x = 0; x < s.n; ++x) {
    Subset powers = 0;
    int p = x;
    while (!((powers >> p) & 1u)) {
      powers |= 1u << p;
      p = s.mul_at(p, x);
    }
    CheckEntry e{"powers-of-" + s.label(x), true, ""};
    const bool bounded = order.up_set(powers) != 0;
    if (bounded && !order.leq(x, *one)) {
      e.pass = false;
      e.witness = "powers " + subset_to_string(powers, s.labels) +
                  " bounded but " + s.label(x) + " is not below the unit";
    }
    rep.checks.push_back(e);
  }
  return rep;
}

HomReport is_a_homomorphism(const std::vector<int>& f, const CayleyStructure& s,
                            const CayleyStructure& t, std::uint64_t sample_seed) {
  if (static_cast<int>(f.size()) != s.n) {
    throw TropError(ErrorKind::Shape, "map size does not match the source");
  }
  for (int v : f) {
    if (v < 0 || v >= t.n) {
      throw TropError(ErrorKind::Domain, "map image out of range");
    }
  }
  FinitePoset ps = standard_order(s);
  FinitePoset pt = standard_order(t);
  auto zs = ps.bottom();
  auto zt = pt.bottom();
  if (!zs || !zt) {
    throw TropError(ErrorKind::Domain,
                    "a-homomorphism check needs zero elements on both sides");
  }

  HomReport rep;
  rep.plain_homomorphism = true;
  for (int i = 0; i < s.n && rep.plain_homomorphism; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (f[s.add_at(i, j)] != t.add_at(f[i], f[j])) {
        rep.plain_homomorphism = false;
        rep.witness = "pair (" + s.label(i) + "," + s.label(j) + ")";
        break;
      }
    }
  }

  rep.zero_preserving = f[*zs] == *zt;

  auto fold_s = [&](Subset x) {
    int acc = *zs;
    for (int i = 0; i < s.n; ++i) {
      if ((x >> i) & 1u) acc = s.add_at(acc, i);
    }
    return acc;
  };
  auto fold_t_image = [&](Subset x) {
    int acc = *zt;
    for (int i = 0; i < s.n; ++i) {
      if ((x >> i) & 1u) acc = t.add_at(acc, f[i]);
    }
    return acc;
  };
  auto image_mask = [&](Subset x) {
    Subset m = 0;
    for (int i = 0; i < s.n; ++i) {
      if ((x >> i) & 1u) m |= 1u << f[i];
    }
    return m;
  };

  rep.a_homomorphism = true;
  rep.b_homomorphism = true;
  rep.a_regular = true;

  auto check_subset = [&](Subset x) {
    ++rep.subsets_checked;
    const int lhs = f[fold_s(x)];
    const int rhs = fold_t_image(x);
    if (lhs != rhs) {
      if (rep.a_homomorphism && rep.witness.empty()) {
        rep.witness = "subset " + subset_to_string(x, s.labels);
      }
      rep.a_homomorphism = false;
      // in a finite carrier every subset (including the empty one) is
      // bounded from above, so the b-condition coincides
      rep.b_homomorphism = false;
    }
    Subset closed = ps.o_closure(x);
    Subset lhs_im = image_mask(closed);
    Subset rhs_cl = pt.o_closure(image_mask(x));
    if ((lhs_im & ~rhs_cl) != 0) {
      if (rep.a_regular && rep.witness.empty()) {
        rep.witness = "o-closure of " + subset_to_string(x, s.labels);
      }
      rep.a_regular = false;
    }
  };

  if (s.n <= kMaxExhaustiveElements) {
    const Subset full = ps.full();
    for (Subset x = 0;; ++x) {
      check_subset(x);
      if (x == full) break;
    }
  } else {
    rep.exhaustive = false;
    Rng rng(sample_seed);
    check_subset(0);
    check_subset(ps.full());
    for (int trial = 0; trial < 4096; ++trial) {
      check_subset(static_cast<Subset>(rng.next()) & ps.full());
    }
  }
  return rep;
}

CayleyStructure complete_semiring(const CayleyStructure& s) {
  ValidationReport rep = validate_semiring(s);
  if (!rep.all_passed()) {
    for (const auto& c : rep.checks) {
      if (!c.pass) {
        throw TropError(ErrorKind::Axiom,
                        "not a semiring: " + c.axiom + " fails at " + c.witness);
      }
    }
  }
  // homothety regularity (the hypothesis extending the product to cuts)
  for (int y = 0; y < s.n; ++y) {
    std::vector<int> left(s.n), right(s.n);
    for (int x = 0; x < s.n; ++x) {
      left[x] = s.mul_at(x, y);
      right[x] = s.mul_at(y, x);
    }
    HomReport l = is_a_homomorphism(left, s, s);
    if (!l.a_homomorphism) {
      throw TropError(ErrorKind::Axiom, "homothety .(x)" + s.label(y) +
                                            " is not an a-homomorphism: " +
                                            l.witness);
    }
    HomReport r = is_a_homomorphism(right, s, s);
    if (!r.a_homomorphism) {
      throw TropError(ErrorKind::Axiom, "homothety " + s.label(y) +
                                            "(x). is not an a-homomorphism: " +
                                            r.witness);
    }
  }

  FinitePoset order = standard_order(s);
  CutLattice cl = macneille_completion(order);
  const int m = cl.size();
  if (m > kMaxCayleyElements) {
    throw TropError(ErrorKind::Size, "completed semiring exceeds 16 elements");
  }

  std::vector<std::uint8_t> add(static_cast<std::size_t>(m) * m);
  std::vector<std::uint8_t> mul(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int idx[2] = {i, j};
      add[static_cast<std::size_t>(i) * m + j] =
          static_cast<std::uint8_t>(cl.sup_cuts(idx));
      // product of cuts: the cut of all element products of the lower parts
      Subset li = order.low_set(cl.cut(i));
      Subset lj = order.low_set(cl.cut(j));
      Subset prods = 0;
      for (int a = 0; a < s.n; ++a) {
        if (!((li >> a) & 1u)) continue;
        for (int b = 0; b < s.n; ++b) {
          if (!((lj >> b) & 1u)) continue;
          prods |= 1u << s.mul_at(a, b);
        }
      }
      mul[static_cast<std::size_t>(i) * m + j] =
          static_cast<std::uint8_t>(cl.cut_of(prods));
    }
  }

  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "c" + std::to_string(i);
  for (int x = 0; x < s.n; ++x) labels[cl.embed(x)] = s.label(x);

  auto one = detect_one(s);
  CayleyStructure out = CayleyStructure::make(
      m, std::move(add), std::move(mul), cl.bottom(),
      one ? std::optional<int>(cl.embed(*one)) : std::nullopt,
      std::move(labels));

  // restriction to the embedded elements must reproduce the original product
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (out.mul_at(cl.embed(a), cl.embed(b)) != cl.embed(s.mul_at(a, b))) {
        throw TropError(ErrorKind::Axiom,
                        "completion product disagrees with the original at (" +
                            s.label(a) + "," + s.label(b) + ")");
      }
    }
  }
  return out;
}

}  // namespace tropicalis
