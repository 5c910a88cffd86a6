#pragma once

#include <optional>
#include <span>
#include <vector>

#include "numcurve/cofinite_set.hpp"
#include "numcurve/semigroup.hpp"

namespace numcurve {

/// A relative ideal F of S: F + S is contained in F and s + F lies in S for
/// some s in S. Held exactly as a CofiniteSet together with its minimal
/// generators (elements of F not in F + M).
class RelativeIdeal {
 public:
  RelativeIdeal(NumericalSemigroup parent, CofiniteSet members);
  static RelativeIdeal from_generators(NumericalSemigroup parent, std::span<const Int> generators);
  static RelativeIdeal principal(NumericalSemigroup parent, Int z);

  const NumericalSemigroup& parent() const { return parent_; }
  const CofiniteSet& members() const { return members_; }
  const std::vector<Int>& generators() const { return generators_; }
  bool contains(Int z) const { return members_.contains(z); }
  Int min() const { return members_.min(); }
  RelativeIdeal shifted(Int by) const { return RelativeIdeal(parent_, members_.shifted(by)); }
  /// Entry i is the least member congruent to i mod n; n must be a positive
  /// member of the parent.
  std::vector<Int> apery(Int n) const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  NumericalSemigroup parent_;
  CofiniteSet members_;
  std::vector<Int> generators_;
};

/// A proper ideal E = {e_1, ..., e_r} + S of S (0 is never a member).
class SemigroupIdeal {
 public:
  /// Throws EmptyGenerators, GeneratorNotInS, or ZeroInIdeal.
  static SemigroupIdeal from_generators(const NumericalSemigroup& parent, std::span<const Int> raw);
  static SemigroupIdeal from_generators(const NumericalSemigroup& parent, std::initializer_list<Int> raw) {
    return from_generators(parent, std::span<const Int>(raw.begin(), raw.size()));
  }

  const NumericalSemigroup& parent() const { return parent_; }
  const std::vector<Int>& generators() const { return generators_; }
  Int min() const { return generators_.front(); }
  bool is_principal() const { return generators_.size() == 1; }
  bool contains(Int z) const;
  RelativeIdeal relative() const;

  /// Ap_n(E): entry i is the least element of E congruent to i mod n.
  /// Throws NotAMember unless n is a positive member of S.
  std::vector<Int> apery(Int n) const;
  /// Ap_m(E) sorted ascending (beta_1 < ... < beta_m).
  std::vector<Int> sorted_apery() const;
  /// ord_E(e) = max{l + 1 : e in lM + E}; nullopt when e is not in E.
  std::optional<Int> order(Int e) const;

  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    return a.parent_ == b.parent_ && a.generators_ == b.generators_;
  }

 private:
  SemigroupIdeal(NumericalSemigroup parent, std::vector<Int> generators)
      : parent_(std::move(parent)), generators_(std::move(generators)) {}

  NumericalSemigroup parent_;
  std::vector<Int> generators_;
};

/// E' = {e_1 - m, ..., e_r - m} + S', an ideal of the blowup S'.
RelativeIdeal blowup_ideal(const SemigroupIdeal& e);
/// E' from its defining union of (E + (l-1)M) - lM, iterated to stability.
/// Throws StabilizationFailure past the iteration cap.
CofiniteSet blowup_ideal_by_limit(const SemigroupIdeal& e);

struct IdealMicroinvariants {
  std::vector<Int> apery;         ///< alpha_i, by residue mod m
  std::vector<Int> blowup_apery;  ///< alpha'_i, by residue mod m
  std::vector<Int> a;
  std::vector<Int> b;
};
IdealMicroinvariants ab_vectors_ideal(const SemigroupIdeal& e);

/// K(S) = {x : f(S) - x not in S}.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);
/// E = min(E) + K(S).
bool is_canonical(const SemigroupIdeal& e);

/// F1 - F2 = {z : z + F2 is contained in F1}. Throws ParentMismatch.
RelativeIdeal ideal_difference(const RelativeIdeal& f1, const RelativeIdeal& f2);
/// F1 + F2. Throws ParentMismatch.
RelativeIdeal ideal_sum(const RelativeIdeal& f1, const RelativeIdeal& f2);

}  // namespace numcurve
