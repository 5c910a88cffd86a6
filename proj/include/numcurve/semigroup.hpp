#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numcurve/cofinite_set.hpp"

namespace numcurve {

/// A factorization z = sum coeffs[i] * n_i over the minimal generators.
struct Factorization {
  std::vector<Int> coeffs;
  Int value = 0;
  Int length = 0;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

/// Sets the window multiplier k used for newly built semigroups: the
/// membership/order tables are materialized through conductor + k*m.
/// Values below 2 are clamped to 2.
void set_window_multiplier(int k);
int window_multiplier();

/// A numerical semigroup, held by its minimal generating system.
///
/// Membership and the maximal/minimal factorization lengths are tabulated
/// over a window [0, window_end]; queries past the window extend it. The
/// table is a cache shared between copies and guarded internally, so a
/// semigroup can be read from several threads at once.
class NumericalSemigroup {
 public:
  /// Reduces `raw` to the minimal generating system. Throws Error with
  /// EmptyGenerators, ZeroGenerator (any entry < 1) or NonCoprime.
  static NumericalSemigroup from_generators(std::span<const Int> raw);
  static NumericalSemigroup from_generators(std::initializer_list<Int> raw) {
    return from_generators(std::span<const Int>(raw.begin(), raw.size()));
  }
  /// The full monoid N = <1>.
  static NumericalSemigroup natural() { return from_generators({1}); }

  const std::vector<Int>& generators() const { return generators_; }
  Int multiplicity() const { return generators_.front(); }
  Int embedding_dimension() const { return static_cast<Int>(generators_.size()); }
  /// -1 for N.
  Int frobenius() const { return frobenius_; }
  Int conductor() const { return frobenius_ + 1; }
  Int genus() const { return genus_; }
  bool is_natural() const { return frobenius_ < 0; }
  Int window_end() const;

  bool contains(Int z) const;
  /// Entry i is the least member congruent to i mod n. Throws NotAMember
  /// unless n is a positive member.
  std::vector<Int> apery_set(Int n) const;
  /// Ap_m(S) sorted ascending (the delta_1 < ... < delta_m listing).
  std::vector<Int> sorted_apery() const;
  /// Maximal factorization length; nullopt when s is not a member.
  std::optional<Int> order(Int s) const;
  /// Minimal factorization length; nullopt when s is not a member.
  std::optional<Int> min_length(Int s) const;
  /// Every factorization of z (empty when z is not a member).
  std::vector<Factorization> factorizations(Int z) const;
  /// The factorizations of z whose length equals order(z).
  std::vector<Factorization> maximal_factorizations(Int z) const;
  /// Sorted set of factorization lengths of z.
  std::vector<Int> length_set(Int z) const;
  std::vector<Int> gaps() const;

  CofiniteSet members() const;
  /// M = S \ {0}.
  CofiniteSet maximal_ideal() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  struct Cache;
  NumericalSemigroup(std::vector<Int> generators, Int frobenius, Int genus);

  /// (max length, min length); -1 marks a non-member.
  std::pair<Int, Int> lengths(Int z) const;

  std::vector<Int> generators_;
  Int frobenius_ = -1;
  Int genus_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// Parses "6,7,10" (whitespace tolerated). Throws Error(ParseError).
std::vector<Int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const Int> values);

}  // namespace numcurve
