#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace numcurve {

using Int = std::int64_t;

/// A non-empty set of integers that is bounded below and contains every
/// integer from some point on. Numerical semigroups, their (relative) ideals
/// and all sums and differences of those are of this shape, so one exact
/// finite encoding covers all of them.
///
/// Stored as a bit window over [min, conductor); everything at or above the
/// conductor is a member. The encoding is canonical (min is a member, the
/// last window bit is a non-member), so equality is structural.
class CofiniteSet {
 public:
  /// Builds {z >= lo : pred(z)} assuming pred(z) holds for every z >= hi.
  static CofiniteSet from_predicate(Int lo, Int hi, const std::function<bool(Int)>& pred);
  /// [lo, +inf)
  static CofiniteSet ray(Int lo);

  bool contains(Int z) const;
  Int min() const { return min_; }
  /// Smallest c such that every integer >= c is a member.
  Int conductor() const { return min_ + static_cast<Int>(window_.size()); }
  /// Members strictly below `bound`, ascending.
  std::vector<Int> members_below(Int bound) const;

  CofiniteSet shifted(Int by) const;

  friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;

 private:
  CofiniteSet(Int min, std::vector<bool> window) : min_(min), window_(std::move(window)) {}

  Int min_ = 0;
  std::vector<bool> window_;
};

/// A + B = {a + b}.
CofiniteSet sumset(const CofiniteSet& a, const CofiniteSet& b);
/// A - B = {z : z + B is contained in A}.
CofiniteSet difference(const CofiniteSet& a, const CofiniteSet& b);
/// k-fold sumset A + ... + A, k >= 1.
CofiniteSet multiple(const CofiniteSet& a, int k);

}  // namespace numcurve
