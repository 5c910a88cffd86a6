#include "numcurve/cofinite_set.hpp"

#include <cassert>

namespace numcurve {

CofiniteSet CofiniteSet::from_predicate(Int lo, Int hi, const std::function<bool(Int)>& pred) {
  if (hi < lo) hi = lo;
  Int first = hi;
  for (Int z = lo; z < hi; ++z) {
    if (pred(z)) {
      first = z;
      break;
    }
  }
  Int last_gap = first - 1;
  for (Int z = hi - 1; z >= first; --z) {
    if (!pred(z)) {
      last_gap = z;
      break;
    }
  }
  std::vector<bool> window(static_cast<std::size_t>(last_gap + 1 - first));
  for (Int z = first; z <= last_gap; ++z) window[static_cast<std::size_t>(z - first)] = pred(z);
  return CofiniteSet(first, std::move(window));
}

CofiniteSet CofiniteSet::ray(Int lo) { return CofiniteSet(lo, {}); }

bool CofiniteSet::contains(Int z) const {
  if (z < min_) return false;
  Int offset = z - min_;
  if (offset >= static_cast<Int>(window_.size())) return true;
  return window_[static_cast<std::size_t>(offset)];
}

std::vector<Int> CofiniteSet::members_below(Int bound) const {
  std::vector<Int> out;
  for (Int z = min_; z < bound; ++z)
    if (contains(z)) out.push_back(z);
  return out;
}

CofiniteSet CofiniteSet::shifted(Int by) const { return CofiniteSet(min_ + by, window_); }

CofiniteSet sumset(const CofiniteSet& a, const CofiniteSet& b) {
  // Any z >= cond(a) + min(b) is a member. Below that, z = x + y forces
  // x < cond(a), so only the finite part of a needs scanning.
  const Int lo = a.min() + b.min();
  const Int hi = a.conductor() + b.min();
  const auto xs = a.members_below(a.conductor());
  return CofiniteSet::from_predicate(lo, hi, [&](Int z) {
    for (Int x : xs)
      if (b.contains(z - x)) return true;
    return false;
  });
}

CofiniteSet difference(const CofiniteSet& a, const CofiniteSet& b) {
  // z + min(b) must lie in a, so z >= min(a) - min(b); once z + min(b)
  // reaches cond(a) every translate lies inside a.
  const Int lo = a.min() - b.min();
  const Int hi = a.conductor() - b.min();
  return CofiniteSet::from_predicate(lo, hi, [&](Int z) {
    for (Int y = b.min(); z + y < a.conductor(); ++y)
      if (b.contains(y) && !a.contains(z + y)) return false;
    return true;
  });
}

CofiniteSet multiple(const CofiniteSet& a, int k) {
  assert(k >= 1);
  CofiniteSet acc = a;
  for (int i = 1; i < k; ++i) acc = sumset(acc, a);
  return acc;
}

}  // namespace numcurve
