#include "numcurve/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "numcurve/blowup.hpp"
#include "numcurve/error.hpp"

namespace numcurve {

namespace {

void require_positive_member(const NumericalSemigroup& s, Int n) {
  if (n <= 0 || !s.contains(n))
    throw Error(ErrorKind::NotAMember, std::to_string(n) + " is not a positive element of the semigroup");
}

void require_same_parent(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.parent() == b.parent()))
    throw Error(ErrorKind::ParentMismatch, "relative ideals belong to different semigroups");
}

}  // namespace

RelativeIdeal::RelativeIdeal(NumericalSemigroup parent, CofiniteSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  const auto& gens = parent_.generators();
  const Int top = members_.conductor() + parent_.multiplicity();
  for (Int x = members_.min(); x < top; ++x) {
    if (!members_.contains(x)) continue;
    bool minimal = std::none_of(gens.begin(), gens.end(), [&](Int n) { return members_.contains(x - n); });
    if (minimal) generators_.push_back(x);
  }
}

RelativeIdeal RelativeIdeal::from_generators(NumericalSemigroup parent, std::span<const Int> generators) {
  assert(!generators.empty());
  const Int lo = *std::min_element(generators.begin(), generators.end());
  const Int hi = lo + parent.conductor();
  std::vector<Int> gens(generators.begin(), generators.end());
  auto members = CofiniteSet::from_predicate(lo, hi, [&](Int z) {
    return std::any_of(gens.begin(), gens.end(), [&](Int g) { return parent.contains(z - g); });
  });
  return RelativeIdeal(std::move(parent), std::move(members));
}

RelativeIdeal RelativeIdeal::principal(NumericalSemigroup parent, Int z) {
  auto members = parent.members().shifted(z);
  return RelativeIdeal(std::move(parent), std::move(members));
}

std::vector<Int> RelativeIdeal::apery(Int n) const {
  require_positive_member(parent_, n);
  std::vector<Int> out(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  Int found = 0;
  for (Int z = min(); found < n; ++z) {
    if (!contains(z)) continue;
    auto r = static_cast<std::size_t>(((z % n) + n) % n);
    if (seen[r]) continue;
    seen[r] = 1;
    out[r] = z;
    ++found;
  }
  return out;
}

SemigroupIdeal SemigroupIdeal::from_generators(const NumericalSemigroup& parent, std::span<const Int> raw) {
  if (raw.empty()) throw Error(ErrorKind::EmptyGenerators, "ideal generator list is empty");
  std::vector<Int> sorted(raw.begin(), raw.end());
  for (Int e : sorted) {
    if (e == 0) throw Error(ErrorKind::ZeroInIdeal, "0 would make the ideal the whole semigroup");
    if (!parent.contains(e))
      throw Error(ErrorKind::GeneratorNotInS, std::to_string(e) + " is not an element of the semigroup");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Ascending pass: a generator can only be absorbed by a smaller one.
  std::vector<Int> minimal;
  for (Int e : sorted) {
    bool absorbed = std::any_of(minimal.begin(), minimal.end(), [&](Int k) { return parent.contains(e - k); });
    if (!absorbed) minimal.push_back(e);
  }
  return SemigroupIdeal(parent, std::move(minimal));
}

bool SemigroupIdeal::contains(Int z) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](Int g) { return parent_.contains(z - g); });
}

RelativeIdeal SemigroupIdeal::relative() const { return RelativeIdeal::from_generators(parent_, generators_); }

std::vector<Int> SemigroupIdeal::apery(Int n) const {
  require_positive_member(parent_, n);
  const auto base = parent_.apery_set(n);
  std::vector<Int> out(static_cast<std::size_t>(n), -1);
  for (Int i = 0; i < n; ++i) {
    Int best = -1;
    for (Int e : generators_) {
      Int candidate = e + base[static_cast<std::size_t>((((i - e) % n) + n) % n)];
      if (best < 0 || candidate < best) best = candidate;
    }
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

std::vector<Int> SemigroupIdeal::sorted_apery() const {
  auto ap = apery(parent_.multiplicity());
  std::sort(ap.begin(), ap.end());
  return ap;
}

std::optional<Int> SemigroupIdeal::order(Int e) const {
  // lM + E is the union of e_j + lM, and lM = {s : ord_S(s) >= l}.
  std::optional<Int> best;
  for (Int g : generators_) {
    auto o = parent_.order(e - g);
    if (o && (!best || *o + 1 > *best)) best = *o + 1;
  }
  return best;
}

RelativeIdeal blowup_ideal(const SemigroupIdeal& e) {
  const Int m = e.parent().multiplicity();
  std::vector<Int> shifted;
  for (Int g : e.generators()) shifted.push_back(g - m);
  return RelativeIdeal::from_generators(blowup(e.parent()), shifted);
}

CofiniteSet blowup_ideal_by_limit(const SemigroupIdeal& e) {
  const auto& s = e.parent();
  const Int m = s.multiplicity();
  const CofiniteSet big_m = s.maximal_ideal();
  const Int cap = m + (s.window_end() + e.generators().back()) / m;
  // power = lM, shifted_ideal = E + (l-1)M; both chains become m-stable,
  // after which (E + (l-1)M) - lM no longer changes.
  CofiniteSet power = big_m;
  CofiniteSet shifted_ideal = e.relative().members();
  for (Int l = 1; l <= cap; ++l) {
    CofiniteSet next_power = sumset(power, big_m);
    CofiniteSet next_ideal = sumset(shifted_ideal, big_m);
    if (next_power == power.shifted(m) && next_ideal == shifted_ideal.shifted(m))
      return difference(shifted_ideal, power);
    power = std::move(next_power);
    shifted_ideal = std::move(next_ideal);
  }
  throw Error(ErrorKind::StabilizationFailure,
              "E + (l-1)M and lM did not become m-stable for l <= " + std::to_string(cap));
}

IdealMicroinvariants ab_vectors_ideal(const SemigroupIdeal& e) {
  const Int m = e.parent().multiplicity();
  IdealMicroinvariants out;
  out.apery = e.apery(m);
  out.blowup_apery = blowup_ideal(e).apery(m);
  for (Int i = 0; i < m; ++i) {
    const Int alpha = out.apery[static_cast<std::size_t>(i)];
    out.a.push_back((alpha - out.blowup_apery[static_cast<std::size_t>(i)]) / m);
    out.b.push_back(*e.order(alpha));
  }
  return out;
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  auto members = CofiniteSet::from_predicate(0, f + 1, [&](Int x) { return !s.contains(f - x); });
  return RelativeIdeal(s, std::move(members));
}

bool is_canonical(const SemigroupIdeal& e) {
  return e.relative().members() == canonical_ideal(e.parent()).members().shifted(e.min());
}

RelativeIdeal ideal_difference(const RelativeIdeal& f1, const RelativeIdeal& f2) {
  require_same_parent(f1, f2);
  return RelativeIdeal(f1.parent(), difference(f1.members(), f2.members()));
}

RelativeIdeal ideal_sum(const RelativeIdeal& f1, const RelativeIdeal& f2) {
  require_same_parent(f1, f2);
  return RelativeIdeal(f1.parent(), sumset(f1.members(), f2.members()));
}

}  // namespace numcurve
