#include "numcurve/blowup.hpp"

#include <algorithm>

#include "numcurve/error.hpp"

namespace numcurve {

NumericalSemigroup blowup(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  std::vector<Int> gens{m};
  for (std::size_t i = 1; i < s.generators().size(); ++i) gens.push_back(s.generators()[i] - m);
  return NumericalSemigroup::from_generators(gens);
}

CofiniteSet power_of_maximal_ideal(const NumericalSemigroup& s, int l) {
  if (l <= 0) return s.members();
  return multiple(s.maximal_ideal(), l);
}

CofiniteSet blowup_by_limit(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  const CofiniteSet big_m = s.maximal_ideal();
  // The reduction number of M is at most m - 1.
  const Int cap = m + s.window_end() / m;
  CofiniteSet power = big_m;
  for (Int l = 1; l <= cap; ++l) {
    CofiniteSet next = sumset(power, big_m);
    if (next == power.shifted(m)) return difference(power, power);
    power = std::move(next);
  }
  throw Error(ErrorKind::StabilizationFailure,
              "lM did not become m-stable for l <= " + std::to_string(cap));
}

}  // namespace numcurve
