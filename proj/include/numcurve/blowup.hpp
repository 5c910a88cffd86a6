#pragma once

#include "numcurve/cofinite_set.hpp"
#include "numcurve/semigroup.hpp"

namespace numcurve {

/// S' = <m, n_2 - m, ..., n_nu - m>.
NumericalSemigroup blowup(const NumericalSemigroup& s);

/// S' as the union of lM - lM, iterated until lM is m-stable
/// ((l+1)M = m + lM), after which the chain is constant. Throws
/// StabilizationFailure when l would exceed window_end / m.
CofiniteSet blowup_by_limit(const NumericalSemigroup& s);

/// lM for l >= 0 (0M = S).
CofiniteSet power_of_maximal_ideal(const NumericalSemigroup& s, int l);

}  // namespace numcurve
