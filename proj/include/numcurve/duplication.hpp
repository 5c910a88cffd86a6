#pragma once

#include <vector>

#include "numcurve/ideal.hpp"
#include "numcurve/semigroup.hpp"

namespace numcurve {

/// The data (S, E, b) of a numerical duplication: E a proper ideal of S and
/// b an odd element of S.
class DuplicationInput {
 public:
  /// Throws EvenB or BNotInS.
  DuplicationInput(SemigroupIdeal ideal, Int b);

  const NumericalSemigroup& semigroup() const { return ideal_.parent(); }
  const SemigroupIdeal& ideal() const { return ideal_; }
  Int b() const { return b_; }

 private:
  SemigroupIdeal ideal_;
  Int b_;
};

/// {2 n_i} followed by {2 e_j + b}, in that order.
std::vector<Int> duplication_generators(const DuplicationInput& input);

/// S ⋈^b E = 2·S ∪ (2·E + b), built from duplication_generators.
NumericalSemigroup duplicate(const DuplicationInput& input);

/// Ap_{2m}(T) assembled from the halves: residue 2δ and 2β + b entries.
std::vector<Int> duplicate_apery_from_parts(const DuplicationInput& input);

/// kE + b, where kE is the k-fold ideal sum E + ... + E (not doubling).
RelativeIdeal sumset_shift(const SemigroupIdeal& e, Int k, Int b);

/// Checks ord_T(2s) = ord_S(s) for s in S ∩ [0, window], and that every
/// maximal factorization of t in T ∩ [0, 2 window] uses exactly t mod 2 of
/// the odd generators 2e_j + b.
bool order_transfer_check(const DuplicationInput& input, Int window);

}  // namespace numcurve
