#pragma once

#include <optional>
#include <vector>

#include "numcurve/duplication.hpp"
#include "numcurve/ideal.hpp"
#include "numcurve/semigroup.hpp"
#include "numcurve/tangent_cone.hpp"

namespace numcurve {

enum class HomogeneityContext {
  AperyElement,              ///< an Apéry element of S with several lengths
  IdealDifference,           ///< beta_i - e_j with several lengths
  MismatchAcrossGenerators,  ///< L(beta_i - e_a) != L(beta_i - e_b)
};

struct HomogeneityWitness {
  HomogeneityContext context = HomogeneityContext::AperyElement;
  Int element = 0;                ///< the Apéry element (of S or of E)
  std::vector<Int> lengths;       ///< offending length set, or the union on a mismatch
  std::vector<Int> generators;    ///< e_j involved (empty for AperyElement)
  std::vector<std::vector<Int>> length_sets;  ///< per generator, on a mismatch
};

struct HomogeneityVerdict {
  bool holds = true;
  std::optional<HomogeneityWitness> witness;
};

/// z is not in S, or all its factorizations have the same length.
bool is_homogeneous_integer(const NumericalSemigroup& s, Int z);
HomogeneityVerdict is_homogeneous_semigroup(const NumericalSemigroup& s);
/// Every beta_i - e_j is homogeneous and the non-empty L(beta_i - e_j)
/// agree across j, for each beta_i in Ap_m(E).
HomogeneityVerdict is_homogeneous_ideal(const SemigroupIdeal& e);

/// Criterion: S and E homogeneous and no element of Ap_m(S) in 2E + b.
/// Direct: T = S ⋈^b E homogeneous.
DuplicationVerdict is_homogeneous_duplication(const DuplicationInput& input);

/// If no element of Ap_m(S) is in 2E + b, then no element of Ap_m(E) is in
/// 3E + b. Returns whether the implication holds on (E, b).
bool lemma_3eb_check(const SemigroupIdeal& e, Int b);

struct HomtypeCandidate {
  Int s = 0;
  Int b = 0;
  NumericalSemigroup t;
  /// Always false: the construction never yields a homogeneous T.
  bool predicted_homogeneous = false;
  /// is_homogeneous_semigroup(T), computed directly.
  bool homogeneous = false;
  bool gr_ci = false;
};

/// All (s, b) with s in M, b odd in S and 2s + b in Ap_m(S), paired with
/// T = S ⋈^b ({s} + S). T is of homogeneous type only if S is; that
/// premise is the caller's to assert. Sorted by (s, b).
std::vector<HomtypeCandidate> homtype_candidates(const NumericalSemigroup& s);

}  // namespace numcurve
