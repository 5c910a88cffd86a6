#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numcurve/blowup.hpp"
#include "numcurve/duplication.hpp"
#include "numcurve/ideal.hpp"
#include "numcurve/semigroup.hpp"

namespace numcurve {

/// Apéry set against `base` (the multiplicity) with the microinvariants:
/// elements[i] = blowup_elements[i] + base * a[i], b[i] = order of elements[i].
struct AperyProfile {
  Int base = 1;
  std::vector<Int> elements;
  std::vector<Int> blowup_elements;
  std::vector<Int> a;
  std::vector<Int> b;

  friend bool operator==(const AperyProfile&, const AperyProfile&) = default;
};

AperyProfile ab_vectors(const NumericalSemigroup& s);
AperyProfile ab_vectors(const SemigroupIdeal& e);

/// a == b, with the first residue where they differ.
struct ResidueVerdict {
  bool holds = true;
  std::optional<Int> failing_residue;
};

ResidueVerdict compare_ab(const AperyProfile& profile);
/// gr_m(k[[S]]) is Cohen-Macaulay.
ResidueVerdict is_gr_cm(const NumericalSemigroup& s);
/// gr_m(I) is a Cohen-Macaulay module, I the monomial ideal of E.
ResidueVerdict is_gr_ideal_cm(const SemigroupIdeal& e);

/// The finite forms of the order conditions equivalent to a == b:
/// ord(e + m) = ord(e) + 1 over a window of E (resp. M), and
/// ord(w + λm) = ord(w) + λ along each Apéry ray. The windows reach past
/// the point where lM and E + lM become m-stable, so a failure of a == b
/// always shows up inside them.
bool ideal_order_step_condition(const SemigroupIdeal& e);
bool ideal_apery_ray_condition(const SemigroupIdeal& e);
bool order_step_condition(const NumericalSemigroup& s);
bool apery_ray_condition(const NumericalSemigroup& s);

struct MPurity {
  bool is_mpure = true;
  std::vector<Int> maximal_elements;  ///< ascending
  std::vector<Int> orders;            ///< order of each maximal element
};
MPurity mpure(const NumericalSemigroup& s);

/// delta_i + delta_{m-i+1} = delta_m over the sorted Apéry set.
bool is_symmetric(const NumericalSemigroup& s);
/// K(S) = S; the same property computed through the canonical ideal.
bool is_symmetric_by_canonical(const NumericalSemigroup& s);

/// gr_m(ω_R) is a canonical module of gr_m(R): CM and M-pure.
bool expected_canonical_module(const NumericalSemigroup& s);
/// gr_m(R) Gorenstein: CM, M-pure and symmetric.
bool is_gr_gorenstein(const NumericalSemigroup& s);

struct BetaGammaProfile {
  std::vector<Int> generators;  ///< n_2, ..., n_nu
  std::vector<Int> beta;
  std::vector<Int> gamma;
  std::vector<Int> beta_box;   ///< B(S) as a sorted value set
  std::vector<Int> gamma_box;  ///< Γ(S) as a sorted value set
  Int beta_tuple_count = 1;    ///< prod (beta_i + 1), saturating
  Int gamma_tuple_count = 1;
  bool is_beta_rect = false;
  bool is_gamma_rect = false;
};
BetaGammaProfile beta_gamma_profile(const NumericalSemigroup& s);
/// gr_m(R) complete intersection: CM with γ-rectangular Apéry set.
bool is_gr_ci(const NumericalSemigroup& s);

/// Both sides of a duplication theorem: the criterion on (S, E, b) and the
/// property evaluated directly on T = S ⋈^b E.
struct DuplicationVerdict {
  bool criterion = false;
  bool direct = false;
  bool agree() const { return criterion == direct; }
};

DuplicationVerdict is_dup_cm(const DuplicationInput& input);
DuplicationVerdict is_dup_gorenstein(const DuplicationInput& input);
DuplicationVerdict is_dup_ci(const DuplicationInput& input);
DuplicationVerdict gamma_rect_transfer(const DuplicationInput& input);
DuplicationVerdict beta_rect_transfer(const DuplicationInput& input);

/// A machine-checkable reason for a verdict.
struct Witness {
  std::string kind;
  std::map<std::string, std::vector<Int>> fields;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Named verdicts; every false verdict carries a witness.
struct PropertyReport {
  std::map<std::string, bool> verdicts;
  std::map<std::string, Witness> witnesses;

  void record(const std::string& name, bool verdict, std::optional<Witness> witness = std::nullopt);

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// Every single-semigroup predicate with witnesses for the false ones.
PropertyReport semigroup_report(const NumericalSemigroup& s);

}  // namespace numcurve
