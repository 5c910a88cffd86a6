#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numcurve/ideal.hpp"
#include "numcurve/semigroup.hpp"

namespace numcurve {

/// Bounds of an exhaustive corpus. Optional bounds default per semigroup:
/// min(E) <= f(S) + m and b <= f(S) + 2m.
struct CorpusSpec {
  Int max_genus = 8;
  Int max_multiplicity = 0;  ///< 0: no bound
  Int ideal_gen_budget = 2;
  std::optional<Int> ideal_min_bound;
  std::optional<Int> b_bound;

  Int ideal_min_bound_for(const NumericalSemigroup& s) const;
  Int b_bound_for(const NumericalSemigroup& s) const;
};

/// Every numerical semigroup with 1 <= genus <= max_genus (and
/// multiplicity <= max_multiplicity when that is positive), walking the
/// genus tree: the children of S are S \ {g} for minimal generators
/// g > f(S). Ordered by genus, then generators.
std::vector<NumericalSemigroup> enumerate_semigroups(Int max_genus, Int max_multiplicity = 0);

/// The children of S in the genus tree.
std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s);

/// Every proper ideal with at most `gen_budget` minimal generators and
/// min(E) <= min_bound. Minimal generators lie within f(S) of min(E), so
/// they are drawn from S ∩ [m, min_bound + f(S)].
std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& s, Int gen_budget, Int min_bound);

/// Odd b in S with b <= bound.
std::vector<Int> enumerate_b(const NumericalSemigroup& s, Int bound);

struct CheckTally {
  std::size_t evaluated = 0;
  std::size_t failures = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct Counterexample {
  std::string check;
  std::vector<Int> generators;
  std::vector<Int> ideal;
  std::optional<Int> b;
  std::string detail;
};

struct ValidationSummary {
  std::size_t semigroups = 0;
  std::size_t ideals = 0;
  std::size_t instances = 0;
  std::size_t stabilization_failures = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<Counterexample> counterexamples;

  std::size_t disagreements() const;
  bool ok() const { return disagreements() == 0 && stabilization_failures == 0; }
  void merge(ValidationSummary&& other);
};

/// Evaluates both sides of every duplication theorem and every structural
/// invariant on each (S, E, b) of the corpus. `jobs` > 1 fans semigroups out
/// over threads; the merged result does not depend on `jobs`.
ValidationSummary validate_corpus(const CorpusSpec& spec, unsigned jobs = 1);
ValidationSummary validate_semigroups(const std::vector<NumericalSemigroup>& semigroups, const CorpusSpec& spec,
                                      unsigned jobs = 1);

}  // namespace numcurve
