#include "numcurve/homogeneity.hpp"

#include <algorithm>

namespace numcurve {

bool is_homogeneous_integer(const NumericalSemigroup& s, Int z) {
  auto hi = s.order(z);
  return !hi || *hi == *s.min_length(z);
}

HomogeneityVerdict is_homogeneous_semigroup(const NumericalSemigroup& s) {
  for (Int w : s.sorted_apery()) {
    if (!is_homogeneous_integer(s, w))
      return {false, HomogeneityWitness{HomogeneityContext::AperyElement, w, s.length_set(w), {}, {}}};
  }
  return {};
}

HomogeneityVerdict is_homogeneous_ideal(const SemigroupIdeal& e) {
  const auto& s = e.parent();
  for (Int beta : e.sorted_apery()) {
    std::optional<Int> first_gen;
    std::optional<Int> first_len;
    for (Int g : e.generators()) {
      const Int z = beta - g;
      if (!is_homogeneous_integer(s, z))
        return {false, HomogeneityWitness{HomogeneityContext::IdealDifference, beta, s.length_set(z), {g}, {}}};
      auto len = s.order(z);
      if (!len) continue;
      if (!first_len) {
        first_gen = g;
        first_len = len;
      } else if (*first_len != *len) {
        std::vector<Int> lengths{*first_len, *len};
        std::sort(lengths.begin(), lengths.end());
        return {false, HomogeneityWitness{HomogeneityContext::MismatchAcrossGenerators, beta, lengths,
                                          {*first_gen, g}, {{*first_len}, {*len}}}};
      }
    }
  }
  return {};
}

DuplicationVerdict is_homogeneous_duplication(const DuplicationInput& input) {
  const auto& s = input.semigroup();
  const auto doubled = sumset_shift(input.ideal(), 2, input.b());
  const auto ap = s.apery_set(s.multiplicity());
  const bool avoids = std::none_of(ap.begin(), ap.end(), [&](Int d) { return doubled.contains(d); });
  const bool criterion =
      is_homogeneous_semigroup(s).holds && is_homogeneous_ideal(input.ideal()).holds && avoids;
  return {criterion, is_homogeneous_semigroup(duplicate(input)).holds};
}

bool lemma_3eb_check(const SemigroupIdeal& e, Int b) {
  const auto& s = e.parent();
  const Int m = s.multiplicity();
  const auto doubled = sumset_shift(e, 2, b);
  const auto apery_s = s.apery_set(m);
  const bool hypothesis = std::none_of(apery_s.begin(), apery_s.end(), [&](Int d) { return doubled.contains(d); });
  if (!hypothesis) return true;
  const auto tripled = sumset_shift(e, 3, b);
  const auto apery_e = e.apery(m);
  return std::none_of(apery_e.begin(), apery_e.end(), [&](Int beta) { return tripled.contains(beta); });
}

std::vector<HomtypeCandidate> homtype_candidates(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  const Int b_cap = 2 * s.frobenius() + s.generators().back();
  std::vector<std::pair<Int, Int>> pairs;
  for (Int w : s.apery_set(m)) {
    for (Int x = m; 2 * x < w; ++x) {
      if (!s.contains(x)) continue;
      const Int b = w - 2 * x;
      if (b % 2 != 0 && b <= b_cap && s.contains(b)) pairs.emplace_back(x, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<HomtypeCandidate> out;
  for (auto [x, b] : pairs) {
    DuplicationInput input(SemigroupIdeal::from_generators(s, {x}), b);
    auto t = duplicate(input);
    const bool homogeneous = is_homogeneous_semigroup(t).holds;
    const bool ci = is_gr_ci(t);
    out.push_back({x, b, std::move(t), false, homogeneous, ci});
  }
  return out;
}

}  // namespace numcurve
