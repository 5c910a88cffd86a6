#include "numcurve/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "numcurve/duplication.hpp"
#include "numcurve/error.hpp"
#include "numcurve/homogeneity.hpp"
#include "numcurve/tangent_cone.hpp"

namespace numcurve {

Int CorpusSpec::ideal_min_bound_for(const NumericalSemigroup& s) const {
  return ideal_min_bound.value_or(s.frobenius() + s.multiplicity());
}

Int CorpusSpec::b_bound_for(const NumericalSemigroup& s) const {
  return b_bound.value_or(s.frobenius() + 2 * s.multiplicity());
}

std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  for (Int g : s.generators()) {
    if (g <= s.frobenius()) continue;
    Int child_m = s.multiplicity();
    if (g == child_m) {
      child_m = g + 1;
      while (!s.contains(child_m)) ++child_m;
    }
    const Int top = g + 1 + child_m;
    auto member = [&](Int z) { return z != g && s.contains(z); };
    std::vector<Int> gens;
    for (Int x = 1; x <= top; ++x) {
      if (!member(x)) continue;
      bool decomposable = false;
      for (Int y = 1; 2 * y <= x && !decomposable; ++y) decomposable = member(y) && member(x - y);
      if (!decomposable) gens.push_back(x);
    }
    out.push_back(NumericalSemigroup::from_generators(gens));
  }
  return out;
}

std::vector<NumericalSemigroup> enumerate_semigroups(Int max_genus, Int max_multiplicity) {
  std::vector<NumericalSemigroup> out;
  std::vector<NumericalSemigroup> level{NumericalSemigroup::natural()};
  for (Int genus = 1; genus <= max_genus; ++genus) {
    std::vector<NumericalSemigroup> next;
    for (const auto& s : level)
      for (auto& child : tree_children(s)) next.push_back(std::move(child));
    std::sort(next.begin(), next.end(),
              [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.generators() < b.generators(); });
    for (const auto& s : next)
      if (max_multiplicity <= 0 || s.multiplicity() <= max_multiplicity) out.push_back(s);
    level = std::move(next);
  }
  return out;
}

std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& s, Int gen_budget, Int min_bound) {
  std::vector<SemigroupIdeal> out;
  if (gen_budget < 1) return out;
  const Int m = s.multiplicity();
  const Int f = s.frobenius();
  std::vector<Int> chosen;
  std::function<void(Int)> extend = [&](Int from) {
    out.push_back(SemigroupIdeal::from_generators(s, chosen));
    if (static_cast<Int>(chosen.size()) >= gen_budget) return;
    for (Int e = from; e <= chosen.front() + f; ++e) {
      if (!s.contains(e)) continue;
      bool antichain = std::none_of(chosen.begin(), chosen.end(), [&](Int k) { return s.contains(e - k); });
      if (!antichain) continue;
      chosen.push_back(e);
      extend(e + 1);
      chosen.pop_back();
    }
  };
  for (Int e1 = m; e1 <= min_bound; ++e1) {
    if (!s.contains(e1)) continue;
    chosen = {e1};
    extend(e1 + 1);
  }
  return out;
}

std::vector<Int> enumerate_b(const NumericalSemigroup& s, Int bound) {
  std::vector<Int> out;
  for (Int b = 1; b <= bound; b += 2)
    if (s.contains(b)) out.push_back(b);
  return out;
}

std::size_t ValidationSummary::disagreements() const {
  std::size_t total = 0;
  for (const auto& [name, tally] : checks) total += tally.failures;
  return total;
}

void ValidationSummary::merge(ValidationSummary&& other) {
  semigroups += other.semigroups;
  ideals += other.ideals;
  instances += other.instances;
  stabilization_failures += other.stabilization_failures;
  for (const auto& [name, tally] : other.checks) {
    checks[name].evaluated += tally.evaluated;
    checks[name].failures += tally.failures;
  }
  for (auto& c : other.counterexamples) counterexamples.push_back(std::move(c));
}

namespace {

bool contains_all(const std::vector<Int>& big, const std::vector<Int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool a_dominates_b(const AperyProfile& p) {
  for (std::size_t i = 0; i < p.a.size(); ++i)
    if (p.a[i] < p.b[i]) return false;
  return true;
}

bool apery_chain(const NumericalSemigroup& s, const BetaGammaProfile& bg) {
  const auto ap = s.sorted_apery();
  return contains_all(bg.gamma_box, ap) && contains_all(bg.beta_box, bg.gamma_box);
}

class Recorder {
 public:
  Recorder(ValidationSummary& summary, const NumericalSemigroup& s) : summary_(summary), s_(s) {}

  void set_instance(const SemigroupIdeal* e, std::optional<Int> b) {
    ideal_ = e;
    b_ = b;
  }

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    auto& tally = summary_.checks[name];
    ++tally.evaluated;
    if (ok) return;
    ++tally.failures;
    Counterexample c{name, s_.generators(), {}, b_, detail};
    if (ideal_) c.ideal = ideal_->generators();
    summary_.counterexamples.push_back(std::move(c));
  }

  void both_sides(const std::string& name, const DuplicationVerdict& v) {
    std::ostringstream detail;
    detail << "criterion=" << v.criterion << " direct=" << v.direct;
    check(name, v.agree(), detail.str());
  }

 private:
  ValidationSummary& summary_;
  const NumericalSemigroup& s_;
  const SemigroupIdeal* ideal_ = nullptr;
  std::optional<Int> b_;
};

ValidationSummary validate_one(const NumericalSemigroup& s, const CorpusSpec& spec) {
  ValidationSummary summary;
  summary.semigroups = 1;
  Recorder rec(summary, s);
  const Int m = s.multiplicity();

  // Semigroup-side facts, shared by every ideal and b.
  const auto s_profile = ab_vectors(s);
  const bool s_cm = compare_ab(s_profile).holds;
  const auto s_pure = mpure(s);
  const auto s_bg = beta_gamma_profile(s);
  const bool s_ci = s_cm && s_bg.is_gamma_rect;
  const bool s_homog = is_homogeneous_semigroup(s).holds;
  const auto s_sorted = s.sorted_apery();
  const auto s_apery = s.apery_set(m);
  const auto canonical = canonical_ideal(s);

  rec.check("a_ge_b", a_dominates_b(s_profile), "semigroup");
  rec.check("apery_in_gamma_in_beta", apery_chain(s, s_bg), "semigroup");
  rec.check("cm_order_conditions", s_cm == order_step_condition(s) && s_cm == apery_ray_condition(s));
  rec.check("symmetric_tests_agree", is_symmetric(s) == is_symmetric_by_canonical(s));
  rec.check("k_duality", ideal_difference(canonical, ideal_difference(canonical, canonical)) == canonical,
            "F = K(S)");

  for (const auto& e : enumerate_ideals(s, spec.ideal_gen_budget, spec.ideal_min_bound_for(s))) {
    ++summary.ideals;
    rec.set_instance(&e, std::nullopt);
    try {
      const auto e_profile = ab_vectors(e);
      const bool e_cm = compare_ab(e_profile).holds;
      const bool e_canonical = is_canonical(e);
      const bool e_homog = is_homogeneous_ideal(e).holds;
      const auto relative = e.relative();

      rec.check("a_ge_b", a_dominates_b(e_profile), "ideal");
      rec.check("ideal_order_lemma",
                e_cm == ideal_order_step_condition(e) && e_cm == ideal_apery_ray_condition(e),
                "three-way equivalence");
      rec.check("principal_corollary", !(s_cm && e.is_principal()) || e_cm);
      rec.check("k_duality", ideal_difference(canonical, ideal_difference(canonical, relative)) == relative,
                "F = E");

      for (Int b : enumerate_b(s, spec.b_bound_for(s))) {
        ++summary.instances;
        rec.set_instance(&e, b);
        DuplicationInput input(e, b);
        const auto raw_gens = duplication_generators(input);
        const auto t = duplicate(input);

        auto sorted_gens = raw_gens;
        std::sort(sorted_gens.begin(), sorted_gens.end());
        rec.check("generator_minimality", t.generators() == sorted_gens);
        rec.check("duplicate_apery", t.apery_set(2 * m) == duplicate_apery_from_parts(input));

        bool parity = true;
        for (Int z = 0; z <= t.conductor() + 2 * m && parity; ++z) {
          const bool expected = z % 2 == 0 ? s.contains(z / 2) : e.contains((z - b) / 2) && z >= b;
          parity = t.contains(z) == expected;
        }
        rec.check("parity_split", parity);

        const auto t_profile = ab_vectors(t);
        const bool t_cm = compare_ab(t_profile).holds;
        const auto t_pure = mpure(t);
        const bool t_sym = is_symmetric(t);
        const auto t_bg = beta_gamma_profile(t);
        rec.check("a_ge_b", a_dominates_b(t_profile), "duplication");
        rec.check("apery_in_gamma_in_beta", apery_chain(t, t_bg), "duplication");

        rec.both_sides("cm_theorem", {s_cm && e_cm, t_cm});
        rec.both_sides("gorenstein_theorem", {s_pure.is_mpure && e_canonical && s_cm, t_cm && t_pure.is_mpure && t_sym});
        rec.both_sides("ci_proposition", {s_ci && e.is_principal(), t_cm && t_bg.is_gamma_rect});
        rec.both_sides("gamma_rect_transfer", {s_bg.is_gamma_rect && e.is_principal(), t_bg.is_gamma_rect});
        rec.both_sides("beta_rect_transfer", {s_bg.is_beta_rect && e.is_principal(), t_bg.is_beta_rect});

        if (e_canonical) {
          rec.check("symmetric_canonical_duplication", t_sym);
          bool transfer = t_pure.is_mpure == s_pure.is_mpure;
          if (transfer && s_pure.is_mpure) {
            const Int beta_m = e.sorted_apery().back();
            transfer = *t.order(2 * beta_m + b) == *s.order(s_sorted.back()) + 1;
          }
          rec.check("mpure_transfer", transfer);
        }

        const auto doubled = sumset_shift(e, 2, b);
        const bool avoids =
            std::none_of(s_apery.begin(), s_apery.end(), [&](Int d) { return doubled.contains(d); });
        rec.both_sides("homogeneous_duplication",
                       {s_homog && e_homog && avoids, is_homogeneous_semigroup(t).holds});
        rec.check("lemma_3eb", lemma_3eb_check(e, b));
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::StabilizationFailure) throw;
      ++summary.stabilization_failures;
      summary.counterexamples.push_back({"stabilization", s.generators(), e.generators(), std::nullopt, err.what()});
    }
  }
  return summary;
}

}  // namespace

ValidationSummary validate_semigroups(const std::vector<NumericalSemigroup>& semigroups, const CorpusSpec& spec,
                                      unsigned jobs) {
  std::vector<ValidationSummary> parts(semigroups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < semigroups.size(); i = next++) parts[i] = validate_one(semigroups[i], spec);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  ValidationSummary total;
  for (auto& part : parts) total.merge(std::move(part));
  return total;
}

ValidationSummary validate_corpus(const CorpusSpec& spec, unsigned jobs) {
  if (spec.max_genus < 0 || spec.ideal_gen_budget < 1)
    throw Error(ErrorKind::ParseError, "corpus bounds must be positive");
  return validate_semigroups(enumerate_semigroups(spec.max_genus, spec.max_multiplicity), spec, jobs);
}

}  // namespace numcurve
