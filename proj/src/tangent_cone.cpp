#include "numcurve/tangent_cone.hpp"

#include <algorithm>
#include <limits>

namespace numcurve {

namespace {

// Ray length for the finite order tests. Stabilization of lM and E + lM
// happens within m steps; 2m + 2 leaves slack for the ideal shift.
Int ray_length(Int m) { return std::max<Int>(3, 2 * m + 2); }

bool in_apery(const std::vector<Int>& apery_by_residue, Int z) {
  const auto m = static_cast<Int>(apery_by_residue.size());
  return z >= 0 && apery_by_residue[static_cast<std::size_t>(z % m)] == z;
}

std::vector<Int> box_values(const std::vector<Int>& gens, const std::vector<Int>& bounds) {
  Int top = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) top += gens[i] * bounds[i];
  std::vector<char> reach(static_cast<std::size_t>(top + 1), 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<char> next = reach;
    for (Int z = 0; z <= top; ++z) {
      if (!reach[static_cast<std::size_t>(z)]) continue;
      for (Int l = 1; l <= bounds[i]; ++l) next[static_cast<std::size_t>(z + l * gens[i])] = 1;
    }
    reach = std::move(next);
  }
  std::vector<Int> out;
  for (Int z = 0; z <= top; ++z)
    if (reach[static_cast<std::size_t>(z)]) out.push_back(z);
  return out;
}

Int saturating_product(const std::vector<Int>& bounds) {
  Int acc = 1;
  for (Int b : bounds) {
    if (acc > std::numeric_limits<Int>::max() / (b + 1)) return std::numeric_limits<Int>::max();
    acc *= b + 1;
  }
  return acc;
}

Witness conjuncts(std::initializer_list<std::pair<const char*, bool>> parts) {
  Witness w{"conjuncts", {}};
  for (auto [name, value] : parts) w.fields[name] = {value ? 1 : 0};
  return w;
}

}  // namespace

AperyProfile ab_vectors(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  AperyProfile p;
  p.base = m;
  p.elements = s.apery_set(m);
  p.blowup_elements = blowup(s).apery_set(m);
  for (Int i = 0; i < m; ++i) {
    const Int w = p.elements[static_cast<std::size_t>(i)];
    p.a.push_back((w - p.blowup_elements[static_cast<std::size_t>(i)]) / m);
    p.b.push_back(*s.order(w));
  }
  return p;
}

AperyProfile ab_vectors(const SemigroupIdeal& e) {
  auto inv = ab_vectors_ideal(e);
  return AperyProfile{e.parent().multiplicity(), std::move(inv.apery), std::move(inv.blowup_apery),
                      std::move(inv.a), std::move(inv.b)};
}

ResidueVerdict compare_ab(const AperyProfile& profile) {
  for (std::size_t i = 0; i < profile.a.size(); ++i)
    if (profile.a[i] != profile.b[i]) return {false, static_cast<Int>(i)};
  return {true, std::nullopt};
}

ResidueVerdict is_gr_cm(const NumericalSemigroup& s) { return compare_ab(ab_vectors(s)); }

ResidueVerdict is_gr_ideal_cm(const SemigroupIdeal& e) { return compare_ab(ab_vectors(e)); }

bool ideal_order_step_condition(const SemigroupIdeal& e) {
  const Int m = e.parent().multiplicity();
  const auto ap = e.apery(m);
  const Int top = *std::max_element(ap.begin(), ap.end()) + ray_length(m) * m;
  for (Int z = e.min(); z <= top; ++z) {
    auto o = e.order(z);
    if (o && *e.order(z + m) != *o + 1) return false;
  }
  return true;
}

bool ideal_apery_ray_condition(const SemigroupIdeal& e) {
  const Int m = e.parent().multiplicity();
  for (Int alpha : e.apery(m)) {
    const Int base = *e.order(alpha);
    for (Int lambda = 1; lambda <= ray_length(m); ++lambda)
      if (*e.order(alpha + lambda * m) != base + lambda) return false;
  }
  return true;
}

bool order_step_condition(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  const auto ap = s.apery_set(m);
  const Int top = *std::max_element(ap.begin(), ap.end()) + ray_length(m) * m;
  for (Int z = m; z <= top; ++z) {
    auto o = s.order(z);
    if (o && *s.order(z + m) != *o + 1) return false;
  }
  return true;
}

bool apery_ray_condition(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  for (Int w : s.apery_set(m)) {
    const Int base = *s.order(w);
    for (Int lambda = 1; lambda <= ray_length(m); ++lambda)
      if (*s.order(w + lambda * m) != base + lambda) return false;
  }
  return true;
}

MPurity mpure(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  const auto by_residue = s.apery_set(m);
  const auto sorted = s.sorted_apery();
  MPurity out;
  for (Int di : sorted) {
    const Int oi = *s.order(di);
    bool maximal = true;
    for (Int dk : sorted) {
      if (dk == 0) continue;
      const Int dj = di + dk;
      if (in_apery(by_residue, dj) && oi + *s.order(dk) == *s.order(dj)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.maximal_elements.push_back(di);
      out.orders.push_back(oi);
    }
  }
  out.is_mpure = std::adjacent_find(out.orders.begin(), out.orders.end(), std::not_equal_to<>()) ==
                 out.orders.end();
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) {
  const auto d = s.sorted_apery();
  const std::size_t m = d.size();
  for (std::size_t i = 1; i + 1 < m; ++i)
    if (d[i] + d[m - 1 - i] != d[m - 1]) return false;
  return true;
}

bool is_symmetric_by_canonical(const NumericalSemigroup& s) {
  return canonical_ideal(s).members() == s.members();
}

bool expected_canonical_module(const NumericalSemigroup& s) { return is_gr_cm(s).holds && mpure(s).is_mpure; }

bool is_gr_gorenstein(const NumericalSemigroup& s) { return expected_canonical_module(s) && is_symmetric(s); }

BetaGammaProfile beta_gamma_profile(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  const auto ap = s.apery_set(m);
  BetaGammaProfile out;
  for (std::size_t i = 1; i < s.generators().size(); ++i) {
    const Int n = s.generators()[i];
    Int beta = 0;
    Int gamma = 0;
    // The three conditions are inherited by smaller h, so stop at the first
    // multiple that leaves the Apéry set.
    for (Int h = 1; in_apery(ap, h * n); ++h) {
      if (*s.order(h * n) != h) continue;
      beta = h;
      if (s.maximal_factorizations(h * n).size() == 1) gamma = h;
    }
    out.generators.push_back(n);
    out.beta.push_back(beta);
    out.gamma.push_back(gamma);
  }
  out.beta_box = box_values(out.generators, out.beta);
  out.gamma_box = box_values(out.generators, out.gamma);
  out.beta_tuple_count = saturating_product(out.beta);
  out.gamma_tuple_count = saturating_product(out.gamma);
  auto sorted = s.sorted_apery();
  out.is_beta_rect = out.beta_box == sorted;
  out.is_gamma_rect = out.gamma_box == sorted;
  return out;
}

bool is_gr_ci(const NumericalSemigroup& s) { return is_gr_cm(s).holds && beta_gamma_profile(s).is_gamma_rect; }

DuplicationVerdict is_dup_cm(const DuplicationInput& input) {
  const bool criterion = is_gr_cm(input.semigroup()).holds && is_gr_ideal_cm(input.ideal()).holds;
  return {criterion, is_gr_cm(duplicate(input)).holds};
}

DuplicationVerdict is_dup_gorenstein(const DuplicationInput& input) {
  const auto& s = input.semigroup();
  const bool criterion = mpure(s).is_mpure && is_canonical(input.ideal()) && is_gr_cm(s).holds;
  const auto t = duplicate(input);
  const bool direct = is_gr_cm(t).holds && mpure(t).is_mpure && is_symmetric(t);
  return {criterion, direct};
}

DuplicationVerdict is_dup_ci(const DuplicationInput& input) {
  const bool criterion = is_gr_ci(input.semigroup()) && input.ideal().is_principal();
  return {criterion, is_gr_ci(duplicate(input))};
}

DuplicationVerdict gamma_rect_transfer(const DuplicationInput& input) {
  const bool criterion = beta_gamma_profile(input.semigroup()).is_gamma_rect && input.ideal().is_principal();
  return {criterion, beta_gamma_profile(duplicate(input)).is_gamma_rect};
}

DuplicationVerdict beta_rect_transfer(const DuplicationInput& input) {
  const bool criterion = beta_gamma_profile(input.semigroup()).is_beta_rect && input.ideal().is_principal();
  return {criterion, beta_gamma_profile(duplicate(input)).is_beta_rect};
}

void PropertyReport::record(const std::string& name, bool verdict, std::optional<Witness> witness) {
  verdicts[name] = verdict;
  if (witness) witnesses[name] = std::move(*witness);
}

PropertyReport semigroup_report(const NumericalSemigroup& s) {
  PropertyReport report;
  const auto profile = ab_vectors(s);
  const auto cm = compare_ab(profile);
  if (cm.holds) {
    report.record("gr_cm", true);
  } else {
    const auto i = static_cast<std::size_t>(*cm.failing_residue);
    report.record("gr_cm", false,
                  Witness{"residue", {{"residue", {*cm.failing_residue}}, {"a", {profile.a[i]}}, {"b", {profile.b[i]}}}});
  }

  const auto purity = mpure(s);
  report.record("mpure", purity.is_mpure,
                purity.is_mpure ? std::nullopt
                                : std::optional<Witness>(Witness{
                                      "maximal_elements",
                                      {{"maximal_elements", purity.maximal_elements}, {"orders", purity.orders}}}));

  const auto d = s.sorted_apery();
  std::optional<Witness> asym;
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    if (d[i] + d[d.size() - 1 - i] != d.back()) {
      asym = Witness{"apery_pair", {{"delta_i", {d[i]}}, {"delta_j", {d[d.size() - 1 - i]}}, {"delta_m", {d.back()}}}};
      break;
    }
  }
  const bool symmetric = !asym.has_value();
  report.record("symmetric", symmetric, asym);

  const bool ecm = cm.holds && purity.is_mpure;
  report.record("expected_canonical_module", ecm,
                ecm ? std::nullopt : std::optional<Witness>(conjuncts({{"gr_cm", cm.holds}, {"mpure", purity.is_mpure}})));
  const bool gor = ecm && symmetric;
  report.record("gr_gorenstein", gor,
                gor ? std::nullopt
                    : std::optional<Witness>(conjuncts(
                          {{"gr_cm", cm.holds}, {"mpure", purity.is_mpure}, {"symmetric", symmetric}})));

  const auto bg = beta_gamma_profile(s);
  auto box_witness = [&](const std::vector<Int>& box, const std::vector<Int>& bounds) {
    std::vector<Int> extra;
    std::set_difference(box.begin(), box.end(), d.begin(), d.end(), std::back_inserter(extra));
    return Witness{"box_excess", {{"outside_apery", extra}, {"bounds", bounds}, {"generators", bg.generators}}};
  };
  report.record("beta_rect", bg.is_beta_rect,
                bg.is_beta_rect ? std::nullopt : std::optional<Witness>(box_witness(bg.beta_box, bg.beta)));
  report.record("gamma_rect", bg.is_gamma_rect,
                bg.is_gamma_rect ? std::nullopt : std::optional<Witness>(box_witness(bg.gamma_box, bg.gamma)));
  const bool ci = cm.holds && bg.is_gamma_rect;
  report.record("gr_ci", ci,
                ci ? std::nullopt : std::optional<Witness>(conjuncts({{"gr_cm", cm.holds}, {"gamma_rect", bg.is_gamma_rect}})));
  return report;
}

}  // namespace numcurve
