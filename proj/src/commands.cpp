#include "numcurve/commands.hpp"

#include <algorithm>

#include "numcurve/error.hpp"
#include "numcurve/homogeneity.hpp"
#include "numcurve/tangent_cone.hpp"

namespace numcurve {

namespace {

Witness sides(bool criterion, bool direct) {
  return Witness{"sides", {{"criterion", {criterion ? 1 : 0}}, {"direct", {direct ? 1 : 0}}}};
}

Witness flags(std::initializer_list<std::pair<const char*, bool>> parts) {
  Witness w{"conjuncts", {}};
  for (auto [name, value] : parts) w.fields[name] = {value ? 1 : 0};
  return w;
}

void record_theorem(PropertyReport& report, const std::string& name, const DuplicationVerdict& v,
                    const Witness& criterion_witness, const Witness& direct_witness) {
  report.record(name + ".criterion", v.criterion, v.criterion ? std::nullopt : std::optional(criterion_witness));
  report.record(name + ".direct", v.direct, v.direct ? std::nullopt : std::optional(direct_witness));
  report.record(name + ".agree", v.agree(), v.agree() ? std::nullopt : std::optional(sides(v.criterion, v.direct)));
}

void add_homogeneity(PropertyReport& report, const std::string& name, const HomogeneityVerdict& v) {
  report.record(name, v.holds, v.witness ? std::optional(to_witness(*v.witness)) : std::nullopt);
}

}  // namespace

ReportDocument cmd_info(const NumericalSemigroup& s) {
  ReportDocument doc;
  doc.command = "info";
  doc.generators = s.generators();
  doc.scalars = {{"multiplicity", s.multiplicity()},
                 {"frobenius", s.frobenius()},
                 {"conductor", s.conductor()},
                 {"genus", s.genus()},
                 {"embedding_dimension", s.embedding_dimension()}};
  doc.vectors["gaps"] = s.gaps();
  doc.vectors["apery_sorted"] = s.sorted_apery();
  const auto purity = mpure(s);
  doc.vectors["maximal_elements"] = purity.maximal_elements;
  doc.vectors["maximal_orders"] = purity.orders;
  const auto bg = beta_gamma_profile(s);
  doc.vectors["beta"] = bg.beta;
  doc.vectors["gamma"] = bg.gamma;
  doc.scalars["gamma_tuple_count"] = bg.gamma_tuple_count;
  doc.scalars["beta_tuple_count"] = bg.beta_tuple_count;
  doc.profiles["S"] = ab_vectors(s);
  doc.properties = semigroup_report(s);
  add_homogeneity(doc.properties, "homogeneous", is_homogeneous_semigroup(s));
  return doc;
}

ReportDocument cmd_dup(const DuplicationInput& input) {
  const auto& s = input.semigroup();
  const auto& e = input.ideal();
  const auto t = duplicate(input);
  const Int m = s.multiplicity();

  ReportDocument doc;
  doc.command = "dup";
  doc.generators = s.generators();
  doc.ideal = e.generators();
  doc.b = input.b();
  doc.vectors["T.generators"] = t.generators();
  doc.vectors["T.apery"] = t.apery_set(2 * m);
  doc.vectors["E.apery"] = e.apery(m);
  doc.scalars["T.frobenius"] = t.frobenius();
  doc.scalars["T.multiplicity"] = t.multiplicity();
  doc.profiles["S"] = ab_vectors(s);
  doc.profiles["E"] = ab_vectors(e);
  doc.profiles["T"] = ab_vectors(t);

  const bool s_cm = compare_ab(doc.profiles["S"]).holds;
  const bool e_cm = compare_ab(doc.profiles["E"]).holds;
  const auto t_cm_verdict = compare_ab(doc.profiles["T"]);
  const bool t_cm = t_cm_verdict.holds;
  const bool s_pure = mpure(s).is_mpure;
  const bool t_pure = mpure(t).is_mpure;
  const bool t_sym = is_symmetric(t);
  const bool canonical = is_canonical(e);
  const bool principal = e.is_principal();
  const auto s_bg = beta_gamma_profile(s);
  const auto t_bg = beta_gamma_profile(t);

  auto& report = doc.properties;
  Witness t_cm_witness{"residue", {}};
  if (t_cm_verdict.failing_residue) t_cm_witness.fields["residue"] = {*t_cm_verdict.failing_residue};
  record_theorem(report, "cm", {s_cm && e_cm, t_cm}, flags({{"gr_cm_S", s_cm}, {"gr_cm_E", e_cm}}), t_cm_witness);
  record_theorem(report, "gorenstein", {s_pure && canonical && s_cm, t_cm && t_pure && t_sym},
                 flags({{"mpure_S", s_pure}, {"canonical_E", canonical}, {"gr_cm_S", s_cm}}),
                 flags({{"gr_cm_T", t_cm}, {"mpure_T", t_pure}, {"symmetric_T", t_sym}}));
  const bool s_ci = s_cm && s_bg.is_gamma_rect;
  record_theorem(report, "ci", {s_ci && principal, t_cm && t_bg.is_gamma_rect},
                 flags({{"gr_ci_S", s_ci}, {"principal_E", principal}}),
                 flags({{"gr_cm_T", t_cm}, {"gamma_rect_T", t_bg.is_gamma_rect}}));
  record_theorem(report, "gamma_rect", {s_bg.is_gamma_rect && principal, t_bg.is_gamma_rect},
                 flags({{"gamma_rect_S", s_bg.is_gamma_rect}, {"principal_E", principal}}),
                 Witness{"box", {{"gamma", t_bg.gamma}, {"gamma_tuple_count", {t_bg.gamma_tuple_count}}}});
  record_theorem(report, "beta_rect", {s_bg.is_beta_rect && principal, t_bg.is_beta_rect},
                 flags({{"beta_rect_S", s_bg.is_beta_rect}, {"principal_E", principal}}),
                 Witness{"box", {{"beta", t_bg.beta}, {"beta_tuple_count", {t_bg.beta_tuple_count}}}});

  const auto s_homog = is_homogeneous_semigroup(s);
  const auto e_homog = is_homogeneous_ideal(e);
  const auto t_homog = is_homogeneous_semigroup(t);
  const auto doubled = sumset_shift(e, 2, input.b());
  std::vector<Int> hits;
  for (Int d : s.sorted_apery())
    if (doubled.contains(d)) hits.push_back(d);
  const bool criterion = s_homog.holds && e_homog.holds && hits.empty();
  Witness hom_criterion = flags({{"homogeneous_S", s_homog.holds}, {"homogeneous_E", e_homog.holds}});
  hom_criterion.fields["apery_in_2E_plus_b"] = hits;
  Witness hom_direct = t_homog.witness ? to_witness(*t_homog.witness) : Witness{"none", {}};
  record_theorem(report, "homogeneous", {criterion, t_homog.holds}, hom_criterion, hom_direct);

  report.record("canonical_E", canonical,
                canonical ? std::nullopt : std::optional(Witness{"apery", {{"E.apery", doc.vectors["E.apery"]}}}));
  report.record("principal_E", principal,
                principal ? std::nullopt : std::optional(Witness{"generators", {{"generators", e.generators()}}}));
  report.record("lemma_3eb", lemma_3eb_check(e, input.b()),
                std::optional(Witness{"instance", {{"b", {input.b()}}}}));

  bool all_agree = true;
  for (const auto& [name, v] : report.verdicts)
    if (name.ends_with(".agree")) all_agree = all_agree && v;
  report.record("agreement", all_agree, all_agree ? std::nullopt : std::optional(Witness{"see_agree_flags", {}}));
  return doc;
}

ReportDocument cmd_homog(const NumericalSemigroup& s, const std::optional<SemigroupIdeal>& e, std::optional<Int> b) {
  ReportDocument doc;
  doc.command = "homog";
  doc.generators = s.generators();
  doc.vectors["apery_sorted"] = s.sorted_apery();
  add_homogeneity(doc.properties, "homogeneous_S", is_homogeneous_semigroup(s));
  if (e) {
    doc.ideal = e->generators();
    doc.vectors["E.apery_sorted"] = e->sorted_apery();
    add_homogeneity(doc.properties, "homogeneous_E", is_homogeneous_ideal(*e));
    if (b) {
      doc.b = *b;
      DuplicationInput input(*e, *b);
      const auto t = duplicate(input);
      doc.vectors["T.generators"] = t.generators();
      const auto v = is_homogeneous_duplication(input);
      const auto t_homog = is_homogeneous_semigroup(t);
      Witness criterion_witness = flags({{"homogeneous_S", is_homogeneous_semigroup(s).holds},
                                         {"homogeneous_E", is_homogeneous_ideal(*e).holds}});
      record_theorem(doc.properties, "homogeneous", v, criterion_witness,
                     t_homog.witness ? to_witness(*t_homog.witness) : Witness{"none", {}});
      doc.properties.record("lemma_3eb", lemma_3eb_check(*e, *b), std::optional(Witness{"instance", {{"b", {*b}}}}));
    }
  }
  return doc;
}

std::vector<ReportDocument> cmd_homtype_search(const NumericalSemigroup& s) {
  std::vector<ReportDocument> out;
  for (const auto& c : homtype_candidates(s)) {
    ReportDocument doc;
    doc.command = "homtype-search";
    doc.generators = s.generators();
    doc.ideal = {c.s};
    doc.b = c.b;
    doc.vectors["T.generators"] = c.t.generators();
    doc.vectors["T.apery_sorted"] = c.t.sorted_apery();
    doc.scalars["s"] = c.s;
    doc.scalars["two_s_plus_b"] = 2 * c.s + c.b;
    doc.properties.record("homogeneous_T.predicted", c.predicted_homogeneous,
                          Witness{"construction", {{"two_s_plus_b_in_apery", {2 * c.s + c.b}}}});
    const auto t_homog = is_homogeneous_semigroup(c.t);
    doc.properties.record("homogeneous_T", c.homogeneous,
                          t_homog.witness ? std::optional(to_witness(*t_homog.witness)) : std::nullopt);
    doc.properties.record("gr_ci_T", c.gr_ci, c.gr_ci ? std::nullopt : std::optional(flags({{"gr_ci_T", false}})));
    out.push_back(std::move(doc));
  }
  return out;
}

const std::vector<std::string>& search_predicates() {
  static const std::vector<std::string> names{
      "mpure-and-not-symmetric", "cm-not-ci", "non-homogeneous", "homtype-candidate",
      "gorenstein-dup-from-non-gorenstein", "non-cm-dup-from-cm", "homogeneous-dup",
  };
  return names;
}

void cmd_search(const std::vector<NumericalSemigroup>& corpus, const CorpusSpec& spec, const std::string& predicate,
                const std::function<void(const ReportDocument&)>& sink) {
  const auto& names = search_predicates();
  if (std::find(names.begin(), names.end(), predicate) == names.end())
    throw Error(ErrorKind::UnknownPredicate, "unknown predicate '" + predicate + "'");

  for (const auto& s : corpus) {
    if (predicate == "homtype-candidate") {
      for (const auto& doc : cmd_homtype_search(s)) sink(doc);
      continue;
    }
    if (predicate == "mpure-and-not-symmetric" || predicate == "cm-not-ci" || predicate == "non-homogeneous") {
      const auto doc = cmd_info(s);
      const auto& v = doc.properties.verdicts;
      bool hit = false;
      if (predicate == "mpure-and-not-symmetric") hit = v.at("mpure") && !v.at("symmetric");
      if (predicate == "cm-not-ci") hit = v.at("gr_cm") && !v.at("gr_ci");
      if (predicate == "non-homogeneous") hit = !v.at("homogeneous");
      if (hit) sink(doc);
      continue;
    }
    const bool s_gorenstein = is_gr_gorenstein(s);
    const bool s_cm = is_gr_cm(s).holds;
    for (const auto& e : enumerate_ideals(s, spec.ideal_gen_budget, spec.ideal_min_bound_for(s))) {
      for (Int b : enumerate_b(s, spec.b_bound_for(s))) {
        DuplicationInput input(e, b);
        bool hit = false;
        if (predicate == "gorenstein-dup-from-non-gorenstein")
          hit = !s_gorenstein && is_dup_gorenstein(input).criterion;
        else if (predicate == "non-cm-dup-from-cm")
          hit = s_cm && !is_dup_cm(input).criterion;
        else if (predicate == "homogeneous-dup")
          hit = is_homogeneous_semigroup(duplicate(input)).holds;
        if (hit) sink(cmd_dup(input));
      }
    }
  }
}

}  // namespace numcurve
