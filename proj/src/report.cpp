#include "numcurve/report.hpp"

#include <sstream>

#include "numcurve/error.hpp"

namespace numcurve {

namespace {

using nlohmann::json;

json profile_json(const AperyProfile& p) {
  return json{{"base", p.base}, {"elements", p.elements}, {"blowup_elements", p.blowup_elements}, {"a", p.a},
              {"b", p.b}};
}

AperyProfile profile_from(const json& j) {
  return AperyProfile{j.at("base").get<Int>(), j.at("elements").get<std::vector<Int>>(),
                      j.at("blowup_elements").get<std::vector<Int>>(), j.at("a").get<std::vector<Int>>(),
                      j.at("b").get<std::vector<Int>>()};
}

std::string join(const std::vector<Int>& v) { return "[" + format_int_list(v) + "]"; }

std::string_view context_name(HomogeneityContext c) {
  switch (c) {
    case HomogeneityContext::AperyElement: return "apery_element";
    case HomogeneityContext::IdealDifference: return "ideal_difference";
    case HomogeneityContext::MismatchAcrossGenerators: return "mismatch_across_generators";
  }
  return "unknown";
}

}  // namespace

Witness to_witness(const HomogeneityWitness& w) {
  Witness out{std::string(context_name(w.context)), {{"element", {w.element}}, {"lengths", w.lengths}}};
  if (!w.generators.empty()) out.fields["generators"] = w.generators;
  for (std::size_t i = 0; i < w.length_sets.size(); ++i)
    out.fields["lengths_" + std::to_string(i)] = w.length_sets[i];
  return out;
}

json to_json(const ReportDocument& doc) {
  json j;
  j["command"] = doc.command;
  j["generators"] = doc.generators;
  j["ideal"] = doc.ideal;
  j["b"] = doc.b ? json(*doc.b) : json(nullptr);
  j["scalars"] = json::object();
  for (const auto& [k, v] : doc.scalars) j["scalars"][k] = v;
  j["vectors"] = json::object();
  for (const auto& [k, v] : doc.vectors) j["vectors"][k] = v;
  j["profiles"] = json::object();
  for (const auto& [k, v] : doc.profiles) j["profiles"][k] = profile_json(v);
  j["verdicts"] = json::object();
  for (const auto& [k, v] : doc.properties.verdicts) j["verdicts"][k] = v;
  j["witnesses"] = json::object();
  for (const auto& [k, w] : doc.properties.witnesses) {
    json fields = json::object();
    for (const auto& [name, values] : w.fields) fields[name] = values;
    j["witnesses"][k] = json{{"kind", w.kind}, {"fields", fields}};
  }
  return j;
}

ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.generators = j.at("generators").get<std::vector<Int>>();
    doc.ideal = j.at("ideal").get<std::vector<Int>>();
    if (!j.at("b").is_null()) doc.b = j.at("b").get<Int>();
    for (const auto& [k, v] : j.at("scalars").items()) doc.scalars[k] = v.get<Int>();
    for (const auto& [k, v] : j.at("vectors").items()) doc.vectors[k] = v.get<std::vector<Int>>();
    for (const auto& [k, v] : j.at("profiles").items()) doc.profiles[k] = profile_from(v);
    for (const auto& [k, v] : j.at("verdicts").items()) doc.properties.verdicts[k] = v.get<bool>();
    for (const auto& [k, v] : j.at("witnesses").items()) {
      Witness w{v.at("kind").get<std::string>(), {}};
      for (const auto& [name, values] : v.at("fields").items()) w.fields[name] = values.get<std::vector<Int>>();
      doc.properties.witnesses[k] = std::move(w);
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
}

json to_json(const ValidationSummary& summary) {
  json j;
  j["semigroups"] = summary.semigroups;
  j["ideals"] = summary.ideals;
  j["instances"] = summary.instances;
  j["stabilization_failures"] = summary.stabilization_failures;
  j["disagreements"] = summary.disagreements();
  j["ok"] = summary.ok();
  j["checks"] = json::object();
  for (const auto& [name, tally] : summary.checks)
    j["checks"][name] = json{{"evaluated", tally.evaluated}, {"failures", tally.failures}};
  j["counterexamples"] = json::array();
  for (const auto& c : summary.counterexamples) {
    j["counterexamples"].push_back(json{{"check", c.check},
                                        {"generators", c.generators},
                                        {"ideal", c.ideal},
                                        {"b", c.b ? json(*c.b) : json(nullptr)},
                                        {"detail", c.detail}});
  }
  return j;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << doc.command << ": S = <" << format_int_list(doc.generators) << ">";
  if (!doc.ideal.empty()) out << "  E = {" << format_int_list(doc.ideal) << "} + S";
  if (doc.b) out << "  b = " << *doc.b;
  out << '\n';
  for (const auto& [k, v] : doc.scalars) out << "  " << k << ": " << v << '\n';
  for (const auto& [k, v] : doc.vectors) out << "  " << k << ": " << join(v) << '\n';
  for (const auto& [k, p] : doc.profiles) {
    out << "  profile " << k << " (mod " << p.base << ")\n";
    out << "    apery:  " << join(p.elements) << '\n';
    out << "    blowup: " << join(p.blowup_elements) << '\n';
    out << "    a:      " << join(p.a) << '\n';
    out << "    b:      " << join(p.b) << '\n';
  }
  for (const auto& [k, v] : doc.properties.verdicts) {
    out << "  " << k << ": " << (v ? "true" : "false");
    auto w = doc.properties.witnesses.find(k);
    if (w != doc.properties.witnesses.end()) {
      out << "  (" << w->second.kind;
      for (const auto& [name, values] : w->second.fields) out << ' ' << name << '=' << join(values);
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "profile,residue,element,blowup_element,a,b\n";
  for (const auto& [k, p] : doc.profiles)
    for (std::size_t i = 0; i < p.elements.size(); ++i)
      out << k << ',' << i << ',' << p.elements[i] << ',' << p.blowup_elements[i] << ',' << p.a[i] << ','
          << p.b[i] << '\n';
  return out.str();
}

std::string render_text(const ValidationSummary& summary) {
  std::ostringstream out;
  out << "semigroups: " << summary.semigroups << "  ideals: " << summary.ideals
      << "  instances: " << summary.instances << '\n';
  for (const auto& [name, tally] : summary.checks)
    out << "  " << name << ": " << tally.evaluated << " evaluated, " << tally.failures << " failed\n";
  out << "stabilization failures: " << summary.stabilization_failures << '\n';
  for (const auto& c : summary.counterexamples) {
    out << "COUNTEREXAMPLE " << c.check << ": S=<" << format_int_list(c.generators) << ">";
    if (!c.ideal.empty()) out << " E={" << format_int_list(c.ideal) << "}";
    if (c.b) out << " b=" << *c.b;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  out << (summary.ok() ? "OK" : "DISAGREEMENT") << '\n';
  return out.str();
}

}  // namespace numcurve
