#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "numcurve/corpus.hpp"
#include "numcurve/homogeneity.hpp"
#include "numcurve/tangent_cone.hpp"

namespace numcurve {

/// What the CLI prints for one instance (a semigroup, optionally an ideal
/// and b). Serialized with sorted keys, so equal documents give identical
/// bytes.
struct ReportDocument {
  std::string command;
  std::vector<Int> generators;
  std::vector<Int> ideal;
  std::optional<Int> b;
  std::map<std::string, Int> scalars;
  std::map<std::string, std::vector<Int>> vectors;
  std::map<std::string, AperyProfile> profiles;
  PropertyReport properties;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ValidationSummary& summary);

std::string render_text(const ReportDocument& doc);
/// One row per profile residue: profile,residue,element,blowup_element,a,b.
std::string render_csv(const ReportDocument& doc);
std::string render_text(const ValidationSummary& summary);

Witness to_witness(const HomogeneityWitness& w);

}  // namespace numcurve
