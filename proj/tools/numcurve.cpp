#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "numcurve/commands.hpp"
#include "numcurve/error.hpp"

using namespace numcurve;

namespace {

enum class Format { Text, Json, Jsonl, Csv };

struct Options {
  std::string sgp;
  std::string ideal;
  std::optional<Int> b;
  Int max_genus = 8;
  Int max_mult = 0;
  int ideal_gens = 2;
  std::optional<Int> ideal_min;
  std::optional<Int> b_bound;
  bool json = false;
  bool jsonl = false;
  bool csv = false;
  bool strict = false;
  unsigned jobs = 1;
  std::string predicate;
};

Format format_of(const Options& o, Format fallback) {
  if (o.json) return Format::Json;
  if (o.jsonl) return Format::Jsonl;
  if (o.csv) return Format::Csv;
  return fallback;
}

void emit(const ReportDocument& doc, Format f) {
  switch (f) {
    case Format::Json: std::cout << to_json(doc).dump(2) << '\n'; break;
    case Format::Jsonl: std::cout << to_json(doc).dump() << '\n'; break;
    case Format::Csv: std::cout << render_csv(doc); break;
    case Format::Text: std::cout << render_text(doc) << '\n'; break;
  }
}

NumericalSemigroup parse_sgp(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "--sgp is required");
  return NumericalSemigroup::from_generators(parse_int_list(text));
}

std::optional<SemigroupIdeal> parse_ideal(const NumericalSemigroup& s, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return SemigroupIdeal::from_generators(s, parse_int_list(text));
}

SemigroupIdeal require_ideal(const NumericalSemigroup& s, const std::string& text) {
  auto e = parse_ideal(s, text);
  if (!e) throw Error(ErrorKind::ParseError, "--ideal is required");
  return *e;
}

CorpusSpec corpus_spec(const Options& o) {
  CorpusSpec spec;
  spec.max_genus = o.max_genus;
  spec.max_multiplicity = o.max_mult;
  spec.ideal_gen_budget = o.ideal_gens;
  spec.ideal_min_bound = o.ideal_min;
  spec.b_bound = o.b_bound;
  return spec;
}

bool verdict(const ReportDocument& doc, const std::string& name) {
  auto it = doc.properties.verdicts.find(name);
  return it != doc.properties.verdicts.end() && it->second;
}

int run_info(const Options& o) {
  const auto doc = cmd_info(parse_sgp(o.sgp));
  emit(doc, format_of(o, Format::Text));
  return o.strict && !verdict(doc, "gr_cm") ? 1 : 0;
}

int run_dup(const Options& o) {
  const auto s = parse_sgp(o.sgp);
  if (!o.b) throw Error(ErrorKind::ParseError, "--b is required");
  const auto doc = cmd_dup(DuplicationInput(require_ideal(s, o.ideal), *o.b));
  emit(doc, format_of(o, Format::Text));
  if (!verdict(doc, "agreement")) return 3;
  return o.strict && !verdict(doc, "cm.direct") ? 1 : 0;
}

int run_homog(const Options& o) {
  const auto s = parse_sgp(o.sgp);
  const auto e = parse_ideal(s, o.ideal);
  if (o.b && !e) throw Error(ErrorKind::ParseError, "--b needs --ideal");
  const auto doc = cmd_homog(s, e, o.b);
  emit(doc, format_of(o, Format::Text));
  if (doc.properties.verdicts.contains("homogeneous.agree") && !verdict(doc, "homogeneous.agree")) return 3;
  const std::string primary = o.b ? "homogeneous.direct" : e ? "homogeneous_E" : "homogeneous_S";
  return o.strict && !verdict(doc, primary) ? 1 : 0;
}

int run_homtype(const Options& o) {
  const auto docs = cmd_homtype_search(parse_sgp(o.sgp));
  const auto f = format_of(o, Format::Jsonl);
  if (f == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : docs) arr.push_back(to_json(d));
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& d : docs) emit(d, f);
  }
  return 0;
}

int run_validate(const Options& o) {
  const auto summary = validate_corpus(corpus_spec(o), std::max(1u, o.jobs));
  if (format_of(o, Format::Text) == Format::Text)
    std::cout << render_text(summary) << '\n';
  else
    std::cout << to_json(summary).dump(o.json ? 2 : -1) << '\n';
  return summary.ok() ? 0 : 3;
}

int run_search(const Options& o) {
  const auto spec = corpus_spec(o);
  std::vector<NumericalSemigroup> corpus;
  if (!o.sgp.empty())
    corpus.push_back(parse_sgp(o.sgp));
  else
    corpus = enumerate_semigroups(spec.max_genus, spec.max_multiplicity);
  const auto f = format_of(o, Format::Jsonl);
  cmd_search(corpus, spec, o.predicate, [f](const ReportDocument& d) {
    emit(d, f == Format::Json ? Format::Jsonl : f);
    std::cout.flush();
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* w = std::getenv("NUMCURVE_WINDOW")) {
    try {
      set_window_multiplier(std::stoi(w));
    } catch (const std::exception&) {
      std::cerr << "error: NUMCURVE_WINDOW must be an integer\n";
      return 2;
    }
  }

  Options o;
  CLI::App app{"Numerical semigroups, duplications and tangent-cone properties"};
  app.require_subcommand(1);

  auto add_instance = [&o](CLI::App* sub, bool with_ideal) {
    sub->add_option("--sgp", o.sgp, "semigroup generators, e.g. 3,4");
    if (with_ideal) {
      sub->add_option("--ideal", o.ideal, "ideal generators, e.g. 3,8");
      sub->add_option("--b", o.b, "odd element of S");
    }
  };
  auto add_format = [&o](CLI::App* sub) {
    auto* json = sub->add_flag("--json", o.json, "one JSON document");
    auto* jsonl = sub->add_flag("--jsonl", o.jsonl, "one JSON document per line");
    auto* csv = sub->add_flag("--csv", o.csv, "Apéry profiles as CSV");
    json->excludes(jsonl)->excludes(csv);
    jsonl->excludes(csv);
  };
  auto add_corpus = [&o](CLI::App* sub) {
    sub->add_option("--max-genus", o.max_genus, "largest genus")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-mult", o.max_mult, "largest multiplicity, 0 for none")->check(CLI::NonNegativeNumber);
    sub->add_option("--ideal-gens", o.ideal_gens, "max ideal generators")->check(CLI::PositiveNumber);
    sub->add_option("--ideal-min", o.ideal_min, "max min(E), default f+m");
    sub->add_option("--b-bound", o.b_bound, "max b, default f+2m");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  int code = 0;
  auto* info = app.add_subcommand("info", "invariants and verdicts of S");
  add_instance(info, false);
  add_format(info);
  info->add_flag("--strict", o.strict, "exit 1 when gr CM fails");
  info->callback([&] { code = run_info(o); });

  auto* dup = app.add_subcommand("dup", "duplication S ⋈^b E and both sides of each theorem");
  add_instance(dup, true);
  add_format(dup);
  dup->add_flag("--strict", o.strict, "exit 1 when T is not gr CM");
  dup->callback([&] { code = run_dup(o); });

  auto* homog = app.add_subcommand("homog", "homogeneity of S, E and S ⋈^b E");
  add_instance(homog, true);
  add_format(homog);
  homog->add_flag("--strict", o.strict, "exit 1 when the last object is not homogeneous");
  homog->callback([&] { code = run_homog(o); });

  auto* homtype = app.add_subcommand("homtype-search", "homogeneous-type candidates (s, b, T)");
  add_instance(homtype, false);
  add_format(homtype);
  homtype->callback([&] { code = run_homtype(o); });

  auto* validate = app.add_subcommand("validate", "cross-check every theorem over a corpus");
  add_corpus(validate);
  add_format(validate);
  validate->callback([&] { code = run_validate(o); });

  auto* search = app.add_subcommand("search", "stream corpus instances matching a predicate");
  search->add_option("predicate", o.predicate, "predicate name")->required();
  search->add_option("--sgp", o.sgp, "restrict the corpus to one semigroup");
  add_corpus(search);
  add_format(search);
  search->callback([&] { code = run_search(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::StabilizationFailure) return 3;
    return 2;
  }
  return code;
}
