#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "numcurve/corpus.hpp"
#include "numcurve/duplication.hpp"
#include "numcurve/report.hpp"

namespace numcurve {

/// Invariants and every single-semigroup verdict.
ReportDocument cmd_info(const NumericalSemigroup& s);

/// T = S ⋈^b E with both sides of each duplication theorem. The verdict
/// "agreement" is the conjunction of every "<theorem>.agree".
ReportDocument cmd_dup(const DuplicationInput& input);

/// Homogeneity of S, and of E and S ⋈^b E when given.
ReportDocument cmd_homog(const NumericalSemigroup& s, const std::optional<SemigroupIdeal>& e,
                         std::optional<Int> b);

/// One document per homogeneous-type candidate (s, b, T).
std::vector<ReportDocument> cmd_homtype_search(const NumericalSemigroup& s);

/// Names accepted by cmd_search.
const std::vector<std::string>& search_predicates();

/// Streams every corpus instance matching `predicate` to `sink`, in corpus
/// order. Throws UnknownPredicate.
void cmd_search(const std::vector<NumericalSemigroup>& corpus, const CorpusSpec& spec, const std::string& predicate,
                const std::function<void(const ReportDocument&)>& sink);

}  // namespace numcurve
