#pragma once

#include <string>

#include "codegree/chartab.hpp"
#include "codegree/lietables.hpp"
#include "codegree/qian.hpp"

namespace codegree {

/// Character-table schema:
/// {spec, order, exponent, classes:[{rep_cycles, size, element_order}],
///  irreducibles:[[cyclonum]], degrees, codegrees} with cyclonum =
/// {conductor, coeffs:[rational strings]}. Output is byte-stable.
std::string table_to_json(const CharacterTable& T);
CharacterTable table_from_json(const std::string& text);

/// Report schema: {spec, verdict, element_orders,
///  witnesses:[{order, degree, codegree}], flags}.
std::string qian_report_to_json(const QianReport& rep);

std::string theorem_a_report_to_json(const TheoremAReport& rep);
std::string corpus_summary_to_json(const CorpusSummary& s);
std::string monolithic_to_json(const MonolithicScenario& sc);
std::string lemma_pair_to_json(const LemmaPairResult& r);
std::string exception_report_to_json(const ExceptionReport& r);
std::string lie_check_to_json(const LieCheckResult& r);

}  // namespace codegree
