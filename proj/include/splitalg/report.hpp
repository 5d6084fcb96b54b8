#pragma once

#include "json.hpp"
#include "splitalg/decompose.hpp"
#include "splitalg/oracles.hpp"

namespace splitalg {

/// JSON views of the result types, for the CLI and for machine consumers.
/// Every field is either a number, a boolean, or the canonical string form
/// of an exact value; nothing is rounded.

nlohmann::json element_json(const SplitElement& x);
nlohmann::json monic_json(const MonicPoly& f);
nlohmann::json perm_json(const Perm& s);
nlohmann::json regularity_json(const Regularity& r);
nlohmann::json invariant_module_json(const InvariantModule& m);
nlohmann::json theorem_report_json(const InvariantsTheoremReport& r);
nlohmann::json decomposition_json(const ShuffleDecomposition& d);
nlohmann::json galois_json(const GaloisReport& g);
nlohmann::json maxideals_json(const std::vector<MaximalIdealDesc>& v);
nlohmann::json findings_json(const std::vector<ExceptionalFinding>& v);
nlohmann::json oracle_json(const OracleReport& r);
nlohmann::json inseparable_json(const InseparableDemoReport& r);

}  // namespace splitalg
