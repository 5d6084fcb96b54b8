#include "splitalg/report.hpp"

namespace splitalg {

using nlohmann::json;

json element_json(const SplitElement& x) {
  json coords = json::array();
  for (const auto& [exps, c] : x.coords())
    coords.push_back({{"exps", exps}, {"coeff", c.str()}});
  return {{"degree", x.algebra()->degree()},
          {"coords", coords},
          {"text", x.str()}};
}

json monic_json(const MonicPoly& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(c.str());
  return {{"ring", f.ring->spec_string()},
          {"coeffs", coeffs},
          {"text", monic_to_string(f)}};
}

json perm_json(const Perm& s) { return json(s.img); }

json regularity_json(const Regularity& r) {
  json out;
  out["verdict"] = r.verdict == Reg::Regular       ? "regular"
                   : r.verdict == Reg::ZeroDivisor ? "zero-divisor"
                                                   : "unknown";
  if (r.witness) out["witness"] = r.witness->str();
  return out;
}

json invariant_module_json(const InvariantModule& m) {
  json gens = json::array();
  for (const auto& g : m.generators) gens.push_back(g.str());
  json out = {{"generators", gens}, {"method", m.method}, {"complete", m.complete}};
  if (!m.complete) out["truncation_degree"] = m.truncation_degree;
  return out;
}

json theorem_report_json(const InvariantsTheoremReport& r) {
  return {{"discriminant", r.discriminant_value.str()},
          {"two_regular", regularity_json(r.two_regular)},
          {"discriminant_regular", regularity_json(r.discriminant_regular)},
          {"hypothesis_holds", r.hypothesis_holds},
          {"invariants_trivial", r.invariants_trivial},
          {"consistent", r.consistent},
          {"module", invariant_module_json(r.module)}};
}

json decomposition_json(const ShuffleDecomposition& d) {
  json shuffles = json::array();
  for (const auto& s : d.sigma) shuffles.push_back(perm_json(s.perm));
  json comp = json::array();
  if (!d.sigma.empty())
    for (int c : d.sigma.front().composition) comp.push_back(c);
  return {{"composition", comp},
          {"shuffle_count", d.sigma.size()},
          {"tensor_rank", d.tensor->rank()},
          {"matrix_size", d.matrix.rows},
          {"det", d.det.str()},
          {"invertible", d.invertible},
          {"shuffles", shuffles}};
}

json galois_json(const GaloisReport& g) {
  json elems = json::array();
  for (const auto& s : g.elements) elems.push_back(perm_json(s));
  json gens = json::array();
  for (const auto& s : g.generators) gens.push_back(perm_json(s));
  return {{"group_order", g.group_order},
          {"residue_degree", g.residue_degree},
          {"ideal_count", g.ideal_count},
          {"elements", elems},
          {"generators", gens},
          {"checks",
           {{"order_matches_degree", g.order_matches_degree},
            {"closed_under_ops", g.closed_under_ops},
            {"orbit_stabilizer_ok", g.orbit_stabilizer_ok},
            {"fixed_field_is_base", g.fixed_field_is_base}}}};
}

json maxideals_json(const std::vector<MaximalIdealDesc>& v) {
  json out = json::array();
  for (const auto& m : v) {
    json basis = json::array();
    for (const auto& b : m.kernel_basis) basis.push_back(b.str());
    out.push_back({{"kernel_basis", basis}, {"residue_degree", m.residue_degree}});
  }
  return out;
}

json findings_json(const std::vector<ExceptionalFinding>& v) {
  json out = json::array();
  for (const auto& f : v)
    out.push_back({{"ring", f.ring_spec},
                   {"poly", f.poly},
                   {"extra_invariants", f.extra_invariants}});
  return out;
}

json oracle_json(const OracleReport& r) {
  return {{"name", r.name},
          {"inputs", r.inputs},
          {"oracle_value", r.oracle_value},
          {"main_value", r.main_value},
          {"agree", r.agree}};
}

json inseparable_json(const InseparableDemoReport& r) {
  return {{"base", r.algebra->base()->spec_string()},
          {"poly", monic_to_string(r.algebra->poly())},
          {"squares_vanish", r.squares_vanish},
          {"ideal_stable", r.ideal_stable},
          {"residue_action_trivial", r.residue_action_trivial},
          {"invariants_trivial", r.invariants_trivial},
          {"all_ok", r.all_ok}};
}

}  // namespace splitalg
