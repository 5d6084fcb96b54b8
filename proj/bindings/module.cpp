#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitalg/invariants.hpp"
#include "splitalg/report.hpp"

namespace py = pybind11;
using namespace splitalg;

namespace {

SplitAlgebraHandle make_algebra(const std::string& ring, const std::string& poly) {
  RingHandle A = Ring::parse_spec(ring);
  return SplitAlgebra::create(parse_monic(A, poly));
}

std::string normalize(const std::string& ring, const std::string& poly,
                      const std::string& expr) {
  auto alg = make_algebra(ring, poly);
  return alg->to_string(alg->parse(expr));
}

size_t basis_size(const std::string& ring, const std::string& poly) {
  return make_algebra(ring, poly)->basis_size();
}

std::string discriminant_str(const std::string& ring, const std::string& poly) {
  auto alg = make_algebra(ring, poly);
  return alg->base()->to_string(discriminant(alg));
}

std::string symreduce(const std::string& ring, int nvars, const std::string& expr) {
  RingHandle A = Ring::parse_spec(ring);
  std::vector<std::string> vars;
  for (int i = 1; i <= nvars; ++i) vars.push_back("t" + std::to_string(i));
  RingHandle P = Ring::poly_ring(A, vars);
  SymmetricReduction r = reduce_symmetric_polynomial(P->parse(expr));
  return r.e_ring->to_string(r.expression);
}

std::string invariants_json_str(const std::string& ring, const std::string& poly) {
  return invariant_module_json(invariant_module(make_algebra(ring, poly))).dump();
}

std::string theorem_json_str(const std::string& ring, const std::string& poly) {
  return theorem_report_json(verify_invariants_theorem(make_algebra(ring, poly))).dump();
}

std::string decompose_json_str(const std::string& ring, const std::string& poly,
                               const std::vector<std::string>& factors) {
  RingHandle A = Ring::parse_spec(ring);
  auto alg = SplitAlgebra::create(parse_monic(A, poly));
  std::vector<MonicPoly> gs;
  for (const auto& text : factors) gs.push_back(parse_monic(A, text));
  return decomposition_json(shuffle_decomposition(alg, gs)).dump();
}

std::string galois_json_str(const std::string& ring, const std::string& poly) {
  RingHandle A = Ring::parse_spec(ring);
  return galois_json(galois_group(parse_monic(A, poly))).dump();
}

std::string maxideals_json_str(const std::string& ring, const std::string& poly) {
  return maxideals_json(maximal_ideals(make_algebra(ring, poly))).dump();
}

std::string search_json_str(const std::string& ring, int degree) {
  ExceptionalSearchSpec spec;
  spec.ring_specs = {ring};
  spec.degrees = {degree};
  return findings_json(search_exceptional(spec)).dump();
}

std::string demo_json_str() { return inseparable_json(inseparable_demo()).dump(); }

std::string verify_json_str(const std::string& ring, const std::string& poly) {
  RingHandle A = Ring::parse_spec(ring);
  MonicPoly f = parse_monic(A, poly);
  auto alg = SplitAlgebra::create(f);
  int n = f.degree();

  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  auto push = [&](const OracleReport& rep) {
    checks.push_back(oracle_json(rep));
    all = all && rep.agree;
  };
  push(check_discriminant(f));
  if (A->cardinality()) {
    mpz_class total = 1;
    bool small = true;
    for (size_t k = 0; k < alg->basis_size() && small; ++k) {
      total *= *A->cardinality();
      small = total <= 65536;
    }
    if (small) push(check_invariants(alg));
  }
  if (n >= 2) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("t" + std::to_string(i));
    RingHandle P = Ring::poly_ring(A, vars);
    for (int e : {2, 3}) {
      RingElem h = P->zero();
      for (int i = 1; i <= n; ++i)
        h = P->add(h, P->pow(P->var_elem("t" + std::to_string(i)), e));
      push(check_symmetric_reduction(h));
    }
  }
  return nlohmann::json{{"all_agree", all}, {"checks", checks}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact splitting algebras of monic polynomials";

  py::register_exception<SplitError>(m, "SplitError");

  m.def("normalize", &normalize, py::arg("ring"), py::arg("poly"), py::arg("expr"),
        "normal form of an expression in the universal roots");
  m.def("basis_size", &basis_size, py::arg("ring"), py::arg("poly"),
        "rank of the splitting algebra over its base");
  m.def("discriminant", &discriminant_str, py::arg("ring"), py::arg("poly"),
        "product of squared root differences, as a base ring element");
  m.def("symreduce", &symreduce, py::arg("ring"), py::arg("nvars"), py::arg("expr"),
        "rewrite a symmetric polynomial in the elementary symmetric functions");
  m.def("invariants_json", &invariants_json_str, py::arg("ring"), py::arg("poly"),
        "generators of the fixed module, as a JSON string");
  m.def("theorem_json", &theorem_json_str, py::arg("ring"), py::arg("poly"),
        "regularity hypotheses and fixed-module triviality, as a JSON string");
  m.def("decompose_json", &decompose_json_str, py::arg("ring"), py::arg("poly"),
        py::arg("factors"), "shuffle decomposition report, as a JSON string");
  m.def("galois_json", &galois_json_str, py::arg("ring"), py::arg("poly"),
        "residue automorphism group report, as a JSON string");
  m.def("maxideals_json", &maxideals_json_str, py::arg("ring"), py::arg("poly"),
        "maximal ideals with kernel bases and residue degrees, as a JSON string");
  m.def("search_json", &search_json_str, py::arg("ring"), py::arg("degree"),
        "polynomials with a strictly bigger fixed module, as a JSON string");
  m.def("demo_json", &demo_json_str,
        "inseparable cubic demonstration report, as a JSON string");
  m.def("verify_json", &verify_json_str, py::arg("ring"), py::arg("poly"),
        "independent oracle cross-checks, as a JSON string");
}
