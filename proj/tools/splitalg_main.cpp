#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "splitalg/report.hpp"

using namespace splitalg;
using nlohmann::json;

namespace {

size_t env_size_cap(size_t dflt) {
  const char* v = std::getenv("SPLITALG_MAX_ALGEBRA_SIZE");
  if (!v) return dflt;
  try {
    return static_cast<size_t>(std::stoull(v));
  } catch (...) {
    return dflt;
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

struct PolyInput {
  std::string ring;
  std::string poly;
  bool json = false;
  int max_degree = 6;

  void attach(CLI::App* cmd, bool need_poly = true) {
    cmd->add_option("--ring", ring, "base ring spec, e.g. Q, Fp(5), Poly(Q; p, q)")
        ->required();
    if (need_poly)
      cmd->add_option("--poly", poly, "monic polynomial in t over the ring")
          ->required();
    cmd->add_flag("--json", json, "emit JSON instead of text");
    cmd->add_option("--max-degree", max_degree,
                    "refuse degrees above this (the algebra has degree! basis "
                    "monomials)")
        ->capture_default_str();
  }

  MonicPoly parse() const {
    RingHandle A = Ring::parse_spec(ring);
    MonicPoly f = parse_monic(A, poly);
    if (f.degree() > max_degree)
      fail(Err::MalformedSpec,
           "degree " + std::to_string(f.degree()) + " exceeds --max-degree " +
               std::to_string(max_degree));
    return f;
  }
};

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(sep, start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    size_t a = piece.find_first_not_of(" \t");
    size_t b = piece.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(piece.substr(a, b - a + 1));
    start = end + 1;
  }
  return out;
}

int run_normalize(const PolyInput& in, const std::string& expr) {
  SplitAlgebraHandle alg = SplitAlgebra::create(in.parse());
  SplitElement x = alg->parse(expr);
  if (in.json)
    std::cout << element_json(x).dump(2) << "\n";
  else
    std::cout << x.str() << "\n";
  return 0;
}

int run_discriminant(const PolyInput& in) {
  MonicPoly f = in.parse();
  RingElem d = discriminant(f);
  if (in.json)
    std::cout << json{{"discriminant", d.str()}}.dump(2) << "\n";
  else
    std::cout << d.str() << "\n";
  return 0;
}

int run_invariants(const PolyInput& in, const InvariantOptions& opt) {
  SplitAlgebraHandle alg = SplitAlgebra::create(in.parse());
  InvariantModule m = invariant_module(alg, opt);
  if (in.json) {
    std::cout << invariant_module_json(m).dump(2) << "\n";
    return 0;
  }
  std::cout << "method: " << m.method << "\n";
  if (!m.complete)
    std::cout << "complete: truncated at coordinate degree "
              << m.truncation_degree << "\n";
  for (const auto& g : m.generators) std::cout << "generator: " << g.str() << "\n";
  return 0;
}

int run_verify_theorem(const PolyInput& in, const InvariantOptions& opt) {
  SplitAlgebraHandle alg = SplitAlgebra::create(in.parse());
  InvariantsTheoremReport r = verify_invariants_theorem(alg, opt);
  if (in.json) {
    std::cout << theorem_report_json(r).dump(2) << "\n";
  } else {
    auto verdict = [](const Regularity& reg) {
      return reg.verdict == Reg::Regular       ? "regular"
             : reg.verdict == Reg::ZeroDivisor ? "zero-divisor"
                                               : "unknown";
    };
    std::cout << "discriminant: " << r.discriminant_value.str() << "\n"
              << "two: " << verdict(r.two_regular) << "\n"
              << "discriminant regularity: " << verdict(r.discriminant_regular)
              << "\n"
              << "hypothesis holds: " << yesno(r.hypothesis_holds) << "\n"
              << "invariants trivial: " << yesno(r.invariants_trivial) << "\n"
              << "consistent: " << yesno(r.consistent) << "\n";
  }
  return r.consistent ? 0 : 3;
}

int run_symreduce(const std::string& ring, int nvars, const std::string& expr,
                  bool json_out) {
  RingHandle A0 = Ring::parse_spec(ring);
  std::vector<std::string> tnames;
  for (int k = 1; k <= nvars; ++k) tnames.push_back("t" + std::to_string(k));
  RingHandle P = Ring::poly_ring(A0, tnames);
  SymmetricReduction r = reduce_symmetric_polynomial(P->parse(expr));
  if (json_out)
    std::cout << json{{"expression", r.expression.str()}}.dump(2) << "\n";
  else
    std::cout << r.expression.str() << "\n";
  return 0;
}

int run_decompose(const PolyInput& in, const std::string& factors) {
  MonicPoly f = in.parse();
  std::vector<MonicPoly> gs;
  for (const auto& text : split_list(factors, ';'))
    gs.push_back(parse_monic(f.ring, text));
  SplitAlgebraHandle alg = SplitAlgebra::create(f);
  ShuffleDecomposition d = shuffle_decomposition(alg, gs);
  if (in.json) {
    std::cout << decomposition_json(d).dump(2) << "\n";
    return 0;
  }
  std::cout << "shuffles: " << d.sigma.size() << "\n"
            << "tensor rank: " << d.tensor->rank() << "\n"
            << "matrix size: " << d.matrix.rows << "\n"
            << "det: " << d.det.str() << "\n"
            << "invertible: " << yesno(d.invertible) << "\n";
  for (const auto& s : d.sigma)
    std::cout << "shuffle: " << perm_string(s.perm) << "\n";
  return 0;
}

int run_galois(const PolyInput& in) {
  GaloisReport g = galois_group(in.parse());
  if (in.json) {
    std::cout << galois_json(g).dump(2) << "\n";
  } else {
    std::cout << "group order: " << g.group_order << "\n"
              << "residue degree: " << g.residue_degree << "\n"
              << "ideals: " << g.ideal_count << "\n";
    for (const auto& s : g.generators)
      std::cout << "generator: " << perm_string(s) << "\n";
    std::cout << "order matches degree: " << yesno(g.order_matches_degree)
              << "\n"
              << "closed under ops: " << yesno(g.closed_under_ops) << "\n"
              << "orbit stabilizer: " << yesno(g.orbit_stabilizer_ok) << "\n"
              << "fixed field is base: " << yesno(g.fixed_field_is_base)
              << "\n";
  }
  bool ok = g.order_matches_degree && g.closed_under_ops &&
            g.orbit_stabilizer_ok && g.fixed_field_is_base;
  return ok ? 0 : 3;
}

int run_maxideals(const PolyInput& in) {
  SplitAlgebraHandle alg = SplitAlgebra::create(in.parse());
  std::vector<MaximalIdealDesc> v = maximal_ideals(alg);
  if (in.json) {
    std::cout << maxideals_json(v).dump(2) << "\n";
    return 0;
  }
  std::cout << "ideals: " << v.size() << "\n";
  for (size_t i = 0; i < v.size(); ++i) {
    std::cout << "ideal " << i << " (residue degree " << v[i].residue_degree
              << "):";
    if (v[i].kernel_basis.empty()) std::cout << " zero";
    for (const auto& b : v[i].kernel_basis) std::cout << " " << b.str() << ";";
    std::cout << "\n";
  }
  return 0;
}

int run_search(const std::vector<std::string>& rings,
               const std::vector<int>& degrees, size_t max_size, bool json_out) {
  ExceptionalSearchSpec spec;
  spec.ring_specs = rings;
  spec.degrees = degrees;
  spec.max_algebra_size = max_size;
  std::vector<ExceptionalFinding> found = search_exceptional(spec);
  if (json_out) {
    std::cout << findings_json(found).dump(2) << "\n";
    return 0;
  }
  std::cout << "findings: " << found.size() << "\n";
  for (const auto& f : found) {
    std::cout << "ring: " << f.ring_spec << "; poly: " << f.poly << "; extra:";
    for (const auto& g : f.extra_invariants) std::cout << " " << g << ";";
    std::cout << "\n";
  }
  return 0;
}

int run_demo(bool json_out) {
  InseparableDemoReport r = inseparable_demo();
  if (json_out) {
    std::cout << inseparable_json(r).dump(2) << "\n";
  } else {
    std::cout << "base: " << r.algebra->base()->spec_string() << "\n"
              << "poly: " << monic_to_string(r.algebra->poly()) << "\n"
              << "squared root differences vanish: " << yesno(r.squares_vanish)
              << "\n"
              << "difference ideal stable: " << yesno(r.ideal_stable) << "\n"
              << "residue action trivial: " << yesno(r.residue_action_trivial)
              << "\n"
              << "invariants trivial: " << yesno(r.invariants_trivial) << "\n"
              << "all checks: " << yesno(r.all_ok) << "\n";
  }
  return r.all_ok ? 0 : 3;
}

int run_verify(const PolyInput& in, size_t cap) {
  MonicPoly f = in.parse();
  std::vector<OracleReport> reports;
  reports.push_back(check_discriminant(f));

  const RingHandle& A = f.ring;
  bool finite = A->cardinality().has_value();
  if (finite) {
    SplitAlgebraHandle alg = SplitAlgebra::create(f);
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), A->cardinality()->get_mpz_t(),
               static_cast<unsigned long>(alg->basis_size()));
    if (total <= mpz_class(static_cast<unsigned long>(cap)))
      reports.push_back(check_invariants(alg, cap));
  }

  int n = f.degree();
  if (n >= 2) {
    std::vector<std::string> tnames;
    for (int k = 1; k <= n; ++k) tnames.push_back("t" + std::to_string(k));
    RingHandle P = Ring::poly_ring(A, tnames);
    RingElem p2 = P->zero(), p3 = P->zero();
    for (const auto& v : tnames) {
      p2 = P->add(p2, P->pow(P->var_elem(v), 2));
      p3 = P->add(p3, P->pow(P->var_elem(v), 3));
    }
    reports.push_back(check_symmetric_reduction(p2));
    reports.push_back(check_symmetric_reduction(p3));
  }

  bool all = true;
  for (const auto& r : reports) all = all && r.agree;
  if (in.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(oracle_json(r));
    std::cout << json{{"checks", arr}, {"all_agree", all}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports)
      std::cout << r.name << ": " << (r.agree ? "agree" : "DISAGREE") << " ("
                << r.oracle_value << " | " << r.main_value << ")\n";
    std::cout << "all agree: " << yesno(all) << "\n";
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact splitting algebras of monic polynomials: invariants, "
               "decompositions and Galois groups over commutative rings"};
  app.require_subcommand(1);

  PolyInput norm_in, disc_in, inv_in, thm_in, dec_in, gal_in, max_in, ver_in;
  std::string norm_expr, dec_factors, sym_ring, sym_expr;
  int sym_nvars = 2;
  bool sym_json = false, search_json = false, demo_json = false;
  InvariantOptions inv_opt, thm_opt;
  inv_opt.exhaustive_bound = env_size_cap(inv_opt.exhaustive_bound);
  thm_opt.exhaustive_bound = inv_opt.exhaustive_bound;
  size_t verify_cap = env_size_cap(1u << 16);
  std::vector<std::string> search_rings;
  std::vector<int> search_degrees;
  size_t search_max = env_size_cap(65536);

  CLI::App* norm = app.add_subcommand(
      "normalize", "normal form of an expression in the universal roots");
  norm_in.attach(norm);
  norm->add_option("--expr", norm_expr, "expression in tau1..tauN")->required();

  CLI::App* disc = app.add_subcommand(
      "discriminant", "product of squared differences of the universal roots");
  disc_in.attach(disc);

  CLI::App* inv = app.add_subcommand(
      "invariants", "generators of the permutation-fixed module");
  inv_in.attach(inv);
  inv->add_option("--exhaustive-bound", inv_opt.exhaustive_bound,
                  "largest enumerable algebra size")
      ->capture_default_str();
  inv->add_option("--truncation-degree", inv_opt.poly_truncation_degree,
                  "coordinate degree cap over polynomial-ring bases")
      ->capture_default_str();

  CLI::App* thm = app.add_subcommand(
      "verify-theorem",
      "regularity hypotheses and triviality of the fixed module");
  thm_in.attach(thm);

  CLI::App* sym = app.add_subcommand(
      "symreduce", "rewrite a symmetric polynomial in the elementary basis");
  sym->add_option("--ring", sym_ring, "coefficient ring spec")->required();
  sym->add_option("--nvars", sym_nvars, "number of t-variables")
      ->capture_default_str();
  sym->add_option("--expr", sym_expr, "symmetric polynomial in t1..tN")
      ->required();
  sym->add_flag("--json", sym_json, "emit JSON instead of text");

  CLI::App* dec = app.add_subcommand(
      "decompose",
      "combined shuffle map into tensor products of smaller algebras");
  dec_in.attach(dec);
  dec->add_option("--factors", dec_factors,
                  "semicolon-separated monic factors whose product is --poly")
      ->required();

  CLI::App* gal = app.add_subcommand(
      "galois", "stabilizer of a maximal ideal over a finite field");
  gal_in.attach(gal);

  CLI::App* max = app.add_subcommand(
      "maxideals", "maximal ideals with residue field the splitting field");
  max_in.attach(max);

  CLI::App* search = app.add_subcommand(
      "search-exceptional",
      "search finite base rings for nontrivial fixed modules");
  search->add_option("--ring", search_rings, "ring spec (repeatable)")
      ->required();
  search->add_option("--degree", search_degrees, "polynomial degree (repeatable)")
      ->required();
  search->add_option("--max-size", search_max, "largest enumerable algebra")
      ->capture_default_str();
  search->add_flag("--json", search_json, "emit JSON instead of text");

  CLI::App* demo = app.add_subcommand(
      "demo-inseparable",
      "worked inseparable example over a rational function field");
  demo->add_flag("--json", demo_json, "emit JSON instead of text");

  CLI::App* ver = app.add_subcommand(
      "verify", "cross-check main results against independent oracles");
  ver_in.attach(ver);
  ver->add_option("--cap", verify_cap, "enumeration cap for the fixed-set oracle")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (norm->parsed()) return run_normalize(norm_in, norm_expr);
    if (disc->parsed()) return run_discriminant(disc_in);
    if (inv->parsed()) return run_invariants(inv_in, inv_opt);
    if (thm->parsed()) return run_verify_theorem(thm_in, thm_opt);
    if (sym->parsed())
      return run_symreduce(sym_ring, sym_nvars, sym_expr, sym_json);
    if (dec->parsed()) return run_decompose(dec_in, dec_factors);
    if (gal->parsed()) return run_galois(gal_in);
    if (max->parsed()) return run_maxideals(max_in);
    if (search->parsed())
      return run_search(search_rings, search_degrees, search_max, search_json);
    if (demo->parsed()) return run_demo(demo_json);
    if (ver->parsed()) return run_verify(ver_in, verify_cap);
  } catch (const SplitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return err_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
