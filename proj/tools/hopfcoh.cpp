#include <iostream>

#include "CLI11.hpp"

#include "hopfcoh/cup.hpp"
#include "hopfcoh/suites.hpp"

using namespace hopfcoh;

namespace {

enum Exit { kPass = 0, kMathFailure = 1, kInputError = 2, kResourceGuard = 3 };

bool is_bimodule_file(const Json& j) { return j.contains("preset") || j.contains("left_action"); }

int cmd_check(const std::string& file) {
  const Json j = read_json(file);
  AxiomReport rep;
  if (is_bimodule_file(j)) {
    auto m = load_bimodule(file, nullptr);
    rep = check_hopf_bimodule(m);
  } else {
    rep = check_hopf_axioms(*load_algebra(file));
  }
  for (const auto& c : rep.checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
  if (!rep.all_passed()) {
    std::cout << "failed axioms: " << rep.failures() << "\n";
    return kMathFailure;
  }
  return kPass;
}

struct CohomologyArgs {
  std::string file, theory = "b", module, comodule;
  std::size_t max_degree = 2, threads = 1;
  double budget = 1e8;
  bool json = false, full = false;
};

DoubleComplex make_complex(const CohomologyArgs& a, const HopfAlgebraPtr& h) {
  ComplexOptions o;
  o.entry_budget = a.budget;
  o.threads = a.threads;
  const Theory t = parse_theory(a.theory);
  const bool coefficients = !a.module.empty() || !a.comodule.empty();
  if (t == Theory::B && !coefficients && !a.full) return reduced_b_complex(h, a.max_degree, o);
  const HopfBimodule H = regular_bimodule(h);
  const HopfBimodule M = a.module.empty() ? H : load_bimodule(a.module, h);
  const HopfBimodule N = a.comodule.empty() ? H : load_bimodule(a.comodule, h);
  for (const auto* x : {&M, &N}) {
    auto rep = check_hopf_bimodule(*x);
    if (!rep.all_passed()) throw InputError("coefficient bimodule fails: " + rep.failures());
  }
  return build_double_complex(t, M, N, a.max_degree, o);
}

HopfAlgebraPtr checked_algebra(const std::string& file) {
  auto h = load_algebra(file);
  auto rep = check_hopf_axioms(*h);
  if (!rep.all_passed()) throw InputError(file + " is not a Hopf algebra: " + rep.failures());
  return h;
}

int cmd_cohomology(const CohomologyArgs& a) {
  auto h = checked_algebra(a.file);
  const DoubleComplex dc = make_complex(a, h);
  const CohomologyResult r = total_cohomology(dc, a.json);
  if (a.json) {
    std::cout << cohomology_to_json(dc, r).dump(2) << "\n";
    return kPass;
  }
  std::cout << "theory " << theory_name(dc.theory()) << (dc.reduced() ? " (reduced)" : "") << " over "
            << dc.field().name() << ", degrees 0.." << dc.max_degree() << "\n";
  for (std::size_t n = 0; n < r.dims.size(); ++n) std::cout << (n ? " " : "") << r.dims[n];
  std::cout << "\n";
  return kPass;
}

std::string render(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

int cmd_cup(const CohomologyArgs& a) {
  auto h = checked_algebra(a.file);
  ComplexOptions o;
  o.entry_budget = a.budget;
  o.threads = a.threads;
  const DoubleComplex dc = reduced_b_complex(h, a.max_degree, o);
  const CohomologyResult r = total_cohomology(dc);
  const auto table = cup_table(dc, r, a.max_degree);
  bool all_coboundary = true;
  for (const auto& e : table) all_coboundary = all_coboundary && e.commutator_coboundary;
  if (a.json) {
    Json gens = Json::array();
    for (std::size_t n = 0; n < r.representatives.size(); ++n)
      for (std::size_t i = 0; i < r.representatives[n].size(); ++i)
        gens.push_back({{"degree", n}, {"index", i}, {"coordinates", sparse_vector_to_json(r.representatives[n][i])}});
    Json products = Json::array();
    for (const auto& e : table) {
      Json coeffs = Json::array();
      for (const auto& c : e.product) coeffs.push_back(c.to_string());
      products.push_back({{"left", {e.left_degree, e.left_index}},
                          {"right", {e.right_degree, e.right_index}},
                          {"product", coeffs},
                          {"commutator", e.commutator_coboundary ? "coboundary" : "not a coboundary"}});
    }
    std::cout << Json{{"field", dc.field().name()}, {"dims", r.dims}, {"generators", gens}, {"products", products}}.dump(2)
              << "\n";
  } else {
    std::cout << "generators x<degree>.<index> over " << dc.field().name() << "\n";
    for (const auto& e : table)
      std::cout << "x" << e.left_degree << "." << e.left_index << " * x" << e.right_degree << "." << e.right_index
                << " = " << render(e.product) << "  commutator: "
                << (e.commutator_coboundary ? "coboundary" : "NOT a coboundary") << "\n";
  }
  return all_coboundary ? kPass : kMathFailure;
}

int cmd_verify(const std::string& file, const std::string& suite, std::size_t threads, double budget, bool json) {
  auto h = load_algebra(file);
  SuiteOptions o;
  o.threads = threads;
  o.entry_budget = budget;
  const SuiteReport rep = run_suite(h, parse_suite(suite), o);
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.render();
  return rep.passed() ? kPass : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of finite-dimensional Hopf bimodules"};
  app.require_subcommand(1);
  double budget = 1e8;
  app.add_option("--budget", budget, "Largest cochain matrix (entries) any cell may need")->capture_default_str();

  std::string check_file;
  auto* check = app.add_subcommand("check", "Check the axioms of an algebra or bimodule file");
  check->add_option("file", check_file)->required();

  CohomologyArgs coh;
  auto* cohomology = app.add_subcommand("cohomology", "Cohomology dimensions");
  cohomology->add_option("file", coh.file, "Algebra file")->required();
  cohomology->add_option("--theory", coh.theory, "b, h4 or gs")->capture_default_str();
  cohomology->add_option("--max-degree", coh.max_degree)->capture_default_str();
  cohomology->add_option("--module", coh.module, "Bimodule file for the first argument M (default H)");
  cohomology->add_option("--comodule", coh.comodule, "Bimodule file for the second argument N (default H)");
  cohomology->add_option("--threads", coh.threads)->capture_default_str();
  cohomology->add_flag("--full", coh.full, "Use the full b complex instead of the reduced one");
  cohomology->add_flag("--json", coh.json);

  CohomologyArgs cupa;
  auto* cupc = app.add_subcommand("cup", "Cup products of representative classes");
  cupc->add_option("file", cupa.file, "Algebra file")->required();
  cupc->add_option("--max-degree", cupa.max_degree)->capture_default_str();
  cupc->add_option("--threads", cupa.threads)->capture_default_str();
  cupc->add_flag("--json", cupa.json);

  std::string verify_file, suite = "all";
  std::size_t threads = 1;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("file", verify_file, "Algebra file")->required();
  verify->add_option("--suite", suite, "axioms, complexes, cohomology, cup, extensions or all")->capture_default_str();
  verify->add_option("--threads", threads)->capture_default_str();
  verify->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(check_file);
    if (*cohomology) {
      coh.budget = budget;
      return cmd_cohomology(coh);
    }
    if (*cupc) {
      cupa.budget = budget;
      return cmd_cup(cupa);
    }
    if (*verify) return cmd_verify(verify_file, suite, threads, budget, verify_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}
