// Acceptance criteria: one PASS/FAIL line each.  `acceptance --only N` runs one.
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>

#include "hopfcoh/cup.hpp"
#include "hopfcoh/suites.hpp"

using namespace hopfcoh;

namespace {

const std::filesystem::path data_dir = HOPFCOH_DATA_DIR;
const std::vector<std::string> bundled = {"kc2_q", "kc2_gf2", "ks3_q", "ks3_dual_q", "taft2_q", "taft3_gf7"};

HopfAlgebraPtr load(const std::string& name) { return load_algebra(data_dir / (name + ".json")); }

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void note(const std::string& s) {
    if (passed) detail += (detail.empty() ? "" : "; ") + s;
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

std::vector<std::size_t> dims_of(const DoubleComplex& dc) { return total_cohomology(dc, false).dims; }

void require_suite(Outcome& o, const std::string& name, const SuiteReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed) o.fail(name + ": " + c.suite + "/" + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

void within(Outcome& o, std::chrono::steady_clock::time_point start, double seconds) {
  const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", took);
  if (took > seconds) o.fail(std::string("took ") + buf + ", limit " + std::to_string(static_cast<int>(seconds)) + "s");
  o.note(buf);
}

Outcome axioms() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& n : bundled) require_suite(o, n, run_suite(load(n), Suite::Axioms));
  within(o, start, 10);
  return o;
}

Outcome resolutions() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& n : bundled) require_suite(o, n, run_suite(load(n), Suite::Complexes));
  within(o, start, 300);
  return o;
}

Outcome h0_law() {
  Outcome o;
  for (const auto& n : bundled) {
    auto h = load(n);
    auto H = regular_bimodule(h);
    const std::size_t h0 = dims_of(build_double_complex(Theory::H4, H, H, 0))[0], hom = hom_space(H, H).dim();
    if (h0 != hom) o.fail(n + ": H^0 " + std::to_string(h0) + " vs " + std::to_string(hom));
  }
  auto h = load("kc2_q");
  auto H = regular_bimodule(h);
  auto X = under_tensor(H, H);
  const std::size_t h0 = dims_of(build_double_complex(Theory::H4, X, H, 0))[0], hom = hom_space(X, H).dim();
  if (h0 != hom) o.fail("under-tensor: H^0 " + std::to_string(h0) + " vs " + std::to_string(hom));
  o.note("under-tensor H^0 = " + std::to_string(h0));
  return o;
}

Outcome unification() {
  Outcome o;
  for (const std::string n : {"kc2_q", "kc2_gf2", "taft2_q"}) {
    auto H = regular_bimodule(load(n));
    auto gs = dims_of(build_double_complex(Theory::GS, H, H, 2));
    auto h4 = dims_of(build_double_complex(Theory::H4, H, H, 2));
    if (gs != h4) o.fail(n + ": gs " + join(gs) + " vs h4 " + join(h4));
    o.note(n + " " + join(h4));
  }
  return o;
}

Outcome injectives() {
  Outcome o;
  for (const std::string n : {"kc2_q", "kc2_gf2"}) {
    auto h = load(n);
    auto dims = dims_of(build_double_complex(Theory::H4, regular_bimodule(h), sandwich(free_bimodule(h)), 2));
    if (dims[1] != 0 || dims[2] != 0) o.fail(n + ": " + join(dims));
    o.note(n + " " + join(dims));
  }
  return o;
}

Outcome benchmarks() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> expected = {{"kc2_q", {1, 0, 0, 0}},
                                                                                  {"kc2_gf2", {1, 2, 3, 4}}};
  for (const auto& [n, want] : expected) {
    auto h = load(n);
    auto H = regular_bimodule(h);
    auto full = dims_of(build_double_complex(Theory::B, H, H, 2));
    auto red = dims_of(reduced_b_complex(h, 3));
    for (std::size_t k = 0; k < full.size(); ++k)
      if (full[k] != red[k]) o.fail(n + ": full " + join(full) + " and reduced " + join(red) + " disagree");
    if (red != want) o.fail(n + ": computed " + join(red) + ", expected " + join(want));
    o.note(n + " " + join(red));
  }
  within(o, start, 120);
  return o;
}

TotalCochain basis_cochain(const DoubleComplex& dc, std::size_t n, std::size_t i) {
  return dc.from_coordinates(n, SparseVector::unit(i, dc.field().one()));
}

TotalCochain random_cochain(const DoubleComplex& dc, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Entry> e;
  for (std::size_t i = 0; i < dc.total_dim(n); ++i)
    if (int v = dist(rng)) e.push_back({i, dc.field().from_int(v)});
  return dc.from_coordinates(n, SparseVector::from_unsorted(std::move(e)));
}

Outcome leibniz() {
  Outcome o;
  auto h2 = load("kc2_gf2");
  auto H2 = regular_bimodule(h2);
  std::size_t pairs = 0;
  for (const DoubleComplex& dc : {reduced_b_complex(h2, 3), build_double_complex(Theory::H4, H2, H2, 2)})
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t q = 0; p + q <= 2; ++q)
        for (std::size_t i = 0; i < dc.total_dim(p); ++i)
          for (std::size_t j = 0; j < dc.total_dim(q); ++j, ++pairs)
            if (!check_leibniz(dc, basis_cochain(dc, p, i), basis_cochain(dc, q, j)))
              o.fail("kc2_gf2 basis pair in degrees " + std::to_string(p) + "," + std::to_string(q));
  o.note(std::to_string(pairs) + " basis pairs over kc2_gf2");
  auto hq = load("taft2_q");
  auto dc = reduced_b_complex(hq, 3);
  std::mt19937 rng(7);
  for (std::size_t k = 0; k < 100; ++k) {
    const std::size_t p = k % 3, q = (k / 3) % (3 - p);
    if (!check_leibniz(dc, random_cochain(dc, p, rng), random_cochain(dc, q, rng)))
      o.fail("taft2_q random pair in degrees " + std::to_string(p) + "," + std::to_string(q));
  }
  o.note("100 random pairs over taft2_q");
  return o;
}

Outcome commutativity() {
  Outcome o;
  for (const auto& [n, top] : std::vector<std::pair<std::string, std::size_t>>{{"kc2_gf2", 3}, {"taft2_q", 2}}) {
    auto dc = reduced_b_complex(load(n), 3);
    auto res = total_cohomology(dc);
    std::size_t tested = 0;
    for (std::size_t p = 0; p <= top; ++p)
      for (std::size_t q = 0; p + q <= top; ++q)
        for (const auto& a : res.representatives[p])
          for (const auto& b : res.representatives[q]) {
            ++tested;
            if (!graded_commutator_test(dc, dc.from_coordinates(p, a), dc.from_coordinates(q, b)).coboundary)
              o.fail(n + ": commutator in degrees " + std::to_string(p) + "," + std::to_string(q));
          }
    o.note(n + " " + std::to_string(tested) + " pairs");
  }
  return o;
}

Outcome embedding() {
  Outcome o;
  for (const auto& n : bundled) {
    auto h = load(n);
    const Field f = h->field();
    auto H = regular_bimodule(h);
    for (const auto& M : {H, under_tensor(H, H)}) {
      auto psi = psi_embedding(M);
      if (!is_morphism(M, sandwich(M.underlying_bimodule()), psi)) o.fail(n + ": psi is not a morphism");
      if (rank(psi) != M.dim()) o.fail(n + ": psi is not injective");
      auto collapse = kron(kron(h->counit(), SparseMatrix::identity(f, M.dim())), h->counit());
      if (!(collapse * psi == SparseMatrix::identity(f, M.dim()))) o.fail(n + ": counit retraction fails");
    }
  }
  for (const std::string n : {"kc2_q", "kc2_gf2"}) {
    auto h = load(n);
    auto H = regular_bimodule(h);
    auto V = regular_plain_bimodule(h);
    for (const auto& X : {H, under_tensor(H, H)}) {
      const std::size_t a = hom_space(X, sandwich(V)).dim(), b = hom_space(X, V).dim();
      if (a != b) o.fail(n + ": adjunction " + std::to_string(a) + " vs " + std::to_string(b));
    }
  }
  return o;
}

Outcome extensions() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const std::string n : {"kc2_gf2", "taft2_q"}) require_suite(o, n, run_suite(load(n), Suite::Extensions));
  within(o, start, 120);
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const std::string n : {"kc2_gf2", "taft2_q"}) {
    auto h = load(n);
    SuiteOptions one, many;
    many.threads = 8;
    const Json a = run_suite(h, Suite::All, one).to_json(), b = run_suite(h, Suite::All, many).to_json();
    if (a != b) o.fail(n + ": reports differ between 1 and 8 threads");
    o.note(n + " " + std::to_string(a["checks"].size()) + " checks");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suites", axioms},
      {"resolutions exact and split", resolutions},
      {"H^0 equals Hopf bimodule maps", h0_law},
      {"GS and H4 dimensions agree", unification},
      {"vanishing on injective coefficients", injectives},
      {"kC2 dimension benchmarks", benchmarks},
      {"Leibniz rule", leibniz},
      {"graded commutativity up to coboundaries", commutativity},
      {"psi embedding and adjunction", embedding},
      {"extension calculus", extensions},
      {"determinism across thread counts", determinism},
  };
  std::size_t only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::stoul(argv[2]);
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
