#include "hopfcoh/suites.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "hopfcoh/cup.hpp"
#include "hopfcoh/extensions.hpp"
#include "hopfcoh/resolution.hpp"

namespace hopfcoh {

Suite parse_suite(const std::string& s) {
  if (s == "axioms") return Suite::Axioms;
  if (s == "complexes") return Suite::Complexes;
  if (s == "cohomology") return Suite::Cohomology;
  if (s == "cup") return Suite::Cup;
  if (s == "extensions") return Suite::Extensions;
  if (s == "all") return Suite::All;
  throw InputError("unknown suite \"" + s + "\"");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Axioms: return "axioms";
    case Suite::Complexes: return "complexes";
    case Suite::Cohomology: return "cohomology";
    case Suite::Cup: return "cup";
    case Suite::Extensions: return "extensions";
    case Suite::All: return "all";
  }
  return "?";
}

bool SuiteReport::passed() const { return failed() == 0; }

std::size_t SuiteReport::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.passed;
  return n;
}

std::string SuiteReport::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.suite << "/" << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (checks.size() - failed()) << "/" << checks.size() << " checks passed\n";
  return out.str();
}

Json SuiteReport::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"passed", passed()}, {"checks", arr}};
}

namespace {

struct Context {
  HopfAlgebraPtr h;
  HopfBimodule H;
  SuiteOptions opt;
  SuiteReport* report;
  std::string suite;

  ComplexOptions complex_options() const {
    ComplexOptions o;
    o.entry_budget = opt.entry_budget;
    o.threads = opt.threads;
    return o;
  }
  std::size_t d() const { return h->dim(); }
  bool small() const { return d() <= 4; }

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    report->checks.push_back({suite, name, ok, detail});
  }
  // Runs a check; math-side exceptions count as failures, resource errors propagate.
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    try {
      auto [ok, detail] = f();
      add(name, ok, detail);
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }
  void run_bool(const std::string& name, const std::function<bool()>& f) {
    run(name, [&] { return std::pair{f(), std::string()}; });
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

bool exact(const std::vector<std::optional<std::size_t>>& hom) {
  for (const auto& x : hom)
    if (x && *x != 0) return false;
  return true;
}

std::vector<std::size_t> dims_of(const DoubleComplex& dc) { return total_cohomology(dc, false).dims; }

void axioms_suite(Context& c) {
  const HopfAlgebra& h = *c.h;
  c.run("hopf_axioms", [&] {
    auto rep = check_hopf_axioms(h);
    return std::pair{rep.all_passed(), rep.all_passed() ? std::string() : "failed: " + rep.failures()};
  });
  const HopfBimodule& H = c.H;
  const HopfBimodule X = under_tensor(H, H);
  std::vector<std::pair<std::string, HopfBimodule>> objects = {
      {"regular", H}, {"under_tensor", X}, {"bar_tensor", bar_tensor(H, H)}, {"tensor_over_H", tensor_over_H(X, H).module}};
  if (c.d() <= 6) objects.push_back({"sandwich_free", sandwich(free_bimodule(c.h))});
  if (is_morphism(X, H, h.mul())) {
    auto k = kernel_bimodule(X, H, h.mul());
    objects.push_back({"kernel_of_product", k.module});
    objects.push_back({"cokernel_of_inclusion", cokernel_bimodule(k.module, X, k.map).module});
  } else {
    c.add("product_is_morphism", false, "multiplication from the under-tensor is not a morphism");
  }
  for (const auto& [name, m] : objects)
    c.run("bimodule_" + name, [&] {
      auto rep = check_hopf_bimodule(m);
      if (!rep.all_passed()) return std::pair{false, "failed: " + rep.failures()};
      if (m.dim() % c.d() != 0) return std::pair{false, "dimension " + std::to_string(m.dim()) + " not divisible by dim H"};
      return std::pair{true, std::string()};
    });
  for (const auto& [name, m] : std::vector<std::pair<std::string, HopfBimodule>>{{"regular", H}, {"under_tensor", X}})
    c.run("psi_embedding_" + name, [&] {
      const Field f = h.field();
      auto psi = psi_embedding(m);
      auto target = sandwich(m.underlying_bimodule());
      if (!is_morphism(m, target, psi)) return std::pair{false, std::string("not a morphism")};
      if (rank(psi) != m.dim()) return std::pair{false, std::string("not injective")};
      auto collapse = kron(kron(h.counit(), SparseMatrix::identity(f, m.dim())), h.counit());
      if (!(collapse * psi == SparseMatrix::identity(f, m.dim()))) return std::pair{false, std::string("counit retraction fails")};
      return std::pair{true, std::string()};
    });
  if (c.small())
    for (const auto& [name, m] : std::vector<std::pair<std::string, HopfBimodule>>{{"regular", H}, {"under_tensor", X}})
      c.run("sandwich_adjunction_" + name, [&] {
        auto V = regular_plain_bimodule(c.h);
        const std::size_t a = hom_space(m, sandwich(V)).dim(), b = hom_space(m, V).dim();
        return std::pair{a == b, std::to_string(a) + " vs " + std::to_string(b)};
      });
}

void complexes_suite(Context& c) {
  const HopfBimodule& H = c.H;
  const std::size_t one_sided = c.d() <= 2 ? 4 : 3, two_sided = 2;
  auto check_resolution = [&](const std::string& name, const BimoduleComplex& r, unsigned structures) {
    c.run_bool(name + "_squares_to_zero", [&] { return squares_to_zero(r.maps, r.chain); });
    c.run(name + "_exact", [&] {
      auto hom = check_exactness(r);
      std::string detail;
      for (const auto& x : hom) detail += (detail.empty() ? "" : " ") + (x ? std::to_string(*x) : std::string("-"));
      return std::pair{exact(hom), "homology " + detail};
    });
    if (c.small()) c.run_bool(name + "_morphisms", [&] { return maps_are_morphisms(r); });
    c.run(name + "_splitting", [&] {
      auto s = find_relative_splitting(r, structures);
      return std::pair{s.has_value(), s ? s->method : std::string("no splitting found")};
    });
  };
  check_resolution("bar", bar_resolution(H, one_sided), kCoactions);
  check_resolution("cobar", cobar_resolution(H, one_sided), kActions);
  if (c.d() <= 6) {
    check_resolution("two_sided_bar", two_sided_bar(H, two_sided), kCoactions);
    check_resolution("two_sided_cobar", two_sided_cobar(H, two_sided), kActions);
  } else {
    // Structure matrices of the degree-2 terms do not fit in memory: the top
    // degree is checked on the differentials alone.
    auto linear = [&](const std::string& name, const std::vector<SparseMatrix>& d, bool chain) {
      c.run_bool(name + "_squares_to_zero", [&] { return squares_to_zero(d, chain); });
      c.run_bool(name + "_exact", [&] { return exact(check_exactness(d, chain)); });
    };
    linear("two_sided_bar", two_sided_bar_differentials(H, two_sided), true);
    linear("two_sided_cobar", two_sided_cobar_differentials(H, two_sided), false);
    check_resolution("two_sided_bar_degree1", two_sided_bar(H, 1), kCoactions);
    check_resolution("two_sided_cobar_degree1", two_sided_cobar(H, 1), kActions);
  }

  const auto opts = c.complex_options();
  auto check_complex = [&](const std::string& name, const DoubleComplex& dc) {
    c.run_bool(name + "_total_squares_to_zero", [&] { return total_squares_to_zero(dc); });
    c.run_bool(name + "_bicomplex_identities", [&] { return bicomplex_identities_hold(dc); });
  };
  check_complex("h4", build_double_complex(Theory::H4, H, H, 2, opts));
  check_complex("reduced_b", reduced_b_complex(c.h, 3, opts));
  check_complex("gs", build_double_complex(Theory::GS, H, H, c.small() ? 2 : 1, opts));
}

void cohomology_suite(Context& c) {
  const HopfBimodule& H = c.H;
  const auto opts = c.complex_options();
  const std::size_t top = c.small() ? 2 : 1;
  auto h4 = dims_of(build_double_complex(Theory::H4, H, H, 2, opts));
  c.run("h0_law_regular", [&] {
    const std::size_t hom = hom_space(H, H).dim();
    return std::pair{h4[0] == hom, "H^0 " + std::to_string(h4[0]) + ", morphisms " + std::to_string(hom)};
  });
  if (c.small())
    c.run("h0_law_under_tensor", [&] {
      const HopfBimodule X = under_tensor(H, H);
      const std::size_t h0 = dims_of(build_double_complex(Theory::H4, X, H, 0, opts))[0], hom = hom_space(X, H).dim();
      return std::pair{h0 == hom, "H^0 " + std::to_string(h0) + ", morphisms " + std::to_string(hom)};
    });
  c.run("gs_equals_h4", [&] {
    auto gs = dims_of(build_double_complex(Theory::GS, H, H, top, opts));
    std::vector<std::size_t> h(h4.begin(), h4.begin() + static_cast<std::ptrdiff_t>(top + 1));
    return std::pair{gs == h, "gs " + join(gs) + ", h4 " + join(h)};
  });
  c.run("reduced_equals_full", [&] {
    auto full = dims_of(build_double_complex(Theory::B, H, H, 2, opts));
    auto red = dims_of(reduced_b_complex(c.h, 3, opts));
    bool ok = true;
    for (std::size_t n = 0; n < full.size(); ++n) ok = ok && full[n] == red[n];
    return std::pair{ok, "full " + join(full) + ", reduced " + join(red)};
  });
  if (c.small())
    c.run("vanishing_on_injectives", [&] {
      auto I = sandwich(free_bimodule(c.h));
      auto dims = dims_of(build_double_complex(Theory::H4, H, I, 2, opts));
      return std::pair{dims[1] == 0 && dims[2] == 0, "dims " + join(dims)};
    });
}

TotalCochain random_cochain(const DoubleComplex& dc, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  std::vector<Entry> e;
  for (std::size_t i = 0; i < dc.total_dim(n); ++i)
    if (int v = dist(rng)) e.push_back({i, dc.field().from_int(v)});
  return dc.from_coordinates(n, SparseVector::from_unsorted(std::move(e)));
}

TotalCochain basis_cochain(const DoubleComplex& dc, std::size_t n, std::size_t i) {
  return dc.from_coordinates(n, SparseVector::unit(i, dc.field().one()));
}

bool same(const TotalCochain& a, const TotalCochain& b) {
  if (a.degree != b.degree || a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!(a.parts[i] == b.parts[i])) return false;
  return true;
}

void cup_suite(Context& c) {
  const std::size_t top = c.small() ? 3 : 2;
  auto dc = reduced_b_complex(c.h, 3, c.complex_options());
  auto res = total_cohomology(dc);
  c.run_bool("unit", [&] {
    const TotalCochain one = basis_cochain(dc, 0, 0);
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t i = 0; i < dc.total_dim(n); ++i) {
        auto f = basis_cochain(dc, n, i);
        if (!same(cup(dc, one, f), f) || !same(cup(dc, f, one), f)) return false;
      }
    return true;
  });
  c.run("leibniz", [&] {
    std::size_t pairs = 0, checked = 0;
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t q = 0; p + q <= 2; ++q) pairs += dc.total_dim(p) * dc.total_dim(q);
    if (pairs <= 400) {
      for (std::size_t p = 0; p <= 2; ++p)
        for (std::size_t q = 0; p + q <= 2; ++q)
          for (std::size_t i = 0; i < dc.total_dim(p); ++i)
            for (std::size_t j = 0; j < dc.total_dim(q); ++j, ++checked)
              if (!check_leibniz(dc, basis_cochain(dc, p, i), basis_cochain(dc, q, j)))
                return std::pair{false, "fails on basis pair in degrees " + std::to_string(p) + ", " + std::to_string(q)};
      return std::pair{true, std::to_string(checked) + " basis pairs"};
    }
    std::mt19937 rng(20240917);
    for (; checked < 100; ++checked) {
      const std::size_t p = checked % 3, q = (checked / 3) % (3 - p);
      if (!check_leibniz(dc, random_cochain(dc, p, rng), random_cochain(dc, q, rng)))
        return std::pair{false, "fails on a random pair in degrees " + std::to_string(p) + ", " + std::to_string(q)};
    }
    return std::pair{true, std::string("100 random pairs")};
  });
  std::vector<TotalCochain> reps;
  for (std::size_t n = 0; n < res.representatives.size(); ++n)
    for (const auto& v : res.representatives[n]) reps.push_back(dc.from_coordinates(n, v));
  c.run("products_of_cocycles", [&] {
    for (const auto& f : reps)
      for (const auto& g : reps)
        if (f.degree + g.degree <= 3 && !is_cocycle(dc, cup(dc, f, g))) return std::pair{false, std::string("product is not a cocycle")};
    return std::pair{true, std::to_string(reps.size()) + " representatives"};
  });
  c.run("graded_commutators", [&] {
    std::size_t tested = 0;
    for (const auto& f : reps)
      for (const auto& g : reps) {
        if (f.degree + g.degree > top) continue;
        ++tested;
        if (!graded_commutator_test(dc, f, g).coboundary)
          return std::pair{false, "not a coboundary in degrees " + std::to_string(f.degree) + ", " + std::to_string(g.degree)};
      }
    return std::pair{true, std::to_string(tested) + " pairs up to degree " + std::to_string(top)};
  });
}

void extensions_suite(Context& c) {
  const HopfBimodule& H = c.H;
  const auto valid = [](const Extension& e) {
    auto rep = check_extension(e);
    return std::pair{rep.valid(), rep.failure};
  };
  const Extension split = split_extension(H, H);
  c.run("split_exact", [&] { return valid(split); });
  c.run_bool("split_splits", [&] { return find_splitting(split).has_value(); });
  c.run("comparison_maps_split", [&] {
    auto t = tensor_extensions(split, split);
    auto [ok, why] = valid(t.ext);
    if (!ok) return std::pair{false, "tensor product: " + why};
    if (!is_chain_map(t.ext, splice(split, split), lambda_map(t, split, split))) return std::pair{false, std::string("lambda")};
    if (!is_chain_map(t.ext, negate(splice(split, split)), rho_map(t, split, split))) return std::pair{false, std::string("rho")};
    return std::pair{true, std::string()};
  });

  auto dc = build_double_complex(Theory::H4, H, H, 2, c.complex_options());
  auto res = total_cohomology(dc);
  c.run("coboundary_extensions_split", [&] {
    for (std::size_t i = 0; i < dc.total_dim(0); ++i) {
      auto b = dc.apply_differential(basis_cochain(dc, 0, i));
      bool zero = true;
      for (const auto& p : b.parts) zero = zero && p.is_zero();
      if (zero) continue;
      auto e = extension_from_1cocycle(dc, b);
      auto [ok, why] = valid(e);
      if (!ok) return std::pair{false, why};
      return std::pair{find_splitting(e).has_value(), std::string()};
    }
    return std::pair{true, std::string("no nonzero coboundary in degree 1")};
  });
  const std::size_t classes = std::min<std::size_t>(res.representatives[1].size(), 2);
  if (classes == 0) c.add("cocycle_extensions", true, "H^1 = 0");
  for (std::size_t k = 0; k < classes; ++k) {
    const std::string tag = "class" + std::to_string(k) + "_";
    const TotalCochain f = dc.from_coordinates(1, res.representatives[1][k]);
    c.run(tag + "extension", [&] {
      auto e = extension_from_1cocycle(dc, f);
      auto [ok, why] = valid(e);
      if (!ok) return std::pair{false, why};
      if (find_splitting(e)) return std::pair{false, std::string("splits although the cocycle is not a coboundary")};
      if (is_coboundary(dc, f)) return std::pair{false, std::string("representative is a coboundary")};
      return std::pair{true, std::string()};
    });
    c.run(tag + "calculus", [&] {
      auto e = extension_from_1cocycle(dc, f);
      const Extension two = splice(e, e);
      for (const auto& [name, x] : std::vector<std::pair<std::string, Extension>>{
               {"splice", two}, {"negate", negate(e)}, {"baer_sum", baer_sum(e, e)}, {"baer_sum_of_splices", baer_sum(two, two)}}) {
        auto [ok, why] = valid(x);
        if (!ok) return std::pair{false, name + ": " + why};
      }
      if (!find_splitting(baer_sum(e, negate(e)))) return std::pair{false, std::string("E + (-E) does not split")};
      return std::pair{true, std::string()};
    });
    c.run(tag + "tensor_and_comparison", [&] {
      auto e = extension_from_1cocycle(dc, f);
      const Extension two = splice(e, e);
      std::vector<std::pair<const Extension*, const Extension*>> inputs = {{&e, &e}};
      if (c.small()) inputs.insert(inputs.end(), {{&e, &two}, {&two, &e}});
      for (auto [a, b] : inputs) {
        const std::string where = "(" + std::to_string(a->length()) + "," + std::to_string(b->length()) + ")";
        auto t = tensor_extensions(*a, *b);
        auto [ok, why] = valid(t.ext);
        if (!ok) return std::pair{false, "tensor " + where + ": " + why};
        if (!is_chain_map(t.ext, splice(*b, *a), lambda_map(t, *a, *b))) return std::pair{false, "lambda " + where};
        if (!is_chain_map(t.ext, negate_power(splice(*a, *b), a->length() * b->length()), rho_map(t, *a, *b)))
          return std::pair{false, "rho " + where};
      }
      return std::pair{true, std::string()};
    });
  }
}

}  // namespace

SuiteReport run_suite(const HopfAlgebraPtr& h, Suite suite, const SuiteOptions& options) {
  SuiteReport report;
  Context c{h, regular_bimodule(h), options, &report, ""};
  const std::vector<std::pair<Suite, void (*)(Context&)>> all = {{Suite::Axioms, axioms_suite},
                                                                {Suite::Complexes, complexes_suite},
                                                                {Suite::Cohomology, cohomology_suite},
                                                                {Suite::Cup, cup_suite},
                                                                {Suite::Extensions, extensions_suite}};
  for (const auto& [s, f] : all)
    if (suite == Suite::All || suite == s) {
      c.suite = suite_name(s);
      f(c);
      // The remaining suites assume a Hopf algebra.
      if (s == Suite::Axioms && !report.passed()) break;
    }
  return report;
}

}  // namespace hopfcoh
