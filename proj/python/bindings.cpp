#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfcoh/cup.hpp"
#include "hopfcoh/suites.hpp"

namespace py = pybind11;
using namespace hopfcoh;

namespace {

// Carries JSON into Python through the json module, keeping one schema for both front ends.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Field field_of(std::uint32_t p) { return p == 0 ? Field::rationals() : Field::prime(p); }

struct Algebra {
  HopfAlgebraPtr ptr;
};

HopfBimodule coefficient(const Algebra& a, const std::optional<std::string>& path) {
  return path ? load_bimodule(*path, a.ptr) : regular_bimodule(a.ptr);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cohomology of finite-dimensional Hopf bimodules";
  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      input_error(e.what());
    } catch (const ResourceError& e) {
      resource_error(e.what());
    }
  });

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("dim", [](const Algebra& a) { return a.ptr->dim(); })
      .def_property_readonly("field", [](const Algebra& a) { return a.ptr->field().name(); })
      .def_property_readonly("labels", [](const Algebra& a) { return a.ptr->labels(); })
      .def("check_axioms",
           [](const Algebra& a) {
             py::dict out;
             for (const auto& c : check_hopf_axioms(*a.ptr).checks) out[py::str(c.name)] = c.passed;
             return out;
           })
      .def("to_json", [](const Algebra& a) { return to_python(algebra_to_json(*a.ptr)); })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra dim=" + std::to_string(a.ptr->dim()) + " over " + a.ptr->field().name() + ">";
      });

  m.def("load_algebra", [](const std::string& path) { return Algebra{load_algebra(path)}; }, py::arg("path"));
  m.def(
      "algebra_from_json",
      [](const std::string& text) {
        Json j;
        try {
          j = Json::parse(text);
          return Algebra{std::make_shared<const HopfAlgebra>(algebra_from_json(j))};
        } catch (const nlohmann::json::exception& e) {
          throw InputError(e.what());
        }
      },
      py::arg("text"));
  m.def(
      "cyclic_group_algebra", [](std::size_t n, std::uint32_t p) {
        return Algebra{std::make_shared<const HopfAlgebra>(group_algebra(cyclic_group_table(n), field_of(p)))};
      },
      py::arg("n"), py::arg("p") = 0);
  m.def(
      "taft_algebra", [](std::size_t n, const std::string& q, std::uint32_t p) {
        const Field f = field_of(p);
        return Algebra{std::make_shared<const HopfAlgebra>(taft_algebra(n, f.parse(q), f))};
      },
      py::arg("n"), py::arg("q"), py::arg("p") = 0);

  m.def(
      "cohomology",
      [](const Algebra& a, const std::string& theory, std::size_t max_degree, std::optional<std::string> module,
         std::optional<std::string> comodule, bool full, std::size_t threads, bool representatives) {
        ComplexOptions o;
        o.threads = threads;
        const Theory t = parse_theory(theory);
        py::gil_scoped_release release;
        const bool reduced = t == Theory::B && !module && !comodule && !full;
        const DoubleComplex dc = reduced ? reduced_b_complex(a.ptr, max_degree, o)
                                         : build_double_complex(t, coefficient(a, module), coefficient(a, comodule),
                                                                max_degree, o);
        const Json j = cohomology_to_json(dc, total_cohomology(dc, representatives));
        py::gil_scoped_acquire acquire;
        return to_python(j);
      },
      py::arg("algebra"), py::arg("theory") = "b", py::arg("max_degree") = 2, py::arg("module") = py::none(),
      py::arg("comodule") = py::none(), py::arg("full") = false, py::arg("threads") = 1,
      py::arg("representatives") = false);

  m.def(
      "cup_table",
      [](const Algebra& a, std::size_t max_degree) {
        const DoubleComplex dc = reduced_b_complex(a.ptr, max_degree);
        const auto table = cup_table(dc, total_cohomology(dc), max_degree);
        py::list out;
        for (const auto& e : table) {
          py::list coeffs;
          for (const auto& c : e.product) coeffs.append(c.to_string());
          py::dict row;
          row["left"] = py::make_tuple(e.left_degree, e.left_index);
          row["right"] = py::make_tuple(e.right_degree, e.right_index);
          row["product"] = coeffs;
          row["commutator_coboundary"] = e.commutator_coboundary;
          out.append(row);
        }
        return out;
      },
      py::arg("algebra"), py::arg("max_degree") = 2);

  m.def(
      "verify",
      [](const Algebra& a, const std::string& suite, std::size_t threads) {
        SuiteOptions o;
        o.threads = threads;
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(a.ptr, parse_suite(suite), o);
        }
        return to_python(r.to_json());
      },
      py::arg("algebra"), py::arg("suite") = "all", py::arg("threads") = 1);
}
