#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lcomplex/classify2.hpp"
#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"
#include "lcomplex/harness.hpp"
#include "lcomplex/table_io.hpp"

namespace py = pybind11;
using namespace lcx;

namespace {

py::object to_python(const VerificationReport& r) {
  return py::module_::import("json").attr("loads")(to_json(r).dump());
}

py::bytes as_bytes(const std::vector<std::uint8_t>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size()};
}

py::dict classify(u64 n) {
  py::dict out;
  out["n"] = n;
  out["decomposition"] = decompose_pow2(n).exponents;
  out["m"] = floor_exponent(n);
  const auto m1 = classify_m_plus_1(n);
  out["m_plus_1"] = m1 ? py::cast(describe(*m1)) : py::none();
  std::vector<std::string> m2;
  if (!m1) {
    for (const auto& f : classify_m_plus_2(n)) m2.push_back(describe(f));
  }
  out["m_plus_2"] = m2;
  out["lower_bound"] = refined_lower_bound_2(n);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "l-complexity engine";

  static py::exception<Error> lcx_error(m, "LcxError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = lcx_error;
      py::object err = exc(e.what(), std::string(to_string(e.code())));
      err.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  py::class_<ComplexityTable>(m, "ComplexityTable")
      .def_property_readonly("l", &ComplexityTable::l)
      .def_property_readonly("max_n", &ComplexityTable::max_n)
      .def("__len__", &ComplexityTable::size)
      .def("__contains__", &ComplexityTable::contains)
      .def("complexity", &ComplexityTable::complexity, py::arg("n"))
      .def("__getitem__", &ComplexityTable::complexity)
      .def("witness", [](const ComplexityTable& t, u64 n) { return to_string(witness(t, n), t.l()); }, py::arg("n"))
      .def("defect", [](const ComplexityTable& t, u64 n) { return defect(t, n); }, py::arg("n"))
      .def("entries", [](const ComplexityTable& t) {
        return as_bytes({t.entries().begin(), t.entries().end()});
      })
      .def("to_bytes", [](const ComplexityTable& t) { return as_bytes(serialize_table(t)); })
      .def_static("from_bytes", [](py::bytes b) {
        const std::string s = b;
        return deserialize_table(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
      })
      .def("save", [](const ComplexityTable& t, const std::filesystem::path& p) { save_table(t, p); }, py::arg("path"))
      .def_static("load", &load_table, py::arg("path"))
      .def(py::self == py::self)
      .def("__repr__", [](const ComplexityTable& t) {
        return "ComplexityTable(l=" + std::to_string(t.l()) + ", max_n=" + std::to_string(t.max_n()) + ")";
      });

  m.def(
      "build_table",
      [](u64 l, u64 max_n, bool use_reduction, unsigned threads) {
        py::gil_scoped_release release;
        return build_table({.l = l, .max_n = max_n, .use_reduction = use_reduction, .threads = threads});
      },
      py::arg("l"), py::arg("max_n"), py::arg("use_reduction") = true, py::arg("threads") = 1);

  m.def("lower_bound", &lower_bound, py::arg("n"), py::arg("l"));
  m.def("lower_bound_l1", &lower_bound_l1, py::arg("n"));
  m.def("upper_bound_digits", &upper_bound_digits, py::arg("n"), py::arg("l"));
  m.def("digit_expression", [](u64 n, u64 l) { return to_string(digit_expression(n, l), l); }, py::arg("n"),
        py::arg("l"));
  m.def("evaluate", [](const std::string& e, u64 l) { return evaluate(parse_expr(e, l), l); }, py::arg("expr"),
        py::arg("l"));
  m.def("leaf_count", [](const std::string& e, u64 l) { return parse_expr(e, l).leaf_count(); }, py::arg("expr"),
        py::arg("l"));
  m.def("refined_lower_bound_2", &refined_lower_bound_2, py::arg("n"));
  m.def("classify", &classify, py::arg("n"));
  m.def("defect_histogram", &defect_histogram, py::arg("table"));
  m.def(
      "reachable_sets_oracle",
      [](u64 l, unsigned m_max) { return reachable_sets_oracle(l, m_max).complexity; }, py::arg("l"),
      py::arg("m_max"));

  m.def(
      "check_a_set",
      [](u64 l, u64 n, unsigned m_max, const ComplexityTable& t) {
        const auto s = check_a_set(l, n, m_max, t);
        const char* verdict = s.verdict == ASetStatus::Verdict::NonMember ? "NonMember" : "NoViolationUpTo";
        return py::make_tuple(verdict, s.m);
      },
      py::arg("l"), py::arg("n"), py::arg("m_max"), py::arg("table"));

  m.def("verify_six_ten", [](const ComplexityTable& t) { return to_python(verify_six_ten(t)); }, py::arg("table2"));
  m.def(
      "verify_conjecture_l2",
      [](const ComplexityTable& t, unsigned r, unsigned mm) { return to_python(verify_conjecture_l2(t, r, mm)); },
      py::arg("table2"), py::arg("r_max"), py::arg("m_max"));
  m.def(
      "verify_question4",
      [](const ComplexityTable& t, unsigned u, unsigned r, unsigned mm) {
        return to_python(verify_question4(t, u, r, mm));
      },
      py::arg("table2"), py::arg("u_max"), py::arg("r_max"), py::arg("m_max"));
  m.def(
      "verify_question2",
      [](u64 l_max, unsigned r, unsigned mm, u64 max_n) {
        return to_python(verify_question2(l_max, r, mm, [max_n](u64 l) {
          return build_table({.l = l, .max_n = max_n / l * l});
        }));
      },
      py::arg("l_max"), py::arg("r_max"), py::arg("m_max"), py::arg("max_n"));
  m.def(
      "verify_conjecture_l1",
      [](const ComplexityTable& t, unsigned a, unsigned b) { return to_python(verify_conjecture_l1(t, a, b)); },
      py::arg("table1"), py::arg("a_max"), py::arg("b_max"));
  m.def(
      "verify_a_set",
      [](const ComplexityTable& t, u64 n, std::optional<unsigned> mm) { return to_python(verify_a_set(t, n, mm)); },
      py::arg("table"), py::arg("n"), py::arg("m_max") = py::none());
  m.def(
      "scan_a_set",
      [](u64 l, u64 n_max, unsigned mm, const ComplexityTable& t) { return to_python(scan_a_set(l, n_max, mm, t)); },
      py::arg("l"), py::arg("n_max"), py::arg("m_max"), py::arg("table"));
  m.def(
      "verify_question5",
      [](u64 n_max, std::size_t cap, const ComplexityTable& t1, const ComplexityTable& t2) {
        return to_python(verify_question5(n_max, cap, t1, t2).report);
      },
      py::arg("n_max"), py::arg("cap"), py::arg("table1"), py::arg("table2"));
  m.def("verify_classify2_exhaustive", [](const ComplexityTable& t) { return to_python(verify_classify2_exhaustive(t)); },
        py::arg("table2"));
  m.def("verify_bounds", [](const ComplexityTable& t) { return to_python(verify_bounds(t)); }, py::arg("table"));
  m.def("verify_reduction", [](u64 l, u64 max_n) { return to_python(verify_reduction(l, max_n)); }, py::arg("l"),
        py::arg("max_n"));
  m.def(
      "verify_oracle_equivalence", [](u64 l, unsigned mm) { return to_python(verify_oracle_equivalence(l, mm)); },
      py::arg("l"), py::arg("m_max"));
  m.def(
      "verify_witnesses",
      [](const ComplexityTable& t, std::size_t samples, std::uint64_t seed) {
        return to_python(verify_witnesses(t, samples, seed));
      },
      py::arg("table"), py::arg("samples"), py::arg("seed") = 0);
}
