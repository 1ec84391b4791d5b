// Python bindings. Integers cross as decimal strings and rationals as "a/b"
// text; the ssred package turns them into int and fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "ssred/cli.hpp"
#include "ssred/combinat.hpp"
#include "ssred/congruence.hpp"
#include "ssred/eliminator.hpp"
#include "ssred/error.hpp"
#include "ssred/lambda_solver.hpp"
#include "ssred/report.hpp"

namespace py = pybind11;
using namespace ssred;

namespace {

Rational vl_or_default(const std::optional<std::string>& vL, std::int64_t r) {
  return vL ? parse_rational(*vL) : default_vL(r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact p-adic computer algebra core";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() { return py::exception<Error>(m, "SsredError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      const py::object& cls = error_type.get_stored();
      py::object inst = cls(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(cls.ptr(), inst.ptr());
    }
  });

  m.def("vp", [](const std::string& q, std::int64_t p) { return vp_total(parse_rational(q), p).str(); },
        py::arg("q"), py::arg("p"));
  m.def("binom_mod_p2",
        [](std::int64_t N, std::int64_t K, std::int64_t p) {
          const auto res = binom_mod_p2(N, K, p);
          return py::make_tuple(res.value, res.lemma_path);
        },
        py::arg("N"), py::arg("K"), py::arg("p"));
  m.def("stirling2", [](std::int64_t t, std::int64_t s) { return stirling2(t, s).get_str(); }, py::arg("t"),
        py::arg("s"));
  m.def("stirling_lucas_check",
        [](std::int64_t y, std::int64_t x, std::int64_t i, std::int64_t p) { return stirling_lucas_check(y, x, i, p); },
        py::arg("y"), py::arg("x"), py::arg("i"), py::arg("p"));

  m.def("solve_lambda",
        [](std::int64_t p, std::int64_t b, std::int64_t n) {
          const LambdaVector v = solve_lambda(p, b, n);
          std::vector<std::pair<std::int64_t, std::string>> out;
          for (auto i : v.index_set()) out.emplace_back(i, to_string(v.at(i)));
          return out;
        },
        py::arg("p"), py::arg("b"), py::arg("n"));
  m.def("lambda_closed",
        [](std::int64_t p, std::int64_t b, std::int64_t n, std::int64_t i) {
          return to_string(lambda_closed(p, b, n, i));
        },
        py::arg("p"), py::arg("b"), py::arg("n"), py::arg("i"));
  m.def("lambda_json",
        [](std::int64_t p, std::int64_t b, std::int64_t n) {
          const LambdaVector v = solve_lambda(p, b, n);
          return emit_lambda(v, verify_lambda(v), EmitFormat::json);
        },
        py::arg("p"), py::arg("b"), py::arg("n"));

  m.def("star_full",
        [](std::int64_t p, std::int64_t r, std::int64_t n, std::int64_t j, const std::string& vL) {
          return to_string(star_full(make_params(p, r, n, parse_rational(vL)), j));
        },
        py::arg("p"), py::arg("r"), py::arg("n"), py::arg("j"), py::arg("vL"));
  m.def("star_mod_p2",
        [](std::int64_t p, std::int64_t r, std::int64_t n, std::int64_t j, const std::string& vL) {
          return star_mod_p2(make_params(p, r, n, parse_rational(vL)), j);
        },
        py::arg("p"), py::arg("r"), py::arg("n"), py::arg("j"), py::arg("vL"));

  m.def("eliminate_json",
        [](std::int64_t p, std::int64_t r, const std::optional<std::string>& vL) {
          return emit_trace(run_elimination(p, r, vl_or_default(vL, r)), EmitFormat::json);
        },
        py::arg("p"), py::arg("r"), py::arg("vL") = py::none());
  m.def("predict_json",
        [](std::int64_t p, std::int64_t r, const std::optional<std::string>& vL) {
          return emit_prediction(predict(p, r, vl_or_default(vL, r)), EmitFormat::json);
        },
        py::arg("p"), py::arg("r"), py::arg("vL") = py::none());

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = 0;
          {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
