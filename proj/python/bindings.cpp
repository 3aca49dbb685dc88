#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "worpitzky/cli.hpp"
#include "worpitzky/difftable.hpp"
#include "worpitzky/errors.hpp"
#include "worpitzky/oracle.hpp"
#include "worpitzky/solver.hpp"
#include "worpitzky/triangles.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace worpitzky;

namespace {

py::int_ to_py_int(const BigInt& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object to_py(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(value.numerator()), to_py_int(value.denominator()));
}

// Exact inputs only: str, int or anything with integer numerator/denominator
// (fractions.Fraction). Floats are refused.
Rational from_py(py::handle obj) {
  if (py::isinstance<py::str>(obj)) return parse_scalar(obj.cast<std::string>());
  if (py::isinstance<py::float_>(obj)) {
    throw py::type_error("floats are inexact; pass a str, int or fractions.Fraction");
  }
  if (py::isinstance<py::int_>(obj)) return Rational(BigInt(py::str(obj).cast<std::string>()));
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return Rational(BigInt(py::str(obj.attr("numerator")).cast<std::string>()),
                    BigInt(py::str(obj.attr("denominator")).cast<std::string>()));
  }
  throw py::type_error("cannot convert " + py::repr(obj).cast<std::string>() + " to a rational");
}

std::vector<Rational> from_py_list(const py::iterable& values) {
  std::vector<Rational> out;
  for (auto v : values) out.push_back(from_py(v));
  return out;
}

py::list to_py_list(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

Convention parse_convention(const std::string& name) {
  if (name == "auto") return Convention::kAuto;
  if (name == "start-zero" || name == "start_zero") return Convention::kStartZero;
  if (name == "start-one" || name == "start_one") return Convention::kStartOne;
  throw py::value_error("convention must be 'auto', 'start-zero' or 'start-one'");
}

TriangleKind parse_kind(const std::string& name) {
  if (auto kind = parse_triangle_kind(name)) return *kind;
  throw py::value_error("kind must be 'mwnt', 'awnt' or 'stirling2'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polynomial coefficient recovery with Worpitzky number triangles";
  m.attr("__version__") = cli::kVersion;

  auto base = py::register_exception<Error>(m, "WorpitzkyError");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ZeroDenominatorError>(m, "ZeroDenominatorError", PyExc_ZeroDivisionError);
  py::register_exception<NotPolynomialError>(m, "NotPolynomialError", base.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());
  py::register_exception<SingularError>(m, "SingularError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_IndexError);

  m.def("parse_scalar", [](const std::string& text) { return to_py(parse_scalar(text)); },
        py::arg("text"));
  m.def("binomial", [](unsigned n, unsigned k) { return to_py_int(binomial(n, k)); });
  m.def("awnt", [](unsigned n, unsigned k) { return to_py_int(awnt(n, k)); });
  m.def("mwnt", [](unsigned n, unsigned k) { return to_py_int(mwnt(n, k)); });
  m.def("stirling2", [](unsigned n, unsigned k) { return to_py_int(stirling2(n, k)); });

  m.def(
      "build_triangle",
      [](const std::string& kind, unsigned max_n) {
        const Triangle t = build_triangle(parse_kind(kind), max_n);
        py::list rows;
        for (unsigned n = 1; n <= t.max_n(); ++n) {
          py::list row;
          for (const auto& v : t.row(n)) row.append(to_py_int(v));
          rows.append(row);
        }
        return rows;
      },
      py::arg("kind"), py::arg("max_n"), "Rows 1..max_n of 'mwnt', 'awnt' or 'stirling2'.");

  m.def(
      "difference_table",
      [](const py::iterable& values) {
        const DifferenceTable t = build_table(Sequence(from_py_list(values)));
        py::list rows;
        for (const auto& r : t.rows) rows.append(to_py_list(r));
        py::dict out;
        out["rows"] = rows;
        out["main_diagonal"] = to_py_list(t.main_diagonal);
        return out;
      },
      py::arg("values"));

  m.def(
      "detect_degree",
      [](const py::iterable& values, std::size_t min_witnesses) {
        const DegreeReport r =
            detect_degree(build_table(Sequence(from_py_list(values))), min_witnesses);
        py::dict out;
        out["degree"] = r.degree;
        out["constant_row_value"] = to_py(r.constant_row_value);
        out["witnesses"] = r.witnesses;
        return out;
      },
      py::arg("values"), py::arg("min_witnesses") = 2);

  m.def(
      "diagonal_direct",
      [](const py::iterable& values, std::size_t k) {
        return to_py(diagonal_direct(Sequence(from_py_list(values)), k));
      },
      py::arg("values"), py::arg("k"));

  m.def(
      "solve_start_zero",
      [](const py::iterable& diagonal, std::size_t d) {
        return to_py_list(solve_start_zero(from_py_list(diagonal), d).coefficients());
      },
      py::arg("diagonal"), py::arg("degree"));

  m.def(
      "solve_start_one",
      [](const py::iterable& diagonal, std::size_t d) {
        return to_py_list(solve_start_one(from_py_list(diagonal), d).coefficients());
      },
      py::arg("diagonal"), py::arg("degree"));

  m.def(
      "compose_affine",
      [](const py::iterable& coefficients, py::handle x0, py::handle h) {
        const AffineMap map(from_py(x0), from_py(h));
        return to_py_list(compose_affine(Polynomial(from_py_list(coefficients)), map).coefficients());
      },
      py::arg("coefficients"), py::arg("x0"), py::arg("h"));

  m.def(
      "fit",
      [](const py::iterable& values, py::handle start, py::handle step,
         const std::string& convention, std::size_t min_witnesses) {
        const FitResult r = fit(Sequence(from_py_list(values)), AffineMap(from_py(start), from_py(step)),
                                parse_convention(convention), min_witnesses);
        py::dict basis;
        basis["x0"] = to_py(r.map.x0());
        basis["h"] = to_py(r.map.h());
        py::dict out;
        out["degree"] = r.degree_report.degree;
        out["basis_g"] = basis;
        out["coefficients_g"] = to_py_list(r.poly_in_g.coefficients());
        out["coefficients_x"] = to_py_list(r.poly_in_x.coefficients());
        out["verified"] = true;
        return out;
      },
      py::arg("values"), py::arg("start") = py::int_(0), py::arg("step") = py::int_(1),
      py::arg("convention") = "auto", py::arg("min_witnesses") = 2,
      "Fit samples taken at start, start + step, ...; coefficients ascend by power.");

  m.def(
      "vandermonde_fit",
      [](const py::iterable& points) {
        std::vector<Point> pts;
        for (auto p : points) {
          auto pair = p.cast<py::sequence>();
          pts.push_back({from_py(pair[0]), from_py(pair[1])});
        }
        return to_py_list(vandermonde_fit(pts).coefficients());
      },
      py::arg("points"));

  m.def(
      "efdt_sum",
      [](py::handle z, py::handle b, unsigned n, unsigned k) {
        return to_py(efdt_sum({from_py(z), from_py(b), n, k}));
      },
      py::arg("z"), py::arg("b"), py::arg("n"), py::arg("k"));
}
