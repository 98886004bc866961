#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gpjac/errors.hpp"
#include "gpjac/gp_graph.hpp"
#include "gpjac/int_matrix.hpp"
#include "gpjac/jacobian.hpp"
#include "gpjac/polynomial.hpp"
#include "gpjac/tree_count.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const gpjac::Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(gpjac::to_decimal(v).c_str(), nullptr, 10));
}

gpjac::Integer from_py(const py::handle& h) { return gpjac::parse_integer(py::str(h).cast<std::string>()); }

py::list to_py(const std::vector<gpjac::Integer>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

gpjac::IntegerMatrix matrix_from_py(const py::sequence& rows) {
  const std::size_t r = py::len(rows);
  const std::size_t c = r == 0 ? 0 : py::len(rows[0]);
  gpjac::IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    py::sequence row = rows[i];
    if (py::len(row) != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::list matrix_to_py(const gpjac::IntegerMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

gpjac::LaurentPolynomial poly_from_py(const py::sequence& ascending, long min_exp) {
  std::vector<gpjac::Integer> coeffs;
  for (const auto& c : ascending) coeffs.push_back(from_py(c));
  return {min_exp, std::move(coeffs)};
}

py::tuple poly_to_py(const gpjac::LaurentPolynomial& p) { return py::make_tuple(p.min_exp(), to_py(p.coeffs())); }

}  // namespace

PYBIND11_MODULE(_gpjac, m) {
  m.doc() = "Jacobian groups and spanning-tree counts of generalized Petersen graphs";

  py::register_exception<gpjac::InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  m.def(
      "laplacian", [](long n, long k) { return matrix_to_py(gpjac::laplacian(gpjac::build_gp(n, k))); },
      py::arg("n"), py::arg("k"), "2n x 2n Laplacian of GP(n,k) as nested lists");
  m.def(
      "jacobian",
      [](long n, long k, const std::string& method) {
        return to_py(gpjac::jacobian(n, k, gpjac::parse_jacobian_method(method)).invariant_factors);
      },
      py::arg("n"), py::arg("k"), py::arg("method") = "auto", "invariant factors of Jac(GP(n,k))");
  m.def(
      "tau", [](long n, long k, const std::string& method) { return to_py(gpjac::tau(n, k, gpjac::parse_tau_method(method))); },
      py::arg("n"), py::arg("k"), py::arg("method") = "auto", "number of spanning trees of GP(n,k)");
  m.def(
      "tau_k2_quadratic",
      [](long n) {
        const auto q = gpjac::tau_k2_quadratic(n);
        return py::make_tuple(to_py(q.tau), to_py(q.alpha), to_py(q.beta));
      },
      py::arg("n"), "(tau, alpha, beta) from the sqrt(29) formula");

  m.def(
      "det", [](const py::sequence& rows) { return to_py(gpjac::det_bareiss(matrix_from_py(rows))); }, py::arg("matrix"));
  m.def(
      "smith_normal_form", [](const py::sequence& rows) { return to_py(gpjac::smith_normal_form(matrix_from_py(rows))); },
      py::arg("matrix"));
  m.def(
      "cokernel",
      [](const py::sequence& rows) {
        const auto g = gpjac::cokernel(matrix_from_py(rows));
        return py::make_tuple(to_py(g.invariant_factors), g.free_rank);
      },
      py::arg("matrix"), "(invariant_factors, free_rank)");

  m.def(
      "cheb_T", [](unsigned k) { return to_py(gpjac::cheb_T(k).ascending()); }, py::arg("k"),
      "ascending coefficients of T_k");
  m.def(
      "cheb_U", [](unsigned k) { return to_py(gpjac::cheb_U(k).ascending()); }, py::arg("k"),
      "ascending coefficients of U_k");
  m.def(
      "build_P", [](unsigned k) { return poly_to_py(gpjac::build_P(k)); }, py::arg("k"), "(min_exp, coefficients)");
  m.def(
      "build_h", [](unsigned k) { return to_py(gpjac::build_h(k).ascending()); }, py::arg("k"),
      "ascending coefficients of h_k");
  m.def(
      "companion_matrix", [](unsigned k) { return matrix_to_py(gpjac::companion_matrix(gpjac::build_P(k))); },
      py::arg("k"), "companion matrix of P for step k");
  m.def(
      "resultant",
      [](const py::sequence& f, const py::sequence& g) {
        return to_py(gpjac::resultant(poly_from_py(f, 0), poly_from_py(g, 0)));
      },
      py::arg("f"), py::arg("g"), "Sylvester resultant of ascending coefficient lists");
  m.def(
      "recurrence_product",
      [](const py::sequence& p, const py::sequence& q) {
        return to_py(gpjac::recurrence_product(poly_from_py(p, 0), poly_from_py(q, 0)).ascending());
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "sequence",
      [](int k, std::size_t count, long start) {
        py::dict out;
        switch (k) {
          case 2: out["a"] = to_py(gpjac::recurrence_terms(gpjac::k2_sequence(), start, count)); break;
          case 3:
            out["a"] = to_py(gpjac::recurrence_terms(gpjac::k3_even_sequence(), start, count));
            out["b"] = to_py(gpjac::recurrence_terms(gpjac::k3_odd_sequence(), start, count));
            break;
          case 4: out["a"] = to_py(gpjac::recurrence_terms(gpjac::k4_sequence(), start, count)); break;
          default: throw std::invalid_argument("sequence: k must be 2, 3 or 4");
        }
        return out;
      },
      py::arg("k"), py::arg("count"), py::arg("start") = 0);
}
