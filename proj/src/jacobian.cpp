#include "gpjac/jacobian.hpp"

#include <stdexcept>

#include "gpjac/errors.hpp"
#include "gpjac/gp_graph.hpp"
#include "gpjac/polynomial.hpp"

namespace gpjac {

JacobianMethod parse_jacobian_method(std::string_view name) {
  if (name == "auto") return JacobianMethod::Auto;
  if (name == "laplacian") return JacobianMethod::Laplacian;
  if (name == "companion") return JacobianMethod::Companion;
  throw std::invalid_argument("unknown jacobian method '" + std::string(name) + "' (auto, laplacian, companion)");
}

std::string to_string(JacobianMethod method) {
  switch (method) {
    case JacobianMethod::Auto: return "auto";
    case JacobianMethod::Laplacian: return "laplacian";
    case JacobianMethod::Companion: return "companion";
  }
  return "?";
}

namespace {

AbelianGroup torsion_of(AbelianGroup full, long n, long k, std::string_view route) {
  if (full.free_rank != 1) {
    throw InconsistencyError(std::string(route) + ": cokernel of GP(" + std::to_string(n) + "," + std::to_string(k) +
                             ") has free rank " + std::to_string(full.free_rank) + ", expected 1");
  }
  full.free_rank = 0;
  return full;
}

}  // namespace

AbelianGroup jacobian_via_laplacian(long n, long k) {
  const GPGraph g = build_gp(n, k);
  return torsion_of(cokernel(laplacian(g)), n, k, "jacobian_via_laplacian");
}

AbelianGroup jacobian_via_companion(long n, long k) {
  build_gp(n, k);  // validates (n, k)
  const auto step = static_cast<unsigned>(reduced_step(n, k));
  const IntegerMatrix a = companion_matrix(build_P(step));
  IntegerMatrix m = mat_pow(a, static_cast<unsigned long>(n));
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1;
  return torsion_of(cokernel(m), n, k, "jacobian_via_companion");
}

JacobianMethod resolve_jacobian_method(long n, long k, JacobianMethod method) {
  if (method != JacobianMethod::Auto) return method;
  const auto step = static_cast<long>(reduced_step(n, k));
  return 2 * (step + 1) < 2 * n ? JacobianMethod::Companion : JacobianMethod::Laplacian;
}

AbelianGroup jacobian(long n, long k, JacobianMethod method) {
  build_gp(n, k);
  switch (resolve_jacobian_method(n, k, method)) {
    case JacobianMethod::Laplacian: return jacobian_via_laplacian(n, k);
    case JacobianMethod::Companion:
    case JacobianMethod::Auto: break;
  }
  return jacobian_via_companion(n, k);
}

}  // namespace gpjac
