#pragma once

#include <string>
#include <string_view>

#include "gpjac/int_matrix.hpp"

namespace gpjac {

enum class JacobianMethod { Auto, Laplacian, Companion };

JacobianMethod parse_jacobian_method(std::string_view name);
std::string to_string(JacobianMethod method);

/// Torsion part of coker L(GP(n,k)). The full cokernel must have free rank exactly 1.
AbelianGroup jacobian_via_laplacian(long n, long k);

/// coker(A^n - I) for the companion matrix A of (3 - z - 1/z)(3 - z^k - z^-k) - 1,
/// with k first reduced to min(k mod n, n - k mod n).
AbelianGroup jacobian_via_companion(long n, long k);

/// Auto picks the companion route whenever its matrix (2k+2 square) is smaller than the Laplacian (2n square).
AbelianGroup jacobian(long n, long k, JacobianMethod method = JacobianMethod::Auto);

/// Route actually taken by jacobian(n, k, Auto).
JacobianMethod resolve_jacobian_method(long n, long k, JacobianMethod method);

}  // namespace gpjac
