"""Jacobian groups and spanning-tree counts of generalized Petersen graphs GP(n, k)."""

from ._gpjac import (
    InconsistencyError,
    build_h,
    build_P,
    cheb_T,
    cheb_U,
    cokernel,
    companion_matrix,
    det,
    jacobian,
    laplacian,
    recurrence_product,
    resultant,
    sequence,
    smith_normal_form,
    tau,
    tau_k2_quadratic,
)


def table(k, n_min, n_max):
    """Rows of (n, tau, invariant factors) for GP(n, k), n in [n_min, n_max]."""
    return [(n, tau(n, k), jacobian(n, k)) for n in range(n_min, n_max + 1)]


__all__ = [
    "InconsistencyError",
    "build_h",
    "build_P",
    "cheb_T",
    "cheb_U",
    "cokernel",
    "companion_matrix",
    "det",
    "jacobian",
    "laplacian",
    "recurrence_product",
    "resultant",
    "sequence",
    "smith_normal_form",
    "table",
    "tau",
    "tau_k2_quadratic",
]
