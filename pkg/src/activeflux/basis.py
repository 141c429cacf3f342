"""Dual shape-function basis for the hybrid point-value/moment element.

All per-cell work is done in the dimensionless coordinate xi = x/dx on
[-1/2, 1/2]. With the moment normalization (k+1)*2**k the functionals are
independent of the mesh width, so a single basis serves every grid; dx only
reappears in the time-update formulas.

Polynomials are plain numpy coefficient arrays, ascending in xi.
"""

from dataclasses import dataclass

import numpy as np


def poly_eval(coeffs, xi):
    """Horner evaluation of an ascending coefficient array at xi (scalar or array)."""
    coeffs = np.asarray(coeffs)
    out = np.full_like(np.asarray(xi, dtype=np.result_type(coeffs, xi)), coeffs[-1])
    for c in coeffs[-2::-1]:
        out = out * xi + c
    return out


def poly_deriv(coeffs):
    """Formal derivative in xi; the caller divides by dx for d/dx."""
    coeffs = np.asarray(coeffs)
    if len(coeffs) == 1:
        return np.zeros(1)
    return coeffs[1:] * np.arange(1, len(coeffs))


def monomial_moment(k, j):
    """Normalized moment of a monomial: (k+1)*2**k * integral of xi**(k+j) over the cell."""
    if (k + j) % 2 == 1:
        return 0.0
    # (k+1)*2**k * 2*(1/2)**(k+j+1)/(k+j+1)
    return (k + 1) / ((k + j + 1) * 2.0**j)


@dataclass(frozen=True)
class BasisSet:
    """Degree, normalization constants, and dual shape functions.

    ``shape`` has one row per shape function in the dof order
    (B_{+1/2}, B_{-1/2}, B_0, ..., B_{N-2}); columns are ascending
    coefficients in xi.
    """

    N: int
    a_tilde: np.ndarray  # (k+1)*2**k for k = 0..N-2
    shape: np.ndarray    # (N+1, N+1)

    @property
    def ndofs(self):
        return self.N + 1


def _functional_matrix(N):
    """Matrix applying all N+1 dof functionals to the monomials 1, xi, ..., xi**N."""
    S = np.zeros((N + 1, N + 1))
    S[0, :] = 0.5 ** np.arange(N + 1)            # evaluation at +1/2
    S[1, :] = (-0.5) ** np.arange(N + 1)         # evaluation at -1/2
    for k in range(N - 1):
        S[2 + k, :] = [monomial_moment(k, j) for j in range(N + 1)]
    return S


def build_basis(N):
    """Solve the duality system sigma_r(B_s) = delta_rs for the monomial moments.

    Valid for 2 <= N <= 8; the system is well conditioned in this range and
    the solve is checked against the duality relations.
    """
    if not 2 <= N <= 8:
        raise ValueError(f"degree N must be in [2, 8], got {N}")
    S = _functional_matrix(N)
    # columns of the inverse are the shape-function coefficient vectors
    shape = np.linalg.solve(S, np.eye(N + 1)).T
    if not np.allclose(S @ shape.T, np.eye(N + 1), atol=1e-11, rtol=0):
        raise ArithmeticError(f"duality system solve failed for N={N}")
    a_tilde = np.array([(k + 1) * 2.0**k for k in range(N - 1)])
    return BasisSet(N=N, a_tilde=a_tilde, shape=shape)


def moment_functional(basis, k, coeffs):
    """Normalized k-th moment of a polynomial, exact from its coefficients."""
    if not 0 <= k <= basis.N - 2:
        raise ValueError(f"moment index {k} out of range for N={basis.N}")
    coeffs = np.asarray(coeffs)
    w = np.array([monomial_moment(k, j) for j in range(len(coeffs))])
    return float(coeffs @ w)


def reconstruct(basis, dofs):
    """Coefficients of sum_r dofs[r] * B_r; dofs ordered (a_{+1/2}, a_{-1/2}, a_0, ...)."""
    dofs = np.asarray(dofs)
    if dofs.shape[-1] != basis.ndofs:
        raise ValueError(f"expected {basis.ndofs} dofs, got {dofs.shape[-1]}")
    return dofs @ basis.shape
