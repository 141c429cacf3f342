"""Semi-discrete moment evolution shared by both point-value update methods.

The moment update is exact up to quadrature: an interface flux difference plus
an in-cell volume integral of the flux of the reconstruction, evaluated with
the cell Lobatto rule. For linear flux a closed-form fast path exists and is
used for cross-checks.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .kernels import cell_poly_eval_grid
from .state import reconstruct_all


@dataclass(frozen=True)
class Flux:
    kind: str
    f: Callable
    f_prime: Callable


def advection(c):
    return Flux(kind="advection", f=lambda q: c * q, f_prime=lambda q: c * np.ones_like(np.asarray(q)))


def burgers():
    return Flux(kind="burgers", f=lambda q: 0.5 * q * q, f_prime=lambda q: q)


def volume_weights(basis, quad):
    """W[k, m] = k * A~_k * omega_m * xi_m**(k-1) for k = 1..N-2 (k=0 has no volume term)."""
    N = basis.N
    W = np.zeros((N - 1, quad.n))
    for k in range(1, N - 1):
        W[k] = k * basis.a_tilde[k] * quad.weights * quad.nodes ** (k - 1)
    return W


def moment_rhs_all(state, basis, quad, flux, coeffs=None):
    """(M, N-1) table of moment time derivatives, quadrature path.

    ``coeffs`` may pass a precomputed (possibly limited) coefficient table.
    """
    if coeffs is None:
        coeffs = reconstruct_all(state, basis)
    dx = state.mesh.dx
    N = basis.N
    fR = flux.f(state.pt)                 # flux at the right interface of cell i
    fL = np.roll(fR, 1)                   # ... and at the left interface
    k = np.arange(N - 1)
    surf = -(k + 1)[None, :] * (fR[:, None] - fL[:, None] * (-1.0) ** k[None, :]) / dx
    fq = flux.f(cell_poly_eval_grid(coeffs, quad.nodes))   # (M, n_s)
    vol = fq @ volume_weights(basis, quad).T / dx
    return surf + vol


def moment_rhs(state, basis, quad, flux, i, k):
    """Time derivative of moment k in cell i (scalar convenience wrapper)."""
    return float(moment_rhs_all(state, basis, quad, flux)[i, k])


def moment_rhs_linear_fast_all(state, basis, flux):
    """Closed-form moment derivatives for linear flux."""
    if flux.kind != "advection":
        raise ValueError("fast path requires a linear flux")
    c = float(flux.f_prime(0.0))
    dx = state.mesh.dx
    N = state.N
    fR = c * state.pt
    fL = np.roll(fR, 1)
    k = np.arange(N - 1)
    surf = -(k + 1)[None, :] * (fR[:, None] - fL[:, None] * (-1.0) ** k[None, :]) / dx
    vol = np.zeros_like(surf)
    if N > 2:
        vol[:, 1:] = 2.0 * (k[1:] + 1)[None, :] / dx * c * state.mom[:, :-1]
    return surf + vol


def moment_rhs_linear_fast(state, basis, flux, i, k):
    return float(moment_rhs_linear_fast_all(state, basis, flux)[i, k])
