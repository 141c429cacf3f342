"""Von Neumann analysis for linear advection.

A Fourier mode multiplies every per-cell dof vector (q_{i+1/2}, q^{(0)}, ...,
q^{(N-2)}) by e^{i*theta} per cell. The per-step amplification matrix G(theta, nu)
must have spectral radius at most 1 for stability; the maximum stable CFL
number is found by bisection over a wavenumber sweep.
"""

import numpy as np

from .basis import build_basis
from .errors import CflViolationError
from .method_a import build_fd
from .method_b import method_b_step
from .scheme_core import advection
from .state import Mesh, State

_THETA_GRID = 720
_RADIUS_TOL = 1e-9


def _spatial_operator_a(thetas, N):
    """(T, N, N) semi-discrete operator of the upwind method, c = dx = 1."""
    basis = build_basis(N)
    st = build_fd(basis)
    dp = st.coeffs_D          # window weights; only cell-i entries are nonzero
    em = np.exp(-1j * np.asarray(thetas))
    T = len(em)
    L = np.zeros((T, N, N), dtype=complex)
    # point-value row: -D with q_{i-1/2} -> e^{-i theta} q_{i+1/2}
    L[:, 0, 0] = -(dp[N] + dp[0] * em)
    L[:, 0, 1:] = -dp[1:N][None, :]
    for k in range(N - 1):
        L[:, 1 + k, 0] = -(k + 1) * (1.0 - (-1.0) ** k * em)
        if k >= 1:
            L[:, 1 + k, k] += 2.0 * (k + 1)
    return L


def assemble_A(theta, nu, N):
    """Amplification matrix of the semi-discrete method under the RK3 stability polynomial."""
    return _amplification_a(np.atleast_1d(float(theta)), nu, N)[0]


def _amplification_a(thetas, nu, N):
    Z = nu * _spatial_operator_a(thetas, N)
    eye = np.eye(N)
    Z2 = Z @ Z
    return eye + Z + Z2 / 2.0 + (Z2 @ Z) / 6.0


def _stencil_blocks_b(nu, N, reach=3):
    """Translation-invariance blocks K_d of one fully discrete advection step.

    One step on a small periodic mesh per unit dof vector recovers the
    response of cell j0+d to a unit placed in cell j0; by linearity
    G(theta) = sum_d K_d e^{-i d theta}.
    """
    basis = build_basis(N)
    M = 2 * reach + 2
    mesh = Mesh(0.0, float(M), M)
    flux = advection(1.0)
    j0 = reach
    cols = []
    for r in range(N):
        pt = np.zeros(M)
        mom = np.zeros((M, N - 1))
        if r == 0:
            pt[j0] = 1.0
        else:
            mom[j0, r - 1] = 1.0
        out = method_b_step(State(mesh, pt, mom, 0.0), basis, flux, nu)
        resp = np.column_stack([out.pt, out.mom])     # (M, N)
        cols.append(resp)
    resp = np.stack(cols, axis=-1)                    # (M, N, N): cell, row, source dof
    return {d: resp[(j0 + d) % M] for d in range(-reach, reach + 1)}


def _amplification_b(thetas, nu, N, blocks=None):
    if blocks is None:
        blocks = _stencil_blocks_b(nu, N)
    thetas = np.asarray(thetas)
    G = np.zeros((len(thetas), N, N), dtype=complex)
    for d, K in blocks.items():
        G += np.exp(-1j * d * thetas)[:, None, None] * K[None, :, :]
    return G


def assemble_B(theta, nu, N):
    """Amplification matrix of one fully discrete step for linear advection."""
    return _amplification_b(np.atleast_1d(float(theta)), nu, N)[0]


def spectral_radius(G):
    return np.max(np.abs(np.linalg.eigvals(G)))


def _is_stable(nu, N, method, thetas):
    if method == "a":
        G = _amplification_a(thetas, nu, N)
    else:
        try:
            G = _amplification_b(thetas, nu, N)
        except CflViolationError:
            return False
    return np.max(np.abs(np.linalg.eigvals(G))) <= 1.0 + _RADIUS_TOL


def cfl_max(N, method, nu_hi=1.5, width=1e-3):
    """Largest stable CFL number by bisection over a 720-point wavenumber grid."""
    method = method.lower()
    if method not in ("a", "b"):
        raise ValueError("method must be 'a' or 'b'")
    thetas = 2.0 * np.pi * np.arange(_THETA_GRID) / _THETA_GRID
    lo = 1e-4
    if not _is_stable(lo, N, method, thetas):
        raise ArithmeticError(f"unstable at nu={lo}: operator assembly is broken")
    if _is_stable(nu_hi, N, method, thetas):
        return nu_hi
    hi = nu_hi
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if _is_stable(mid, N, method, thetas):
            lo = mid
        else:
            hi = mid
    return lo
