"""Semi-discrete point-value update by upwinded finite differences, with SSP-RK3.

The one-sided derivative approximations come from differentiating the cell
reconstruction at its endpoints: D uses the cell left of the interface, D* the
cell right of it. Upwinding selects between them by the sign of the local
characteristic speed.
"""

from dataclasses import dataclass

import numpy as np

from .basis import poly_deriv, poly_eval
from .errors import StepFailureError
from .scheme_core import moment_rhs_all
from .state import State


@dataclass(frozen=True)
class FdStencil:
    """Weights over the dof window (q_{i-1/2}, q_i^{(0..N-2)}, q_{i+1/2},
    q_{i+1}^{(0..N-2)}, q_{i+3/2}) producing dx*D and dx*D*."""

    coeffs_D: np.ndarray      # (2N+1,), zero outside cell i's dofs
    coeffs_Dstar: np.ndarray  # (2N+1,), zero outside cell i+1's dofs


def build_fd(basis):
    """Endpoint derivatives of the dual shape functions, laid out on the dof window."""
    N = basis.N
    dp = np.array([poly_eval(poly_deriv(row), 0.5) for row in basis.shape])
    dm = np.array([poly_eval(poly_deriv(row), -0.5) for row in basis.shape])
    # shape rows are ordered (B_{+1/2}, B_{-1/2}, B_0, ..., B_{N-2})
    D = np.zeros(2 * N + 1)
    D[0] = dp[1]              # q_{i-1/2}
    D[1:N] = dp[2:]           # q_i^{(k)}
    D[N] = dp[0]              # q_{i+1/2}
    Ds = np.zeros(2 * N + 1)
    Ds[N] = dm[1]             # q_{i+1/2}
    Ds[N + 1:2 * N] = dm[2:]  # q_{i+1}^{(k)}
    Ds[2 * N] = dm[0]         # q_{i+3/2}
    return FdStencil(coeffs_D=D, coeffs_Dstar=Ds)


def _derivatives_all(state, stencil):
    """dx*D and dx*D* at every interface, vectorized over the mesh."""
    N = state.N
    pt = state.pt
    mom = state.mom
    cD, cDs = stencil.coeffs_D, stencil.coeffs_Dstar
    ptL = np.roll(pt, 1)       # q_{i-1/2}
    ptR = np.roll(pt, -1)      # q_{i+3/2}
    momR = np.roll(mom, -1, axis=0)   # q_{i+1}^{(k)}
    D = cD[0] * ptL + mom @ cD[1:N] + cD[N] * pt
    Ds = cDs[N] * pt + momR @ cDs[N + 1:2 * N] + cDs[2 * N] * ptR
    return D, Ds


def point_rhs_all(state, stencil, flux):
    """Upwinded point-value derivatives at every interface."""
    D, Ds = _derivatives_all(state, stencil)
    a = flux.f_prime(state.pt)
    if np.iscomplexobj(state.pt):
        a = a.real
    return -(np.maximum(a, 0.0) * D + np.minimum(a, 0.0) * Ds) / state.mesh.dx


def point_rhs(state, stencil, flux, i):
    return float(point_rhs_all(state, stencil, flux)[i])


def make_rhs(basis, quad, stencil, flux, limiter=None):
    """Full-state derivative assembler combining moment and point updates."""
    def rhs(state):
        coeffs = None
        if limiter is not None:
            coeffs = limiter(state, basis)
        dmom = moment_rhs_all(state, basis, quad, flux, coeffs=coeffs)
        dpt = point_rhs_all(state, stencil, flux)
        return dpt, dmom
    return rhs


def ssp_rk3_step(state, dt, rhs):
    """Shu-Osher three-stage SSP-RK3 step of the full dof vector."""
    def euler(s, label):
        dpt, dmom = rhs(s)
        out = State(s.mesh, s.pt + dt * dpt, s.mom + dt * dmom, s.t + dt)
        if not (np.all(np.isfinite(out.pt)) and np.all(np.isfinite(out.mom))):
            raise StepFailureError(f"non-finite values after RK stage {label}", stage=label)
        return out
    u = state
    u1 = euler(u, 1)
    u2 = euler(u1, 2)
    u2 = State(u.mesh, 0.75 * u.pt + 0.25 * u2.pt, 0.75 * u.mom + 0.25 * u2.mom,
               u.t + 0.5 * dt)
    u3 = euler(u2, 3)
    return State(u.mesh, (u.pt + 2.0 * u3.pt) / 3.0, (u.mom + 2.0 * u3.mom) / 3.0,
                 u.t + dt)


def method_a_run(state, basis, quad, stencil, flux, nu, t_end, limiter=None):
    """March to t_end with dt = nu*dx/max|f'(pt)| (last step clipped)."""
    if nu <= 0:
        raise ValueError("CFL number must be positive")
    rhs = make_rhs(basis, quad, stencil, flux, limiter=limiter)
    s = state.copy()
    dx = s.mesh.dx
    while s.t < t_end - 1e-14:
        speed = np.max(np.abs(flux.f_prime(s.pt)))
        dt = nu * dx / speed if speed > 0 else nu * dx
        dt = min(dt, t_end - s.t)
        s = ssp_rk3_step(s, dt, rhs)
    s.t = t_end
    return s
