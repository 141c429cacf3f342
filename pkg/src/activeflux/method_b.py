"""Fully discrete method: characteristics-based point update and time-quadrature
moment update.

Each step freezes the global reconstruction, traces the solution at all
(space node) x (time node) locations back along characteristics into the
frozen data, and uses the traced values both for the space-time flux
quadratures of the moment update and as the new interface point values.
"""

import numpy as np

from .errors import CflViolationError
from .kernels import cell_poly_eval_grid
from .limiter import limited_reconstruction
from .quadrature import space_rule, time_rule
from .scheme_core import volume_weights
from .state import State, eval_global_many

_CFL_SLACK = 1.0 + 1e-9


def _check_reach(displacement, dx):
    reach = np.max(np.abs(displacement)) if np.size(displacement) else 0.0
    if reach > dx * _CFL_SLACK:
        raise CflViolationError(
            f"characteristic foot point moved {reach:.3e}, more than one cell width {dx:.3e}")


def trace_advection(coeffs, mesh, x, tau, c):
    """Foot-point evaluation of the frozen reconstruction for linear advection."""
    _check_reach(c * tau, mesh.dx)
    return eval_global_many(coeffs, mesh, np.asarray(x, dtype=float) - c * tau)


def sonic_fix(q_candidate, coeffs, mesh, x, tau):
    """Replace the traced value by the sonic state 0 inside transonic rarefactions.

    Fires when the traced value and the local reconstruction value strictly
    bracket 0 while the data is locally expansive (positive slope), i.e. the
    stationary characteristic carrying q = 0 passes through x.
    """
    q_local = eval_global_many(coeffs, mesh, x)
    dcoeffs = coeffs[:, 1:] * np.arange(1, coeffs.shape[1])
    slope = eval_global_many(np.column_stack([dcoeffs, np.zeros(len(coeffs))]), mesh, x)
    transonic = (np.minimum(q_candidate, q_local) < 0.0) & (np.maximum(q_candidate, q_local) > 0.0)
    return np.where(transonic & (slope > 0.0), 0.0, q_candidate)


def trace_burgers(coeffs, mesh, x, tau, s_max, entropy_fix=True):
    """Fixpoint iteration for the characteristic speed; each sweep gains one order."""
    x = np.asarray(x, dtype=float)
    q = eval_global_many(coeffs, mesh, x)
    for _ in range(s_max):
        disp = q * tau
        _check_reach(disp, mesh.dx)
        q = eval_global_many(coeffs, mesh, x - disp)
    if entropy_fix and tau > 0:
        q = sonic_fix(q, coeffs, mesh, x, tau)
    return q


def method_b_step(state, basis, flux, dt, quad_space=None, quad_time=None,
                  limiter=False, s_max=None):
    """One fully discrete step; the reconstruction is frozen at the step start."""
    N = basis.N
    qs = quad_space if quad_space is not None else space_rule(N)
    qt = quad_time if quad_time is not None else time_rule(N)
    mesh = state.mesh
    dx = mesh.dx

    dofs = state.cell_dofs()
    if limiter:
        dofs, coeffs = limited_reconstruction(dofs, basis)
        mom_base = dofs[:, 2:]
    else:
        coeffs = dofs @ basis.shape
        mom_base = state.mom

    # unique physical trace points: space nodes m = 1..n_s-1 of every cell
    # (node 0 of cell i is node n_s-1 of cell i-1)
    centers = mesh.centers()
    X = centers[:, None] + dx * qs.nodes[None, 1:]      # (M, n_s-1)

    W = volume_weights(basis, qs)                        # (N-1, n_s)
    k = np.arange(N - 1)
    parity = (-1.0) ** k

    dmom = np.zeros_like(state.mom)
    pt_new = None
    for ell in range(qt.n):
        tau = dt * qt.nodes[ell]
        if tau == 0.0:
            Qu = cell_poly_eval_grid(coeffs, qs.nodes[1:])
        elif flux.kind == "advection":
            c = float(flux.f_prime(0.0))
            Qu = trace_advection(coeffs, mesh, X, tau, c)
        elif flux.kind == "burgers":
            Qu = trace_burgers(coeffs, mesh, X, tau, N if s_max is None else s_max)
        else:
            raise ValueError(f"no evolution operator for flux kind {flux.kind!r}")
        # full per-cell node table, left interface shared with the neighbor
        Q = np.concatenate([np.roll(Qu[:, -1:], 1, axis=0), Qu], axis=1)   # (M, n_s)
        fQ = flux.f(Q)
        surf = -(k + 1)[None, :] * (fQ[:, -1:] - fQ[:, :1] * parity[None, :]) / dx
        vol = fQ @ W.T / dx
        dmom += qt.weights[ell] * (surf + vol)
        pt_new = Qu[:, -1]

    return State(mesh, pt_new, mom_base + dt * dmom, state.t + dt)


def method_b_run(state, basis, flux, nu, t_end, limiter=False):
    """March to t_end with dt = nu*dx/max|f'(pt)| (last step clipped)."""
    if nu <= 0:
        raise ValueError("CFL number must be positive")
    N = basis.N
    qs = space_rule(N)
    qt = time_rule(N)
    s = state.copy()
    dx = s.mesh.dx
    while s.t < t_end - 1e-14:
        speed = np.max(np.abs(flux.f_prime(s.pt)))
        dt = nu * dx / speed if speed > 0 else nu * dx
        dt = min(dt, t_end - s.t)
        # under-resolved nonlinear data can move faster than the point values
        # suggest; retry with a shorter step when a trace leaves its reach
        for _ in range(8):
            try:
                s = method_b_step(s, basis, flux, dt, quad_space=qs, quad_time=qt,
                                  limiter=limiter)
                break
            except CflViolationError:
                dt *= 0.5
        else:
            raise CflViolationError("time step collapsed without a valid trace")
    s.t = t_end
    return s
