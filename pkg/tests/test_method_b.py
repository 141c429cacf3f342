"""Characteristic tracing and the fully discrete step: oracles and invariants."""

import numpy as np
import pytest

from activeflux.basis import build_basis
from activeflux.errors import CflViolationError
from activeflux.method_b import (
    method_b_run,
    method_b_step,
    sonic_fix,
    trace_advection,
    trace_burgers,
)
from activeflux.scheme_core import advection, burgers
from activeflux.state import (
    Mesh,
    State,
    constant_moments,
    eval_global_many,
    project_initial,
    reconstruct_all,
    total_mass,
)


def smooth_state(N, M, seed=0, amp=0.3):
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.1, amp)
    mesh = Mesh(0.0, 1.0, M)
    basis = build_basis(N)
    s = project_initial(lambda x: 1.0 + a * np.sin(2 * np.pi * x), mesh, basis)
    return s, basis


def test_trace_advection_is_shifted_reconstruction():
    s, basis = smooth_state(4, 10, seed=1)
    coeffs = reconstruct_all(s, basis)
    x = np.linspace(0.0, 1.0, 23)
    tau, c = 0.03, 1.3
    got = trace_advection(coeffs, s.mesh, x, tau, c)
    want = eval_global_many(coeffs, s.mesh, x - c * tau)
    assert np.allclose(got, want, atol=0.0)


def test_trace_advection_cfl_guard():
    s, basis = smooth_state(3, 5)
    coeffs = reconstruct_all(s, basis)
    with pytest.raises(CflViolationError):
        trace_advection(coeffs, s.mesh, np.array([0.5]), tau=0.5, c=1.0)


def test_trace_burgers_linear_data_oracle():
    """For in-cell linear data q = a + b*xi the fixpoint iterate after s sweeps is
    the truncated geometric series of the exact trace q = (a + b*(x-c_i)/dx)/(1 + b*tau/dx)."""
    mesh = Mesh(0.0, 1.0, 4)
    a, b = 0.4, 0.25
    # single-cell linear coefficient table (same in every cell for simplicity)
    coeffs = np.tile([a, b], (4, 1))
    x = np.array([0.375])            # center of cell 1, xi = 0
    tau = 0.1
    r = -b * tau / mesh.dx           # iteration contraction factor
    for s_max in range(1, 6):
        got = trace_burgers(coeffs, mesh, x, tau, s_max, entropy_fix=False)[0]
        want = a * sum(r**j for j in range(s_max + 1))
        assert got == pytest.approx(want, abs=1e-13), s_max
    exact = a / (1.0 + b * tau / mesh.dx)
    got = trace_burgers(coeffs, mesh, x, tau, 60, entropy_fix=False)[0]
    assert got == pytest.approx(exact, abs=1e-13)


def test_trace_burgers_constant_data():
    mesh = Mesh(0.0, 1.0, 5)
    coeffs = np.tile([0.7, 0.0, 0.0], (5, 1))
    got = trace_burgers(coeffs, mesh, np.linspace(0, 1, 11), 0.05, 4)
    assert np.allclose(got, 0.7, atol=0.0)


def test_sonic_fix_inside_transonic_rarefaction():
    """Expansive data crossing zero: the traced value is replaced by the sonic state."""
    mesh = Mesh(0.0, 1.0, 4)
    # q = 4*(x - 0.5) near cell boundaries: linear, positive slope, crosses 0 at x=0.5
    coeffs = np.tile([0.0, 0.0, 0.0], (4, 1))
    for i, c in enumerate(mesh.centers()):
        coeffs[i, 0] = 4.0 * (c - 0.5)
        coeffs[i, 1] = 4.0 * mesh.dx
    x = np.array([0.51])   # just right of the sonic point: local value small positive
    # candidate of the wrong sign across the sonic point -> fixed to 0
    fixed = sonic_fix(np.array([-0.3]), coeffs, mesh, x, 0.05)
    assert fixed[0] == 0.0
    # same-signed candidate (no bracketing) passes through
    kept = sonic_fix(np.array([0.2]), coeffs, mesh, np.array([0.6]), 0.05)
    assert kept[0] == pytest.approx(0.2)


def test_sonic_fix_requires_expansion():
    """A compressive zero crossing (shock) must not be converted to the sonic state."""
    mesh = Mesh(0.0, 1.0, 4)
    coeffs = np.tile([0.0, 0.0, 0.0], (4, 1))
    for i, c in enumerate(mesh.centers()):
        coeffs[i, 0] = -4.0 * (c - 0.5)
        coeffs[i, 1] = -4.0 * mesh.dx
    out = sonic_fix(np.array([-0.3]), coeffs, mesh, np.array([0.45]), 0.05)
    assert out[0] == pytest.approx(-0.3)


@pytest.mark.parametrize("N", [2, 3, 5])
def test_constant_preserved(N):
    basis = build_basis(N)
    mesh = Mesh(0.0, 1.0, 6)
    s0 = State(mesh, np.full(6, 2.0), np.tile(constant_moments(N, 2.0), (6, 1)), 0.0)
    for flux in (advection(1.0), burgers()):
        s = method_b_step(s0, basis, flux, dt=0.2 * mesh.dx)
        assert np.allclose(s.pt, 2.0, atol=1e-12)
        assert np.allclose(s.mom, s0.mom, atol=1e-12)


def test_step_is_linear_for_advection():
    """For linear flux one step is a linear map of the dof vector."""
    N = 4
    basis = build_basis(N)
    mesh = Mesh(0.0, 1.0, 7)
    flux = advection(1.0)
    rng = np.random.default_rng(9)
    dt = 0.3 * mesh.dx

    def step(pt, mom):
        out = method_b_step(State(mesh, pt, mom, 0.0), basis, flux, dt)
        return out.pt, out.mom

    pt1, mom1 = rng.standard_normal(7), rng.standard_normal((7, N - 1))
    pt2, mom2 = rng.standard_normal(7), rng.standard_normal((7, N - 1))
    a, b = 0.6, -1.4
    pa, ma = step(pt1, mom1)
    pb, mb = step(pt2, mom2)
    pc, mc = step(a * pt1 + b * pt2, a * mom1 + b * mom2)
    assert np.allclose(pc, a * pa + b * pb, atol=1e-12)
    assert np.allclose(mc, a * ma + b * mb, atol=1e-12)


@pytest.mark.parametrize("flux", [advection(1.0), burgers()])
def test_mass_conserved_100_steps(flux):
    N = 5
    s, basis = smooth_state(N, 10, seed=4)
    m0 = total_mass(s)
    dt = 0.3 * s.mesh.dx / np.max(np.abs(flux.f_prime(s.pt)))
    for _ in range(100):
        s = method_b_step(s, basis, flux, dt)
    assert abs(total_mass(s) - m0) <= 1e-11 * abs(m0)


def test_advection_full_cell_shift_points_exact():
    """c*dt = dx: every interface trace lands exactly on the neighboring interface,
    so the new point values are an exact one-cell shift."""
    N = 3
    s, basis = smooth_state(N, 8, seed=2)
    flux = advection(1.0)
    out = method_b_step(s, basis, flux, dt=s.mesh.dx)
    assert np.allclose(out.pt, np.roll(s.pt, 1), atol=1e-12)
    assert total_mass(out) == pytest.approx(total_mass(s), abs=1e-13)


def test_run_clips_final_step():
    s, basis = smooth_state(3, 6, seed=5)
    out = method_b_run(s, basis, advection(1.0), nu=0.4, t_end=0.0123)
    assert out.t == pytest.approx(0.0123)


def test_run_rejects_bad_cfl():
    s, basis = smooth_state(2, 5)
    with pytest.raises(ValueError):
        method_b_run(s, basis, advection(1.0), nu=-0.1, t_end=0.1)
