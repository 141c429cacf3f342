"""Moment evolution: quadrature path vs closed forms and a brute-force oracle."""

import numpy as np
import pytest

from activeflux.basis import build_basis
from activeflux.quadrature import gauss_lobatto, space_rule
from activeflux.scheme_core import (
    advection,
    burgers,
    moment_rhs,
    moment_rhs_all,
    moment_rhs_linear_fast,
    moment_rhs_linear_fast_all,
    volume_weights,
)
from activeflux.state import Mesh, State, project_initial, reconstruct_all


def random_state(N, M, seed, x_right=1.0):
    rng = np.random.default_rng(seed)
    mesh = Mesh(0.0, x_right, M)
    return State(mesh, rng.standard_normal(M), rng.standard_normal((M, N - 1)), 0.0)


def oracle_moment_rhs(state, basis, flux):
    """Independent check: surface term plus a 50-node Gauss-Legendre volume integral
    of f(reconstruction) against the derivative of the test monomial."""
    coeffs = reconstruct_all(state, basis)
    dx = state.mesh.dx
    N = basis.N
    gx, gw = np.polynomial.legendre.leggauss(50)
    gx, gw = gx / 2.0, gw / 2.0
    out = np.zeros((state.mesh.M, N - 1))
    for i in range(state.mesh.M):
        qR = state.pt[i]
        qL = state.pt[i - 1]
        vals = flux.f(np.polynomial.polynomial.polyval(gx, coeffs[i]))
        for k in range(N - 1):
            surf = -(k + 1) * (flux.f(qR) - (-1.0) ** k * flux.f(qL)) / dx
            vol = 0.0
            if k >= 1:
                vol = k * (k + 1) * 2.0**k / dx * np.sum(gw * vals * gx ** (k - 1))
            out[i, k] = surf + vol
    return out


@pytest.mark.parametrize("N", range(2, 7))
def test_quadrature_matches_oracle_burgers(N):
    """The quadrature-path formula agrees with a brute-force reference when both
    rules resolve the quadratic flux integrand (the default rule is exact only to
    degree 2N-1 by design, enough for the scheme's order but not for f(q) = q^2/2)."""
    basis = build_basis(N)
    quad = gauss_lobatto(50, "unit_cell")
    flux = burgers()
    for seed in range(4):
        state = random_state(N, 6, seed=100 * N + seed)
        got = moment_rhs_all(state, basis, quad, flux)
        want = oracle_moment_rhs(state, basis, flux)
        assert np.max(np.abs(got - want)) <= 1e-10 * max(1.0, np.max(np.abs(want)))


@pytest.mark.parametrize("N", [3, 5])
def test_default_rule_quadrature_error_is_high_order(N):
    """With the default N+1-node rule the Burgers volume term differs from the
    exact integral only at the rule's exactness limit, vanishing for small dofs."""
    basis = build_basis(N)
    flux = burgers()
    state = random_state(N, 6, seed=N)

    def deviation(eps):
        s = State(state.mesh, eps * state.pt, eps * state.mom, 0.0)
        got = moment_rhs_all(s, basis, space_rule(N), flux)
        return np.max(np.abs(got - oracle_moment_rhs(s, basis, flux)))

    # the unresolved part of the integrand is the quadratic flux term, so the
    # deviation scales with the square of the data amplitude
    assert deviation(1e-3) / deviation(2e-3) == pytest.approx(0.25, rel=1e-6)


@pytest.mark.parametrize("N", range(2, 7))
def test_fast_path_matches_quadrature(N):
    """Linear flux: closed-form moment derivatives equal the quadrature path."""
    basis = build_basis(N)
    quad = space_rule(N)
    flux = advection(1.7)
    state = random_state(N, 9, seed=N)
    a = moment_rhs_all(state, basis, quad, flux)
    b = moment_rhs_linear_fast_all(state, basis, flux)
    assert np.max(np.abs(a - b)) <= 1e-12 * max(1.0, np.max(np.abs(a)))


def test_scalar_wrappers_agree():
    basis = build_basis(4)
    quad = space_rule(4)
    state = random_state(4, 5, seed=11)
    flux = advection(-0.3)
    assert moment_rhs(state, basis, quad, flux, 2, 1) == pytest.approx(
        moment_rhs_linear_fast(state, basis, flux, 2, 1), abs=1e-12)


@pytest.mark.parametrize("N", range(2, 7))
def test_average_update_is_conservative(N):
    """Sum over cells of the k=0 derivative telescopes to zero (periodic fluxes)."""
    basis = build_basis(N)
    quad = space_rule(N)
    for flux in (advection(2.0), burgers()):
        state = random_state(N, 8, seed=5 * N)
        rhs = moment_rhs_all(state, basis, quad, flux)
        assert abs(np.sum(rhs[:, 0])) <= 1e-11 * max(1.0, np.max(np.abs(rhs)))


def test_constant_state_is_steady():
    basis = build_basis(5)
    quad = space_rule(5)
    mesh = Mesh(0.0, 1.0, 6)
    state = project_initial(lambda x: 3.0, mesh, basis)
    for flux in (advection(1.0), burgers()):
        rhs = moment_rhs_all(state, basis, quad, flux)
        assert np.max(np.abs(rhs)) <= 1e-11


def test_volume_weights_k0_row_is_zero():
    basis = build_basis(5)
    quad = space_rule(5)
    W = volume_weights(basis, quad)
    assert W.shape == (4, quad.n)
    assert np.all(W[0] == 0.0)


def test_flux_objects():
    f = advection(2.5)
    assert f.kind == "advection"
    assert f.f(3.0) == pytest.approx(7.5)
    assert np.allclose(f.f_prime(np.array([1.0, -4.0])), 2.5)
    g = burgers()
    assert g.f(3.0) == pytest.approx(4.5)
    assert g.f_prime(-2.0) == pytest.approx(-2.0)
