"""Lobatto rule values, exactness degree, and symmetry."""

import math

import numpy as np
import pytest

from activeflux.quadrature import gauss_lobatto, integrate, space_rule, time_rule


def test_two_node_rule():
    r = gauss_lobatto(2, "unit_cell")
    assert np.allclose(r.nodes, [-0.5, 0.5])
    assert np.allclose(r.weights, [0.5, 0.5])


def test_three_node_rule():
    r = gauss_lobatto(3, "unit_cell")
    assert np.allclose(r.nodes, [-0.5, 0.0, 0.5])
    assert np.allclose(r.weights, [1 / 6, 4 / 6, 1 / 6])


def test_four_node_rule():
    # inner nodes of the 4-point Lobatto rule on [-1,1] are +-1/sqrt(5)
    r = gauss_lobatto(4, "unit_cell")
    inner = 1.0 / (2.0 * math.sqrt(5.0))
    assert np.allclose(r.nodes, [-0.5, -inner, inner, 0.5], atol=1e-14)
    assert np.allclose(r.weights, [1 / 12, 5 / 12, 5 / 12, 1 / 12], atol=1e-14)


@pytest.mark.parametrize("n", range(2, 9))
def test_exactness_degree(n):
    """n-node Lobatto integrates monomials exactly up to degree 2n-3."""
    r = gauss_lobatto(n, "unit_cell")
    deg_max = max(1, 2 * n - 3)
    for d in range(deg_max + 1):
        exact = (0.5 ** (d + 1) - (-0.5) ** (d + 1)) / (d + 1)
        got = integrate(r, lambda x: x**d)
        assert got == pytest.approx(exact, abs=1e-14), f"degree {d}"


@pytest.mark.parametrize("n", range(2, 9))
def test_symmetry_and_weight_sum(n):
    r = gauss_lobatto(n, "unit_cell")
    assert np.allclose(r.nodes, -r.nodes[::-1], atol=1e-14)
    assert np.allclose(r.weights, r.weights[::-1], atol=1e-14)
    assert sum(r.weights) == pytest.approx(1.0, abs=1e-14)


def test_unit_time_interval():
    r = gauss_lobatto(5, "unit_time")
    assert r.nodes[0] == pytest.approx(0.0, abs=1e-15)
    assert r.nodes[-1] == pytest.approx(1.0, abs=1e-15)
    assert sum(r.weights) == pytest.approx(1.0, abs=1e-14)
    # degree-7 exactness on [0,1]
    got = integrate(r, lambda t: t**7)
    assert got == pytest.approx(1.0 / 8.0, abs=1e-14)


@pytest.mark.parametrize("N", range(2, 7))
def test_paired_rules(N):
    assert space_rule(N).n == N + 1
    assert time_rule(N).n == max(3, (N + 4) // 2)
    assert time_rule(N).nodes[-1] == pytest.approx(1.0)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        gauss_lobatto(1)
    with pytest.raises(ValueError):
        gauss_lobatto(4, "elsewhere")
