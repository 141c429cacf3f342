"""Gauss-Lobatto rules on the unit cell [-1/2, 1/2] and the unit time interval [0, 1].

An n-node Lobatto rule is exact for polynomials up to degree 2n-3, which is
what the in-cell flux integral of the reconstruction needs (n = N+1 gives
degree 2N-1 exactness).
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def n(self):
        return len(self.nodes)


def _legendre_and_deriv(n, x):
    """P_n(x), P_n'(x) by the three-term recurrence."""
    p0 = np.ones_like(x)
    p1 = x
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    if n == 0:
        return np.ones_like(x), np.zeros_like(x)
    if n == 1:
        return x, np.ones_like(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        dp = n * (x * p1 - p0) / (x * x - 1.0)   # not used at the endpoints
    return p1, dp


def _lobatto_reference(n, tol=1e-14, maxiter=100):
    """Nodes/weights on [-1, 1]: endpoints plus roots of P_{n-1}'."""
    if n < 2:
        raise ValueError("a Lobatto rule needs at least 2 nodes")
    if n == 2:
        x = np.array([-1.0, 1.0])
    else:
        # Newton on (1-x^2) P'_{n-1}(x) from Chebyshev-extrema guesses
        x = -np.cos(np.pi * np.arange(1, n - 1) / (n - 1))
        for _ in range(maxiter):
            p, dp = _legendre_and_deriv(n - 1, x)
            # g = (1-x^2) p', g' = -2x p' + (1-x^2) p'' ; use the Legendre ODE
            # (1-x^2) p'' = 2x p' - n(n-1) p  to avoid second derivatives
            g = (1.0 - x * x) * dp
            gp = -n * (n - 1) * p
            dx = g / gp
            x = x - dx
            if np.max(np.abs(dx)) < tol:
                break
        else:
            raise ArithmeticError(f"Lobatto Newton iteration did not converge for n={n}")
        x = np.concatenate([[-1.0], x, [1.0]])
    p, _ = _legendre_and_deriv(n - 1, x)
    w = 2.0 / (n * (n - 1) * p * p)
    return x, w


def gauss_lobatto(n, interval="unit_cell"):
    """n-node Lobatto rule on [-1/2, 1/2] (``unit_cell``) or [0, 1] (``unit_time``)."""
    x, w = _lobatto_reference(n)
    if interval == "unit_cell":
        return QuadratureRule(nodes=x / 2.0, weights=w / 2.0)
    if interval == "unit_time":
        return QuadratureRule(nodes=(x + 1.0) / 2.0, weights=w / 2.0)
    raise ValueError(f"unknown interval {interval!r}")


def integrate(rule, f):
    """Apply the rule to a callable."""
    return float(np.dot(rule.weights, [f(x) for x in rule.nodes]))


def space_rule(N):
    """Cell rule paired with a degree-N basis: N+1 nodes, exact to degree 2N-1."""
    return gauss_lobatto(N + 1, "unit_cell")


def time_rule(N):
    """Time rule for the fully discrete method: minimal Lobatto count of order >= N+1."""
    return gauss_lobatto(max(3, (N + 3 + 1) // 2), "unit_time")
