"""Periodic 1D mesh, dof storage, initial projection, global reconstruction, norms.

A :class:`State` stores one point value per interface (``pt[i]`` lives at
``x_{i+1/2}``) and N-1 normalized moments per cell. Interface values are
stored once, so the global reconstruction is continuous by construction.
"""

from dataclasses import dataclass

import numpy as np

from .kernels import cell_poly_eval


@dataclass(frozen=True)
class Mesh:
    x_left: float
    x_right: float
    M: int

    def __post_init__(self):
        if self.M < 3:
            raise ValueError("need at least 3 cells for one-neighbor stencils")
        if self.x_right <= self.x_left:
            raise ValueError("empty domain")

    @property
    def dx(self):
        return (self.x_right - self.x_left) / self.M

    @property
    def length(self):
        return self.x_right - self.x_left

    def centers(self):
        return self.x_left + (np.arange(self.M) + 0.5) * self.dx

    def interfaces(self):
        """x_{i+1/2} for i = 0..M-1 (the right interface of each cell)."""
        return self.x_left + (np.arange(self.M) + 1.0) * self.dx


@dataclass
class State:
    mesh: Mesh
    pt: np.ndarray          # (M,) interface values, pt[i] at x_{i+1/2}
    mom: np.ndarray         # (M, N-1) normalized moments
    t: float = 0.0

    @property
    def N(self):
        return self.mom.shape[1] + 1

    def copy(self):
        return State(self.mesh, self.pt.copy(), self.mom.copy(), self.t)

    def cell_dofs(self):
        """(M, N+1) table in the reconstruction order (q_{i+1/2}, q_{i-1/2}, moments)."""
        return np.column_stack([self.pt, np.roll(self.pt, 1), self.mom])


def reconstruct_all(state, basis):
    """(M, N+1) ascending coefficient table of the per-cell reconstructions."""
    return state.cell_dofs() @ basis.shape


def project_initial(q0, mesh, basis):
    """Project initial data: interface samples plus per-cell moment integrals.

    The moments use a 12-node Gauss-Legendre rule per cell, well above the
    scheme's order so the projection error never dominates.
    """
    gx, gw = np.polynomial.legendre.leggauss(12)
    gx, gw = gx / 2.0, gw / 2.0          # map to [-1/2, 1/2]
    N = basis.N
    centers = mesh.centers()
    vals = np.array([[q0(c + mesh.dx * x) for x in gx] for c in centers])
    mom = np.empty((mesh.M, N - 1))
    for k in range(N - 1):
        mom[:, k] = (k + 1) * 2.0**k * (vals @ (gw * gx**k))
    pt = np.array([q0(x) for x in mesh.interfaces()], dtype=float)
    return State(mesh=mesh, pt=pt, mom=mom, t=0.0)


def locate(mesh, x):
    """Periodic wrap and cell location: returns (cell indices, xi coordinates)."""
    x = np.asarray(x, dtype=float)
    s = np.mod(x - mesh.x_left, mesh.length) / mesh.dx
    i = np.minimum(s.astype(np.int64), mesh.M - 1)
    xi = np.clip(s - i - 0.5, -0.5, 0.5)
    return i, xi


def eval_global_many(coeffs, mesh, x):
    """Evaluate a frozen coefficient table at arbitrary points (periodic wrap)."""
    i, xi = locate(mesh, x)
    return cell_poly_eval(coeffs, i.ravel(), xi.ravel()).reshape(np.shape(x))


def eval_global(state, basis, x):
    """Pointwise global reconstruction value at x."""
    return float(eval_global_many(reconstruct_all(state, basis), state.mesh, float(x)))


def l1_error_points(state, exact):
    """dx-weighted l1 distance of the interface point values from ``exact``."""
    xs = state.mesh.interfaces()
    return float(state.mesh.dx * np.sum(np.abs(state.pt - np.array([exact(x) for x in xs]))))


def total_mass(state):
    """Integral of the reconstruction over the domain (zeroth moments)."""
    return float(state.mesh.dx * np.sum(state.mom[:, 0]))


def constant_moments(N, c):
    """Moment vector of constant data: c for even k, 0 for odd k."""
    m = np.zeros(N - 1)
    m[::2] = c
    return m
