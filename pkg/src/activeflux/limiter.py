"""Bound-based limiting with fallback to the low-degree reconstruction.

A cell is flagged when its reconstruction exceeds, at 10 equispaced interior
sample points, the bounds given by the minimum and maximum of its average and
its two interface values. Flagged cells drop all moments above the average
and reconstruct with the degree-2 parabola through the remaining three dofs,
so conservation and interface continuity are untouched.
"""

import numpy as np

from .basis import build_basis

_TEST_XI = -0.5 + np.arange(1, 11) / 11.0
_PARABOLA_SHAPE = build_basis(2).shape   # (3, 3): B_{+1/2}, B_{-1/2}, B_0


def cell_bounds(dofs):
    """(lo, hi) from {q^{(0)}, q_{i-1/2}, q_{i+1/2}}; dofs in reconstruction order."""
    ref = np.stack([dofs[..., 0], dofs[..., 1], dofs[..., 2]], axis=-1)
    return ref.min(axis=-1), ref.max(axis=-1)


def flag_cells(dofs, basis):
    """Boolean mask of cells whose reconstruction leaves its bounds."""
    lo, hi = cell_bounds(dofs)
    eps = 1e-12 * np.maximum(1.0, np.abs(hi))
    vals = (dofs @ basis.shape) @ (_TEST_XI[None, :] ** np.arange(basis.ndofs)[:, None])
    return np.any((vals < (lo - eps)[:, None]) | (vals > (hi + eps)[:, None]), axis=1)


def limit_dofs(dofs, basis):
    """Per-cell limiting of a dof table (or single dof vector) in reconstruction order.

    Returns a new table; flagged cells have moments k >= 1 zeroed. The average
    and the two point values are never modified.
    """
    dofs = np.asarray(dofs, dtype=float)
    single = dofs.ndim == 1
    table = dofs[None, :] if single else dofs
    out = table.copy()
    out[flag_cells(table, basis), 3:] = 0.0
    return out[0] if single else out


def limit_cell(dofs, basis):
    """Single-cell convenience wrapper."""
    return limit_dofs(np.asarray(dofs, dtype=float), basis)


def limited_reconstruction(dofs, basis):
    """(limited dof table, coefficient table) with parabola fallback in flagged cells."""
    dofs = np.asarray(dofs, dtype=float)
    bad = flag_cells(dofs, basis)
    out = dofs.copy()
    out[bad, 3:] = 0.0
    coeffs = out @ basis.shape
    if np.any(bad):
        coeffs[bad] = 0.0
        coeffs[np.ix_(bad, range(3))] = out[np.ix_(bad, range(3))] @ _PARABOLA_SHAPE
    return out, coeffs


def limited_coeffs(state, basis):
    """Coefficient table of the limited per-cell reconstructions."""
    return limited_reconstruction(state.cell_dofs(), basis)[1]
