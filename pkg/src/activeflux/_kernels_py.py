"""Pure-numpy implementations of the hot kernels.

Same signatures as the compiled extension; used as the fallback backend and
as the only path for complex-valued data (stability analysis).
"""

import numpy as np


def cell_poly_eval(coeffs, cell_idx, xi):
    """Evaluate cell-wise polynomials: out[p] = sum_j coeffs[cell_idx[p], j] * xi[p]**j.

    coeffs: (M, d+1) ascending coefficients, one row per cell.
    cell_idx: (K,) integer cell indices.
    xi: (K,) evaluation points in cell coordinates.
    """
    coeffs = np.asarray(coeffs)
    cell_idx = np.asarray(cell_idx)
    xi = np.asarray(xi)
    out = coeffs[cell_idx, -1].astype(np.result_type(coeffs, xi), copy=True)
    for j in range(coeffs.shape[1] - 2, -1, -1):
        out *= xi
        out += coeffs[cell_idx, j]
    return out


def cell_poly_eval_grid(coeffs, xi_nodes):
    """Evaluate every cell's polynomial at a fixed node set: out[i, m] = p_i(xi_nodes[m])."""
    coeffs = np.asarray(coeffs)
    xi_nodes = np.asarray(xi_nodes)
    # Vandermonde contraction: (M, d+1) @ (d+1, m)
    V = xi_nodes[None, :] ** np.arange(coeffs.shape[1])[:, None]
    return coeffs @ V
