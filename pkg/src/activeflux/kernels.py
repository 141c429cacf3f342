"""Backend selection for the hot kernels.

The compiled extension is used when available; set ``ACTIVEFLUX_PURE_PYTHON=1``
to force the numpy fallback. Complex-valued inputs (stability analysis) are
always routed to the numpy implementation.
"""

import os

import numpy as np

from . import _kernels_py

if os.environ.get("ACTIVEFLUX_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_cy as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "numpy"


def _is_real(*arrays):
    return all(not np.iscomplexobj(a) for a in arrays)


def cell_poly_eval(coeffs, cell_idx, xi):
    coeffs = np.ascontiguousarray(coeffs)
    xi = np.ascontiguousarray(xi, dtype=np.float64)
    cell_idx = np.ascontiguousarray(cell_idx, dtype=np.int64)
    if _impl is _kernels_py or not _is_real(coeffs):
        return _kernels_py.cell_poly_eval(coeffs, cell_idx, xi)
    return _impl.cell_poly_eval(coeffs.astype(np.float64, copy=False), cell_idx, xi)


def cell_poly_eval_grid(coeffs, xi_nodes):
    coeffs = np.ascontiguousarray(coeffs)
    xi_nodes = np.ascontiguousarray(xi_nodes, dtype=np.float64)
    if _impl is _kernels_py or not _is_real(coeffs):
        return _kernels_py.cell_poly_eval_grid(coeffs, xi_nodes)
    return _impl.cell_poly_eval_grid(coeffs.astype(np.float64, copy=False), xi_nodes)
