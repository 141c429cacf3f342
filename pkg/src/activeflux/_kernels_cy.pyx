# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the hot kernels (real-valued data only)."""

import numpy as np

cimport numpy as cnp


def cell_poly_eval(double[:, ::1] coeffs, long[::1] cell_idx, double[::1] xi):
    """out[p] = sum_j coeffs[cell_idx[p], j] * xi[p]**j via Horner."""
    cdef Py_ssize_t K = xi.shape[0]
    cdef Py_ssize_t d = coeffs.shape[1]
    cdef Py_ssize_t p, j
    cdef long c
    cdef double acc, x
    out = np.empty(K, dtype=np.float64)
    cdef double[::1] o = out
    for p in range(K):
        c = cell_idx[p]
        x = xi[p]
        acc = coeffs[c, d - 1]
        for j in range(d - 2, -1, -1):
            acc = acc * x + coeffs[c, j]
        o[p] = acc
    return out


def cell_poly_eval_grid(double[:, ::1] coeffs, double[::1] xi_nodes):
    """out[i, m] = p_i(xi_nodes[m]) via Horner."""
    cdef Py_ssize_t M = coeffs.shape[0]
    cdef Py_ssize_t d = coeffs.shape[1]
    cdef Py_ssize_t n = xi_nodes.shape[0]
    cdef Py_ssize_t i, m, j
    cdef double acc, x
    out = np.empty((M, n), dtype=np.float64)
    cdef double[:, ::1] o = out
    for i in range(M):
        for m in range(n):
            x = xi_nodes[m]
            acc = coeffs[i, d - 1]
            for j in range(d - 2, -1, -1):
                acc = acc * x + coeffs[i, j]
            o[i, m] = acc
    return out
