# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic-Jacobi sweep kernel.

Same contract as the pure-Python fallback in ``_jacobi_py``: the input
array is rotated in place until its off-diagonal Frobenius norm drops to
``tol`` times the (rotation-invariant) full Frobenius norm, or the sweep
cap is hit. The caller decides whether a leftover residual is an error.
"""

from libc.math cimport hypot, sqrt


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(i + 1, n):
            acc += 2.0 * a[i, j] * a[i, j]
    return sqrt(acc)


def frobenius_norm(double[:, ::1] a):
    cdef Py_ssize_t n = a.shape[0]
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            acc += a[i, j] * a[i, j]
    return sqrt(acc)


def off_diagonal_norm(double[:, ::1] a):
    return _off_norm(a, a.shape[0])


def cyclic_jacobi(double[:, ::1] a, double tol, int max_sweeps):
    """Run row-cyclic Jacobi sweeps in place; returns (sweeps_used, off_norm)."""
    cdef Py_ssize_t n = a.shape[0]
    cdef double fro = frobenius_norm(a)
    cdef double threshold = tol * fro
    cdef double off = _off_norm(a, n)
    if n < 2 or off <= threshold:
        return 0, off

    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double apq, app, aqq, tau, t, c, s, akp, akq
    for sweep in range(1, max_sweeps + 1):
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    tau = (aqq - app) / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + hypot(1.0, tau))
                    else:
                        t = 1.0 / (tau - hypot(1.0, tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    for k in range(n):
                        if k != p and k != q:
                            akp = a[k, p]
                            akq = a[k, q]
                            a[k, p] = c * akp - s * akq
                            a[p, k] = a[k, p]
                            a[k, q] = s * akp + c * akq
                            a[q, k] = a[k, q]
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
            off = _off_norm(a, n)
        if off <= threshold:
            return sweep, off
    return max_sweeps, off
