# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled core loops: cyclic Jacobi rotations and Kaczmarz sweeps.

Compiled with FP contraction disabled so results match the pure-Python
core bit for bit on the Jacobi path.
"""

from libc.math cimport fabs, sqrt

import numpy as np


def jacobi_eigen(double[:, ::1] a, double[:, ::1] v, double tol,
                 int max_sweeps, double fro):
    cdef int n = a.shape[0]
    cdef double threshold = tol * fro
    cdef int sweeps = 0
    cdef int p, q, i
    cdef double apq, theta, t, c, s, app, aqq, aip, aiq, vip, viq
    cdef double off = _offdiag_norm(a, n)
    while off > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[p, i] = a[i, p]
                    a[i, q] = s * aip + c * aiq
                    a[q, i] = a[i, q]
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - s * viq
                    v[i, q] = s * vip + c * viq
        sweeps += 1
        off = _offdiag_norm(a, n)
    return off, sweeps


cdef double _offdiag_norm(double[:, ::1] a, int n):
    cdef double acc = 0.0
    cdef int i, j
    for i in range(n - 1):
        for j in range(i + 1, n):
            acc += a[i, j] * a[i, j]
    return sqrt(2.0 * acc)


def kaczmarz_run(double[:, ::1] a, double[::1] b, double[::1] x,
                 long[:, ::1] order, double[::1] norms2, double tol):
    cdef int m = a.shape[0]
    cdef int n = a.shape[1]
    cdef int n_sweeps = order.shape[0]
    cdef int s_idx, k, i, j
    cdef long row
    cdef double dot, scale, res, r
    cdef bint converged = False
    cdef long updates = 0
    residuals = []
    for s_idx in range(n_sweeps):
        for k in range(m):
            row = order[s_idx, k]
            dot = 0.0
            for j in range(n):
                dot += a[row, j] * x[j]
            scale = (b[row] - dot) / norms2[row]
            for j in range(n):
                x[j] += scale * a[row, j]
            updates += 1
        res = 0.0
        for i in range(m):
            dot = 0.0
            for j in range(n):
                dot += a[i, j] * x[j]
            r = fabs(dot - b[i])
            if r > res:
                res = r
        residuals.append(res)
        if res <= tol:
            converged = True
            break
    return residuals, converged, updates
