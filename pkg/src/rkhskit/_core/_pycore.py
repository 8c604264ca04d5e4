"""Pure-Python core loops: cyclic Jacobi rotations and Kaczmarz sweeps.

This is the fallback used when the compiled extension is unavailable.
Rotation arithmetic matches the compiled core operation for operation
(the extension is built with FP contraction disabled), so the two
backends produce identical eigensystems.
"""

import math

import numpy as np


def jacobi_eigen(a, v, tol, max_sweeps, fro):
    """Run cyclic Jacobi sweeps on the symmetric matrix ``a`` in place.

    ``v`` accumulates the rotations (pass the identity).  Returns
    ``(off, sweeps)`` where ``off`` is the final off-diagonal Frobenius
    norm; the caller decides whether ``off <= tol * fro`` is good enough.
    """
    n = a.shape[0]
    threshold = tol * fro
    sweeps = 0
    off = _offdiag_norm(a, n)
    while off > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                # Rotate the remaining entries of rows/columns p and q.
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                new_p = c * col_p - s * col_q
                new_q = s * col_p + c * col_q
                keep = np.ones(n, dtype=bool)
                keep[p] = keep[q] = False
                a[keep, p] = new_p[keep]
                a[p, keep] = new_p[keep]
                a[keep, q] = new_q[keep]
                a[q, keep] = new_q[keep]
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = _offdiag_norm(a, n)
    return off, sweeps


def _offdiag_norm(a, n):
    # Naive row-major accumulation; mirrors the compiled core exactly.
    acc = 0.0
    for i in range(n - 1):
        row = a[i, i + 1:]
        for x in row:
            acc += x * x
    return math.sqrt(2.0 * acc)


def kaczmarz_run(a, b, x, order, norms2, tol):
    """Row-action sweeps on ``x`` in place, following ``order`` row by row.

    ``order`` has one row of row-indices per sweep.  After each sweep the
    max-norm residual is recorded; iteration stops early once it drops to
    ``tol``.  Returns ``(residuals, converged, updates)``.
    """
    m, n = a.shape
    residuals = []
    updates = 0
    converged = False
    for sweep_rows in order:
        for i in sweep_rows:
            # Accumulate left to right so both backends agree exactly.
            dot = 0.0
            for j in range(n):
                dot += a[i, j] * x[j]
            scale = (b[i] - dot) / norms2[i]
            for j in range(n):
                x[j] += scale * a[i, j]
            updates += 1
        res = 0.0
        for i in range(m):
            dot = 0.0
            for j in range(n):
                dot += a[i, j] * x[j]
            r = abs(dot - b[i])
            if r > res:
                res = r
        residuals.append(res)
        if res <= tol:
            converged = True
            break
    return residuals, converged, updates
