"""Dense symmetric linear algebra: Jacobi eigensolver, pivoted Cholesky,
and SPD solves.

The Jacobi sweeps run in the selected core backend (compiled or pure
Python); everything here is deterministic for identical inputs.
"""

from dataclasses import dataclass

import numpy as np

from rkhskit import _core
from rkhskit.errors import ConvergenceError, NotPsdError, SingularMatrixError

DEFAULT_TOL = 1e-12
SWEEP_BUDGET = 100
DEFAULT_JITTER = 1e-10
SIGN_EPS = 1e-12


def check_symmetric(m):
    """Validate an exactly-symmetric square float matrix and return it."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not symmetric as stored")
    return m


@dataclass(frozen=True)
class EigenDecomposition:
    """Descending eigenvalues paired with orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class PsdFactor:
    """Pivoted factor L with m = L @ L.T and numerical rank."""

    rank: int
    factor: np.ndarray
    permutation: np.ndarray


def sym_eigen(m, tol=DEFAULT_TOL, max_sweeps=SWEEP_BUDGET):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Eigenvalues are sorted descending (stable, preserving sweep output
    order on ties).  Each eigenvector is sign-fixed so its first
    component of magnitude > 1e-12 is positive.
    """
    m = check_symmetric(m)
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = m.shape[0]
    a = np.array(m, dtype=float, order="C")
    v = np.eye(n, order="C")
    fro = float(np.sqrt(np.sum(m * m)))
    if fro == 0.0:
        return EigenDecomposition(np.zeros(n), np.eye(n))
    off, _sweeps = _core.jacobi_eigen(a, v, tol, max_sweeps, fro)
    if off > tol * fro:
        raise ConvergenceError(
            f"Jacobi sweeps did not converge within {max_sweeps} cycles", off
        )
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = v[:, order]
    for k in range(n):
        col = vectors[:, k]
        big = np.nonzero(np.abs(col) > SIGN_EPS)[0]
        if big.size and col[big[0]] < 0:
            vectors[:, k] = -col
    return EigenDecomposition(values, vectors)


def psd_factor(m, jitter=DEFAULT_JITTER):
    """Pivoted Cholesky factorization of a PSD matrix.

    ``jitter`` is relative: pivots above ``jitter * max(diag)`` count
    toward the rank, pivots below ``-jitter * max(diag)`` raise
    NotPsdError.
    """
    m = check_symmetric(m)
    n = m.shape[0]
    a = m.copy()
    perm = np.arange(n)
    max_diag = float(np.max(np.diag(m)))
    threshold = jitter * max(max_diag, 0.0)
    low = np.zeros((n, n))
    rank = 0
    for k in range(n):
        d = np.diag(a)[k:]
        j = k + int(np.argmax(d))
        pivot = a[j, j]
        if pivot < -threshold:
            raise NotPsdError(
                f"pivot {pivot:.3e} at index {perm[j]} below -jitter*max(diag)"
            )
        if pivot <= threshold:
            break
        if j != k:
            a[[k, j], :] = a[[j, k], :]
            a[:, [k, j]] = a[:, [j, k]]
            low[[k, j], :k] = low[[j, k], :k]
            perm[[k, j]] = perm[[j, k]]
        root = np.sqrt(pivot)
        low[k, k] = root
        if k + 1 < n:
            col = a[k + 1:, k] / root
            low[k + 1:, k] = col
            a[k + 1:, k + 1:] -= np.outer(col, col)
        rank += 1
    # Undo the row permutation so factor @ factor.T reproduces m directly.
    factor = np.zeros((n, rank))
    factor[perm] = low[:, :rank]
    return PsdFactor(rank=rank, factor=factor, permutation=perm)


def solve_spd(m, rhs):
    """Solve m @ x = rhs for symmetric positive definite m via Cholesky."""
    m = check_symmetric(m)
    rhs = np.asarray(rhs, dtype=float)
    n = m.shape[0]
    if rhs.shape[0] != n:
        raise ValueError("right-hand side length does not match matrix")
    a = m.copy()
    for k in range(n):
        pivot = a[k, k]
        if pivot <= 0.0:
            raise SingularMatrixError("matrix is not positive definite", k)
        root = np.sqrt(pivot)
        a[k, k] = root
        a[k + 1:, k] /= root
        a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k], a[k + 1:, k])
    low = np.tril(a)
    y = np.empty_like(rhs, dtype=float)
    for i in range(n):
        y[i] = (rhs[i] - low[i, :i] @ y[:i]) / low[i, i]
    x = np.empty_like(y)
    for i in range(n - 1, -1, -1):
        x[i] = (y[i] - low[i + 1:, i] @ x[i + 1:]) / low[i, i]
    return x
