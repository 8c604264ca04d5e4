"""Finite-dimensional frame machinery: analysis/synthesis operators,
frame bounds, weighted frame operators, and the truncation residual used
by the PCA optimality results.
"""

from dataclasses import dataclass

import numpy as np

from rkhskit import linalg

ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class VectorFrame:
    """m vectors in R^n with optional positive weights (default 1)."""

    vectors: np.ndarray
    weights: np.ndarray = None

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vectors, dtype=float))
        if np.any(np.all(v == 0.0, axis=1)):
            raise ValueError("frames must not contain zero vectors")
        w = self.weights
        w = np.ones(v.shape[0]) if w is None else np.asarray(w, dtype=float)
        if w.shape[0] != v.shape[0]:
            raise ValueError("one weight per vector required")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "vectors", v)
        object.__setattr__(self, "weights", w)

    @property
    def dim(self):
        return self.vectors.shape[1]

    @property
    def spanning_rank(self):
        return int(np.linalg.matrix_rank(self.vectors))


def normalize_frame(raw_vectors):
    """Split raw frame vectors h_a into unit vectors and weights |h_a|^2."""
    v = np.atleast_2d(np.asarray(raw_vectors, dtype=float))
    norms = np.linalg.norm(v, axis=1)
    if np.any(norms == 0.0):
        raise ValueError("cannot normalize a zero vector")
    return VectorFrame(vectors=v / norms[:, None], weights=norms**2)


@dataclass(frozen=True)
class FrameBounds:
    A: float
    B: float
    is_frame: bool = True


@dataclass(frozen=True)
class FrameOperator:
    """Weighted sum of rank-1 projections, sum w_a f_a f_a^T."""

    matrix: np.ndarray
    trace: float


def analysis(fr, u):
    """Coefficient sequence (<w_j, u>)_j."""
    u = np.asarray(u, dtype=float)
    if u.shape[0] != fr.dim:
        raise ValueError("vector dimension does not match the frame")
    return fr.vectors @ u


def synthesis(fr, coeffs):
    """Weighted recombination sum_j gamma_j w_j."""
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.shape[0] != fr.vectors.shape[0]:
        raise ValueError("one coefficient per frame vector required")
    return coeffs @ fr.vectors


def frame_operator(fr):
    m = (fr.vectors.T * fr.weights) @ fr.vectors
    m = 0.5 * (m + m.T)
    return FrameOperator(matrix=m, trace=float(np.trace(m)))


def frame_bounds(fr):
    """Extreme eigenvalues of the frame operator.

    Non-spanning systems are reported with A = 0 and is_frame = False.
    """
    eig = linalg.sym_eigen(frame_operator(fr).matrix)
    a = float(eig.values[-1])
    b = float(eig.values[0])
    if fr.spanning_rank < fr.dim:
        return FrameBounds(A=0.0, B=b, is_frame=False)
    return FrameBounds(A=a, B=b)


def residual_error(g, onb, n):
    """Energy of g outside the first n columns of the orthonormal basis.

    Computed as tr(g Q_n_perp) with Q_n the projection onto the leading
    n columns.
    """
    matrix = g.matrix if isinstance(g, FrameOperator) else np.asarray(g, float)
    onb = np.atleast_2d(np.asarray(onb, dtype=float))
    dim = matrix.shape[0]
    if not (0 <= n <= dim):
        raise ValueError(f"truncation level {n} outside [0, {dim}]")
    gram = onb.T @ onb
    if np.max(np.abs(gram - np.eye(onb.shape[1]))) > ORTHO_TOL:
        raise ValueError("basis columns are not orthonormal")
    lead = onb[:, :n]
    return float(np.trace(matrix) - np.trace(lead.T @ matrix @ lead))


def residual_error_sum(fr, onb, n):
    """Same residual via the defining weighted sum of squared deviations."""
    onb = np.atleast_2d(np.asarray(onb, dtype=float))
    lead = onb[:, :n]
    total = 0.0
    for w, f in zip(fr.weights, fr.vectors):
        approx = lead @ (lead.T @ f)
        total += w * float(np.sum((f - approx) ** 2))
    return total
