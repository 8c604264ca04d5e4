"""Kaczmarz iteration in three forms: classical row action on linear
systems (cyclic or randomized), the sequence form over unit vectors, and
the projection-valued form with defect operators, effectiveness
certificates, and dual Parseval sequences.
"""

from dataclasses import dataclass, field

import numpy as np

from rkhskit import _core, linalg
from rkhskit.kernels import gram_matrix

DEFAULT_TOL = 1e-10
DEFAULT_MAX_SWEEPS = 10_000
PROJECTION_TOL = 1e-10
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class LinearSystem:
    """A x = b with no zero rows."""

    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.ascontiguousarray(np.atleast_2d(self.A), dtype=float)
        b = np.asarray(self.b, dtype=float)
        if a.shape[0] != b.shape[0]:
            raise ValueError("matrix and right-hand side sizes differ")
        norms2 = np.einsum("ij,ij->i", a, a)
        if np.any(norms2 == 0.0):
            raise ValueError(
                f"zero row at index {int(np.argmin(norms2))} rejected"
            )
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "row_norms_squared", norms2)


@dataclass(frozen=True)
class RunReport:
    iterations: int
    residual_history: np.ndarray
    solution: np.ndarray
    converged: bool

    def to_dict(self):
        return {
            "iterations": self.iterations,
            "converged": self.converged,
            "final_residual": float(self.residual_history[-1]),
            "residual_history": [float(r) for r in self.residual_history],
        }


def solve_classical(
    system,
    x0=None,
    tol=DEFAULT_TOL,
    max_sweeps=DEFAULT_MAX_SWEEPS,
    mode="cyclic",
    seed=None,
    row_probabilities="squared-norm",
):
    """Iterate row projections until the max-norm residual drops to tol.

    One sweep is m row updates.  Cyclic mode walks the rows in order;
    randomized mode draws rows from the seeded generator, by default with
    probability proportional to its squared norm ("uniform" selects rows
    uniformly).  Inconsistent systems never converge and stop at the
    sweep budget.
    """
    a, b = system.A, system.b
    m, n = a.shape
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = np.zeros(n) if x0 is None else np.array(x0, dtype=float)
    if x.shape[0] != n:
        raise ValueError("start vector length does not match the system")
    if mode == "cyclic":
        order = np.ascontiguousarray(
            np.tile(np.arange(m), (max_sweeps, 1)), dtype=np.int64
        )
    elif mode == "randomized":
        if seed is None:
            raise ValueError("randomized mode requires a seed")
        rng = np.random.Generator(np.random.PCG64(seed))
        if row_probabilities == "squared-norm":
            p = system.row_norms_squared / system.row_norms_squared.sum()
        elif row_probabilities == "uniform":
            p = None
        else:
            raise ValueError(f"unknown row_probabilities {row_probabilities!r}")
        order = np.ascontiguousarray(
            rng.choice(m, size=(max_sweeps, m), p=p), dtype=np.int64
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    residuals, converged, updates = _core.kaczmarz_run(
        a, b, x, order, system.row_norms_squared, tol
    )
    return RunReport(
        iterations=int(updates),
        residual_history=np.asarray(residuals),
        solution=x,
        converged=bool(converged),
    )


@dataclass(frozen=True)
class UnitSequence:
    """Ordered unit vectors, optionally extended periodically."""

    vectors: np.ndarray
    periodic: bool = False

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vectors, dtype=float))
        norms = np.linalg.norm(v, axis=1)
        if np.any(np.abs(norms - 1.0) > UNIT_TOL):
            raise ValueError("sequence vectors must have unit norm")
        object.__setattr__(self, "vectors", v)

    @property
    def space_dim(self):
        return self.vectors.shape[1]

    def vector(self, k):
        n = self.vectors.shape[0]
        if k >= n and not self.periodic:
            raise IndexError(f"sequence has only {n} vectors")
        return self.vectors[k % n]


def run_sequence(seq, x, sweeps):
    """Kaczmarz sequence iteration toward x; returns the error history.

    Starts from the zero vector; history[k] is |x_k - x| after k steps
    (history[0] is the starting error |x|).
    """
    x = np.asarray(x, dtype=float)
    if x.shape[0] != seq.space_dim:
        raise ValueError("vector dimension does not match the sequence")
    xk = np.zeros_like(x)
    steps = sweeps * seq.vectors.shape[0]
    history = np.empty(steps + 1)
    history[0] = np.linalg.norm(x)
    for k in range(steps):
        e = seq.vector(k)
        xk = xk + e * (e @ (x - xk))
        history[k + 1] = np.linalg.norm(xk - x)
    return history


class ProjectionSystem:
    """Ordered orthogonal projections given as explicit matrices."""

    def __init__(self, projections):
        mats = [np.asarray(p, dtype=float) for p in projections]
        if not mats:
            raise ValueError("at least one projection required")
        dim = mats[0].shape[0]
        for i, p in enumerate(mats):
            if p.shape != (dim, dim):
                raise ValueError(f"projection {i} has shape {p.shape}")
            if np.max(np.abs(p - p.T)) > PROJECTION_TOL:
                raise ValueError(f"projection {i} is not symmetric")
            if np.max(np.abs(p @ p - p)) > PROJECTION_TOL:
                raise ValueError(f"projection {i} is not idempotent")
        self.projections = mats
        self.dim = dim

    def __len__(self):
        return len(self.projections)

    @classmethod
    def from_unit_vectors(cls, vectors):
        """Rank-1 projections |e><e| from unit vectors."""
        seq = UnitSequence(vectors)
        return cls([np.outer(e, e) for e in seq.vectors])

    @classmethod
    def from_kernel_complements(cls, kernel, points):
        """Rank-1-complement projections 1 - |K_x><K_x| for a unit-diagonal
        kernel, coordinatized through the PSD factor of the Gram over the
        points (row j of the factor represents the section at point j).
        """
        g = gram_matrix(kernel, points).matrix
        if np.max(np.abs(np.diag(g) - 1.0)) > 1e-12:
            raise ValueError("kernel must satisfy K(x, x) = 1 on the points")
        factor = linalg.psd_factor(g).factor
        dim = factor.shape[1]
        eye = np.eye(dim)
        return cls([eye - np.outer(row, row) for row in factor])


@dataclass(frozen=True)
class DefectDecomposition:
    """Defect operators of the projection-valued recursion.

    T[n] = (1-P_n)...(1-P_0), Q[n] = P_n (1-P_{n-1})...(1-P_0) with
    Q[0] = P_0; energies[j, k] = |Q_k x_j|^2 for probe x_j, and defects
    carries |x|^2 - |T_n x|^2 - sum |Q_k x|^2 per probe.
    """

    T: list
    Q: list
    energies: np.ndarray
    defects: np.ndarray


def defect_decomposition(ps, probes):
    probes = np.atleast_2d(np.asarray(probes, dtype=float))
    eye = np.eye(ps.dim)
    t_ops, q_ops = [], []
    prev = eye
    for p in ps.projections:
        q_ops.append(p @ prev)
        prev = (eye - p) @ prev
        t_ops.append(prev)
    energies = np.array(
        [[float(np.sum((q @ x) ** 2)) for q in q_ops] for x in probes]
    )
    t_final = t_ops[-1]
    defects = np.array(
        [
            float(x @ x) - float(np.sum((t_final @ x) ** 2)) - energies[j].sum()
            for j, x in enumerate(probes)
        ]
    )
    return DefectDecomposition(T=t_ops, Q=q_ops, energies=energies, defects=defects)


@dataclass(frozen=True)
class CertificateReport:
    """Per-probe verdicts for the geometric-decay certificate.

    ``condition_ok[j]`` is True when every step satisfied
    |P_j (1-P_{j-1}) y|^2 >= c |(1-P_{j-1}) y|^2 along that probe's
    trajectory, ``decay_ok[j]`` when |T_n x|^2 <= (1-c)^n |(1-P_0) x|^2
    held at every n.
    """

    c: float
    condition_ok: np.ndarray
    decay_ok: np.ndarray
    worst_margin: float

    @property
    def passed(self):
        return bool(np.all(self.condition_ok) and np.all(self.decay_ok))


def effectiveness_certificate(ps, c, probes=None, seed=0, slack=1e-12):
    """Check the contraction condition and the implied decay on probes."""
    if not (0.0 < c < 1.0):
        raise ValueError("certificate constant must lie in (0, 1)")
    if probes is None:
        rng = np.random.Generator(np.random.PCG64(seed))
        probes = rng.standard_normal((20, ps.dim))
    probes = np.atleast_2d(np.asarray(probes, dtype=float))
    eye = np.eye(ps.dim)
    condition_ok = np.ones(probes.shape[0], dtype=bool)
    decay_ok = np.ones(probes.shape[0], dtype=bool)
    worst = np.inf
    for j, x in enumerate(probes):
        y = (eye - ps.projections[0]) @ x
        base = float(y @ y)
        for n, p in enumerate(ps.projections[1:], start=1):
            captured = float(np.sum((p @ y) ** 2))
            current = float(y @ y)
            if current > slack:
                margin = captured - c * current
                worst = min(worst, margin / current)
                if margin < -slack:
                    condition_ok[j] = False
            y = y - p @ y
            if float(y @ y) > (1.0 - c) ** n * base + slack:
                decay_ok[j] = False
    return CertificateReport(
        c=c, condition_ok=condition_ok, decay_ok=decay_ok,
        worst_margin=float(worst),
    )


def stationary_effectiveness(kernel, points, c):
    """Certificate for rank-1-complement systems of a stationary kernel
    with K(x, x) = 1: effective when K(x_j - x_{j-1})^2 <= 1 - c for all
    consecutive pairs.
    """
    if not getattr(kernel, "stationary", False):
        raise ValueError("kernel must be stationary")
    pts = np.asarray(points, dtype=float).reshape(-1)
    if not (0.0 < c < 1.0):
        raise ValueError("certificate constant must lie in (0, 1)")
    for prev, cur in zip(pts, pts[1:]):
        if kernel(cur, prev) ** 2 > 1.0 - c:
            return False
    return True


def dual_sequence(seq, count):
    """Dual vectors by the recursion g_0 = e_0,
    g_n = e_n - sum_{j<n} <e_j, e_n> g_j.

    When the source system is effective these form a Parseval frame.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    duals = np.empty((count, seq.space_dim))
    duals[0] = seq.vector(0)
    for n in range(1, count):
        e_n = seq.vector(n)
        g = e_n.copy()
        for j in range(n):
            g -= (seq.vector(j) @ e_n) * duals[j]
        duals[n] = g
    return duals
