"""Positive-definite kernel families, Gram matrices, the induced RKHS
metric, and sampling/frame bounds for restrictions to finite point sets.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from rkhskit import linalg
from rkhskit.errors import NotPsdError

NEAR_SINGULAR_RCOND = 1e-12
METRIC_CLAMP = 1e-12


@dataclass(frozen=True)
class FiniteMeasureSpace:
    """Finite ground set with a nonnegative weight per element."""

    ground: tuple
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if len(self.ground) != w.shape[0]:
            raise ValueError("one weight per ground element required")
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "weights", w)
        object.__setattr__(
            self, "index", {g: i for i, g in enumerate(self.ground)}
        )

    def measure(self, subset):
        idx = [self.index[g] for g in subset]
        return float(self.weights[idx].sum())

    @classmethod
    def counting(cls, ground):
        ground = tuple(ground)
        return cls(ground, np.ones(len(ground)))


class PointSet:
    """Ordered points sharing an ambient dimension.

    For intersection kernels the "points" are subsets of the measure
    space's ground set (stored as frozensets, dim 0).
    """

    def __init__(self, points, dim=None):
        if len(points) == 0:
            raise ValueError("point set must be nonempty")
        if isinstance(points[0], (set, frozenset, tuple)) and dim == 0:
            self.points = [frozenset(p) for p in points]
            self.dim = 0
        else:
            arr = np.atleast_2d(np.asarray(points, dtype=float))
            if arr.shape[0] == 1 and np.asarray(points).ndim == 1:
                arr = arr.T
            self.points = arr
            self.dim = arr.shape[1]
            if dim is not None and dim != self.dim:
                raise ValueError(f"points have dim {self.dim}, expected {dim}")

    @classmethod
    def from_1d(cls, values):
        return cls(np.asarray(values, dtype=float).reshape(-1, 1))

    @classmethod
    def of_sets(cls, subsets):
        return cls([frozenset(s) for s in subsets], dim=0)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def has_duplicates(self):
        """Duplicates are permitted but force singular Gram matrices."""
        if self.dim == 0:
            return len(set(self.points)) < len(self.points)
        seen = {tuple(p) for p in self.points}
        return len(seen) < len(self.points)


class Kernel:
    """Base class; subclasses implement evaluation on a pair of points."""

    stationary = False

    def __call__(self, x, y):
        raise NotImplementedError

    def _check_pair(self, x, y):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        y = np.atleast_1d(np.asarray(y, dtype=float))
        if x.shape != y.shape:
            raise ValueError(f"point dims differ: {x.shape} vs {y.shape}")
        return x, y


class GaussianKernel(Kernel):
    """K(x, y) = exp(-|x - y|^2 / (2 sigma^2))."""

    stationary = True

    def __init__(self, sigma=1.0):
        if sigma <= 0:
            raise ValueError("sigma must be positive")
        self.sigma = float(sigma)

    def __call__(self, x, y):
        x, y = self._check_pair(x, y)
        d2 = float(np.sum((x - y) ** 2))
        return math.exp(-d2 / (2.0 * self.sigma**2))


class SincKernel(Kernel):
    """Shannon kernel K(x, y) = sin(pi (x - y)) / (pi (x - y)) on the line.

    Normalized so integer samples are orthonormal; K = 1 at coincident
    points (removable singularity).
    """

    stationary = True

    def __call__(self, x, y):
        x, y = self._check_pair(x, y)
        if x.shape != (1,):
            raise ValueError("sinc kernel is defined on the real line")
        t = abs(float(x[0] - y[0]))
        if t == 0.0:
            return 1.0
        return math.sin(math.pi * t) / (math.pi * t)


class BoxBandKernel(Kernel):
    """Kernel of band-limited functions with box spectrum prod [-a_i, a_i].

    The raw form is prod 2 sin(a_i t_i) / t_i with t = x - y; with
    ``normalized=True`` (default) it is divided by prod 2 a_i so that
    K(x, x) = 1 (equivalently, the 1/(2 pi)^d inversion constant when
    the box is [-pi, pi]^d).
    """

    stationary = True

    def __init__(self, half_widths, normalized=True):
        hw = np.atleast_1d(np.asarray(half_widths, dtype=float))
        if np.any(hw <= 0):
            raise ValueError("half-widths must be positive")
        self.half_widths = hw
        self.normalized = normalized

    def __call__(self, x, y):
        x, y = self._check_pair(x, y)
        if x.shape != self.half_widths.shape:
            raise ValueError("point dim does not match kernel dimension")
        out = 1.0
        for a, xi, yi in zip(self.half_widths, x, y):
            t = abs(float(xi - yi))
            out *= 2.0 * a if t == 0.0 else 2.0 * math.sin(a * t) / t
        if self.normalized:
            out /= float(np.prod(2.0 * self.half_widths))
        return out


class IntersectionKernel(Kernel):
    """K(A, B) = nu(A intersect B) on subsets of a finite measure space."""

    def __init__(self, space):
        self.space = space

    def __call__(self, a, b):
        a = frozenset(a)
        b = frozenset(b)
        unknown = (a | b) - set(self.space.ground)
        if unknown:
            raise ValueError(f"elements outside the ground set: {unknown}")
        return self.space.measure(a & b)


class ExplicitGramKernel(Kernel):
    """Kernel over an indexed point set given by an explicit PSD matrix."""

    def __init__(self, matrix):
        self.matrix = linalg.check_symmetric(matrix)

    def __call__(self, i, j):
        i = int(np.asarray(i).reshape(()) if np.ndim(i) == 0 else np.asarray(i)[0])
        j = int(np.asarray(j).reshape(()) if np.ndim(j) == 0 else np.asarray(j)[0])
        return float(self.matrix[i, j])


@dataclass(frozen=True)
class GramMatrix:
    kernel: Kernel
    pointset: PointSet
    matrix: np.ndarray


@dataclass(frozen=True)
class RestrictionBounds:
    """Two-sided constants for a kernel restricted to a finite set.

    ``sampling_A/B`` bound sum |f(x)|^2 against the RKHS norm (extreme
    eigenvalues of the restricted Gram); ``operator_A/B`` bound the Gram
    acting on l2 coefficients and are the squares of the former.
    """

    sampling_A: float
    sampling_B: float
    operator_A: float
    operator_B: float
    near_singular: bool


def eval_kernel(kernel, x, y):
    """Evaluate the kernel; exactly symmetric in its arguments."""
    return kernel(x, y)


def gram_matrix(kernel, pts):
    n = len(pts)
    m = np.empty((n, n))
    items = list(pts)
    for i in range(n):
        for j in range(i, n):
            m[i, j] = kernel(items[i], items[j])
            m[j, i] = m[i, j]
    return GramMatrix(kernel=kernel, pointset=pts, matrix=m)


def induced_metric(kernel, x, y):
    """RKHS distance between kernel sections at x and y."""
    radicand = kernel(x, x) + kernel(y, y) - 2.0 * kernel(x, y)
    if radicand < -METRIC_CLAMP:
        raise NotPsdError(
            f"metric radicand {radicand:.3e} below the floating-point guard"
        )
    return math.sqrt(max(radicand, 0.0))


def psd_check(m, tol=1e-9):
    """Return (is_psd, smallest_eigenvalue) of a symmetric matrix."""
    eig = linalg.sym_eigen(linalg.check_symmetric(m))
    lam_min = float(eig.values[-1])
    return lam_min >= -tol, lam_min


def row_l2_sum(kernel, v, y):
    """Finite truncation of sum_{x in V} |K(x, y)|^2."""
    return float(sum(kernel(x, y) ** 2 for x in v))


def restriction_bounds(kernel, v, rcond=NEAR_SINGULAR_RCOND):
    eig = linalg.sym_eigen(gram_matrix(kernel, v).matrix)
    a = float(eig.values[-1])
    b = float(eig.values[0])
    return RestrictionBounds(
        sampling_A=a,
        sampling_B=b,
        operator_A=a * a,
        operator_B=b * b,
        near_singular=a < rcond * b,
    )
