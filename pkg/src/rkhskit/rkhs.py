"""Finite RKHS machinery: elements as kernel-section combinations, inner
products through Grams, projections onto point configurations, singleton
projection chains, kernel ridge regression, and spectral factorization
for finitely supported measures.
"""

from dataclasses import dataclass

import numpy as np

from rkhskit import linalg
from rkhskit.errors import SingularMatrixError
from rkhskit.kernels import PointSet, gram_matrix

RCOND = 1e-12


@dataclass(frozen=True)
class RkhsElement:
    """Finite combination sum_j c_j K(., x_j)."""

    kernel: object
    centers: PointSet
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=float)
        if c.shape[0] != len(self.centers):
            raise ValueError("one coefficient per center required")
        object.__setattr__(self, "coefficients", c)

    def __call__(self, x):
        return evaluate_element(self, x)

    def norm_squared(self):
        g = gram_matrix(self.kernel, self.centers).matrix
        return float(self.coefficients @ g @ self.coefficients)


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finitely supported measure: atoms with strictly positive weights."""

    atoms: PointSet
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.shape[0] != len(self.atoms):
            raise ValueError("one weight per atom required")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True)
class MercerFactorization:
    """Descending eigenvalues with eigenfunction values at the atoms.

    ``functions[i]`` holds u_i evaluated at the atoms; the Gram is
    reconstructed as sum_i lambda_i u_i u_i^T.
    """

    eigenvalues: np.ndarray
    functions: np.ndarray

    def reconstruct(self):
        return (self.functions.T * self.eigenvalues) @ self.functions


def evaluate_element(f, x):
    return float(
        sum(c * f.kernel(x, ctr) for c, ctr in zip(f.coefficients, f.centers))
    )


def inner_product(f, g):
    """RKHS inner product; <K_x, K_y> = K(x, y)."""
    if f.kernel is not g.kernel:
        raise ValueError("elements must share the same kernel")
    cross = np.array(
        [[f.kernel(xf, xg) for xg in g.centers] for xf in f.centers]
    )
    return float(f.coefficients @ cross @ g.coefficients)


def _invertible_gram(kernel, pts):
    g = gram_matrix(kernel, pts).matrix
    eig = linalg.sym_eigen(g)
    if eig.values[-1] <= RCOND * max(eig.values[0], 0.0):
        raise SingularMatrixError(
            "kernel sections at these points are not linearly independent",
            int(np.argmin(eig.values)),
        )
    return g


def project_onto_points(f, points):
    """Orthogonal projection of f onto span{K(., x) : x in points}."""
    g = _invertible_gram(f.kernel, points)
    samples = np.array([evaluate_element(f, x) for x in points])
    coeffs = linalg.solve_spd(g, samples)
    return RkhsElement(kernel=f.kernel, centers=points, coefficients=coeffs)


def singleton_chain(f, chain):
    """Compose singleton projections P_n ... P_1 P_0 along ordered points.

    The result is a multiple of K(., x_n):
    f(x_0) * prod K(x_i, x_{i+1}) / prod K(x_i, x_i).
    """
    pts = list(chain)
    diag = [f.kernel(x, x) for x in pts]
    if any(d == 0.0 for d in diag):
        raise ZeroDivisionError("chain point with K(x, x) = 0")
    coeff = evaluate_element(f, pts[0])
    for i in range(len(pts) - 1):
        coeff *= f.kernel(pts[i], pts[i + 1])
    for d in diag:
        coeff /= d
    if isinstance(chain, PointSet) and chain.dim == 0:
        last = PointSet.of_sets([pts[-1]])
    else:
        last = PointSet(np.atleast_2d(np.asarray(pts[-1], dtype=float)))
    return RkhsElement(kernel=f.kernel, centers=last, coefficients=np.array([coeff]))


def ridge_fit(kernel, mu, phi, alpha):
    """Kernel ridge regression over a finitely supported measure.

    Minimizes ||phi - f|_atoms||^2_{L2(mu)} + alpha ||f||^2_H by solving
    (alpha I + W G) c = W phi in the span of the kernel sections at the
    atoms (symmetrized through W^{1/2}).
    """
    phi = np.asarray(phi, dtype=float)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    g = gram_matrix(kernel, mu.atoms).matrix
    w = mu.weights
    if alpha == 0:
        coeffs = linalg.solve_spd(g, phi)
    else:
        sqrt_w = np.sqrt(w)
        sym = alpha * np.eye(len(w)) + (sqrt_w[:, None] * g) * sqrt_w[None, :]
        sym = 0.5 * (sym + sym.T)
        u = linalg.solve_spd(sym, sqrt_w * phi)
        coeffs = sqrt_w * u
    return RkhsElement(kernel=kernel, centers=mu.atoms, coefficients=coeffs)


def _weighted_gram(kernel, mu):
    g = gram_matrix(kernel, mu.atoms).matrix
    sqrt_w = np.sqrt(mu.weights)
    m = (sqrt_w[:, None] * g) * sqrt_w[None, :]
    return 0.5 * (m + m.T), g, sqrt_w


def discrete_operator_spectrum(kernel, mu):
    """Spectrum of the sampling operator composition on L2(mu)."""
    if mu.atoms.has_duplicates:
        raise ValueError("atoms must be distinct")
    m, _, _ = _weighted_gram(kernel, mu)
    return linalg.sym_eigen(m).values


def mercer_factorize(kernel, mu, rel_cutoff=1e-12):
    """Spectral factorization of the kernel over a discrete measure.

    Eigenpairs of W^{1/2} G W^{1/2} give L2(mu)-orthonormal
    eigenfunctions u_i at the atoms; rank-deficient Grams yield fewer
    terms.
    """
    if mu.atoms.has_duplicates:
        raise ValueError("atoms must be distinct")
    m, _, sqrt_w = _weighted_gram(kernel, mu)
    eig = linalg.sym_eigen(m)
    cutoff = rel_cutoff * max(float(eig.values[0]), 0.0)
    keep = eig.values > cutoff
    values = eig.values[keep]
    # Back to function values at the atoms: u_i(x_j) = v_ij / sqrt(w_j).
    functions = (eig.vectors[:, keep] / sqrt_w[:, None]).T
    return MercerFactorization(eigenvalues=values, functions=functions)
