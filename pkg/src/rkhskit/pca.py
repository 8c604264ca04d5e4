"""Karhunen-Loeve / PCA pipeline: column mean, covariance, eigenbasis
feature matrix, transform, truncated reconstruction, and compression
reporting.

Orientation is fixed: rows are observations, columns are variables.
"""

from dataclasses import dataclass

import numpy as np

from rkhskit import linalg


def _as_data(x):
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if x.shape[0] < 1 or x.shape[1] < 1:
        raise ValueError("data matrix must be nonempty")
    return x


@dataclass(frozen=True)
class PcaModel:
    """Column mean, descending eigenvalues, and the orthonormal feature
    matrix whose column k is the eigenvector for eigenvalue k."""

    mean: np.ndarray
    eigenvalues: np.ndarray
    feature_matrix: np.ndarray

    @property
    def n_variables(self):
        return self.mean.shape[0]


@dataclass(frozen=True)
class CompressionReport:
    components_used: int
    mse: float
    compression_ratio: float
    eigenvalues: np.ndarray

    def to_dict(self):
        return {
            "components": self.components_used,
            "mse": self.mse,
            "compression_ratio": self.compression_ratio,
            "eigenvalues": [float(v) for v in self.eigenvalues],
        }


def covariance(x, population=False):
    """Sample covariance of the columns.

    Uses the m - 1 denominator by default (matching the worked numbers
    this module is validated against); population=True selects 1/m.
    """
    x = _as_data(x)
    m = x.shape[0]
    if m < 2:
        raise ValueError("at least two observations required")
    centered = x - x.mean(axis=0)
    denom = m if population else m - 1
    c = centered.T @ centered / denom
    return 0.5 * (c + c.T)


def fit(x, population=False):
    """Fit the PCA model: mean, eigenvalues descending, feature matrix."""
    x = _as_data(x)
    eig = linalg.sym_eigen(covariance(x, population=population))
    return PcaModel(
        mean=x.mean(axis=0),
        eigenvalues=np.maximum(eig.values, 0.0),
        feature_matrix=eig.vectors,
    )


def transform(model, x):
    """Project observations onto the principal axes."""
    x = _as_data(x)
    if x.shape[1] != model.n_variables:
        raise ValueError("column count does not match the model")
    return (x - model.mean) @ model.feature_matrix


def reconstruct(model, y, k):
    """Rebuild observations from the leading k principal coordinates."""
    y = _as_data(y)
    n = model.n_variables
    if not (1 <= k <= n):
        raise ValueError(f"component count {k} outside [1, {n}]")
    lead = model.feature_matrix[:, :k]
    return y[:, :k] @ lead.T + model.mean


def report(model, x, k):
    """Compress to k components and report pre-quantization error.

    The compression ratio follows the storage model
    (m * n) / (k * (m + n) + n): k score columns, k feature columns, and
    the stored mean.
    """
    x = _as_data(x)
    m, n = x.shape
    rebuilt = reconstruct(model, transform(model, x), k)
    mse = float(np.mean((x - rebuilt) ** 2))
    ratio = (m * n) / (k * (m + n) + n)
    return CompressionReport(
        components_used=k,
        mse=mse,
        compression_ratio=ratio,
        eigenvalues=model.eigenvalues,
    )
