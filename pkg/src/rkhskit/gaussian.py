"""Gaussian realizations of positive-definite kernels: process sampling
with prescribed covariance, the operator-valued process built from
Kaczmarz defect operators, and the discrete set-indexed Wiener process.

All randomness comes from numpy's PCG64 generator (ziggurat normals);
the seed fully determines every sample stream.
"""

from dataclasses import dataclass

import numpy as np

from rkhskit import linalg
from rkhskit.kernels import PointSet, gram_matrix


@dataclass(frozen=True)
class SamplerConfig:
    seed: int
    n_samples: int

    def generator(self):
        return np.random.Generator(np.random.PCG64(self.seed))


@dataclass(frozen=True)
class ProcessSample:
    """Realizations of the process at the atoms, one draw per row."""

    atoms: PointSet
    draws: np.ndarray


def sample_gp(kernel, pts, cfg):
    """Mean-zero Gaussian draws whose construction covariance is the Gram.

    Each realization is L z with L the pivoted PSD factor of the Gram
    and z i.i.d. standard normal.
    """
    gram = gram_matrix(kernel, pts).matrix
    factor = linalg.psd_factor(gram).factor
    rng = cfg.generator()
    z = rng.standard_normal((cfg.n_samples, factor.shape[1]))
    return ProcessSample(atoms=pts, draws=z @ factor.T)


def empirical_covariance(sample):
    """Mean-zero covariance estimator (1/N) sum of outer products."""
    draws = sample.draws
    if draws.shape[0] < 2:
        raise ValueError("at least two draws required")
    return draws.T @ draws / draws.shape[0]


@dataclass(frozen=True)
class IsometryReport:
    """Empirical check of E<Wu, Wv> = <u, v> for W = sum Q_n Z_n.

    ``estimates``/``exact`` are per probe pair; ``tails`` carries the
    truncation certificate |T_N u| |T_N v| bound term per pair.
    """

    estimates: np.ndarray
    exact: np.ndarray
    deviations: np.ndarray
    tails: np.ndarray


def operator_process_check(q_operators, probe_pairs, cfg, parseval_tol=1e-8):
    """Monte Carlo isometry check for the operator-valued process.

    ``q_operators`` are the defect capture operators of an effective
    projection system.  Their Parseval identity on the probes is
    verified first; failure raises with the defect value.
    """
    qs = [np.asarray(q, dtype=float) for q in q_operators]
    pairs = [
        (np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        for u, v in probe_pairs
    ]
    stack = np.stack(qs)
    for u, v in pairs:
        exact = float(u @ v)
        total = float(np.sum((stack @ u) * (stack @ v)))
        scale = max(np.linalg.norm(u) * np.linalg.norm(v), 1.0)
        if abs(total - exact) > parseval_tol * scale:
            raise ValueError(
                "projection defects are not Parseval on the probes "
                f"(defect {total - exact:.3e})"
            )
    rng = cfg.generator()
    z = rng.standard_normal((cfg.n_samples, len(qs)))
    estimates, exact_vals, tails = [], [], []
    for u, v in pairs:
        qu = stack @ u
        qv = stack @ v
        wu = z @ qu
        wv = z @ qv
        estimates.append(float(np.mean(np.sum(wu * wv, axis=1))))
        exact_vals.append(float(u @ v))
        # Finite systems: everything beyond the last defect is the
        # residual energy, |T_N u|^2 per vector.
        tail_u = float(u @ u) - float(np.sum(qu * qu))
        tail_v = float(v @ v) - float(np.sum(qv * qv))
        tails.append(np.sqrt(max(tail_u, 0.0) * max(tail_v, 0.0)))
    estimates = np.asarray(estimates)
    exact_vals = np.asarray(exact_vals)
    return IsometryReport(
        estimates=estimates,
        exact=exact_vals,
        deviations=np.abs(estimates - exact_vals),
        tails=np.asarray(tails),
    )


def wiener_set_process(space, sets, cfg):
    """Set-indexed Wiener process with covariance nu(A intersect B).

    Realized as W_A = sum_{i in A} sqrt(nu_i) xi_i with shared i.i.d.
    xi, so additivity over disjoint sets holds exactly per draw.
    """
    subsets = [frozenset(s) for s in sets]
    for s in subsets:
        unknown = s - set(space.ground)
        if unknown:
            raise ValueError(f"elements outside the ground set: {unknown}")
    rng = cfg.generator()
    xi = rng.standard_normal((cfg.n_samples, len(space.ground)))
    scaled = xi * np.sqrt(space.weights)
    indicator = np.array(
        [[1.0 if g in s else 0.0 for s in subsets] for g in space.ground]
    )
    return ProcessSample(atoms=PointSet.of_sets(subsets), draws=scaled @ indicator)
