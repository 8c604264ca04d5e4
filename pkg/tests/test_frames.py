import numpy as np
import pytest

from rkhskit.frames import (
    VectorFrame,
    analysis,
    frame_bounds,
    frame_operator,
    normalize_frame,
    residual_error,
    residual_error_sum,
    synthesis,
)
from rkhskit.linalg import sym_eigen


def mercedes():
    angles = np.array([0.0, 2.0, 4.0]) * np.pi / 3.0
    return VectorFrame(np.column_stack([np.cos(angles), np.sin(angles)]))


def test_mercedes_frame_is_tight():
    fb = frame_bounds(mercedes())
    assert fb.is_frame
    assert fb.A == pytest.approx(1.5, abs=1e-12)
    assert fb.B == pytest.approx(1.5, abs=1e-12)


def test_parseval_after_rescaling():
    fr = mercedes()
    scaled = VectorFrame(fr.vectors, weights=np.full(3, 2.0 / 3.0))
    op = frame_operator(scaled)
    assert np.max(np.abs(op.matrix - np.eye(2))) < 1e-12
    u = np.array([0.3, -1.1])
    assert np.allclose(synthesis(scaled, scaled.weights * analysis(scaled, u)), u)


def test_analysis_energy_between_bounds():
    rng = np.random.default_rng(9)
    fr = VectorFrame(rng.normal(size=(7, 3)), weights=rng.uniform(0.5, 2.0, 7))
    fb = frame_bounds(fr)
    for _ in range(20):
        u = rng.normal(size=3)
        energy = float(fr.weights @ (analysis(fr, u) ** 2))
        nrm = float(u @ u)
        assert fb.A * nrm - 1e-10 <= energy <= fb.B * nrm + 1e-10


def test_non_spanning_system_flagged():
    fr = VectorFrame(np.array([[1.0, 0.0, 0.0], [2.0, 0.0, 0.0]]))
    fb = frame_bounds(fr)
    assert not fb.is_frame
    assert fb.A == 0.0


def test_normalize_frame_splits_norms():
    raw = np.array([[3.0, 0.0], [0.0, 0.5]])
    fr = normalize_frame(raw)
    assert np.allclose(fr.vectors, np.eye(2))
    assert np.allclose(fr.weights, [9.0, 0.25])


def test_frame_operator_trace_equals_weighted_norms():
    rng = np.random.default_rng(14)
    raw = rng.normal(size=(6, 4))
    fr = normalize_frame(raw)
    op = frame_operator(fr)
    assert op.trace == pytest.approx(float(np.sum(raw**2)), abs=1e-10)


def test_residual_error_matches_defining_sum():
    rng = np.random.default_rng(23)
    fr = VectorFrame(rng.normal(size=(9, 5)), weights=rng.uniform(0.2, 3.0, 9))
    onb = np.linalg.qr(rng.normal(size=(5, 5)))[0]
    op = frame_operator(fr)
    for n in range(6):
        assert residual_error(op, onb, n) == pytest.approx(
            residual_error_sum(fr, onb, n), abs=1e-9
        )


def test_residual_error_eigenbasis_is_minimal():
    rng = np.random.default_rng(31)
    fr = VectorFrame(rng.normal(size=(8, 4)), weights=rng.uniform(0.5, 2.0, 8))
    op = frame_operator(fr)
    eigbasis = sym_eigen(op.matrix).vectors
    for _ in range(10):
        other = np.linalg.qr(rng.normal(size=(4, 4)))[0]
        for n in range(5):
            assert residual_error(op, eigbasis, n) <= (
                residual_error(op, other, n) + 1e-10
            )


def test_residual_error_rejects_bad_basis():
    op = frame_operator(mercedes())
    with pytest.raises(ValueError):
        residual_error(op, np.array([[1.0, 1.0], [0.0, 1.0]]), 1)
    with pytest.raises(ValueError):
        residual_error(op, np.eye(2), 3)


def test_frame_rejects_zero_vectors():
    with pytest.raises(ValueError):
        VectorFrame(np.array([[0.0, 0.0], [1.0, 0.0]]))
    with pytest.raises(ValueError):
        normalize_frame(np.array([[0.0, 0.0]]))
