import numpy as np
import pytest

from rkhskit import pca

from oracles import charpoly_eigenvalues_3x3

WORKED = np.array(
    [
        [1.0, 0.0, 0.0, 3.0],
        [-1.0, 1.0, 1.0, 0.0],
        [-1.0, -2.0, 4.0, -5.0],
        [0.0, 3.0, -1.0, 0.0],
    ]
)


def test_covariance_denominators():
    c = pca.covariance(WORKED)
    cp = pca.covariance(WORKED, population=True)
    assert np.allclose(c * 3.0, cp * 4.0, atol=1e-12)
    assert np.array_equal(c, c.T)
    centered = WORKED - WORKED.mean(axis=0)
    assert np.allclose(c, centered.T @ centered / 3.0, atol=1e-14)


def test_covariance_frozen_entries():
    c = pca.covariance(WORKED)
    assert c[0, 0] == pytest.approx(11.0 / 12.0, abs=1e-12)
    assert c[3, 3] == pytest.approx(11.0, abs=1e-12)
    assert np.trace(c) == pytest.approx(11.0 / 12.0 + 13.0 / 3.0 + 14.0 / 3.0 + 11.0)


def test_fit_eigenvalues_nonnegative_descending():
    model = pca.fit(WORKED)
    assert np.all(model.eigenvalues >= 0.0)
    assert np.all(np.diff(model.eigenvalues) <= 0)
    # Rank-deficient data: smallest eigenvalue is numerically zero.
    assert model.eigenvalues[-1] < 1e-12


def test_fit_trace_identity():
    rng = np.random.default_rng(3)
    for _ in range(10):
        x = rng.normal(size=(12, 5))
        model = pca.fit(x)
        assert np.sum(model.eigenvalues) == pytest.approx(
            np.trace(pca.covariance(x)), rel=1e-12
        )


def test_three_variable_eigenvalues_match_charpoly():
    rng = np.random.default_rng(7)
    x = rng.normal(size=(20, 3))
    model = pca.fit(x)
    expected = charpoly_eigenvalues_3x3(pca.covariance(x), lo=0, hi=50)
    assert np.allclose(model.eigenvalues, expected, atol=1e-9)


def test_transform_reconstruct_roundtrip():
    rng = np.random.default_rng(11)
    x = rng.normal(size=(9, 6))
    model = pca.fit(x)
    y = pca.transform(model, x)
    full = pca.reconstruct(model, y, 6)
    assert np.max(np.abs(full - x)) < 1e-10


def test_mse_equals_trailing_eigenvalue_sum():
    rng = np.random.default_rng(13)
    x = rng.normal(size=(15, 6))
    model = pca.fit(x)
    m, n = x.shape
    for k in range(1, 7):
        rep = pca.report(model, x, k)
        expected = np.sum(model.eigenvalues[k:]) * (m - 1) / (m * n)
        assert rep.mse == pytest.approx(expected, abs=1e-12)


def test_mse_monotone_in_k():
    rng = np.random.default_rng(17)
    x = rng.uniform(0, 255, size=(16, 12))
    model = pca.fit(x)
    mses = [pca.report(model, x, k).mse for k in range(1, 13)]
    assert all(a >= b - 1e-9 for a, b in zip(mses, mses[1:]))
    assert mses[-1] < 1e-9 * np.mean(x**2)


def test_rank_two_data_compresses_exactly():
    rng = np.random.default_rng(19)
    u = rng.normal(size=16)
    v = rng.normal(size=10)
    s = rng.normal(size=16)
    t = rng.normal(size=10)
    x = 5.0 + np.outer(u, v) + np.outer(s, t)
    model = pca.fit(x)
    rep = pca.report(model, x, 2)
    assert rep.mse < 1e-12
    assert rep.components_used == 2


def test_compression_ratio_storage_model():
    rng = np.random.default_rng(23)
    x = rng.normal(size=(64, 64))
    model = pca.fit(x)
    rep = pca.report(model, x, 8)
    assert rep.compression_ratio == pytest.approx(
        64 * 64 / (8 * (64 + 64) + 64), abs=1e-12
    )
    d = rep.to_dict()
    assert d["components"] == 8
    assert len(d["eigenvalues"]) == 64


def test_input_validation():
    with pytest.raises(ValueError):
        pca.covariance(np.ones((1, 3)))
    model = pca.fit(np.random.default_rng(0).normal(size=(5, 3)))
    with pytest.raises(ValueError):
        pca.reconstruct(model, np.zeros((2, 3)), 4)
    with pytest.raises(ValueError):
        pca.transform(model, np.zeros((2, 2)))
