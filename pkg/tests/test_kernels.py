import math

import numpy as np
import pytest

from rkhskit.kernels import (
    BoxBandKernel,
    ExplicitGramKernel,
    FiniteMeasureSpace,
    GaussianKernel,
    IntersectionKernel,
    PointSet,
    SincKernel,
    eval_kernel,
    gram_matrix,
    induced_metric,
    psd_check,
    restriction_bounds,
    row_l2_sum,
)


def test_gaussian_values_and_symmetry():
    k = GaussianKernel(sigma=2.0)
    assert k(0.0, 0.0) == 1.0
    assert k(1.0, 3.0) == pytest.approx(math.exp(-0.5), abs=1e-15)
    assert k([1.0, 2.0], [4.0, 6.0]) == pytest.approx(math.exp(-25 / 8), abs=1e-15)
    assert k(0.3, 1.7) == k(1.7, 0.3)


def test_gaussian_rejects_bad_sigma():
    with pytest.raises(ValueError):
        GaussianKernel(sigma=0.0)


def test_sinc_integer_orthonormality():
    k = SincKernel()
    assert k(2.0, 2.0) == 1.0
    for n in range(1, 6):
        assert abs(k(0.0, float(n))) < 1e-15
    assert k(0.0, 0.5) == pytest.approx(2.0 / math.pi, abs=1e-15)
    # Exact symmetry including sign of the separation.
    assert k(0.3, 1.45) == k(1.45, 0.3)


def test_box_band_matches_sinc_at_pi():
    raw = BoxBandKernel(half_widths=math.pi, normalized=False)
    unit = BoxBandKernel(half_widths=math.pi)
    sinc = SincKernel()
    for t in (0.0, 0.25, 0.5, 1.0, 2.75):
        assert raw(0.0, t) == pytest.approx(2.0 * math.pi * sinc(0.0, t), abs=1e-12)
        assert unit(0.0, t) == pytest.approx(sinc(0.0, t), abs=1e-15)


def test_box_band_product_structure():
    k = BoxBandKernel(half_widths=[1.0, 2.0])
    k1 = BoxBandKernel(half_widths=1.0)
    k2 = BoxBandKernel(half_widths=2.0)
    x, y = [0.3, -0.4], [1.1, 0.2]
    assert k(x, y) == pytest.approx(k1(x[0], y[0]) * k2(x[1], y[1]), abs=1e-15)
    assert k(x, x) == 1.0


def test_intersection_kernel_measure():
    space = FiniteMeasureSpace(("a", "b", "c", "d"), [1.0, 2.0, 0.5, 3.0])
    k = IntersectionKernel(space)
    assert k({"a", "b"}, {"b", "c"}) == 2.0
    assert k({"a"}, {"c"}) == 0.0
    assert k({"a", "b", "d"}, {"a", "b", "d"}) == 6.0
    with pytest.raises(ValueError):
        k({"a"}, {"z"})


def test_intersection_gram_is_psd():
    space = FiniteMeasureSpace.counting(range(6))
    k = IntersectionKernel(space)
    sets = PointSet.of_sets([{0, 1}, {1, 2, 3}, {3, 4}, {0, 5}, set(), {2}])
    g = gram_matrix(k, sets).matrix
    ok, lam_min = psd_check(g)
    assert ok and lam_min >= -1e-12


def test_explicit_gram_kernel_lookup():
    m = np.array([[2.0, 1.0], [1.0, 3.0]])
    k = ExplicitGramKernel(m)
    assert eval_kernel(k, 0, 1) == 1.0
    assert gram_matrix(k, PointSet.from_1d([0, 1])).matrix.tolist() == m.tolist()


def test_gram_matrix_exact_symmetry():
    k = GaussianKernel(sigma=0.7)
    pts = PointSet(np.random.default_rng(0).normal(size=(12, 3)))
    g = gram_matrix(k, pts).matrix
    assert np.array_equal(g, g.T)
    assert np.allclose(np.diag(g), 1.0)


def test_gram_psd_for_random_point_sets():
    rng = np.random.default_rng(21)
    for _ in range(5):
        pts = PointSet(rng.normal(size=(10, 2)))
        g = gram_matrix(GaussianKernel(sigma=1.3), pts).matrix
        ok, lam_min = psd_check(g)
        assert ok, lam_min


def test_induced_metric_closed_form():
    k = GaussianKernel(sigma=1.0)
    # d(x, y)^2 = 2 - 2 exp(-|x-y|^2 / 2) for a unit-diagonal kernel.
    for t in (0.0, 0.5, 2.0):
        expected = math.sqrt(2.0 - 2.0 * math.exp(-(t**2) / 2.0))
        assert induced_metric(k, 0.0, t) == pytest.approx(expected, abs=1e-15)
    assert induced_metric(k, 1.0, 1.0) == 0.0


def test_row_l2_sum_sinc_integers():
    k = SincKernel()
    v = PointSet.from_1d(np.arange(-30, 31))
    # Integer translates are orthonormal, so the sum is K(y, y)^2-free:
    # at y = 0.25 it approximates sum sinc(n - 1/4)^2 = 1.
    assert row_l2_sum(k, v, 0.0) == pytest.approx(1.0, abs=1e-15)
    assert row_l2_sum(k, v, 0.25) == pytest.approx(1.0, abs=1e-2)


def test_restriction_bounds_sinc_integers_tight():
    rb = restriction_bounds(SincKernel(), PointSet.from_1d(np.arange(-10, 11)))
    assert rb.sampling_A == pytest.approx(1.0, abs=1e-12)
    assert rb.sampling_B == pytest.approx(1.0, abs=1e-12)
    assert rb.operator_A == pytest.approx(1.0, abs=1e-12)
    assert not rb.near_singular


def test_restriction_bounds_square_relation():
    rng = np.random.default_rng(33)
    pts = PointSet(np.cumsum(rng.uniform(0.8, 2.0, size=8)).reshape(-1, 1))
    rb = restriction_bounds(GaussianKernel(sigma=1.0), pts)
    assert rb.operator_A == rb.sampling_A**2
    assert rb.operator_B == rb.sampling_B**2
    assert rb.sampling_A > 0


def test_restriction_bounds_near_singular_flag():
    pts = PointSet.from_1d([0.0, 1e-9])
    rb = restriction_bounds(GaussianKernel(sigma=1.0), pts)
    assert rb.near_singular


def test_pointset_duplicates():
    assert PointSet.from_1d([0.0, 1.0, 0.0]).has_duplicates
    assert not PointSet.from_1d([0.0, 1.0, 2.0]).has_duplicates
    assert PointSet.of_sets([{1}, {1}]).has_duplicates


def test_pointset_rejects_empty():
    with pytest.raises(ValueError):
        PointSet([])
