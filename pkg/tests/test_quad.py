"""Quadrature rules and Gaussian inner products."""
import math

import numpy as np
import pytest

from spolyreg import (
    HermiteLine,
    QuadratureDegreeError,
    SliceQuadrature,
    gauss_hermite,
    gauss_legendre,
    gram_slice,
    hermite_series,
    inner_full,
    inner_real,
    inner_slice,
    norm_sq_slice,
    quat,
    sphere_rule,
)

J_UNIT = quat(0, 0, 1, 0)


def test_gauss_hermite_total_mass():
    rule = gauss_hermite(20)
    assert np.sum(rule.weights) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gauss_hermite_moments_exact_to_degree():
    # E[t^{2m}] under e^{-t^2}: sqrt(pi) (2m-1)!! / 2^m, exact while 2m <= 2n-1
    rule = gauss_hermite(8)
    for m in (1, 3, 7):
        moment = float(np.sum(rule.weights * rule.nodes ** (2 * m)))
        ref = math.sqrt(math.pi) * math.prod(range(1, 2 * m, 2)) / 2.0 ** m
        assert moment == pytest.approx(ref, rel=1e-12)


def test_gauss_legendre_interval():
    rule = gauss_legendre(6, 0.0, 1.0)
    val = float(np.sum(rule.weights * rule.nodes ** 3))
    assert val == pytest.approx(0.25, rel=1e-14)


def test_slice_unit_mass():
    Q = SliceQuadrature(20)
    one = hermite_series(0, 0)
    v = inner_slice(one, one, Q)
    assert v.w == pytest.approx(math.pi, rel=1e-13)
    assert v.imag_norm() < 1e-13


@pytest.mark.parametrize("unit", [quat(0, 1, 0, 0), J_UNIT, quat(0, 0.6, 0.8, 0)])
def test_hermite_slice_orthogonality(unit):
    Q = SliceQuadrature(24, unit=unit)
    pairs = [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2)]
    for m, n in pairs:
        for j, k in pairs:
            v = inner_slice(hermite_series(m, n), hermite_series(j, k), Q)
            if (m, n) == (j, k):
                ref = math.pi * math.factorial(m) * math.factorial(n)
                assert v.w == pytest.approx(ref, rel=1e-11)
                assert v.imag_norm() < 1e-9 * ref
            else:
                assert v.norm() < 1e-9


def test_gram_slice_shape_and_diagonal():
    Q = SliceQuadrature(20)
    funcs = [hermite_series(j, 0) for j in range(4)]
    G = gram_slice(funcs, Q)
    assert G.shape == (4, 4, 4)
    for j in range(4):
        assert G[j, j, 0] == pytest.approx(math.pi * math.factorial(j), rel=1e-11)


def test_degree_guard():
    Q = SliceQuadrature(3)  # exact only through degree 5
    f = hermite_series(4, 2)
    with pytest.raises(QuadratureDegreeError):
        inner_slice(f, f, Q)
    assert issubclass(QuadratureDegreeError, ValueError)


def test_inner_real_gaussian_weight_compensation():
    # h_0 = e^{-t^2/2}, so <h_0, h_0> on the line is sqrt(pi)
    rule = gauss_hermite(40)
    v = inner_real(HermiteLine(0), HermiteLine(0), rule)
    assert v.w == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    # <h_j, h_j> = 2^j j! sqrt(pi)
    v3 = inner_real(HermiteLine(3), HermiteLine(3), rule)
    assert v3.w == pytest.approx(8 * 6 * math.sqrt(math.pi), rel=1e-12)
    v01 = inner_real(HermiteLine(0), HermiteLine(1), rule)
    assert v01.norm() < 1e-12


def test_sphere_rule_total_solid_angle():
    S = sphere_rule(6)
    total = float(np.sum(S.weights))
    assert total == pytest.approx(4 * math.pi, rel=1e-13)


def test_sphere_rule_quadratic_moments():
    # int_{S^2} u_a u_b dS = (4 pi / 3) delta_ab
    S = sphere_rule(6)
    pts = np.array([[u.x, u.y, u.z] for u in S.units])
    w = np.asarray(S.weights)
    M = np.einsum("s,sa,sb->ab", w, pts, pts)
    assert np.allclose(M, (4 * math.pi / 3) * np.eye(3), atol=1e-12)


def test_inner_full_unit_mass():
    one = hermite_series(0, 0)
    v = inner_full(one, one, n_slice=10)
    assert v.w == pytest.approx(4 * math.pi ** 2, rel=1e-12)


def test_norm_sq_slice_positive():
    Q = SliceQuadrature(20)
    f = hermite_series(2, 1)
    v = norm_sq_slice(f, Q)
    assert v == pytest.approx(math.pi * 2, rel=1e-11)
