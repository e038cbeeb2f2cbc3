"""Star products, Hermite series forms, and series serialization."""
from fractions import Fraction

from spolyreg import (
    PolySliceSeries,
    RightPolySeries,
    SliceSeries,
    exp_star,
    extract_components,
    from_hermite_basis,
    hermite_op,
    hermite_quat,
    hermite_series,
    laguerre,
    laguerre_star,
    poly_monomial,
    qexp,
    quat,
    s_k_series,
    slice_monomial,
    to_hermite_basis,
)

I = quat(0, 1, 0, 0)
J = quat(0, 0, 1, 0)
K = quat(0, 0, 0, 1)
# exact unit perpendicular-ish with rational components, (3i+4j)/5
U = quat(0, Fraction(3, 5), Fraction(4, 5), 0)


def test_star_is_ordered_convolution():
    # (q i) star (q j) = q^2 (i j) = q^2 k, not q^2 (j i)
    f = SliceSeries((quat(0), I))
    g = SliceSeries((quat(0), J))
    h = f.star(g)
    assert h.coeffs == (quat(0), quat(0), K)


def test_star_noncommutative():
    f = SliceSeries((I,))
    g = SliceSeries((J,))
    assert f.star(g).coeffs == (K,)
    assert g.star(f).coeffs == (-K,)


def test_star_same_slice_evaluation_homomorphism():
    # with all coefficients in one slice, star evaluates to the pointwise product
    f = SliceSeries((quat(1), quat(0, 2, 0, 0), quat(-1)))
    g = SliceSeries((quat(0, -1, 0, 0), quat(3)))
    p = quat(0.4, 1.1, 0, 0)
    lhs = f.star(g).eval(p)
    rhs = f.eval(p) * g.eval(p)
    assert (lhs - rhs).norm() < 1e-13


def test_star_pow_matches_repeated_star():
    f = SliceSeries((quat(1), I, J))
    assert f.star_pow(3).coeffs == f.star(f).star(f).coeffs
    assert f.star_pow(0).coeffs == (quat(1),)


def test_hermite_series_matches_direct_eval():
    for m, n in ((0, 0), (2, 1), (3, 3), (5, 2)):
        f = hermite_series(m, n)
        assert f.level == n
        for q in (quat(0.3, -0.2, 0.5, 0.1), quat(1, 1, 0, 0)):
            direct = hermite_quat(m, n, q)
            assert (f.eval_left(q) - direct).norm() < 1e-11


def test_hermite_op_sign_on_monomials():
    # n-fold (d/ds - conj) applied to s^m lands on (-1)^n H_{m,n}
    for m, n in ((2, 1), (4, 2), (1, 3)):
        got = hermite_op(slice_monomial(m), n)
        want = hermite_series(m, n).scale(quat((-1) ** n))
        assert got.allclose(want, tol=0)


def test_extract_components_roundtrip():
    # f = sum_k qbar^k phi_k with slice-regular phi_k
    f = hermite_series(4, 2)
    comps = extract_components(f)
    assert len(comps) == 3
    total = poly_monomial(0, 0, quat(0))
    for k, phi in enumerate(comps):
        total = total + poly_monomial(k, 0, quat(1)).star(
            PolySliceSeries((tuple(phi.coeffs),)))
    q = quat(0.7, 0.2, -0.4, 0.3)
    assert (total.eval_left(q) - f.eval_left(q)).norm() < 1e-12


def test_hermite_basis_roundtrip_exact():
    f = hermite_series(3, 2).scale(quat(Fraction(2))) \
        + hermite_series(1, 1).scale(U) + hermite_series(0, 0)
    alpha = to_hermite_basis(f)
    assert alpha[(3, 2)] == quat(2)
    assert alpha[(1, 1)] == U
    g = from_hermite_basis(alpha)
    assert g.allclose(f, tol=0)


def test_conj_swaps_left_and_right_star():
    f = PolySliceSeries(((quat(1), I), (J, quat(2))))
    g = PolySliceSeries(((K, quat(0)), (quat(1), I)))
    lhs = f.star(g).conj()
    rhs = g.conj().star(f.conj())
    assert isinstance(lhs, RightPolySeries)
    assert lhs.coeffs == rhs.coeffs


def test_s1_display():
    q = quat(Fraction(1, 2), Fraction(1, 4), 0, 0)
    s1 = s_k_series(1, q)
    h1 = (-q, quat(1))
    assert s1.coeffs[1] == h1
    assert s1.coeffs[0] == tuple(c * (-q.conj()) for c in h1)


def test_s1_same_slice_value():
    q = quat(0.5, 0, 1.25, 0)
    p = quat(-0.3, 0, 0.8, 0)  # same slice C_j
    v = s_k_series(1, q).eval_left(p)
    d = p - q
    assert (v - quat(d.norm_sq())).norm() < 1e-13


def test_laguerre_star_same_slice_reduction():
    pp = quat(2) + U
    qq = quat(1) + U * 2
    # |p - q|^2 = 1 + 1 = 2 exactly
    got = laguerre_star(2, 0, qq).eval_left(pp)
    want = quat(laguerre(2, 0, Fraction(2)))
    assert got == want


def test_exp_star_same_slice():
    q = quat(0.3, 0.9, 0, 0)
    p = quat(-0.5, 0.4, 0, 0)
    v = exp_star(q).eval_left(p)
    ref = qexp(p.conj() * q)
    assert (v - ref).norm() < 1e-12


def test_eval_left_vs_eval_off_slice():
    # left and plain substitution differ once coefficients leave the point's slice
    f = PolySliceSeries(((quat(0), J),))
    p = quat(0, 1, 0, 0)
    assert (f.eval_left(p) - J * p).norm() < 1e-15
    assert (f.eval(p) - p * J).norm() < 1e-15
    assert (f.eval_left(p) - f.eval(p)).norm() > 1.0


def test_dbar_lowers_level():
    f = hermite_series(3, 2)
    assert f.dbar().level <= 1
    g = PolySliceSeries(((quat(1), quat(2)),))
    assert g.dbar().allclose(PolySliceSeries(((quat(0),),)), tol=0)


def test_json_roundtrip():
    f = hermite_series(2, 2).scale(quat(0.5, -1.5, 2.0, 0.0))
    s = f.to_json()
    g = PolySliceSeries.from_json(s)
    assert g.allclose(f, tol=0)


def test_degree_and_level():
    f = hermite_series(4, 2)
    assert f.level == 2
    assert f.degree >= 4
    s = SliceSeries((quat(1), quat(0), quat(3)))
    assert s.degree == 2
