"""Exact symbolic identities frozen before the numerical layers were built.

Each check is carried out in rational arithmetic so equality is literal,
not approximate: the diagonal Hermite-Laguerre collapse, the sign picked
up by the Hermite ladder, and the index placement in the Kummer-Laguerre
reduction.
"""
import math
from fractions import Fraction

from spolyreg import (
    hermite_op,
    hermite_quat,
    hermite_series,
    kummer_M,
    laguerre,
    pochhammer,
    quat,
    slice_monomial,
)

# exact unit with rational components: ((3i+4j)/5)^2 = -1
U = quat(0, Fraction(3, 5), Fraction(4, 5), 0)


def test_diagonal_hermite_is_laguerre():
    # H_{k,k}(q) = (-1)^k k! L_k(|q|^2), checked as exact rationals
    for k in range(7):
        for q in (quat(Fraction(1, 2)) + U * Fraction(3, 2),
                  quat(Fraction(-2, 3)) + U * Fraction(1, 7),
                  quat(Fraction(2))):
            lhs = hermite_quat(k, k, q)
            r2 = q.norm_sq()
            rhs = quat((-1) ** k * math.factorial(k) * laguerre(k, 0, Fraction(r2)))
            assert lhs == rhs


def test_ladder_sign_on_monomials():
    # n applications of (d/ds - conj) to s^m give exactly (-1)^n H_{m,n}
    for m in range(7):
        for n in range(5):
            image = hermite_op(slice_monomial(m), n)
            target = hermite_series(m, n).scale(quat((-1) ** n))
            assert image.allclose(target, tol=0)


def test_kummer_laguerre_index_placement():
    # M(-n; j+1 | t) = n! j!/(n+j)! L_n^{(j)}(t), exact over rationals
    for n in range(6):
        for j in range(5):
            scale = Fraction(math.factorial(n) * math.factorial(j),
                             math.factorial(n + j))
            for t in (Fraction(0), Fraction(1, 3), Fraction(7, 2), Fraction(-2, 5)):
                lhs = kummer_M(-n, j + 1, t)
                rhs = scale * laguerre(n, j, t)
                assert lhs == rhs


def test_kummer_laguerre_prefactor_is_pochhammer():
    # the same identity phrased through the rising factorial
    for n in range(6):
        for j in range(5):
            assert Fraction(math.factorial(n), pochhammer(j + 1, n)) == Fraction(
                math.factorial(n) * math.factorial(j), math.factorial(n + j))
