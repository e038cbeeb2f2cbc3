"""Classical and quaternionic special polynomials.

Hermite and generalized Laguerre polynomials go through their three-term
recurrences (exact when fed Fraction arguments), the confluent
hypergeometric function through its power series with an explicit
truncation policy, and the quaternionic Hermite polynomials

    H_{m,n}(q, qbar) = m! n! sum_j (-1)^j/j! q^(m-j)/(m-j)! qbar^(n-j)/(n-j)!

through the closed sum.  All of these are desk-scale objects; degree caps
keep the factorials inside double range.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

import numpy as np

from . import qarray
from .quat import Quaternion, quat

__all__ = [
    "DEGREE_CAP",
    "TruncationPolicy",
    "KummerConvergenceError",
    "hermite_H",
    "hermite_fn",
    "laguerre",
    "pochhammer",
    "kummer_M",
    "hermite_quat",
    "hermite_quat_batch",
]

DEGREE_CAP = 30


def _check_degree(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n > cap:
        raise ValueError(f"degree {n} exceeds cap {cap}")


def hermite_H(j: int, t, degree_cap: int = DEGREE_CAP):
    """Physicists' Hermite polynomial H_j(t).

    Recurrence H_{j+1} = 2 t H_j - 2 j H_{j-1}.  Accepts scalars
    (exact for Fraction t) or ndarrays.
    """
    _check_degree(j, degree_cap)
    one = np.ones_like(t, dtype=float) if isinstance(t, np.ndarray) else t * 0 + 1
    prev, cur = None, one
    for m in range(j):
        prev, cur = cur, 2 * t * cur - (0 if prev is None else 2 * m * prev)
    return cur


def hermite_fn(j: int, t, degree_cap: int = DEGREE_CAP):
    """Hermite function h_j(t) = e^(-t^2/2) H_j(t); L2 norm sqrt(2^j j! sqrt(pi))."""
    H = hermite_H(j, t, degree_cap)
    if isinstance(t, np.ndarray):
        return np.exp(-t * t / 2.0) * H
    return math.exp(-float(t) * float(t) / 2.0) * float(H)


def laguerre(n: int, gamma, x, degree_cap: int = DEGREE_CAP):
    """Generalized Laguerre polynomial L_n^(gamma)(x), gamma > -1.

    Recurrence (n+1) L_{n+1} = (2n+1+gamma-x) L_n - (n+gamma) L_{n-1};
    exact for Fraction inputs.
    """
    _check_degree(n, degree_cap)
    if float(gamma) <= -1:
        raise ValueError("laguerre weight parameter must be > -1")
    one = np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else x * 0 + 1
    if n == 0:
        return one
    prev, cur = one, (1 + gamma - x) * one
    for m in range(1, n):
        prev, cur = cur, ((2 * m + 1 + gamma - x) * cur - (m + gamma) * prev) / (m + 1)
    return cur


def pochhammer(a, j: int):
    """Rising factorial (a)_j = a (a+1) ... (a+j-1); (a)_0 = 1.

    Works for scalars and for Quaternion a (the factors commute, they
    share the slice of a).
    """
    if j < 0:
        raise ValueError("pochhammer index must be nonnegative")
    out = quat(1) if isinstance(a, Quaternion) else a * 0 + 1
    for m in range(j):
        out = out * (a + m)
    return out


@dataclass(frozen=True)
class TruncationPolicy:
    """Series stop rule: quit when a term's modulus drops below abs_tol,
    or at max_terms, whichever comes first."""

    max_terms: int = 500
    abs_tol: float = 1e-14

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be nonnegative")


DEFAULT_POLICY = TruncationPolicy()


class KummerConvergenceError(RuntimeError):
    """Raised when the Kummer series hits max_terms while terms are still
    above the policy tolerance."""

    def __init__(self, terms_used: int, last_term: float):
        super().__init__(
            f"Kummer series not converged after {terms_used} terms "
            f"(last term modulus {last_term:.3e})")
        self.terms_used = terms_used
        self.last_term = last_term


def _as_nonpositive_int(a) -> int | None:
    """-a if a is (the embedding of) a nonpositive integer, else None."""
    if isinstance(a, Quaternion):
        if a.imag_norm() != 0:
            return None
        a = a.w
    av = float(a)
    if av <= 0 and av.is_integer():
        return int(-av)
    return None


def kummer_M(a, c, x, policy: TruncationPolicy = DEFAULT_POLICY):
    """Confluent hypergeometric M(a; c | x) = sum_j (a)_j/(c)_j x^j/j!.

    Parameters
    ----------
    a : Quaternion or real.  A nonpositive integer makes the series
        terminate exactly (it is then a Laguerre polynomial up to scale).
    c : real, not zero or a negative integer.
    x : real argument.
    policy : truncation rule for the non-terminating case.

    Returns a Quaternion when a is one, else a scalar of x's kind.
    """
    if float(c) <= 0 and float(c).is_integer():
        raise ValueError(f"kummer_M pole: c = {c} is zero or a negative integer")
    n_term = _as_nonpositive_int(a)
    quaternionic = isinstance(a, Quaternion)

    def magnitude(t):
        if quaternionic:
            return abs(t)
        if isinstance(t, np.ndarray):
            return float(np.max(np.abs(t)))
        return abs(float(t))

    term = quat(1) if quaternionic else (x * 0 + 1)
    total = term
    j = 0
    while True:
        if n_term is not None and j >= n_term:
            return total
        if n_term is None and j >= policy.max_terms:
            mag = magnitude(term)
            if mag >= policy.abs_tol:
                raise KummerConvergenceError(j, mag)
            return total
        # term_{j+1} = term_j * (a+j) * x / ((c+j)(j+1)); factors commute
        term = term * (a + j) * (x / ((c + j) * (j + 1)))
        total = total + term
        j += 1
        if n_term is None and magnitude(term) < policy.abs_tol:
            return total


def hermite_quat(m: int, n: int, q: Quaternion, degree_cap: int = DEGREE_CAP) -> Quaternion:
    """Quaternionic Hermite polynomial H_{m,n}(q, qbar).

    Closed sum with integer coefficients; exact for Fraction-component q.
    Satisfies conj(H_{m,n}) = H_{n,m} and the recurrence
    H_{m+1,n} = q H_{m,n} - n H_{m,n-1}.
    """
    _check_degree(m, degree_cap)
    _check_degree(n, degree_cap)
    if not isinstance(q, Quaternion):
        q = quat(q)
    qc = q.conj()
    qp = [quat(1)]
    for _ in range(m):
        qp.append(qp[-1] * q)
    qcp = [quat(1)]
    for _ in range(n):
        qcp.append(qcp[-1] * qc)
    total = quat(0)
    for j in range(min(m, n) + 1):
        coeff = ((-1) ** j * math.comb(m, j) * math.comb(n, j) * math.factorial(j))
        total = total + qp[m - j] * qcp[n - j] * coeff
    return total


def hermite_quat_batch(m: int, n: int, pts: np.ndarray,
                       degree_cap: int = DEGREE_CAP) -> np.ndarray:
    """hermite_quat on an (..., 4) array of points."""
    _check_degree(m, degree_cap)
    _check_degree(n, degree_cap)
    qp = qarray.powers(pts, m)
    qcp = qarray.powers(qarray.qconj(pts), n)
    total = np.zeros(np.asarray(pts, dtype=float).shape)
    for j in range(min(m, n) + 1):
        coeff = ((-1) ** j * math.comb(m, j) * math.comb(n, j) * math.factorial(j))
        total += qarray.qmul(qp[m - j], qcp[n - j]) * coeff
    return total
