"""Reproducing kernels of the quaternionic polyanalytic Bargmann spaces.

Two independent computational paths:

* series path: the orthonormal expansion

      K_{2,k}(p,q) = 1/(pi k!) sum_j H_{j,k}(q,qbar) H_{k,j}(p,pbar) / j!

  with the q-side factor on the left; this is the factor order that
  satisfies the reproducing property under the pairing <K(p,.), f>.
  Evaluated through factorial-normalised ladder recurrences so that
  200-term truncations stay inside double range.

* star path: assemble (1/pi) e*^[pbar,q] * L*_k of the squared star
  distance as a PolySliceSeries in p (coefficients in the slice of q),
  then evaluate it with the coefficients on the left.  On the slice of q
  both paths collapse to the classical polyanalytic kernel
  (1/pi) e^(pbar q) L_k(|p-q|^2).

The level-n kernel of the first kind K_{1,n} is the sum of the first
n+1 second-kind kernels; its star path uses the gamma = 1 star Laguerre
polynomial (the Laguerre summation identity).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qarray
from .poly import laguerre
from .quat import Quaternion, qexp, quat
from .series import PolySliceSeries, exp_star, laguerre_star

__all__ = [
    "KernelSpec",
    "k2_series",
    "k1_series",
    "k2_series_batch",
    "k1_series_batch",
    "star_kernel_series",
    "k2_star",
    "k1_star",
    "kernel_value",
    "k2_closed_slice",
    "k1_closed_slice",
    "series_tail_bound",
    "star_tail_bound",
    "project",
    "clear_star_cache",
]

SERIES_TERMS = 200
STAR_TERMS = 40


@dataclass(frozen=True)
class KernelSpec:
    """Which kernel to compute and how."""

    kind: str = "second"          # "second" (fixed level) or "first" (sum)
    level: int = 0
    method: str = "series"        # "series" or "star"
    series_terms: int = SERIES_TERMS
    star_terms: int = STAR_TERMS

    def __post_init__(self):
        if self.kind not in ("first", "second"):
            raise ValueError(f"kernel kind must be 'first' or 'second', got {self.kind!r}")
        if self.method not in ("series", "star"):
            raise ValueError(f"kernel method must be 'series' or 'star', got {self.method!r}")
        if self.level < 0:
            raise ValueError("kernel level must be nonnegative")


def _ladder_start(pts: np.ndarray, k: int) -> list[np.ndarray]:
    """A_{0,kappa} = conj(pts)^kappa for kappa = 0..k."""
    return list(qarray.powers(qarray.qconj(pts), k))


def _ladder_step(cur: list[np.ndarray], pts: np.ndarray, j: int) -> list[np.ndarray]:
    """Advance A_{j,kappa} -> A_{j+1,kappa} where A_{j,kappa} is
    H_{j,kappa}/sqrt(j!); uses H_{j+1,kappa} = q H_{j,kappa} - kappa H_{j,kappa-1}."""
    root = math.sqrt(j + 1.0)
    nxt = [qarray.qmul(pts, cur[0]) / root]
    for kappa in range(1, len(cur)):
        nxt.append((qarray.qmul(pts, cur[kappa]) - kappa * cur[kappa - 1]) / root)
    return nxt


def _series_accumulate(levels, p: Quaternion, qpts: np.ndarray, terms: int) -> np.ndarray:
    """sum over j and the requested levels of
    (1/(pi kappa!)) A_{j,kappa}(q) conj(A_{j,kappa}(p))."""
    k = max(levels)
    parr = qarray.from_quaternion(p)[None, :]
    aq = _ladder_start(qpts, k)
    ap = _ladder_start(parr, k)
    total = np.zeros(qpts.shape)
    scales = {kappa: 1.0 / (math.pi * math.factorial(kappa)) for kappa in levels}
    for j in range(terms + 1):
        if j:
            aq = _ladder_step(aq, qpts, j - 1)
            ap = _ladder_step(ap, parr, j - 1)
        for kappa in levels:
            total += scales[kappa] * qarray.qmul(aq[kappa], qarray.qconj(ap[kappa][0]))
    return total


def k2_series_batch(k: int, p: Quaternion, qpts: np.ndarray,
                    terms: int = SERIES_TERMS) -> np.ndarray:
    """K_{2,k}(p, q_i) over an (N, 4) batch of q points."""
    return _series_accumulate([k], p, np.asarray(qpts, dtype=float), terms)


def k1_series_batch(n: int, p: Quaternion, qpts: np.ndarray,
                    terms: int = SERIES_TERMS) -> np.ndarray:
    return _series_accumulate(list(range(n + 1)), p, np.asarray(qpts, dtype=float), terms)


def k2_series(k: int, p: Quaternion, q: Quaternion,
              terms: int = SERIES_TERMS) -> Quaternion:
    """Second-kind kernel at a point pair, series path."""
    out = k2_series_batch(k, p, qarray.from_quaternion(q)[None, :], terms)
    return qarray.to_quaternion(out[0])


def k1_series(n: int, p: Quaternion, q: Quaternion,
              terms: int = SERIES_TERMS) -> Quaternion:
    out = k1_series_batch(n, p, qarray.from_quaternion(q)[None, :], terms)
    return qarray.to_quaternion(out[0])


# -- star path -----------------------------------------------------------

_STAR_CACHE: dict = {}
_STAR_CACHE_MAX = 64


def star_kernel_series(kind: str, level: int, q: Quaternion,
                       terms: int = STAR_TERMS) -> PolySliceSeries:
    """The assembled star-path kernel as a PolySliceSeries in p.

    Coefficients lie in the slice of q; the kernel value is recovered
    with eval_left (coefficients multiplied from the left).
    Cached per (kind, level, q, terms).
    """
    key = (kind, level, q.as_tuple(), terms)
    hit = _STAR_CACHE.get(key)
    if hit is not None:
        return hit
    gamma = 1 if kind == "first" else 0
    out = exp_star(q, terms).star(laguerre_star(level, gamma, q)).scale(1.0 / math.pi)
    if len(_STAR_CACHE) >= _STAR_CACHE_MAX:
        _STAR_CACHE.clear()
    _STAR_CACHE[key] = out
    return out


def clear_star_cache() -> None:
    _STAR_CACHE.clear()


def k2_star(k: int, p: Quaternion, q: Quaternion,
            terms: int = STAR_TERMS) -> Quaternion:
    """Second-kind kernel, star path."""
    return star_kernel_series("second", k, q, terms).eval_left(p)


def k1_star(n: int, p: Quaternion, q: Quaternion,
            terms: int = STAR_TERMS) -> Quaternion:
    return star_kernel_series("first", n, q, terms).eval_left(p)


def kernel_value(spec: KernelSpec, p: Quaternion, q: Quaternion) -> Quaternion:
    if spec.method == "series":
        fn = k2_series if spec.kind == "second" else k1_series
        return fn(spec.level, p, q, spec.series_terms)
    fn = k2_star if spec.kind == "second" else k1_star
    return fn(spec.level, p, q, spec.star_terms)


# -- same-slice closed forms ---------------------------------------------


def _common_slice_check(p: Quaternion, q: Quaternion, tol: float = 1e-12) -> None:
    ip, iq = p.imag(), q.imag()
    # cross product of the imaginary parts must vanish
    c = ip * iq - iq * ip
    if c.imag_norm() > tol * max(1.0, ip.imag_norm() * iq.imag_norm()):
        raise ValueError("closed form needs p and q in a common slice")


def k2_closed_slice(k: int, p: Quaternion, q: Quaternion) -> Quaternion:
    """(1/pi) e^(pbar q) L_k(|p-q|^2) for p, q in a common slice."""
    _common_slice_check(p, q)
    d2 = float((p - q).norm_sq())
    return qexp(p.conj() * q) * (laguerre(k, 0, d2) / math.pi)


def k1_closed_slice(n: int, p: Quaternion, q: Quaternion) -> Quaternion:
    """(1/pi) e^(pbar q) L_n^(1)(|p-q|^2) for p, q in a common slice."""
    _common_slice_check(p, q)
    d2 = float((p - q).norm_sq())
    return qexp(p.conj() * q) * (laguerre(n, 1, d2) / math.pi)


# -- truncation diagnostics ----------------------------------------------


def series_tail_bound(k: int, p: Quaternion, q: Quaternion,
                      terms: int = SERIES_TERMS, window: int = 120) -> float:
    """Upper bound on the dropped series tail, from the growth estimate
    |H_{j,k}(q)| <= (j!/(j-k)!) |q|^(j-k) e^(|q|^2/2)."""
    r = abs(p) * abs(q)
    if r == 0.0:
        return 0.0
    expo = (float(p.norm_sq()) + float(q.norm_sq())) / 2.0
    lr = math.log(r)
    total = 0.0
    for j in range(terms + 1, terms + 1 + window):
        lt = (math.lgamma(j + 1) - math.lgamma(k + 1) - 2 * math.lgamma(j - k + 1)
              + (j - k) * lr + expo - math.log(math.pi))
        total += math.exp(lt)
    return total


def star_tail_bound(k: int, p: Quaternion, q: Quaternion,
                    terms: int = STAR_TERMS, window: int = 60) -> float:
    """Heuristic bound on the exp-star truncation: dropped rows of
    e*^[pbar,q] times the evaluated magnitude of the Laguerre factor."""
    lag = laguerre_star(k, 0, q)
    ap, aq = abs(p), abs(q)
    lag_bound = sum(
        abs(c) * ap ** (ki + j)
        for ki, row in enumerate(lag.coeffs) for j, c in enumerate(row))
    r = ap * aq
    if r == 0.0:
        return 0.0
    tail = 0.0
    for a in range(terms + 1, terms + 1 + window):
        tail += math.exp(a * math.log(r) - math.lgamma(a + 1))
    return tail * lag_bound / math.pi


# -- projection ----------------------------------------------------------


def project(k: int, f, p: Quaternion, Q, terms: int = SERIES_TERMS) -> Quaternion:
    """Orthogonal projection onto the level-k space, evaluated at p:
    P_k f(p) = <K_{2,k}(p, .), f>_{C_I} by slice quadrature."""
    from .quad import values_on

    kv = k2_series_batch(k, p, Q.points, terms)
    fv = values_on(f, Q.points)
    prod = qarray.qmul(qarray.qconj(kv), fv)
    return qarray.to_quaternion(prod.T @ Q.weights)
