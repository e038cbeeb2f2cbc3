"""Quadrature rules and inner products.

Three pairings, matching the three function spaces in play:

* ``inner_real``  on the line, weight e^(-t^2)          (Hermite functions)
* ``inner_slice`` on a slice plane C_I, weight e^(-|q|^2) (tensor Gauss-Hermite)
* ``inner_full``  sphere average of slice pairings, total sphere weight 4*pi

All pairings conjugate the first argument and are right-linear in the
second, matching the right vector space structure.  The full pairing is
defined as the sphere integral of slice pairings; constants get
<1,1> = pi on a slice and 4*pi^2 over the sphere of slices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import roots_hermite, roots_legendre

from . import qarray
from .quat import I as UNIT_I
from .quat import Quaternion

__all__ = [
    "QuadratureDegreeError",
    "Rule1D",
    "gauss_hermite",
    "gauss_legendre",
    "SliceQuadrature",
    "SphereRule",
    "sphere_rule",
    "values_on",
    "line_values",
    "inner_real",
    "inner_slice",
    "inner_full",
    "norm_sq_slice",
    "norm_sq_full",
    "gram_slice",
]

NODE_CAP = 200


class QuadratureDegreeError(ValueError):
    """The requested rule cannot integrate the stated polynomial degree."""


@dataclass(frozen=True)
class Rule1D:
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def n(self) -> int:
        return len(self.nodes)


def gauss_hermite(n: int) -> Rule1D:
    """Gauss-Hermite rule: exact for e^(-t^2) * (poly of degree <= 2n-1)."""
    if not 1 <= n <= NODE_CAP:
        raise ValueError(f"node count {n} outside 1..{NODE_CAP}")
    x, w = roots_hermite(n)
    return Rule1D(x, w)


def gauss_legendre(n: int, a: float = -1.0, b: float = 1.0) -> Rule1D:
    if not 1 <= n <= NODE_CAP:
        raise ValueError(f"node count {n} outside 1..{NODE_CAP}")
    x, w = roots_legendre(n)
    mid, half = (a + b) / 2.0, (b - a) / 2.0
    return Rule1D(mid + half * x, half * w)


class SliceQuadrature:
    """Tensor Gauss-Hermite rule on the slice plane C_unit.

    Integrates e^(-|q|^2) times any polynomial of total degree <= 2n-1
    in the slice coordinates exactly.
    """

    def __init__(self, n: int = 40, unit: Quaternion = UNIT_I):
        rule = gauss_hermite(n)
        X, Y = np.meshgrid(rule.nodes, rule.nodes, indexing="ij")
        self.n = n
        self.unit = unit
        self.points = qarray.slice_points(X.ravel(), Y.ravel(), unit)
        self.weights = np.outer(rule.weights, rule.weights).ravel()


@dataclass(frozen=True)
class SphereRule:
    """Product rule on the unit sphere of imaginary directions.

    Gauss-Legendre in the cosine of the polar angle crossed with a
    uniform azimuth grid; exact for spherical polynomials of degree
    <= order, total weight 4*pi.
    """

    units: tuple
    weights: np.ndarray
    order: int


def sphere_rule(order: int = 6) -> SphereRule:
    if order < 0:
        raise ValueError("sphere rule order must be nonnegative")
    n_u = order // 2 + 1
    n_phi = order + 1
    leg = gauss_legendre(n_u)
    units = []
    weights = []
    for u, wu in zip(leg.nodes, leg.weights):
        s = np.sqrt(max(1.0 - u * u, 0.0))
        for m in range(n_phi):
            phi = 2.0 * np.pi * m / n_phi
            units.append(Quaternion(0.0, s * np.cos(phi), s * np.sin(phi), u))
            weights.append(wu * 2.0 * np.pi / n_phi)
    return SphereRule(tuple(units), np.array(weights), order)


def values_on(f, pts: np.ndarray) -> np.ndarray:
    """Evaluate f on an (N, 4) batch, via eval_many when available."""
    if hasattr(f, "eval_many"):
        return f.eval_many(pts)
    out = np.empty(pts.shape)
    for i in range(pts.shape[0]):
        v = f(qarray.to_quaternion(pts[i]))
        out[i] = qarray.from_quaternion(v) if isinstance(v, Quaternion) \
            else np.array([float(v), 0.0, 0.0, 0.0])
    return out


def line_values(f, ts: np.ndarray) -> np.ndarray:
    """Evaluate a line function on nodes ts, returning (N, 4) values.

    Accepts vectorised real-valued callables, vectorised (N, 4)-valued
    callables, and plain scalar callables returning floats/Quaternions.
    """
    if hasattr(f, "eval_many"):
        return np.asarray(f.eval_many(ts), dtype=float)
    try:
        v = np.asarray(f(ts))
        if v.dtype == object:
            v = None
    except (TypeError, ValueError, AttributeError):
        v = None
    if v is not None and v.shape == ts.shape:
        out = np.zeros(ts.shape + (4,))
        out[..., 0] = v
        return out
    if v is not None and v.shape == ts.shape + (4,):
        return v.astype(float)
    out = np.zeros(ts.shape + (4,))
    for i, t in enumerate(ts):
        fv = f(float(t))
        if isinstance(fv, Quaternion):
            out[i] = qarray.from_quaternion(fv)
        else:
            out[i, 0] = float(fv)
    return out


def _check_slice_degree(f, g, n: int) -> None:
    deg = 0
    for h in (f, g):
        d = getattr(h, "degree", None)
        if d is None:
            return
        deg += max(d, 0) + max(getattr(h, "level", 0), 0)
    if deg > 2 * n - 1:
        raise QuadratureDegreeError(
            f"slice rule with n={n} is exact only through degree {2 * n - 1}, "
            f"integrand has degree {deg}")


def inner_slice(f, g, Q: SliceQuadrature) -> Quaternion:
    """<f, g> over C_unit: integral of conj(f) g e^(-|q|^2) dA."""
    _check_slice_degree(f, g, Q.n)
    fv = values_on(f, Q.points)
    gv = values_on(g, Q.points)
    prod = qarray.qmul(qarray.qconj(fv), gv)
    return qarray.to_quaternion(prod.T @ Q.weights)


def norm_sq_slice(f, Q: SliceQuadrature) -> float:
    fv = values_on(f, Q.points)
    return float(qarray.norm_sq(fv) @ Q.weights)


def gram_slice(funcs, Q: SliceQuadrature) -> np.ndarray:
    """Pairwise slice inner products, returned as an (m, m, 4) array."""
    vals = [values_on(f, Q.points) for f in funcs]
    m = len(vals)
    out = np.empty((m, m, 4))
    for a in range(m):
        ca = qarray.qconj(vals[a])
        for b in range(m):
            out[a, b] = qarray.qmul(ca, vals[b]).T @ Q.weights
    return out


def inner_real(f, g, rule: Rule1D) -> Quaternion:
    """<f, g> on the line: integral of conj(f) g dt via Gauss-Hermite
    with weight compensation e^(t^2)."""
    comp = rule.weights * np.exp(rule.nodes ** 2)
    fv = line_values(f, rule.nodes)
    gv = line_values(g, rule.nodes)
    prod = qarray.qmul(qarray.qconj(fv), gv)
    return qarray.to_quaternion(prod.T @ comp)


def inner_full(f, g, n_slice: int = 40, sphere: SphereRule | None = None) -> Quaternion:
    """Sphere average of slice pairings: integral over I in S of <f,g>_{C_I}."""
    if sphere is None:
        sphere = sphere_rule()
    total = np.zeros(4)
    for unit, w in zip(sphere.units, sphere.weights):
        Q = SliceQuadrature(n_slice, unit)
        total += w * qarray.from_quaternion(inner_slice(f, g, Q))
    return qarray.to_quaternion(total)


def norm_sq_full(f, n_slice: int = 40, sphere: SphereRule | None = None) -> float:
    if sphere is None:
        sphere = sphere_rule()
    total = 0.0
    for unit, w in zip(sphere.units, sphere.weights):
        Q = SliceQuadrature(n_slice, unit)
        total += w * norm_sq_slice(f, Q)
    return total
