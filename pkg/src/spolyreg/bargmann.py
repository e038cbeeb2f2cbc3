"""Slice Segal-Bargmann kernels and transforms.

The level-k coherent state kernel

    B_{2,k}(t; q) = (1/pi)^(3/4) (2^k k!)^(-1/2)
                    exp(-(t^2 + qbar^2)/2 + sqrt(2) qbar t) H_k(sqrt(2) Re q - t)

lives in the slice of q for each real t.  The transform pairs it against
a line function on the Gauss-Hermite rule,

    [B_{2,k} phi](q) = <B_{2,k}(.; q), phi>_R,

and sends the Hermite function h_j to (1/pi)^(1/4) sqrt(2^j / k!) H_{j,k};
in particular it is a scaled isometry onto the level-k polyanalytic
space.  Conjugating the kernel flips qbar to q in the exponent, which is
the form the transform integrand uses.
"""
from __future__ import annotations

import math

import numpy as np

from . import qarray
from .poly import hermite_H, hermite_fn
from .quat import Quaternion, qexp, quat
from .quad import QuadratureDegreeError, Rule1D, gauss_hermite, line_values

__all__ = [
    "PREFACTOR",
    "HermiteLine",
    "SampledLine",
    "b2_kernel",
    "b1_kernel",
    "b2_conj_values",
    "b2_conj_grid",
    "transform",
    "transform_batch",
    "basis_image_scale",
    "b2_norm_closed",
    "isometry_grams",
]

PREFACTOR = (1.0 / math.pi) ** 0.75


class HermiteLine:
    """The Hermite function h_j as a line function; knows its degree."""

    def __init__(self, j: int):
        self.j = j
        self.degree = j

    def __call__(self, t):
        return hermite_fn(self.j, t)

    def __repr__(self):
        return f"HermiteLine({self.j})"


class SampledLine:
    """A line function given by samples on quadrature nodes."""

    def __init__(self, nodes, values, tol: float = 1e-10):
        self.nodes = np.asarray(nodes, dtype=float)
        values = np.asarray(values, dtype=float)
        if values.shape == self.nodes.shape:
            lifted = np.zeros(self.nodes.shape + (4,))
            lifted[:, 0] = values
            values = lifted
        if values.shape != self.nodes.shape + (4,):
            raise ValueError("samples must be real or quaternion quadruples per node")
        self.values = values
        self.tol = tol

    def eval_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        if ts.shape != self.nodes.shape or np.max(np.abs(ts - self.nodes)) > self.tol:
            raise ValueError("sample grid not aligned with quadrature nodes")
        return self.values


def _scale(k: int) -> float:
    return PREFACTOR / math.sqrt(2.0 ** k * math.factorial(k))


def b2_kernel(k: int, t: float, q: Quaternion) -> Quaternion:
    """B_{2,k}(t; q) at a single point."""
    q = quat(q)
    qc = q.conj()
    arg = (t * t + qc * qc) * (-0.5) + qc * (math.sqrt(2.0) * t)
    h = hermite_H(k, math.sqrt(2.0) * float(q.w) - t)
    return qexp(arg) * (float(h) * _scale(k))


def b1_kernel(n: int, t: float, q: Quaternion) -> Quaternion:
    """First-kind kernel: sum of the level kernels through n."""
    total = quat(0)
    for k in range(n + 1):
        total = total + b2_kernel(k, t, q)
    return total


def b2_conj_values(k: int, ts: np.ndarray, q: Quaternion) -> np.ndarray:
    """conj(B_{2,k}(t; q)) on a node array, shape (T, 4).

    Conjugation replaces qbar by q in the exponent: with q = x + U y the
    argument splits into the real part -(t^2+x^2-y^2)/2 + sqrt(2) x t and
    the U part y (sqrt(2) t - x)."""
    ts = np.asarray(ts, dtype=float)
    s = quat(q).to_slice()
    x, y = float(s.x), float(s.y)
    a = -(ts * ts + x * x - y * y) / 2.0 + math.sqrt(2.0) * x * ts
    b = y * (math.sqrt(2.0) * ts - x)
    mag = np.exp(a) * hermite_H(k, math.sqrt(2.0) * x - ts) * _scale(k)
    u = qarray.from_quaternion(s.unit)
    out = np.zeros(ts.shape + (4,))
    out[..., 0] = mag * np.cos(b)
    imag = mag * np.sin(b)
    for c in range(1, 4):
        out[..., c] = imag * u[c]
    return out


def b2_conj_grid(k: int, ts: np.ndarray, qpts: np.ndarray) -> np.ndarray:
    """conj(B_{2,k}(t; q)) for a batch of q, shape (N, T, 4)."""
    ts = np.asarray(ts, dtype=float)[None, :]
    qpts = np.asarray(qpts, dtype=float)
    x = qpts[:, 0:1]
    yvec = qpts[:, 1:4]
    y = np.linalg.norm(yvec, axis=1, keepdims=True)
    with np.errstate(invalid="ignore", divide="ignore"):
        unit = np.where(y > 0, yvec / np.where(y == 0, 1.0, y), 0.0)
    a = -(ts * ts + x * x - y * y) / 2.0 + math.sqrt(2.0) * x * ts
    b = y * (math.sqrt(2.0) * ts - x)
    mag = np.exp(a) * hermite_H(k, math.sqrt(2.0) * x - ts) * _scale(k)
    out = np.zeros((qpts.shape[0], ts.shape[1], 4))
    out[..., 0] = mag * np.cos(b)
    imag = mag * np.sin(b)
    out[..., 1:4] = imag[..., None] * unit[:, None, :]
    return out


DEFAULT_LINE_NODES = 80


def _line_rule(rule, k: int, phi) -> Rule1D:
    if rule is None:
        rule = gauss_hermite(DEFAULT_LINE_NODES)
    deg = getattr(phi, "degree", None)
    if deg is not None and rule.n < deg + k + 1:
        raise QuadratureDegreeError(
            f"line rule with n={rule.n} too small for Hermite degree {deg} "
            f"at kernel level {k}")
    return rule


def transform(k: int, phi, q: Quaternion, rule: Rule1D | None = None) -> Quaternion:
    """[B_{2,k} phi](q) = integral of conj(B_{2,k}(t; q)) phi(t) dt."""
    rule = _line_rule(rule, k, phi)
    comp = rule.weights * np.exp(rule.nodes ** 2)
    cv = b2_conj_values(k, rule.nodes, q)
    pv = line_values(phi, rule.nodes)
    prod = qarray.qmul(cv, pv)
    return qarray.to_quaternion(prod.T @ comp)


def transform_batch(k: int, phi, qpts: np.ndarray,
                    rule: Rule1D | None = None) -> np.ndarray:
    """Transform values on an (N, 4) batch of evaluation points."""
    rule = _line_rule(rule, k, phi)
    comp = rule.weights * np.exp(rule.nodes ** 2)
    cv = b2_conj_grid(k, rule.nodes, qpts)
    pv = line_values(phi, rule.nodes)
    prod = qarray.qmul(cv, pv[None, :, :])
    return np.tensordot(prod, comp, axes=([1], [0]))


def basis_image_scale(j: int, k: int) -> float:
    """[B_{2,k} h_j] = basis_image_scale(j,k) * H_{j,k}."""
    return (1.0 / math.pi) ** 0.25 * math.sqrt(2.0 ** j / math.factorial(k))


def b2_norm_closed(q: Quaternion) -> float:
    """Line norm of the coherent state, ||B_{2,k}(.; q)||_R = e^(|q|^2/2)/sqrt(pi);
    independent of the level k."""
    return math.exp(float(quat(q).norm_sq()) / 2.0) / math.sqrt(math.pi)


def isometry_grams(k: int, j_max: int, qquad, rule: Rule1D | None = None):
    """Gram matrix of the transformed Hermite basis under the slice
    pairing next to the Gram matrix of the basis itself on the line.

    Returns (gram_images, gram_line) as (J+1, J+1, 4) arrays; the scaled
    isometry makes them equal."""
    from .quad import gram_slice, inner_real

    if rule is None:
        rule = gauss_hermite(DEFAULT_LINE_NODES)

    class _Image:
        def __init__(self, j):
            self.j = j

        def eval_many(self, pts):
            return transform_batch(k, HermiteLine(self.j), pts, rule)

    images = [_Image(j) for j in range(j_max + 1)]
    gram_images = gram_slice(images, qquad)
    gram_line = np.empty((j_max + 1, j_max + 1, 4))
    for a in range(j_max + 1):
        for b in range(j_max + 1):
            gram_line[a, b] = qarray.from_quaternion(
                inner_real(HermiteLine(a), HermiteLine(b), rule))
    return gram_images, gram_line
