"""Vectorised quaternion arithmetic on ndarrays of shape (..., 4).

The quadrature and kernel layers evaluate series on thousands of grid
points; doing that through scalar Quaternion objects is two orders of
magnitude too slow, so batched values are held as float arrays with the
component order (w, x, y, z).
"""
from __future__ import annotations

import numpy as np

from .quat import Quaternion

__all__ = [
    "from_quaternion",
    "to_quaternion",
    "qmul",
    "qmul_scalar",
    "scalar_qmul",
    "qconj",
    "norm_sq",
    "qabs",
    "powers",
    "slice_points",
]


def from_quaternion(q: Quaternion) -> np.ndarray:
    return np.array([float(q.w), float(q.x), float(q.y), float(q.z)])


def to_quaternion(a) -> Quaternion:
    a = np.asarray(a, dtype=float)
    if a.shape != (4,):
        raise ValueError(f"expected shape (4,), got {a.shape}")
    return Quaternion(float(a[0]), float(a[1]), float(a[2]), float(a[3]))


def qmul(a, b) -> np.ndarray:
    """Hamilton product, broadcasting over leading axes."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    w1, x1, y1, z1 = np.moveaxis(a, -1, 0)
    w2, x2, y2, z2 = np.moveaxis(b, -1, 0)
    return np.stack([
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    ], axis=-1)


def qmul_scalar(a, q: Quaternion) -> np.ndarray:
    """Batch * constant quaternion (constant on the right)."""
    return qmul(a, from_quaternion(q))


def scalar_qmul(q: Quaternion, a) -> np.ndarray:
    """Constant quaternion * batch (constant on the left)."""
    return qmul(from_quaternion(q), a)


def qconj(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return a * np.array([1.0, -1.0, -1.0, -1.0])


def norm_sq(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return np.sum(a * a, axis=-1)


def qabs(a) -> np.ndarray:
    return np.sqrt(norm_sq(a))


def powers(a, n: int) -> np.ndarray:
    """Stack of a^0 .. a^n along a new leading axis."""
    a = np.asarray(a, dtype=float)
    out = np.empty((n + 1,) + a.shape)
    out[0] = 0.0
    out[0][..., 0] = 1.0
    for m in range(1, n + 1):
        out[m] = qmul(out[m - 1], a)
    return out


def slice_points(x, y, unit: Quaternion) -> np.ndarray:
    """Points x + unit*y of the slice plane C_unit, batched over x, y."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    u = from_quaternion(unit)
    out = np.zeros(np.broadcast(x, y).shape + (4,))
    out[..., 0] = x
    out[..., 1] = y * u[1]
    out[..., 2] = y * u[2]
    out[..., 3] = y * u[3]
    return out
