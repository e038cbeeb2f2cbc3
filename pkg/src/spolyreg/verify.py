"""Identity-verification suites.

Every suite checks one structural fact of the theory at desk scale and
returns a VerificationReport: orthogonality of the Hermite family,
eigenrelations of the slice operator, agreement of the two kernel
construction paths, the reproducing property, the Bargmann basis map and
isometry, closed-form eigenfunction norms, the level decomposition, the
star-product calculus, and the integer character of the L2 spectrum.

Default grids are the acceptance grids; keyword arguments shrink or
stretch them.  Residual conventions are stated per suite; random draws
are seeded from the configuration so runs are reproducible.
"""
from __future__ import annotations

import math
import time
from fractions import Fraction

import numpy as np

from . import qarray
from .bargmann import (HermiteLine, b2_kernel, b2_norm_closed,
                       basis_image_scale, isometry_grams, transform)
from .config import Config
from .kernels import (k1_closed_slice, k1_series, k2_closed_slice, k2_series,
                      k2_star, project)
from .poly import hermite_quat, laguerre
from .quad import SliceQuadrature, gauss_hermite, gram_slice, norm_sq_full, sphere_rule
from .quat import Quaternion, qexp, quat, random_quaternion, random_unit
from .report import VerificationReport
from .series import (PolySliceSeries, SliceSeries, exp_star, hermite_series,
                     laguerre_star, s_k_series)
from .spectral import (SpectralConfig, box_fd, box_symbolic, psi_batch,
                       psi_norm_sq, spectrum_probe)

__all__ = ["SUITES", "SUITE_ORDER", "run_suite", "run_all"]


def _cfg(config: Config | None) -> Config:
    return config if config is not None else Config()


def _rng(config: Config, salt: int):
    return np.random.default_rng([config.seed, salt])


def _bounded(rng, radius: float) -> Quaternion:
    """Random quaternion with |q| <= radius (rescaled tail)."""
    q = random_quaternion(rng, radius / 2.0)
    r = abs(q)
    if r > radius:
        q = q * (radius / r)
    return q


def _nonreal(rng, radius: float, min_imag: float) -> Quaternion:
    while True:
        q = _bounded(rng, radius)
        if q.imag_norm() > min_imag:
            return q


def _qdiff(a: Quaternion, b: Quaternion) -> float:
    return abs(a - b)


# -- 1. orthogonality ----------------------------------------------------


def verify_orthogonality(config: Config | None = None,
                         index_max: int = 8) -> VerificationReport:
    """Normalised slice Gram matrix of {H_{j,k} : j,k <= index_max} vs
    the identity on 10 random slices; residual is the worst entry."""
    config = _cfg(config)
    t0 = time.perf_counter()
    n_slices = 10
    rep = VerificationReport("orthogonality", config.tolerance("orthogonality"),
                             {"index_max": index_max, "slices": n_slices,
                              "nodes": config.slice_nodes, "seed": config.seed})
    idx = [(j, k) for j in range(index_max + 1) for k in range(index_max + 1)]
    basis = [hermite_series(j, k) for j, k in idx]
    scale = np.array([math.sqrt(math.pi * math.factorial(j) * math.factorial(k))
                      for j, k in idx])
    rng = _rng(config, 1)
    eye = np.eye(len(idx))
    for _ in range(n_slices):
        unit = random_unit(rng)
        Q = SliceQuadrature(config.slice_nodes, unit)
        G = gram_slice(basis, Q) / (scale[:, None, None] * scale[None, :, None])
        dev = np.sqrt(np.maximum(
            np.sum(G * G, axis=2) - 2.0 * eye * G[:, :, 0] + eye, 0.0))
        worst = int(np.argmax(dev))
        a, b = divmod(worst, len(idx))
        rep.add({"slice": unit, "pair": [idx[a], idx[b]]},
                "identity matrix", [float(c) for c in G[a, b]], float(dev[a, b]))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 2. eigenrelation ----------------------------------------------------


def verify_eigen(config: Config | None = None, j_max: int = 10,
                 k_max: int = 5, fd_degree: int = 6) -> VerificationReport:
    """box H_{j,k} = k H_{j,k}: exact coefficients on the full grid, then
    finite differences at 50 random non-real points on polynomials of
    total degree <= fd_degree (what the stencil resolves below 1e-4)."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("eigen", config.tolerance("eigen"),
                             {"j_max": j_max, "k_max": k_max, "fd_points": 50,
                              "fd_degree": fd_degree, "fd_step": config.fd_step,
                              "fd_order": config.fd_order, "seed": config.seed})
    for j in range(j_max + 1):
        for k in range(k_max + 1):
            H = hermite_series(j, k)
            lhs = box_symbolic(H)
            rhs = H.scale(k)
            resid = 0.0 if lhs == rhs else max(
                _qdiff(lhs.coeff(a, b), rhs.coeff(a, b))
                for a in range(max(lhs.level, rhs.level) + 1)
                for b in range(max(lhs.degree, rhs.degree) + 1))
            rep.add({"j": j, "k": k, "mode": "exact"}, "k*H", "box(H)", resid)

    rng = _rng(config, 2)
    scfg = SpectralConfig(h=config.fd_step, order=config.fd_order)
    cap = min(fd_degree, j_max)
    pairs = [(j, k) for j in range(cap + 1)
             for k in range(min(cap - j, k_max) + 1)]
    for _ in range(50):
        j, k = pairs[rng.integers(len(pairs))]
        H = hermite_series(j, k)
        q = _nonreal(rng, 1.5, 0.05)
        got = box_fd(H, q, scfg)
        want = H(q) * k
        rep.add({"j": j, "k": k, "q": q, "mode": "fd"}, want, got, _qdiff(got, want))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 3 + 5. kernel dual path and diagonal --------------------------------


def verify_kernel_dual(config: Config | None = None,
                       level_max: int = 4) -> VerificationReport:
    """Series vs star kernel on random pairs, the same-slice Laguerre
    closed form, and the exponential diagonal (relative residual)."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("kernel-dual", config.tolerance("kernel-dual"),
                             {"level_max": level_max, "pairs": 25, "radius": 1.5,
                              "series_terms": config.series_terms,
                              "star_terms": config.star_terms, "seed": config.seed})
    rng = _rng(config, 3)
    for _ in range(25):
        p = _bounded(rng, 1.5)
        q = _bounded(rng, 1.5)
        for k in range(level_max + 1):
            a = k2_series(k, p, q, config.series_terms)
            b = k2_star(k, p, q, config.star_terms)
            rep.add({"p": p, "q": q, "k": k, "check": "dual"}, a, b, _qdiff(a, b))
    for _ in range(25):
        unit = random_unit(rng)
        p = quat(rng.normal()) + unit * rng.normal()
        q = quat(rng.normal()) + unit * rng.normal()
        k = int(rng.integers(level_max + 1))
        a = k2_series(k, p, q, config.series_terms)
        b = k2_closed_slice(k, p, q)
        rep.add({"p": p, "q": q, "k": k, "check": "closed-2"}, b, a, _qdiff(a, b))
        a1 = k1_series(k, p, q, config.series_terms)
        b1 = k1_closed_slice(k, p, q)
        rep.add({"p": p, "q": q, "n": k, "check": "closed-1"}, b1, a1, _qdiff(a1, b1))
    for _ in range(4):
        q = _bounded(rng, 2.0)
        base = math.exp(float(q.norm_sq())) / math.pi
        for k in range(level_max + 1):
            d2 = k2_series(k, q, q, config.series_terms)
            rep.add({"q": q, "k": k, "check": "diagonal-2"}, base, d2,
                    _qdiff(d2, quat(base)) / base)
            d1 = k1_series(k, q, q, config.series_terms)
            rep.add({"q": q, "n": k, "check": "diagonal-1"}, (k + 1) * base, d1,
                    _qdiff(d1, quat((k + 1) * base)) / ((k + 1) * base))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 4. reproducing property ---------------------------------------------


def verify_reproduce(config: Config | None = None, level_max: int = 3,
                     degree_max: int = 6) -> VerificationReport:
    """<K_{2,k}(p,.), f> recovers f(p) for random members of the
    degree-bounded Hermite span at each level k."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("reproduce", config.tolerance("reproduce"),
                             {"level_max": level_max, "degree_max": degree_max,
                              "points": 5 * (level_max + 1),
                              "nodes": config.slice_nodes, "seed": config.seed})
    rng = _rng(config, 4)
    for k in range(level_max + 1):
        f = hermite_series(0, k).rmul(random_quaternion(rng))
        for j in range(1, degree_max + 1):
            f = f + hermite_series(j, k).rmul(random_quaternion(rng))
        Q = SliceQuadrature(config.slice_nodes, random_unit(rng))
        for _ in range(5):
            p = _bounded(rng, 1.5)
            got = project(k, f, p, Q, config.series_terms)
            want = f(p)
            rep.add({"k": k, "p": p}, want, got, _qdiff(got, want))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 6. Bargmann basis mapping -------------------------------------------


def verify_transform_basis(config: Config | None = None, j_max: int = 6,
                           k_max: int = 6) -> VerificationReport:
    """B_{2,k} sends the Hermite function h_j to
    (1/pi)^(1/4) sqrt(2^j/k!) H_{j,k}; worst of 20 random q per (j,k)."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("transform-basis", config.tolerance("transform-basis"),
                             {"j_max": j_max, "k_max": k_max, "points": 20,
                              "line_nodes": config.line_nodes, "seed": config.seed})
    rng = _rng(config, 6)
    rule = gauss_hermite(config.line_nodes)
    for j in range(j_max + 1):
        for k in range(k_max + 1):
            scale = basis_image_scale(j, k)
            phi = HermiteLine(j)
            worst, worst_q = -1.0, None
            for _ in range(20):
                q = _bounded(rng, 1.5)
                got = transform(k, phi, q, rule)
                want = hermite_quat(j, k, q) * scale
                r = _qdiff(got, want)
                if r > worst:
                    worst, worst_q = r, q
            rep.add({"j": j, "k": k, "worst_q": worst_q},
                    "scale * H_{j,k}(q)", "B_{2,k} h_j (q)", worst)
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 7. isometry ---------------------------------------------------------


def verify_isometry(config: Config | None = None, k_max: int = 6,
                    j_max: int = 6) -> VerificationReport:
    """Coherent-state line norms against e^(|q|^2/2)/sqrt(pi) (relative,
    part 'norm') and transformed-basis Gram against the line Gram
    (normalised, part 'gram')."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("isometry", config.tolerance("isometry"),
                             {"k_max": k_max, "j_max": j_max, "points": 20,
                              "line_nodes": config.line_nodes,
                              "nodes": config.slice_nodes, "seed": config.seed})
    rng = _rng(config, 7)
    rule = gauss_hermite(config.line_nodes)
    comp = rule.weights * np.exp(rule.nodes ** 2)
    for k in range(k_max + 1):
        worst, worst_q = -1.0, None
        for _ in range(20):
            q = _bounded(rng, 2.0)
            vals = np.array([qarray.from_quaternion(b2_kernel(k, float(t), q))
                             for t in rule.nodes])
            num = math.sqrt(float(np.sum(vals * vals, axis=1) @ comp))
            want = b2_norm_closed(q)
            r = abs(num - want) / want
            if r > worst:
                worst, worst_q = r, q
        rep.add({"k": k, "worst_q": worst_q, "part": "norm"},
                "exp(|q|^2/2)/sqrt(pi)", "line norm of B_{2,k}(.; q)", worst)
    m = j_max + 1
    for k in range(k_max + 1):
        Q = SliceQuadrature(config.slice_nodes, random_unit(rng))
        g_img, g_line = isometry_grams(k, j_max, Q, rule)
        diag = g_line[np.arange(m), np.arange(m), 0]
        scale = np.sqrt(diag[:, None] * diag[None, :])
        dev = np.sqrt(np.sum((g_img - g_line) ** 2, axis=2)) / scale
        a, b = divmod(int(np.argmax(dev)), m)
        rep.add({"k": k, "pair": [a, b], "part": "gram"},
                [float(c) for c in g_line[a, b]],
                [float(c) for c in g_img[a, b]], float(dev[a, b]))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 8a. eigenfunction norms ---------------------------------------------


class _Psi:
    """psi_{n,j} wrapped for batch quadrature evaluation."""

    def __init__(self, n: int, j: int):
        self.n, self.j = n, j

    def eval_many(self, pts):
        return psi_batch(self.n, self.j, pts)


def verify_norms(config: Config | None = None, n_max: int = 3,
                 j_max: int = 4) -> VerificationReport:
    """Full-space quadrature norms of psi_{n,j} against
    4 pi^2 n!(j!)^2/(n+j)!  (relative residual)."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("norms", config.tolerance("norms"),
                             {"n_max": n_max, "j_max": j_max,
                              "nodes": config.slice_nodes,
                              "sphere_order": config.sphere_order})
    sphere = sphere_rule(config.sphere_order)
    for n in range(n_max + 1):
        for j in range(j_max + 1):
            want = psi_norm_sq(n, j)
            got = norm_sq_full(_Psi(n, j), config.slice_nodes, sphere)
            rep.add({"n": n, "j": j}, want, got, abs(got - want) / want)
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 8b. spectrum probe --------------------------------------------------


def verify_spectrum(config: Config | None = None) -> VerificationReport:
    """Radial mass probe: integer eigenvalue candidates must converge,
    non-integer ones must diverge; residual 0 when the flag matches."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("spectrum", config.tolerance("spectrum"),
                             {"integers": [0, 1, 2, 3],
                              "non_integers": [0.5, 1.5, 2.5, 3.141592653589793, 3.7]})
    for mu in (0.0, 1.0, 2.0, 3.0):
        pr = spectrum_probe(mu, 0)
        rep.add({"mu": mu, "j": 0}, True, pr.converged,
                0.0 if pr.converged else 1.0)
    for mu in (0.5, 1.5, 2.5, math.pi, 3.7):
        pr = spectrum_probe(mu, 0)
        rep.add({"mu": mu, "j": 0}, False, pr.converged,
                0.0 if not pr.converged else 1.0)
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 9. level decomposition ----------------------------------------------


def verify_decomposition(config: Config | None = None, level_max: int = 3,
                         degree: int = 6) -> VerificationReport:
    """Sum of the kernel projections P_k, k <= m, applied through slice
    quadrature reassembles a random bidegree-(degree, m) polynomial."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("decomposition", config.tolerance("decomposition"),
                             {"degree": degree, "level_max": level_max,
                              "points": 5 * (level_max + 1),
                              "nodes": config.slice_nodes, "seed": config.seed})
    rng = _rng(config, 9)
    for m in range(level_max + 1):
        f = PolySliceSeries(tuple(
            tuple(random_quaternion(rng) for _ in range(degree + 1))
            for _ in range(m + 1)))
        Q = SliceQuadrature(config.slice_nodes, random_unit(rng))
        for _ in range(5):
            p = _bounded(rng, 1.5)
            total = quat(0)
            for k in range(m + 1):
                total = total + project(k, f, p, Q, config.series_terms)
            want = f(p)
            rep.add({"m": m, "p": p}, want, total, _qdiff(total, want))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- 10. star-product identities -----------------------------------------


def _fr(w, x=0, y=0, z=0) -> Quaternion:
    return Quaternion(Fraction(w), Fraction(x), Fraction(y), Fraction(z))


def verify_star_identities(config: Config | None = None) -> VerificationReport:
    """Star-product calculus: conjugation swaps left and right products,
    common-slice coefficients commute, the S_2 display expands as stated,
    and the star Laguerre and exponential collapse to their classical
    values on a common slice.  Exact cases score 0/1; floating cases
    score their max deviation."""
    config = _cfg(config)
    t0 = time.perf_counter()
    rep = VerificationReport("star-identities", config.tolerance("star-identities"),
                             {"seed": config.seed})
    rng = _rng(config, 10)

    # exact: conj(f * g) = conj(g) *R conj(f) with rational coefficients
    f = PolySliceSeries(((_fr(1, 2, -1, 0), _fr(0, 1, 0, 3)),
                         (_fr(2, 0, 0, -1), _fr(-1, 1, 1, 1))))
    g = PolySliceSeries(((_fr(0, 0, 2, 1),),
                         (_fr(3, -2, 0, 0),),
                         (_fr(1, 1, 1, 0),)))
    lhs = f.star(g).conj()
    rhs = g.conj().star(f.conj())
    rep.add({"check": "conj-swap-exact"}, "conj(g) *R conj(f)",
            "conj(f *L g)", 0.0 if lhs == rhs else 1.0)

    # exact: common-slice coefficients commute (slice and poly products);
    # the slice is C_U for the rational unit U = (3i + 4j)/5
    U = Quaternion(0, Fraction(3, 5), Fraction(4, 5), 0)
    one = _fr(1)

    def in_slice(a, b):
        return one * a + U * b

    s1 = SliceSeries((in_slice(1, 2), in_slice(Fraction(1, 2), -1), in_slice(0, 3)))
    s2 = SliceSeries((in_slice(-2, 1), in_slice(3, Fraction(2, 3))))
    rep.add({"check": "commute-slice-exact"}, "g * f", "f * g",
            0.0 if s1.star(s2) == s2.star(s1) else 1.0)
    p1 = PolySliceSeries(((in_slice(1, 1), in_slice(0, 2)),
                          (in_slice(2, -1), in_slice(1, 0))))
    p2 = PolySliceSeries(((in_slice(0, 1),), (in_slice(Fraction(3, 7), 2),)))
    rep.add({"check": "commute-poly-exact"}, "g * f", "f * g",
            0.0 if p1.star(p2) == p2.star(p1) else 1.0)

    # exact: S_2 against its expanded display
    qq = one + U * 2
    qb = qq.conj()
    h2 = SliceSeries((-qq, one)).star(SliceSeries((-qq, one)))
    expected = PolySliceSeries((
        tuple(c * (qb * qb) for c in (h2.coeff(0), h2.coeff(1), h2.coeff(2))),
        tuple(c * (qb * -2) for c in (h2.coeff(0), h2.coeff(1), h2.coeff(2))),
        (h2.coeff(0), h2.coeff(1), h2.coeff(2)),
    ))
    rep.add({"check": "s2-display-exact", "q": qq}, "expanded S_2",
            "s_k_series(2, q)", 0.0 if s_k_series(2, qq) == expected else 1.0)

    # exact: same-slice star Laguerre reduction at rational points
    pp = _fr(2) + U
    got = laguerre_star(2, 0, qq).eval_left(pp)
    want = quat(laguerre(2, 0, Fraction(2)))  # |p - q|^2 = 2 exactly
    rep.add({"check": "laguerre-slice-exact", "p": pp, "q": qq},
            want, got, 0.0 if got == want else 1.0)

    # floating: conjugation swap and slice reductions at random points
    def rnd_poly(rows, cols):
        return PolySliceSeries(tuple(
            tuple(random_quaternion(rng) for _ in range(cols))
            for _ in range(rows)))

    ff, gg = rnd_poly(3, 3), rnd_poly(2, 4)
    a = ff.star(gg).conj()
    b = gg.conj().star(ff.conj())
    dev = max(_qdiff(a.coeff(k, j), b.coeff(k, j))
              for k in range(a.level + 1) for j in range(a.degree + 1))
    rep.add({"check": "conj-swap-float"}, 0.0, dev, dev)

    for n, gamma in ((1, 0), (3, 0), (4, 1), (2, 2)):
        unit = random_unit(rng)
        p = quat(rng.normal()) + unit * rng.normal()
        q = quat(rng.normal()) + unit * rng.normal()
        got = laguerre_star(n, gamma, q).eval_left(p)
        want = quat(laguerre(n, gamma, float((p - q).norm_sq())))
        rep.add({"check": "laguerre-slice-float", "n": n, "gamma": gamma},
                want, got, _qdiff(got, want))
        eg = exp_star(q, config.star_terms).eval_left(p)
        ew = qexp(p.conj() * q)
        rep.add({"check": "exp-slice-float"}, ew, eg, _qdiff(eg, ew))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- registry ------------------------------------------------------------

SUITES = {
    "orthogonality": verify_orthogonality,
    "eigen": verify_eigen,
    "kernel-dual": verify_kernel_dual,
    "reproduce": verify_reproduce,
    "transform-basis": verify_transform_basis,
    "isometry": verify_isometry,
    "norms": verify_norms,
    "spectrum": verify_spectrum,
    "decomposition": verify_decomposition,
    "star-identities": verify_star_identities,
}

SUITE_ORDER = list(SUITES)


def run_suite(name: str, config: Config | None = None,
              **grid) -> VerificationReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_ORDER}") from None
    return fn(config, **grid)


def run_all(config: Config | None = None) -> list[VerificationReport]:
    return [fn(config) for fn in SUITES.values()]
