"""The eleven acceptance gates, one pass/fail line each.

Each criterion pins its tolerance and grid literally here, independent of
any configuration file, and prints a single summary line.  Run with
``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the lines even
when everything passes).
"""
import math
from fractions import Fraction
from functools import lru_cache

from spolyreg import (
    hermite_op,
    hermite_quat,
    hermite_series,
    kummer_M,
    laguerre,
    quat,
    run_suite,
    slice_monomial,
)


@lru_cache(maxsize=None)
def suite(name):
    return run_suite(name)


def report(num, name, ok, detail):
    print(f"criterion {num:02d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num} {name}: {detail}"


def test_criterion_01_hermite_slice_orthogonality():
    rep = suite("orthogonality")
    assert rep.parameters["index_max"] >= 8 and rep.parameters["slices"] >= 10
    ok = rep.max_residual <= 1e-9
    report(1, "slice orthogonality pi m! n!", ok,
           f"max_residual={rep.max_residual:.3e} tol=1e-09 cases={len(rep.cases)}")


def test_criterion_02_box_eigenrelation():
    rep = suite("eigen")
    assert rep.parameters["j_max"] >= 10 and rep.parameters["k_max"] >= 5
    exact = [c for c in rep.cases if c.inputs["mode"] == "exact"]
    fd = [c for c in rep.cases if c.inputs["mode"] == "fd"]
    assert len(fd) >= 50
    exact_res = max((c.residual for c in exact), default=1.0)
    fd_res = max((c.residual for c in fd), default=1.0)
    ok = exact_res == 0.0 and fd_res <= 1e-4
    report(2, "box eigenrelation exact + fd", ok,
           f"exact_residual={exact_res} fd_residual={fd_res:.3e} tol=1e-04")


def test_criterion_03_kernel_dual_path():
    rep = suite("kernel-dual")
    assert rep.parameters["level_max"] >= 4 and rep.parameters["pairs"] >= 25
    picked = [c for c in rep.cases
              if c.inputs["check"] in ("dual", "closed-2", "closed-1")]
    res = max(c.residual for c in picked)
    ok = res <= 1e-8
    report(3, "kernel series/star agreement", ok,
           f"max_residual={res:.3e} tol=1e-08 cases={len(picked)}")


def test_criterion_04_reproducing_property():
    rep = suite("reproduce")
    assert rep.parameters["degree_max"] >= 6 and rep.parameters["points"] >= 20
    ok = rep.max_residual <= 1e-7
    report(4, "reproducing property", ok,
           f"max_residual={rep.max_residual:.3e} tol=1e-07")


def test_criterion_05_kernel_diagonal():
    rep = suite("kernel-dual")
    picked = [c for c in rep.cases if c.inputs["check"].startswith("diagonal")]
    assert picked
    res = max(c.residual for c in picked)
    ok = res <= 1e-8
    report(5, "kernel diagonal e^{|q|^2}/pi", ok,
           f"max_residual={res:.3e} tol=1e-08 cases={len(picked)}")


def test_criterion_06_transform_basis_mapping():
    rep = suite("transform-basis")
    assert rep.parameters["j_max"] >= 6 and rep.parameters["k_max"] >= 6
    assert rep.parameters["points"] >= 20
    ok = rep.max_residual <= 1e-8
    report(6, "transform maps hermite basis", ok,
           f"max_residual={rep.max_residual:.3e} tol=1e-08")


def test_criterion_07_transform_norm_and_isometry():
    rep = suite("isometry")
    assert rep.parameters["k_max"] >= 6
    norm = max(c.residual for c in rep.cases if c.inputs["part"] == "norm")
    gram = max(c.residual for c in rep.cases if c.inputs["part"] == "gram")
    ok = norm <= 1e-8 and gram <= 1e-9
    report(7, "coherent norm + isometry gram", ok,
           f"norm_residual={norm:.3e} tol=1e-08, gram_residual={gram:.3e} tol=1e-09")


def test_criterion_08_spectral_norms_and_probe():
    reps = suite("norms")
    assert reps.parameters["n_max"] >= 3 and reps.parameters["j_max"] >= 4
    probe = suite("spectrum")
    assert len(probe.parameters["non_integers"]) >= 5
    flags_ok = probe.max_residual == 0.0
    ok = reps.max_residual <= 1e-8 and flags_ok
    report(8, "psi norms + spectrum probe flags", ok,
           f"norm_residual={reps.max_residual:.3e} tol=1e-08, "
           f"probe_misflags={sum(c.residual > 0 for c in probe.cases)}")


def test_criterion_09_finite_rank_decomposition():
    rep = suite("decomposition")
    assert rep.parameters["degree"] >= 6 and rep.parameters["level_max"] >= 3
    ok = rep.max_residual <= 1e-7
    report(9, "projection decomposition", ok,
           f"max_residual={rep.max_residual:.3e} tol=1e-07")


def test_criterion_10_star_product_identities():
    rep = suite("star-identities")
    exact = [c for c in rep.cases if c.inputs["check"].endswith("-exact")]
    floats = [c for c in rep.cases if c.inputs["check"].endswith("-float")]
    assert exact and floats
    exact_res = max(c.residual for c in exact)
    float_res = max(c.residual for c in floats)
    ok = exact_res == 0.0 and float_res <= 1e-12
    report(10, "star identities", ok,
           f"exact_residual={exact_res} float_residual={float_res:.3e} tol=1e-12")


def test_criterion_11_recorded_oracle_identities():
    U = quat(0, Fraction(3, 5), Fraction(4, 5), 0)
    failures = 0
    # diagonal collapse to Laguerre, exact
    for k in range(7):
        q = quat(Fraction(1, 2)) + U * Fraction(3, 2)
        want = quat((-1) ** k * math.factorial(k) * laguerre(k, 0, Fraction(q.norm_sq())))
        failures += hermite_quat(k, k, q) != want
    # ladder sign on monomials, exact
    for m in range(7):
        for n in range(5):
            image = hermite_op(slice_monomial(m), n)
            failures += not image.allclose(
                hermite_series(m, n).scale(quat((-1) ** n)), tol=0)
    # Kummer-Laguerre index placement, exact
    for n in range(6):
        for j in range(5):
            scale = Fraction(math.factorial(n) * math.factorial(j),
                             math.factorial(n + j))
            for t in (Fraction(1, 3), Fraction(7, 2)):
                failures += kummer_M(-n, j + 1, t) != scale * laguerre(n, j, t)
    ok = failures == 0
    report(11, "recorded oracle identities", ok, f"exact_failures={failures}")
