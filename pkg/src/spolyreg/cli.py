"""Command-line front end; every subcommand is a thin shell over the
library.

Subcommands:
  eval            point values: hermite-q | kernel | bargmann-kernel | psi
  verify          run an identity suite and print its JSON report
  transform       apply the level-k Segal-Bargmann transform
  table           closed-form vs quadrature tables
  spectrum-probe  radial mass probe of an eigenvalue candidate

Quaternion literals follow the grammar w+xi+yj+zk with optional terms:
"1", "-i", "2.5j", "1-2i+3k".  Point files are headerless CSV, one
w,x,y,z quadruple per row; sample files for `transform` hold t,value
rows on the quadrature nodes.

Output schemas (stable, golden-tested):
  eval hermite-q / psi / bargmann-kernel   one w,x,y,z row per point
  eval kernel      pw,px,py,pz,qw,qx,qy,qz,w,x,y,z,method,tail
  transform        qw,qx,qy,qz,w,x,y,z
  table norms         header then n,j,closed,quadrature,residual
  table hermite-gram  header then m,n,closed,quadrature,residual
  table laguerre-sum  header then x,sum_L0,L1_closed,residual
  verify, spectrum-probe   JSON documents carrying "schema": 1

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from .bargmann import HermiteLine, SampledLine, b1_kernel, b2_kernel, transform
from .config import Config, load_config
from .kernels import (KernelSpec, kernel_value, series_tail_bound,
                      star_tail_bound)
from .poly import KummerConvergenceError, hermite_quat, laguerre
from .quad import SliceQuadrature, gauss_hermite, norm_sq_slice, sphere_rule
from .quad import norm_sq_full
from .quat import Quaternion, parse_quaternion, quat
from .series import hermite_series
from .spectral import psi, psi_batch, psi_norm_sq, spectrum_probe
from .verify import SUITE_ORDER, run_all, run_suite

__all__ = ["main", "build_parser"]

_SLICE_UNITS = {"i": quat(0, 1, 0, 0), "j": quat(0, 0, 1, 0), "k": quat(0, 0, 0, 1)}


def _fmt(x) -> str:
    return repr(float(x))


def _quad_row(q: Quaternion) -> str:
    return ",".join(_fmt(c) for c in q.as_tuple())


def _read_points(path: str) -> list[Quaternion]:
    pts = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 4:
                raise ValueError(
                    f"{path}:{lineno}: expected 4 columns w,x,y,z, got {len(row)}")
            try:
                pts.append(Quaternion(*(float(c) for c in row)))
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: non-numeric component in {row!r}") from None
    return pts


def _read_samples(path: str):
    ts, vs = [], []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise ValueError(
                    f"{path}:{lineno}: expected 2 columns t,value, got {len(row)}")
            try:
                ts.append(float(row[0]))
                vs.append(float(row[1]))
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: non-numeric entry in {row!r}") from None
    return np.array(ts), np.array(vs)


def _target_points(args) -> list[Quaternion]:
    if getattr(args, "points", None):
        return _read_points(args.points)
    if getattr(args, "q", None) is None:
        raise ValueError("need --q or --points")
    return [parse_quaternion(args.q)]


# -- eval ----------------------------------------------------------------


def _kernel_tail(kind: str, level: int, method: str, p, q, terms: int) -> float:
    bound = series_tail_bound if method == "series" else star_tail_bound
    levels = range(level + 1) if kind == "first" else (level,)
    return sum(bound(kappa, p, q, terms) for kappa in levels)


def cmd_eval(args, config: Config) -> int:
    pts = _target_points(args)
    if args.target == "hermite-q":
        for q in pts:
            print(_quad_row(quat(hermite_quat(args.m, args.n, q, config.degree_cap))))
    elif args.target == "psi":
        mu = parse_quaternion(args.mu)
        for q in pts:
            print(_quad_row(quat(psi(mu, args.j, q))))
    elif args.target == "bargmann-kernel":
        fn = b2_kernel if args.kind == 2 else b1_kernel
        for q in pts:
            print(_quad_row(quat(fn(args.level, args.t, q))))
    else:  # kernel
        kind = "second" if args.kind == 2 else "first"
        method = args.method
        used = args.terms
        if used is None:
            used = config.series_terms if method == "series" else config.star_terms
        spec = KernelSpec(kind=kind, level=args.level, method=method,
                          **{"series_terms" if method == "series" else "star_terms":
                             used})
        p = parse_quaternion(args.p)
        for q in pts:
            v = kernel_value(spec, p, q)
            tail = _kernel_tail(kind, args.level, method, p, q, used)
            print(f"{_quad_row(p)},{_quad_row(q)},{_quad_row(v)},{method},{_fmt(tail)}")
    return 0


# -- verify --------------------------------------------------------------

_MAX_DEGREE_KW = {
    "orthogonality": "index_max",
    "eigen": "j_max",
    "reproduce": "degree_max",
    "transform-basis": "j_max",
    "isometry": "j_max",
    "norms": "j_max",
    "decomposition": "degree",
}
_LEVELS_KW = {
    "eigen": "k_max",
    "kernel-dual": "level_max",
    "reproduce": "level_max",
    "transform-basis": "k_max",
    "isometry": "k_max",
    "norms": "n_max",
    "decomposition": "level_max",
}


def cmd_verify(args, config: Config) -> int:
    grid = {}
    for flag, value, table in (("--max-degree", args.max_degree, _MAX_DEGREE_KW),
                               ("--levels", args.levels, _LEVELS_KW)):
        if value is None:
            continue
        if args.suite not in table:
            raise ValueError(f"suite {args.suite!r} does not take {flag}")
        grid[table[args.suite]] = value
    if args.suite == "all":
        reports = run_all(config)
        doc = {
            "schema": 1,
            "suites": [r.to_dict() for r in reports],
            "passed": all(r.passed for r in reports),
            "max_residual": max(r.max_residual for r in reports),
        }
        print(json.dumps(doc, indent=2))
        return 0 if doc["passed"] else 1
    rep = run_suite(args.suite, config, **grid)
    print(rep.to_json())
    return 0 if rep.passed else 1


# -- transform -----------------------------------------------------------


def cmd_transform(args, config: Config) -> int:
    rule = gauss_hermite(config.line_nodes)
    if args.phi.startswith("h:"):
        try:
            j = int(args.phi[2:])
        except ValueError:
            raise ValueError(
                f"bad basis spec {args.phi!r}; expected h:<j> with integer j") from None
        if j < 0 or j > config.degree_cap:
            raise ValueError(f"basis index {j} outside [0, {config.degree_cap}]")
        phi = HermiteLine(j)
    else:
        ts, vs = _read_samples(args.phi)
        phi = SampledLine(ts, vs)
    if args.points:
        pts = _read_points(args.points)
    else:
        pts = [parse_quaternion(args.q)]
    for q in pts:
        v = transform(args.level, phi, q, rule)
        print(f"{_quad_row(q)},{_quad_row(v)}")
    return 0


# -- table ---------------------------------------------------------------


class _PsiFn:
    def __init__(self, n: int, j: int):
        self.n, self.j = n, j

    def eval_many(self, pts):
        return psi_batch(self.n, self.j, pts)


def cmd_table(args, config: Config) -> int:
    if args.table == "norms":
        print("n,j,closed,quadrature,residual")
        sphere = sphere_rule(config.sphere_order)
        for j in range(args.jmax + 1):
            closed = psi_norm_sq(args.n, j)
            num = norm_sq_full(_PsiFn(args.n, j), config.slice_nodes, sphere)
            print(f"{args.n},{j},{_fmt(closed)},{_fmt(num)},"
                  f"{_fmt(abs(num - closed) / closed)}")
    elif args.table == "hermite-gram":
        print("m,n,closed,quadrature,residual")
        unit = _SLICE_UNITS[config.default_slice]
        Q = SliceQuadrature(config.slice_nodes, unit)
        for m in range(args.max + 1):
            for n in range(args.max + 1):
                closed = math.pi * math.factorial(m) * math.factorial(n)
                num = norm_sq_slice(hermite_series(m, n), Q)
                print(f"{m},{n},{_fmt(closed)},{_fmt(num)},"
                      f"{_fmt(abs(num - closed) / closed)}")
    else:  # laguerre-sum
        print("x,sum_L0,L1_closed,residual")
        for i in range(1, 11):
            x = 0.5 * i
            lhs = sum(laguerre(k, 0, x) for k in range(args.n + 1))
            rhs = laguerre(args.n, 1, x)
            print(f"{_fmt(x)},{_fmt(lhs)},{_fmt(rhs)},{_fmt(abs(lhs - rhs))}")
    return 0


# -- spectrum probe ------------------------------------------------------


def cmd_spectrum_probe(args, config: Config) -> int:
    mu = parse_quaternion(args.mu)
    pr = spectrum_probe(mu, args.j, args.rmax, args.windows)
    print(json.dumps(pr.to_dict(), indent=2))
    return 0


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help="JSON config file (else $SPOLYREG_CONFIG, else defaults)")

    parser = argparse.ArgumentParser(
        prog="spolyreg",
        description="Quaternionic polyanalytic Bargmann analysis toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", parents=[common],
                        help="evaluate Hermite polynomials, kernels, eigenfunctions")
    se = pe.add_subparsers(dest="target", required=True)

    eh = se.add_parser("hermite-q", parents=[common])
    eh.add_argument("--m", type=int, required=True)
    eh.add_argument("--n", type=int, required=True)
    eh.add_argument("--q", help="quaternion literal")
    eh.add_argument("--points", help="CSV file of w,x,y,z rows")
    eh.set_defaults(func=cmd_eval)

    ek = se.add_parser("kernel", parents=[common])
    ek.add_argument("--kind", type=int, choices=(1, 2), default=2)
    ek.add_argument("--level", type=int, required=True)
    ek.add_argument("--method", choices=("series", "star"), default="series")
    ek.add_argument("--terms", type=int)
    ek.add_argument("--p", required=True, help="quaternion literal")
    ek.add_argument("--q", help="quaternion literal")
    ek.add_argument("--points", help="CSV file of q points")
    ek.set_defaults(func=cmd_eval)

    eb = se.add_parser("bargmann-kernel", parents=[common])
    eb.add_argument("--kind", type=int, choices=(1, 2), default=2)
    eb.add_argument("--level", type=int, required=True)
    eb.add_argument("--t", type=float, required=True)
    eb.add_argument("--q", help="quaternion literal")
    eb.add_argument("--points", help="CSV file of w,x,y,z rows")
    eb.set_defaults(func=cmd_eval)

    ep = se.add_parser("psi", parents=[common])
    ep.add_argument("--mu", required=True, help="eigenvalue (quaternion literal)")
    ep.add_argument("--j", type=int, required=True)
    ep.add_argument("--q", help="quaternion literal")
    ep.add_argument("--points", help="CSV file of w,x,y,z rows")
    ep.set_defaults(func=cmd_eval)

    pv = sub.add_parser("verify", parents=[common],
                        help="run an identity suite, print a JSON report")
    pv.add_argument("--suite", required=True, choices=SUITE_ORDER + ["all"])
    pv.add_argument("--max-degree", type=int, dest="max_degree")
    pv.add_argument("--levels", type=int)
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("transform", parents=[common],
                        help="apply the level-k Bargmann transform")
    pt.add_argument("--level", type=int, required=True)
    pt.add_argument("--phi", required=True,
                    help="h:<j> or a CSV file of t,value samples on the nodes")
    pt.add_argument("--q", help="quaternion literal")
    pt.add_argument("--points", help="CSV file of target points")
    pt.set_defaults(func=cmd_transform)

    pb = sub.add_parser("table", parents=[common],
                        help="closed-form vs quadrature tables")
    st = pb.add_subparsers(dest="table", required=True)
    tn = st.add_parser("norms", parents=[common])
    tn.add_argument("--n", type=int, required=True)
    tn.add_argument("--jmax", type=int, default=3)
    tn.set_defaults(func=cmd_table)
    tg = st.add_parser("hermite-gram", parents=[common])
    tg.add_argument("--max", type=int, default=4)
    tg.set_defaults(func=cmd_table)
    tl = st.add_parser("laguerre-sum", parents=[common])
    tl.add_argument("--n", type=int, required=True)
    tl.set_defaults(func=cmd_table)

    ps = sub.add_parser("spectrum-probe", parents=[common],
                        help="radial mass probe of an eigenvalue candidate")
    ps.add_argument("--mu", required=True, help="quaternion literal")
    ps.add_argument("--j", type=int, default=0)
    ps.add_argument("--rmax", type=float, default=8.0)
    ps.add_argument("--windows", type=int, default=16)
    ps.set_defaults(func=cmd_spectrum_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except (ValueError, OSError, KummerConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
