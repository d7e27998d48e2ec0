"""Command-line front end.

Subcommands: ``bound`` (bound report for a matrix pair), ``localize``
(eigenvalue localization disks as SVG + JSON, optionally PNG), ``verify``
(randomized verification suites), ``table-alpha`` and ``figure-k`` (CSV
datasets, the latter with a rendered figure alongside). Machine-readable
output goes to stdout or ``--out``; human commentary goes to stderr.
Exit codes: 0 success, 1 usage/input error, 2 a verified inequality was
violated (a finding).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import bounds, harness, render
from .errors import InvalidInputs, SizeMismatch, SpecvarError
from .linalg import eigenvalues, load_matrix, min_poly_degree, op_norm, spectral_radius
from .matching import d_euclid, d_hyper


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="specvar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate all bounds for a matrix pair")
    p_bound.add_argument("matrix_a", help="matrix JSON file for A")
    p_bound.add_argument("matrix_b", help="matrix JSON file for B")
    p_bound.add_argument("--m", type=int, default=None, help="minimal polynomial degree of A (default: n)")
    p_bound.add_argument("--estimate-m", action="store_true", help="estimate |m| numerically instead of using n")
    p_bound.add_argument("--cn", default="bek", help="Euclidean constant: 'bek', 'best', or a number")
    p_bound.add_argument("--tol-bound", type=float, default=bounds.BOUND_SLACK, help="verdict slack for bound checks")
    p_bound.add_argument("--tol-chain", type=float, default=bounds.CHAIN_SLACK, help="slack for the exact<=simple chain")
    p_bound.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p_bound.set_defaults(func=_cmd_bound)

    p_loc = sub.add_parser("localize", help="emit eigenvalue localization disks (SVG + JSON twin)")
    p_loc.add_argument("matrix", nargs="?", default=None, help="matrix JSON file for A")
    p_loc.add_argument("--random", type=int, default=None, metavar="N", help="draw a random N x N contraction instead")
    p_loc.add_argument("--norm-a", type=float, default=0.9, help="target operator norm for --random")
    p_loc.add_argument("--seed", type=int, default=None, help="master seed (fallback: SPECVAR_SEED, then 0)")
    p_loc.add_argument("--eps", type=float, required=True, help="operator norm of the perturbation")
    p_loc.add_argument("--mode", choices=("both", "euclid", "hyper"), default="both")
    p_loc.add_argument("--cn", default="bek", help="Euclidean constant: 'bek', 'best', or a number")
    p_loc.add_argument("--use-norm-b", action="store_true", help="use ||B|| instead of rho(B) in the hyperbolic radius")
    p_loc.add_argument("--m", type=int, default=None, help="minimal polynomial degree of A (default: n)")
    p_loc.add_argument("--out", required=True, help="output SVG path")
    p_loc.add_argument("--json", default=None, help="also write the geometry as JSON here")
    p_loc.add_argument("--png", default=None, help="also render a PNG here")
    p_loc.set_defaults(func=_cmd_localize)

    p_ver = sub.add_parser("verify", help="run randomized verification suites")
    p_ver.add_argument("--suite", default="all", help=f"one of {', '.join(harness.SUITE_NAMES)}")
    p_ver.add_argument("--trials", type=int, default=100)
    p_ver.add_argument("--seed", type=int, default=None, help="master seed (fallback: SPECVAR_SEED, then 0)")
    p_ver.add_argument("--threads", type=int, default=1)
    p_ver.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p_ver.set_defaults(func=_cmd_verify)

    p_tab = sub.add_parser("table-alpha", help="CSV of 1/alpha_n values")
    p_tab.add_argument("--n-list", default=None, help="comma-separated n values (default: 1..12,100,1000)")
    p_tab.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p_tab.set_defaults(func=_cmd_table_alpha)

    p_fk = sub.add_parser("figure-k", help="CSV of both sides of the modulus power inequality")
    p_fk.add_argument("--q-list", default="0.5,0.05,0.005", help="comma-separated nome values")
    p_fk.add_argument("--n-max", type=int, default=20)
    p_fk.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p_fk.add_argument("--png", default=None, help="figure path (default: alongside --out)")
    p_fk.set_defaults(func=_cmd_figure_k)
    return parser


def _resolve_seed(value) -> int:
    if value is not None:
        return int(value)
    env = os.environ.get("SPECVAR_SEED")
    return int(env) if env else 0


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_bound(args) -> int:
    A = load_matrix(args.matrix_a)
    B = load_matrix(args.matrix_b)
    if A.shape != B.shape:
        raise SizeMismatch(f"matrix dimensions differ: {A.shape[0]} vs {B.shape[0]}")
    n = A.shape[0]
    spec_a, spec_b = eigenvalues(A), eigenvalues(B)
    norm_a, norm_b = op_norm(A), op_norm(B)
    rho_b = min(spectral_radius(B), norm_b)
    if args.m is not None:
        m = args.m
    elif args.estimate_m:
        m = min_poly_degree(A)
    else:
        m = n
    bi = bounds.BoundInputs(
        norm_a=norm_a, norm_b=norm_b, rho_b=rho_b, diff_norm=op_norm(A - B), m=m, n=n
    )
    d_e = d_euclid(spec_a, spec_b)
    d_h = d_hyper(spec_a, spec_b) if norm_a < 1.0 and norm_b < 1.0 else None
    mods = np.abs(spec_a)
    nonzero = mods[mods > 1e-12]
    min_nonzero = float(nonzero.min()) if nonzero.size else None
    report = bounds.assemble_report(
        bi,
        d_e=d_e,
        d_h=d_h,
        min_nonzero_eig=min_nonzero,
        cn=args.cn,
        bound_tol=args.tol_bound,
        chain_tol=args.tol_chain,
    )
    _emit(json.dumps(report.to_json_dict(), indent=2), args.out)
    return 0 if report.all_pass else 2


def _cmd_localize(args) -> int:
    seed = _resolve_seed(args.seed)
    if (args.matrix is None) == (args.random is None):
        raise _UsageError("provide either a matrix file or --random N, not both")
    if args.random is not None:
        A = harness.random_contraction(args.random, args.norm_a, harness.seeded_rng(seed, 0))
    else:
        A = load_matrix(args.matrix)
    if args.eps < 0:
        raise InvalidInputs("--eps must be nonnegative")
    norm_a = op_norm(A)
    modes = ("euclid", "hyper") if args.mode == "both" else (args.mode,)
    if "hyper" in modes and norm_a + args.eps >= 1.0:
        if args.mode == "hyper":
            raise InvalidInputs(f"hyperbolic mode needs ||A|| + eps < 1, got {norm_a + args.eps}")
        modes = ("euclid",)
        print("note: ||A|| + eps >= 1, hyperbolic disks omitted", file=sys.stderr)
    data = harness.localization_dataset(
        A,
        args.eps,
        harness.seeded_rng(seed, 1),
        modes=modes,
        cn=args.cn,
        use_norm_b=args.use_norm_b,
        m=args.m,
    )
    render.write_localization_svg(data, args.out)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(data.to_json_dict(), fh, indent=2)
            fh.write("\n")
    if args.png:
        render.write_localization_png(data, args.png)
    return 0


def _cmd_verify(args) -> int:
    cfg = harness.ExperimentConfig(
        suite=args.suite,
        trials=args.trials,
        master_seed=_resolve_seed(args.seed),
        threads=args.threads,
    )
    report = harness.run_suite(cfg)
    _emit(json.dumps(report.to_json_dict(), indent=2), args.out)
    for suite in report.suites:
        checks = len(suite.checks)
        print(
            f"suite {suite.name}: {suite.trials} trials, {checks} checks, "
            f"{suite.violation_count} violations, {suite.elapsed_seconds:.2f}s",
            file=sys.stderr,
        )
    print(
        f"total violations: {report.total_violations} ({report.elapsed_seconds:.2f}s)",
        file=sys.stderr,
    )
    return 0 if report.total_violations == 0 else 2


def _parse_int_list(text: str) -> list[int]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise _UsageError("list must not be empty")
    try:
        return [int(s) for s in items]
    except ValueError as exc:
        raise _UsageError(f"bad integer list {text!r}") from exc


def _parse_float_list(text: str) -> list[float]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise _UsageError("list must not be empty")
    try:
        return [float(s) for s in items]
    except ValueError as exc:
        raise _UsageError(f"bad number list {text!r}") from exc


def _cmd_table_alpha(args) -> int:
    ns = harness.TABLE_ALPHA_DEFAULT_NS if args.n_list is None else _parse_int_list(args.n_list)
    data = harness.table_alpha_data(ns)
    _emit(data.to_csv(), args.out)
    return 0


def _cmd_figure_k(args) -> int:
    qs = _parse_float_list(args.q_list)
    if args.n_max < 1:
        raise _UsageError("--n-max must be at least 1")
    data = harness.figure_k_data(qs, args.n_max)
    _emit(data.to_csv(), args.out)
    png = args.png
    if png is None and args.out:
        png = os.path.splitext(args.out)[0] + ".png"
    if png:
        render.write_figure_k_png(data, png)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SpecvarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
