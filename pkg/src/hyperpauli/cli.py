"""Command line driver.

Subcommands::

    check-identities  randomised algebra/group identity suites
    transform         apply a rotor or boost to a paravector
    group-info        generator counts and closure residuals of U(n,H)/SU(n,H)
    kg-verify         Klein-Gordon lattice convergence table
    maxwell           M^2 A residual of a gauge plane wave

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import checks
from . import fields as fl
from . import hyperbolic_unitary as hu
from . import spin_group as sg
from .errors import BadAxis, HyperPauliError, IncommensurateWave
from .hypercomplex import HNumber
from .pauli_algebra import Paravector, minkowski
from .spin_group import HSpinor

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _floats(text: str, count: int | None = None, what: str = "value") -> list[float]:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma separated numbers: {text!r}") from None
    if count is not None and len(vals) != count:
        raise argparse.ArgumentTypeError(f"{what} needs {count} components, got {len(vals)}")
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"{what} must be finite")
    return vals


def _four(text: str) -> list[float]:
    return _floats(text, 4, "four-vector")


def _three(text: str) -> list[float]:
    return _floats(text, 3, "axis")


def _grid(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(t) for t in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 64x64, got {text!r}") from None
    if len(dims) not in fl.AXES or min(dims) < fl.MIN_SITES:
        raise argparse.ArgumentTypeError(f"grid must have 2 or 4 axes of at least {fl.MIN_SITES} sites")
    return dims


def _positive_int(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


def _emit(obj: dict, as_json: bool, human: str) -> None:
    if as_json:
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(human)


# ---------------------------------------------------------------------------
# commands


def cmd_check_identities(args) -> int:
    report = checks.check_identities(args.seed, args.trials, args.tol)
    if args.json:
        _emit(report.to_json(timing=args.timing), True, "")
    else:
        lines = [f"{report.suite}  seed={report.seed} trials={report.trials}"]
        for c in report.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  {mark}  {c.name:<40s} {c.residual:.3e} <= {c.tolerance:.1e}")
        lines.append(f"{'PASS' if report.passed else 'FAIL'}  ({report.wall_time:.2f} s)")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def _transform_from_args(args) -> sg.SpinTransform:
    if args.spec is not None:
        try:
            obj = json.loads(args.spec)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--spec is not valid JSON: {exc}") from None
        return sg.from_json(obj)
    if args.kind is None:
        raise UsageError("give --kind/--axis/--param or --spec")
    make = sg.rotor if args.kind == "rotor" else sg.boost
    return make(args.axis, args.param)


def cmd_transform(args) -> int:
    try:
        g = _transform_from_args(args)
    except (BadAxis, KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    tol = 1e-10 if args.tol is None else args.tol
    x = Paravector(*args.x)
    xp = sg.apply(g, x)
    n_in = minkowski(x, x)
    n_out = minkowski(xp, xp)
    drift = abs(n_out - n_in)
    ok = drift <= tol * (1.0 + x.euclid_norm() ** 2)
    out = {
        "transform": dict(g.params) or {"g": g.g.to_json()},
        "x_in": x.to_json(),
        "x_out": xp.to_json(),
        "norm_in": n_in,
        "norm_out": n_out,
        "norm_drift": drift,
        "pass": ok,
    }
    human = (
        "x' = ({})\n".format(", ".join(f"{c:.10g}" for c in xp.as_tuple()))
        + f"norm: {n_in:.12g} -> {n_out:.12g}  drift {drift:.2e}  {'PASS' if ok else 'FAIL'}\n"
    )
    _emit(out, args.json, human)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_group_info(args) -> int:
    tol = 1e-11 if args.tol is None else args.tol
    info = hu.group_audit(args.n, args.special, args.seed, args.trials)
    ok = (
        info["numerical_rank"] == info["real_dim"]
        and info["closure_residual"] <= tol
        and info["det_residual"] <= tol
        and info.get("unit_det_residual", 0.0) <= tol
    )
    info["seed"] = args.seed
    info["trials"] = args.trials
    info["pass"] = ok
    name = f"{'SU' if args.special else 'U'}({args.n},H)"
    human = (
        f"{name}: generators {info['generator_count']}, real dimension {info['real_dim']} "
        f"(numerical rank {info['numerical_rank']})\n"
        f"closure residual {info['closure_residual']:.3e}, det residual {info['det_residual']:.3e}  "
        f"{'PASS' if ok else 'FAIL'}\n"
    )
    _emit(info, args.json, human)
    return EXIT_OK if ok else EXIT_FAIL


ORDER_RANGE = (1.8, 2.2)


def kg_rows_csv(levels) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["h", "residual", "order"])
    for lv in levels:
        writer.writerow([repr(lv.h), repr(lv.residual), "" if lv.order is None else repr(lv.order)])
    return buf.getvalue()


def cmd_kg_verify(args) -> int:
    p = Paravector(*args.p)
    try:
        levels = fl.kg_convergence(p, args.m, args.grid, args.refinements, h=args.h, method=args.method)
    except IncommensurateWave as exc:
        raise UsageError(f"incommensurate wave: {exc}") from None
    tol = 1e-12 if args.tol is None else args.tol
    u = HSpinor(HNumber(1.0), HNumber(0.0, 0.5, 0.25))
    analytic = fl.kg_residual_planewave(fl.PlaneWaveSpinor(u, p), args.m).norm()
    on_shell = abs(minkowski(p, p) - args.m**2) <= tol * max(1.0, args.m**2)
    orders = [lv.order for lv in levels if lv.order is not None]
    if args.method == "central":
        orders_ok = all(ORDER_RANGE[0] <= o <= ORDER_RANGE[1] for o in orders)
    else:
        orders_ok = all(lv.residual <= 1e-9 for lv in levels)
    ok = on_shell and analytic <= tol and orders_ok
    summary = {
        "p": p.to_json(),
        "m": args.m,
        "grid": list(args.grid),
        "method": args.method,
        "box": levels[0].n * levels[0].h,
        "on_shell": on_shell,
        "analytic_residual": analytic,
        "levels": [{"n": lv.n, "h": lv.h, "residual": lv.residual, "order": lv.order} for lv in levels],
        "order_range": list(ORDER_RANGE),
        "pass": ok,
    }
    table = kg_rows_csv(levels)
    if args.out is not None:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "convergence.csv").write_text(table)
        (out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    _emit(summary, args.json, table)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_maxwell(args) -> int:
    tol = 1e-12 if args.tol is None else args.tol
    k = Paravector(*args.k)
    eps = Paravector(*args.eps)
    wave = fl.PlaneWaveGauge(eps, k)
    residual = fl.maxwell_residual(wave)
    kk = minkowski(k, k)
    expected = abs(kk) * eps.euclid_norm()
    null = abs(kk) <= tol * max(1.0, k.euclid_norm() ** 2)
    ok = abs(residual - expected) <= tol * max(1.0, expected)
    out = {
        "k": k.to_json(),
        "eps": eps.to_json(),
        "k_dot_k": kk,
        "null": null,
        "residual": residual,
        "expected": expected,
        "pass": ok,
    }
    human = f"k.k = {kk:.12g}  |M^2 A| = {residual:.6e}  ({'null' if null else 'massive'})\n"
    _emit(out, args.json, human)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--tol", type=float, default=None, help="override check tolerances")

    parser = argparse.ArgumentParser(prog="hyperpauli", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-identities", parents=[common], help="run the identity suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    p.set_defaults(func=cmd_check_identities)

    p = sub.add_parser("transform", parents=[common], help="apply g x g^dagger")
    p.add_argument("--kind", choices=("rotor", "boost"))
    p.add_argument("--axis", type=_three, default=[0.0, 0.0, 1.0])
    p.add_argument("--param", type=float, default=0.0, help="angle (rad) or rapidity")
    p.add_argument("--spec", default=None, help='JSON {"kind","axis","param"} or AlgebraElement list')
    p.add_argument("--x", type=_four, required=True, help="paravector x0,x1,x2,x3")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("group-info", parents=[common], help="U(n,H) / SU(n,H) audit")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--special", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.set_defaults(func=cmd_group_info)

    p = sub.add_parser("kg-verify", parents=[common], help="Klein-Gordon lattice convergence")
    p.add_argument("--grid", type=_grid, default=(32, 32))
    p.add_argument("--h", type=float, default=None, help="spacing of the coarsest grid (default: fit the box)")
    p.add_argument("--p", type=_four, default=[1.0, 0.0, 0.0, 0.6])
    p.add_argument("--m", type=float, default=0.8)
    p.add_argument("--refinements", type=_positive_int, default=3)
    p.add_argument("--method", choices=("central", "spectral"), default="central")
    p.add_argument("--out", default=None, help="directory for convergence.csv and summary.json")
    p.set_defaults(func=cmd_kg_verify)

    p = sub.add_parser("maxwell", parents=[common], help="M^2 A for a gauge plane wave")
    p.add_argument("--k", type=_four, required=True)
    p.add_argument("--eps", type=_four, default=[0.0, 1.0, 0.0, 0.0])
    p.set_defaults(func=cmd_maxwell)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"hyperpauli {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except HyperPauliError as exc:
        sys.stderr.write(f"hyperpauli {args.command}: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
