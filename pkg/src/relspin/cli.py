"""Command-line front end: ``relspin eigen|prob|map|curve|validate``.

Exit codes: 0 success, 1 validation failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import figures, measurement, oracle, spin_ops, validate
from .figures import fmt
from .kinematics import (
    DimensionlessMomentum,
    DimensionlessVelocity,
    momentum_from_velocity,
    velocity_from_momentum,
)
from .spin_ops import Axis

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _vector(text: str) -> tuple[float, float, float]:
    parts = [s for s in text.replace(" ", "").split(",") if s]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    try:
        return tuple(float(s) for s in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number in {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def _complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _fmt_complex(z: complex) -> str:
    return f"{fmt(z.real)}{'+' if z.imag >= 0 or z.imag != z.imag else '-'}{fmt(abs(z.imag))}j"


def cmd_eigen(args) -> int:
    p = DimensionlessMomentum.of(args.p)
    axis = Axis.parse(args.axis)
    pairs = spin_ops.eigenpairs(p, args.observable, axis)
    op = spin_ops.operator(p, args.observable, axis)
    lo, hi = oracle.eigh2(op).values
    if args.json:
        doc = {
            "p": list(p.as_tuple()),
            "observable": args.observable,
            "axis": axis.name.lower(),
            "unit": op.unit.value,
            "eigenpairs": [
                {
                    "sign": sign,
                    "value": pair.value,
                    "amp_up": _complex_pair(pair.state.amp_up),
                    "amp_down": _complex_pair(pair.state.amp_down),
                    "degenerate": pair.degenerate,
                }
                for sign, pair in zip((1, -1), pairs)
            ],
            "oracle_values": [lo, hi],
        }
        print(json.dumps(doc, indent=1))
        return EXIT_OK
    print(f"observable={args.observable} axis={axis.name.lower()} unit={op.unit.value}")
    print(f"p=({', '.join(fmt(c) for c in p.as_tuple())})")
    for sign, pair in zip(("+", "-"), pairs):
        print(
            f"{sign} value={fmt(pair.value)} "
            f"amp_up={_fmt_complex(pair.state.amp_up)} "
            f"amp_down={_fmt_complex(pair.state.amp_down)}"
            + (" degenerate" if pair.degenerate else "")
        )
    print(f"oracle values=({fmt(lo)}, {fmt(hi)})")
    return EXIT_OK


def cmd_prob(args) -> int:
    if (args.p is None) == (args.v is None):
        raise UsageError("give exactly one of --p or --v")
    if args.v is not None:
        v = DimensionlessVelocity.of(args.v)
    else:
        v = velocity_from_momentum(DimensionlessMomentum.of(args.p))
    p = momentum_from_velocity(v)
    closed = measurement.closed_form(args.formula, v)
    pipe = measurement.pipeline_value(args.formula, v)
    orc = validate.oracle_value(args.formula, v)
    print(f"formula={args.formula}")
    print(f"v=({', '.join(fmt(c) for c in (v.v1, v.v2, v.v3))})")
    print(f"p=({', '.join(fmt(c) for c in p.as_tuple())})")
    print(f"closed_form={fmt(closed)}")
    print(f"born_pipeline={fmt(pipe)}")
    print(f"oracle={fmt(orc)}")
    return EXIT_OK


def _write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def sidecar(path: Path) -> Path:
    return path.with_name(path.name + ".meta.json")


def cmd_map(args) -> int:
    fig = args.figure
    if fig == 1:
        grid = figures.map_fig1(args.resolution, args.deltas or figures.DEFAULT_DELTAS)
    elif fig in (3, 4):
        formula = args.formula or ("eq5" if fig == 3 else "eq6")
        if args.vnorm is None:
            raise UsageError(f"--vnorm is required for figure {fig}")
        grid = figures.map_fig34(formula, args.vnorm, args.resolution)
    elif fig == 5:
        grid = figures.map_fig5(args.resolution)
    else:
        raise UsageError(f"map supports figures 1, 3, 4, 5 (got {fig})")
    out = Path(args.out)
    if args.format == "csv":
        csv_text = grid.to_csv()
        _write(out, csv_text)
        _write(sidecar(out), json.dumps(grid.metadata(csv_text), indent=1) + "\n")
    else:
        _write(out, grid.to_json())
    print(f"wrote {out} ({grid.formula_id.value}, {grid.resolution}x{grid.resolution})")
    return EXIT_OK


def cmd_curve(args) -> int:
    if args.figure != 2:
        raise UsageError(f"curve supports figure 2 only (got {args.figure})")
    curves = figures.curve_fig2(args.deltas or figures.DEFAULT_DELTAS, args.resolution)
    out = Path(args.out)
    csv_text = figures.curves_to_csv(curves)
    _write(out, csv_text)
    _write(sidecar(out), json.dumps(figures.curves_summary(curves, csv_text, args.resolution), indent=1) + "\n")
    for c in curves:
        print(
            f"delta={fmt(c.delta)} samples={c.vnorm.size} min_vnorm={fmt(c.min_vnorm)} "
            f"at_abs_v3={fmt(c.v3_at_min_vnorm)} min_abs_v3={fmt(c.min_v3)}"
        )
    print(f"wrote {out}")
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    results = validate.run(args.samples, args.seed)
    for r in results:
        print(r.line())
    ok = validate.all_passed(results)
    if not ok:
        failed = ", ".join(r.name for r in results if not r.passed)
        print(f"FAILED: {failed}")
        return EXIT_VALIDATION
    print("all checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relspin", description="Intrinsic relativistic spin observables of a spin-1/2 particle."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eigen", help="eigenvalues and eigenstates of Sigma or V")
    p.add_argument("--p", type=_vector, required=True, metavar="X,Y,Z")
    p.add_argument("--observable", choices=("sigma", "v"), required=True)
    p.add_argument("--axis", choices=("x", "y", "z"), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("prob", help="closed-form value next to the Born-rule value")
    p.add_argument("--formula", choices=measurement.FORMULAS, required=True)
    p.add_argument("--p", type=_vector, metavar="X,Y,Z")
    p.add_argument("--v", type=_vector, metavar="X,Y,Z")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("map", help="write a sampled probability map")
    p.add_argument("--figure", type=int, choices=(1, 3, 4, 5), required=True)
    p.add_argument("--formula", choices=("eq5", "eq6"))
    p.add_argument("--vnorm", type=float)
    p.add_argument("--deltas", type=_float_list, help="contour levels for figure 1")
    p.add_argument("--resolution", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument(
        "--seed-independent",
        action="store_true",
        help="accepted for compatibility; maps never use randomness",
    )
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("curve", help="write significance-boundary curves")
    p.add_argument("--figure", type=int, choices=(2,), required=True)
    p.add_argument("--deltas", type=_float_list)
    p.add_argument("--resolution", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("validate", help="run the oracle and pipeline checks")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"relspin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
