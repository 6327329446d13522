"""Command-line interface: ``sample``, ``render``, ``analyze``, ``transition``.

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Dict, List, Optional

from . import analysis, discrete, specdoc, svg
from .core import IntrinsicCurve, sample
from .errors import DegenerateRho, NumericalError, ValidationError
from .transition import TransitionSpec, fit_line_to_circle, verify_g2

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL, EXIT_IO = 0, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _IOFailure(Exception):
    pass


def _finite_or_none(v: float) -> Optional[float]:
    return v if math.isfinite(v) else None


def _fmt17(v: float) -> str:
    return format(float(v), ".17g")


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write '{path}': {exc.strerror}") from exc


def _parse_kv(items: List[str]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise specdoc.SpecError(f"--param expects key=value, got '{item}'")
        try:
            out[key] = json.loads(value)
        except json.JSONDecodeError:
            out[key] = value
    return out


def _load_spec(args) -> specdoc.CurveSpecDocument:
    if args.spec:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _IOFailure(f"cannot read '{args.spec}': {exc.strerror}") from exc
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise specdoc.SpecError(f"spec is not valid JSON: {exc.msg}") from exc
    else:
        if not args.kind:
            raise specdoc.SpecError("give --spec FILE or --kind")
        doc = {"version": 1, "kind": args.kind, "params": _parse_kv(args.param or [])}
        if args.domain:
            doc["domain"] = args.domain
        if args.pose:
            doc["pose"] = dict(zip(("x", "y", "heading"), args.pose))
    if args.samples is not None:
        doc = dict(doc, samples=args.samples)
    spec = specdoc.parse_spec(doc)
    if args.emit_spec:
        _write(args.emit_spec, json.dumps(spec.to_dict(), indent=2, sort_keys=True) + "\n")
    return spec


def samples_to_csv(table) -> str:
    lines = [",".join(table.COLUMNS)]
    lines.extend(",".join(_fmt17(v) for v in row) for row in table.rows())
    return "\n".join(lines) + "\n"


def samples_to_json(table, kind: str) -> str:
    rows = [[_finite_or_none(v) for v in row] for row in table.rows()]
    return json.dumps({"version": 1, "kind": kind, "columns": list(table.COLUMNS), "rows": rows}) + "\n"


def cmd_sample(args) -> int:
    spec = _load_spec(args)
    table = specdoc.tabulate(spec)
    text = samples_to_csv(table) if args.format == "csv" else samples_to_json(table, spec.kind)
    _write(args.out, text)
    return EXIT_OK


def cmd_render(args) -> int:
    spec = _load_spec(args)
    obj = specdoc.build(spec)
    if isinstance(obj, discrete.ArcChain):
        def move(p):
            z = spec.pose.apply(complex(*p))
            return z.real, z.imag
        text = svg.arc_chain_svg(obj, args.width, move)
    else:
        table = specdoc.tabulate(spec)
        text = svg.polyline_svg(table.points, args.width)
    _write(args.out, text)
    return EXIT_OK


def default_stretch(curve: IntrinsicCurve):
    lo, hi = curve.domain
    a, b = max(lo, 0.1 * hi), 0.9 * hi
    return (a, b) if a < b else (lo, hi)


def analyze_curve(curve: IntrinsicCurve, n: int, stretch=None) -> Dict[str, Any]:
    table = sample(curve, max(n, 3))
    mono = analysis.check_monotone_curvature(table)
    report: Dict[str, Any] = {
        "kind": curve.family,
        "monotonicity": {
            "monotone": mono.monotone,
            "direction": mono.direction.value,
            "first_violation_s": mono.first_violation_s,
            "max_violation": mono.max_violation,
        },
    }
    try:
        points = analysis.compute_lcg(curve, max(n, 2), stretch or default_stretch(curve))
        fit = analysis.fit_lcg_line(points)
    except DegenerateRho as exc:
        report.update(lcg=None, lcg_reason=str(exc), lac_like=False)
    else:
        report.update(lcg={"slope": fit.slope, "intercept": fit.intercept,
                           "max_residual": fit.max_residual, "r_squared": fit.r_squared},
                      lcg_reason=None, lac_like=analysis.is_lac_like(fit))
    return report


def cmd_analyze(args) -> int:
    spec = _load_spec(args)
    curve = specdoc.build(spec)
    if not isinstance(curve, IntrinsicCurve):
        raise specdoc.SpecError(f"analyze needs a fair-curve kind, got '{spec.kind}'")
    stretch = tuple(args.stretch) if args.stretch else None
    report = analyze_curve(curve, spec.samples, stretch)
    _write(args.out, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def transition_report(spec: TransitionSpec) -> Dict[str, Any]:
    result = fit_line_to_circle(spec)
    d = result.diagnostics
    return {
        "family": spec.family,
        "coefficient": result.coefficient,
        "segment": specdoc.curve_document(result.segment),
        "join_point": list(result.join_point),
        "join_tangent": result.join_tangent,
        "circle_center": list(result.circle_center),
        "circle_radius": result.circle_radius,
        "diagnostics": {"curvature_gap": d.curvature_gap, "tangent_gap": d.tangent_gap,
                        "position_gap": d.position_gap},
        "verified": verify_g2(result, 1e-8),
    }


def cmd_transition(args) -> int:
    if args.family == "pseudospiral":
        if args.m is None or args.arc is None:
            raise specdoc.SpecError("pseudospiral transition needs --m and --arc")
        spec = TransitionSpec("pseudospiral", args.kappa_end, args.arc, m=args.m)
    else:
        if None in (args.a, args.b, args.c, args.angle):
            raise specdoc.SpecError("superspiral transition needs --a, --b, --c and --angle")
        spec = TransitionSpec("superspiral", args.kappa_end, args.angle, abc=(args.a, args.b, args.c))
    _write(args.out, json.dumps(transition_report(spec), indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _curve_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", help="JSON curve document")
    p.add_argument("--kind", help="curve kind when no --spec is given")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="curve parameter (repeatable)")
    p.add_argument("--domain", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--pose", type=float, nargs=3, metavar=("X", "Y", "HEADING"))
    p.add_argument("--samples", type=int, help="override the sample count")
    p.add_argument("--emit-spec", metavar="FILE", help="write the normalized document to FILE")
    p.add_argument("--out", help="output file (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fairspiral", description="Planar spirals with monotone curvature.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("sample", help="tabulate s, x, y, theta, kappa")
    _curve_options(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("render", help="write an SVG drawing")
    _curve_options(p)
    p.add_argument("--width", type=int, default=800, help="width in pixels")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("analyze", help="monotonicity and curvature-graph report")
    _curve_options(p)
    p.add_argument("--stretch", type=float, nargs=2, metavar=("LO", "HI"))
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transition", help="fit a line-to-circle G2 transition")
    p.add_argument("--family", choices=("pseudospiral", "superspiral"), required=True)
    p.add_argument("--m", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--kappa-end", type=float, required=True)
    p.add_argument("--arc", type=float, help="arc-length budget (pseudospiral)")
    p.add_argument("--angle", type=float, help="tangent-angle budget (superspiral)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transition)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "width", 1) < 1:
            raise specdoc.SpecError("--width must be positive")
        return args.func(args)
    except _UsageError as exc:
        code, msg = EXIT_INVALID, str(exc)
    except ValidationError as exc:
        code, msg = EXIT_INVALID, str(exc)
    except NumericalError as exc:
        code, msg = EXIT_NUMERICAL, str(exc)
    except _IOFailure as exc:
        code, msg = EXIT_IO, str(exc)
    sys.stderr.write("error: " + " ".join(msg.split()) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
