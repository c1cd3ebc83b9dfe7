"""Command-line interface.

Subcommands: ``eval`` (point evaluation), ``trace`` (evaluation trace,
optionally as an SVG figure), ``subdivide`` (left subdivision),
``bench`` (timing harness, CSV or Markdown) and ``flops`` (operation
accounting check).  Exit codes: 0 success, 2 parse error, 3 domain
error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .baselines import bernstein_sum_oracle, decasteljau, rational_decasteljau
from .bench import (
    BenchConfig,
    count_flops,
    expected_flops,
    report_to_csv,
    report_to_markdown,
    run_benchmark,
)
from .curve import CurveSpec, evaluate, evaluate_branched, evaluate_with_trace, subdivide_left
from .curvefile import parse_file
from .errors import DomainError, ParseError
from .surface import (
    RectSurfaceSpec,
    evaluate_rect,
    evaluate_tri,
    rect_sum_oracle,
    tri_sum_oracle,
)
from .svgplot import trace_svg

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4


def _fmt(value: float, precision: int) -> str:
    return format(float(value), f".{precision}g")


def _print_point(point, precision: int) -> None:
    print(" ".join(_fmt(c, precision) for c in point))


def _eval_curve(spec: CurveSpec, t: float, args):
    if args.subtraction_free:
        if args.algorithm in ("new", "new-plain"):
            return evaluate(spec, t, subtraction_free=True)
        raise DomainError("--subtraction-free applies to the one-pass method")
    if args.algorithm == "new":
        return evaluate_branched(spec, t)
    if args.algorithm == "new-plain":
        return evaluate(spec, t)
    if args.algorithm == "decasteljau":
        if spec.is_rational:
            return rational_decasteljau(spec, t)
        return decasteljau(spec, t)
    return bernstein_sum_oracle(spec, t)


def cmd_eval(args) -> int:
    spec = parse_file(args.file)
    params = args.params
    if isinstance(spec, CurveSpec):
        if len(params) != 1:
            raise DomainError("curve evaluation takes exactly one parameter")
        point = _eval_curve(spec, params[0], args)
    else:
        if len(params) != 2:
            raise DomainError("surface evaluation takes two parameters: s t")
        if args.subtraction_free:
            raise DomainError("--subtraction-free applies to curve evaluation")
        s, t = params
        if args.algorithm == "new":
            point = (
                evaluate_rect(spec, s, t)
                if isinstance(spec, RectSurfaceSpec)
                else evaluate_tri(spec, s, t)
            )
        elif args.algorithm == "oracle":
            point = (
                rect_sum_oracle(spec, s, t)
                if isinstance(spec, RectSurfaceSpec)
                else tri_sum_oracle(spec, s, t)
            )
        else:
            raise DomainError(
                f"algorithm {args.algorithm!r} is not available for surfaces"
            )
    _print_point(point, args.precision)
    return EXIT_OK


def cmd_trace(args) -> int:
    spec = parse_file(args.file)
    if not isinstance(spec, CurveSpec):
        raise DomainError("tracing is defined for curves")
    _, trace = evaluate_with_trace(spec, args.t)
    for k, (h, q) in enumerate(zip(trace.h, trace.q)):
        coords = " ".join(_fmt(c, args.precision) for c in q)
        print(f"{k} {_fmt(h, args.precision)} {coords}")
    if args.svg is not None:
        document = trace_svg(spec, args.t)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(document)
    return EXIT_OK


def cmd_subdivide(args) -> int:
    spec = parse_file(args.file)
    if not isinstance(spec, CurveSpec):
        raise DomainError("subdivision is defined for curves")
    left = subdivide_left(spec, args.u)
    print(
        " ".join(
            "(" + ",".join(_fmt(c, args.precision) for c in p) + ")"
            for p in left.points
        )
    )
    return EXIT_OK


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise DomainError(f"{what} must be a comma-separated integer list") from None


def cmd_bench(args) -> int:
    config = BenchConfig(
        degrees=_parse_int_list(args.degrees, "--degrees"),
        dims=_parse_int_list(args.dims, "--dims"),
        curves_per_cell=args.curves,
        eval_points=args.points,
        rng_seed=args.seed,
    )
    report = run_benchmark(config)
    rendered = (
        report_to_csv(report) if args.format == "csv" else report_to_markdown(report)
    )
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        print(rendered, end="")
    for n, d, rational, message in report.failures:
        kind = "rational" if rational else "polynomial"
        print(f"cell n={n} d={d} {kind} failed: {message}", file=sys.stderr)
    return EXIT_OK


_FLOP_TAGS = {"new": "new_branched", "new-plain": "new_plain"}


def cmd_flops(args) -> int:
    rational = args.rational
    if args.algorithm == "decasteljau":
        tag = "rational_decasteljau" if rational else "decasteljau"
    else:
        tag = _FLOP_TAGS[args.algorithm]
    expected = expected_flops(tag, args.n, args.d, rational)
    rng = np.random.default_rng(args.seed)
    points = tuple(
        tuple(rng.uniform(-1.0, 1.0, args.d)) for _ in range(args.n + 1)
    )
    weights = tuple(rng.uniform(0.01, 1.0, args.n + 1)) if rational else None
    spec = CurveSpec(points=points, weights=weights)
    t = rng.uniform(0.001, 0.999)
    measured = count_flops(tag, spec, t)
    verdict = "OK" if measured == expected else "MISMATCH"
    print(f"expected {expected.total} measured {measured.total} {verdict}")
    return EXIT_OK if verdict == "OK" else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezeval",
        description="Evaluate, trace, subdivide and benchmark Bezier curves "
                    "and surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a curve or surface point")
    p_eval.add_argument("file", help="curve/surface file")
    p_eval.add_argument("params", nargs="+", type=float,
                        help="t for curves, s t for surfaces")
    p_eval.add_argument("--algorithm", default="new",
                        choices=("new", "new-plain", "decasteljau", "oracle"))
    p_eval.add_argument("--subtraction-free", action="store_true",
                        dest="subtraction_free")
    p_eval.add_argument("--precision", type=int, default=17,
                        help="significant digits (default 17)")
    p_eval.set_defaults(func=cmd_eval)

    p_trace = sub.add_parser("trace", help="print the evaluation trace")
    p_trace.add_argument("file")
    p_trace.add_argument("t", type=float)
    p_trace.add_argument("--svg", metavar="PATH",
                         help="also render the construction (d = 2 only)")
    p_trace.add_argument("--precision", type=int, default=17)
    p_trace.set_defaults(func=cmd_trace)

    p_sub = sub.add_parser("subdivide", help="left-subdivision control points")
    p_sub.add_argument("file")
    p_sub.add_argument("u", type=float)
    p_sub.add_argument("--precision", type=int, default=17)
    p_sub.set_defaults(func=cmd_subdivide)

    p_bench = sub.add_parser("bench", help="run the timing harness")
    p_bench.add_argument("--degrees", default="1,2,3,4,5,6,10,15,20")
    p_bench.add_argument("--dims", default="2,3")
    p_bench.add_argument("--curves", type=int, default=1000)
    p_bench.add_argument("--points", type=int, default=501)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--format", default="csv", choices=("csv", "md"))
    p_bench.add_argument("--out", metavar="PATH")
    p_bench.set_defaults(func=cmd_bench)

    p_flops = sub.add_parser("flops", help="check operation counts")
    p_flops.add_argument("algorithm", choices=("new", "new-plain", "decasteljau"))
    p_flops.add_argument("n", type=int)
    p_flops.add_argument("d", type=int)
    group = p_flops.add_mutually_exclusive_group()
    group.add_argument("--rational", action="store_true", dest="rational")
    group.add_argument("--polynomial", action="store_false", dest="rational")
    p_flops.add_argument("--seed", type=int, default=0)
    p_flops.set_defaults(func=cmd_flops, rational=False)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"bezeval: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"bezeval: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
