"""Linear-time convex-combination evaluation of Bezier curves and surfaces.

The one-pass evaluators fold each control point into a running convex
combination, giving O(dn) work and O(1) auxiliary memory for curves
(O(d * points) for surfaces) while keeping the geometric guarantees of
the classic triangular scheme.  The package also ships de Casteljau
baselines, an extended-precision summation oracle, exact operation
accounting, a timing harness and a small CLI (``bezeval``).
"""

from .baselines import bernstein_sum_oracle, decasteljau, rational_decasteljau
from .bench import (
    BenchCell,
    BenchConfig,
    BenchReport,
    CountedFloat,
    FlopCounter,
    FlopReport,
    count_batch_flops,
    count_flops,
    expected_batch_flops,
    expected_flops,
    report_to_csv,
    report_to_markdown,
    run_benchmark,
)
from .curve import (
    CurveSpec,
    bernstein_ratio_stream,
    evaluate,
    evaluate_batch,
    evaluate_branched,
    evaluate_with_trace,
    hull_window_check,
    subdivide_left,
)
from .curvefile import parse_file, parse_text, write_text
from .errors import DomainError, ParseError
from .generic import (
    UNIT_ROUNDOFF,
    EvalTrace,
    WeightedBasisStream,
    barycentric_certificate,
    gen_eval,
    gen_eval_subtraction_free,
    hull_window_coefficients,
)
from .surface import (
    RectSurfaceSpec,
    TriSurfaceSpec,
    evaluate_rect,
    evaluate_tri,
    rect_sum_oracle,
    tri_sum_oracle,
)
from .svgplot import trace_svg

__version__ = "0.1.0"

__all__ = [
    "BenchCell",
    "BenchConfig",
    "BenchReport",
    "CountedFloat",
    "CurveSpec",
    "DomainError",
    "EvalTrace",
    "FlopCounter",
    "FlopReport",
    "ParseError",
    "RectSurfaceSpec",
    "TriSurfaceSpec",
    "UNIT_ROUNDOFF",
    "WeightedBasisStream",
    "barycentric_certificate",
    "bernstein_ratio_stream",
    "bernstein_sum_oracle",
    "count_batch_flops",
    "count_flops",
    "decasteljau",
    "evaluate",
    "evaluate_batch",
    "evaluate_branched",
    "evaluate_rect",
    "evaluate_tri",
    "evaluate_with_trace",
    "expected_batch_flops",
    "expected_flops",
    "gen_eval",
    "gen_eval_subtraction_free",
    "hull_window_check",
    "hull_window_coefficients",
    "parse_file",
    "parse_text",
    "rational_decasteljau",
    "rect_sum_oracle",
    "report_to_csv",
    "report_to_markdown",
    "run_benchmark",
    "subdivide_left",
    "trace_svg",
    "tri_sum_oracle",
    "write_text",
]
