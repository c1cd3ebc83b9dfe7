"""SVG rendering of one evaluation trace for planar curves.

The figure shows the construction of a curve point as successive convex
steps: the control polygon, the curve itself (sampled with the
extended-precision evaluator), every running point Q_k, and the segment
from Q_{k-1} to the control point folded in at step k.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .baselines import bernstein_sum_oracle
from .curve import CurveSpec, evaluate_with_trace
from .errors import DomainError

CURVE_SAMPLES = 256


def trace_svg(spec: CurveSpec, t: float) -> str:
    """Render the evaluation trace of ``spec`` at t as an SVG document.

    Requires d = 2.  The viewport fits the control-point bounding box
    with a 5% margin, and the y axis points up.
    """
    if spec.d != 2:
        raise DomainError("SVG rendering needs planar (d = 2) curves")
    _, trace = evaluate_with_trace(spec, t)

    xs = [p[0] for p in spec.points]
    ys = [p[1] for p in spec.points]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y)
    pad = 0.05 * span if span > 0.0 else 1.0
    width = (max_x - min_x) + 2 * pad
    height = (max_y - min_y) + 2 * pad
    stroke = 0.006 * max(width, height)
    radius = 1.6 * stroke

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "viewBox": f"{min_x - pad:.6g} {-(max_y + pad):.6g} "
                       f"{width:.6g} {height:.6g}",
            "width": "640",
            "height": f"{640 * height / width:.6g}",
        },
    )
    # Geometry is emitted in mathematical coordinates inside a y-flipping
    # group, so the viewBox above uses negated y.
    group = ET.SubElement(svg, "g", {"transform": "scale(1,-1)"})

    def polyline(points, cls, color, dashed=False):
        attrs = {
            "class": cls,
            "points": " ".join(f"{x:.9g},{y:.9g}" for x, y in points),
            "fill": "none",
            "stroke": color,
            "stroke-width": f"{stroke:.6g}",
        }
        if dashed:
            attrs["stroke-dasharray"] = f"{3 * stroke:.6g} {2 * stroke:.6g}"
        ET.SubElement(group, "polyline", attrs)

    def line(a, b, cls, color):
        ET.SubElement(
            group,
            "line",
            {
                "class": cls,
                "x1": f"{a[0]:.9g}", "y1": f"{a[1]:.9g}",
                "x2": f"{b[0]:.9g}", "y2": f"{b[1]:.9g}",
                "stroke": color,
                "stroke-width": f"{stroke:.6g}",
            },
        )

    def marker(p, cls, color, r):
        ET.SubElement(
            group,
            "circle",
            {
                "class": cls,
                "cx": f"{p[0]:.9g}", "cy": f"{p[1]:.9g}",
                "r": f"{r:.6g}",
                "fill": color,
            },
        )

    polyline(spec.points, "control-polygon", "#999999", dashed=True)
    samples = [
        bernstein_sum_oracle(spec, i / (CURVE_SAMPLES - 1))
        for i in range(CURVE_SAMPLES)
    ]
    polyline(samples, "curve", "#1f77b4")
    for k in range(1, spec.n + 1):
        line(trace.q[k - 1], spec.points[k], "step-segment", "#d62728")
    for p in spec.points:
        marker(p, "control-point", "#999999", radius)
    for q in trace.q:
        marker(q, "q-node", "#d62728", radius)

    return ET.tostring(svg, encoding="unicode", xml_declaration=True) + "\n"
