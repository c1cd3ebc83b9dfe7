"""Polynomial and rational Bezier curves in E^d.

The evaluators run in one pass over the control points, forming only
convex combinations, with constant auxiliary memory.  Compared with the
classic triangular scheme (see ``baselines``) the work drops from
quadratic to linear in the degree while keeping the geometric character
of the computation: every intermediate point lies in the convex hull of
the control points seen so far.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import DomainError
from .generic import (
    UNIT_ROUNDOFF,
    EvalTrace,
    Point,
    WeightedBasisStream,
    barycentric_certificate,
    hull_window_coefficients,
)


@dataclass(frozen=True)
class CurveSpec:
    """Degree-n Bezier curve data: n+1 control points, optional weights.

    Absent weights mean the polynomial (equal-weights) case.  Weights,
    when present, must be strictly positive and finite; all points must
    share one dimension d >= 1.
    """

    points: tuple[Point, ...]
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        pts = tuple(tuple(float(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise DomainError("a curve needs at least one control point")
        d = len(pts[0])
        if d < 1:
            raise DomainError("points must have dimension >= 1")
        for p in pts:
            if len(p) != d:
                raise DomainError("all control points must share one dimension")
            for c in p:
                if not math.isfinite(c):
                    raise DomainError(f"nonfinite coordinate {c!r}")
        if self.weights is not None:
            w = tuple(float(x) for x in self.weights)
            object.__setattr__(self, "weights", w)
            if len(w) != len(pts):
                raise DomainError("need exactly one weight per control point")
            for x in w:
                if not math.isfinite(x) or x <= 0.0:
                    raise DomainError(f"weight {x!r} must be finite and > 0")

    @property
    def n(self) -> int:
        """Curve degree."""
        return len(self.points) - 1

    @property
    def d(self) -> int:
        """Ambient dimension."""
        return len(self.points[0])

    @property
    def is_rational(self) -> bool:
        return self.weights is not None


def _check_param(t: float) -> float:
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"parameter {t!r} outside [0, 1]")
    return t


def evaluate(spec: CurveSpec, t: float, subtraction_free: bool = False) -> Point:
    """Curve point at t via the unbranched linear-time recurrence.

    t = 0 and t = 1 return the first and last control points exactly;
    the recurrence itself degenerates there, no special case is needed.
    With ``subtraction_free=True`` the convex complements 1-h are formed
    by products instead of subtractions (cancellation guard for
    high-accuracy use; endpoints are then returned directly because the
    product form divides by t and 1-t).
    """
    t = _check_param(t)
    if subtraction_free:
        if t == 0.0:
            return spec.points[0]
        if t == 1.0:
            return spec.points[-1]
        q = kernels.plain_subtraction_free(spec.n, t, spec.weights, spec.points)
    elif spec.weights is None:
        q = kernels.poly_plain(spec.n, t, spec.points)
    else:
        q = kernels.rational_plain(spec.n, t, spec.weights, spec.points)
    return tuple(q)


def evaluate_branched(spec: CurveSpec, t: float) -> Point:
    """Curve point at t via the branched variant.

    Splits on t <= 0.5 (ties take the first branch) so the precomputed
    parameter ratio never exceeds 1; saves one multiplication per step
    relative to :func:`evaluate`.
    """
    t = _check_param(t)
    if spec.weights is None:
        q = kernels.poly_branched(spec.n, t, spec.points)
    else:
        q = kernels.rational_branched(spec.n, t, spec.weights, spec.points)
    return tuple(q)


def evaluate_with_trace(spec: CurveSpec, t: float) -> tuple[Point, EvalTrace]:
    """Curve point at t plus the full h_k / Q_k trace.

    At t = 0 the trace is h = [1, 0, ..., 0] with every Q_k equal to the
    first control point; at t = 1 it is h = [1, 1, ..., 1] with Q_k equal
    to the k-th control point.
    """
    t = _check_param(t)
    point, hs, qs = kernels.plain_with_trace(spec.n, t, spec.weights, spec.points)
    return point, EvalTrace(h=tuple(hs), q=tuple(qs))


def evaluate_batch(specs: Sequence[CurveSpec], t: float) -> list[Point]:
    """Evaluate several same-degree polynomial curves at one t.

    The convex coefficients depend only on the degree and t, so they are
    computed once and shared across the curves.  Results are identical to
    per-curve :func:`evaluate_branched` calls.
    """
    if not specs:
        raise DomainError("need at least one curve")
    n = specs[0].n
    for s in specs:
        if s.is_rational:
            raise DomainError("batch evaluation is for polynomial curves only")
        if s.n != n:
            raise DomainError("batch evaluation needs one common degree")
    t = _check_param(t)
    qs = kernels.poly_batch(n, t, [s.points for s in specs])
    return [tuple(q) for q in qs]


def subdivide_left(spec: CurveSpec, u: float) -> CurveSpec:
    """Control points of the curve restricted to [0, u], reparameterized.

    Polynomial curves only, 0 < u < 1.  The new points are recovered from
    one evaluation trace at u: V_k is a combination of the running points
    Q_0..Q_k with coefficients built from the h sequence and lower-degree
    basis values at u, and V_n is Q_n itself.
    """
    if spec.is_rational:
        raise DomainError("subdivision is implemented for polynomial curves")
    u = float(u)
    if not (0.0 < u < 1.0):
        raise DomainError(f"subdivision parameter {u!r} outside (0, 1)")
    n = spec.n
    _, hs, qs = kernels.plain_with_trace(n, u, None, spec.points)
    new_points = [spec.points[0]]
    u1 = 1.0 - u
    brow = [1.0]
    for k in range(1, n):
        nxt = [0.0] * (k + 1)
        nxt[0] = u1 * brow[0]
        for j in range(1, k):
            nxt[j] = u1 * brow[j] + u * brow[j - 1]
        nxt[k] = u * brow[k - 1]
        brow = nxt
        acc = [0.0] * spec.d
        for j in range(k + 1):
            c = brow[j] / hs[j] * ((n - k) / (n - j))
            acc = [a + c * qc for a, qc in zip(acc, qs[j])]
        new_points.append(tuple(acc))
    if n >= 1:
        new_points.append(qs[n])
    return CurveSpec(points=tuple(new_points))


def bernstein_ratio_stream(
    n: int, t: float, weights: Sequence[float] | None
) -> WeightedBasisStream:
    """Weighted Bernstein stream at t in ratio form.

    The consecutive ratio of weighted degree-n Bernstein values reduces
    to w_{k-1}*k*(1-t) / (w_k*t*(n-k+1)), which never under- or
    overflows for interior t; the basis values themselves are never
    materialized.  Requires 0 < t < 1.
    """
    if not (0.0 < t < 1.0):
        raise DomainError("ratio stream needs an interior parameter")
    u = 1.0 - t
    ratios = []
    for k in range(1, n + 1):
        r = k * u / (t * (n - k + 1))
        if weights is not None:
            r *= weights[k - 1] / weights[k]
        ratios.append(r)
    return WeightedBasisStream.from_ratios(ratios)


def hull_window_check(
    spec: CurveSpec, t: float, u: float, tol: float | None = None
) -> tuple[bool, list[float]]:
    """Does the curve point at u lie in the hull of the trace points at t?

    Returns (verdict, coefficients): the coefficients express the curve
    value at u as an affine combination of the running points Q_0..Q_n of
    an evaluation at t, and the verdict is True exactly when they are all
    nonnegative (within ``tol``, default 8*(n+1) unit roundoffs).  For the
    Bernstein basis this holds precisely for u <= t, so the verdict
    matches the parameter order away from the u = t boundary.

    Requires t in (0, 1]; u may be anywhere in [0, 1].
    """
    t = _check_param(t)
    u = _check_param(u)
    if t == 0.0:
        raise DomainError("hull-window test requires t > 0")
    n = spec.n
    if tol is None:
        tol = 8.0 * UNIT_ROUNDOFF * (n + 1)
    _, trace = evaluate_with_trace(spec, t)
    for hk in trace.h:
        if hk == 0.0:
            raise DomainError("hull-window test undefined: some h_k is zero")
    if u == 0.0:
        # The value at 0 is the first control point, which is Q_0 itself.
        return True, [1.0] + [0.0] * n
    if u == 1.0:
        # Weighted basis at 1 concentrates on index n; only the last two
        # coefficients survive the hull expansion.
        coeffs = [0.0] * (n + 1)
        coeffs[n] = 1.0 / trace.h[n]
        if n >= 1:
            w = spec.weights
            rho_n = n * (1.0 - t) / t
            if w is not None:
                rho_n *= w[n - 1] / w[n]
            coeffs[n - 1] = 0.0 - rho_n / trace.h[n - 1]
        return min(coeffs) >= -tol, coeffs
    if t == 1.0:
        # Trace points at t = 1 are the control points themselves, so the
        # expansion reduces to the normalized weighted basis at u.
        _, trace_u = evaluate_with_trace(spec, u)
        coeffs = barycentric_certificate(trace_u)
        return True, coeffs
    stream_t = bernstein_ratio_stream(n, t, spec.weights)
    stream_u = bernstein_ratio_stream(n, u, spec.weights)
    coeffs = hull_window_coefficients(trace, stream_t, stream_u)
    return min(coeffs) >= -tol, coeffs
