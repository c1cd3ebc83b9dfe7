"""Rational rectangular and triangular Bezier surfaces.

Interior parameters are evaluated by one row-by-row pass of the same
convex-combination recurrence the curves use: the control grid is walked
as a single sequence and each step folds one control point into the
running point.  Work is linear in the number of control points with
constant auxiliary memory.  Parameters on the domain boundary are
dispatched to the corresponding boundary curve and evaluated by the
curve module, so boundary results agree with curve results exactly.

Boundary detection is by exact comparison (s or t equal to 0 or 1, or
1-s-t exactly 0 for triangles); nearly-boundary parameters take the
interior path.

The row-transition steps pair full numerator and denominator products
before the one division; the factors include parameter powers up to the
degree, so degrees are supported up to 32 per direction (beyond that,
extreme parameters could push an intermediate product subnormal).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2

from .curve import CurveSpec, evaluate
from .errors import DomainError
from .generic import Point

_ORACLE_BITS = 120


def _validated_grid(points, weights, what):
    pts = tuple(
        tuple(tuple(float(c) for c in p) for p in row) for row in points
    )
    if not pts or not pts[0]:
        raise DomainError(f"{what} needs a nonempty control grid")
    d = len(pts[0][0])
    if d < 1:
        raise DomainError("points must have dimension >= 1")
    for row in pts:
        for p in row:
            if len(p) != d:
                raise DomainError("all control points must share one dimension")
            for c in p:
                if not math.isfinite(c):
                    raise DomainError(f"nonfinite coordinate {c!r}")
    wts = None
    if weights is not None:
        wts = tuple(tuple(float(x) for x in row) for row in weights)
        if len(wts) != len(pts) or any(
            len(wr) != len(pr) for wr, pr in zip(wts, pts)
        ):
            raise DomainError("weights must mirror the control grid layout")
        for row in wts:
            for x in row:
                if not math.isfinite(x) or x <= 0.0:
                    raise DomainError(f"weight {x!r} must be finite and > 0")
    return pts, wts


@dataclass(frozen=True)
class RectSurfaceSpec:
    """Tensor-product surface: an (m+1) x (n+1) grid of points.

    ``points[i][j]`` pairs with the degree-m basis in s (index i) and the
    degree-n basis in t (index j).  Weights are optional; absent weights
    mean the polynomial case.
    """

    points: tuple[tuple[Point, ...], ...]
    weights: tuple[tuple[float, ...], ...] | None = None

    def __post_init__(self):
        pts, wts = _validated_grid(self.points, self.weights, "a rectangular surface")
        ncols = len(pts[0])
        if any(len(row) != ncols for row in pts):
            raise DomainError("control grid rows must have equal length")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)

    @property
    def m(self) -> int:
        return len(self.points) - 1

    @property
    def n(self) -> int:
        return len(self.points[0]) - 1

    @property
    def d(self) -> int:
        return len(self.points[0][0])

    def weight(self, i: int, j: int) -> float:
        return 1.0 if self.weights is None else self.weights[i][j]


@dataclass(frozen=True)
class TriSurfaceSpec:
    """Triangular surface of degree n over the barycentric triangle.

    ``points[i][j]`` holds the control point of index (i, j) with
    0 <= i+j <= n, stored as rows i = 0..n of length n-i+1.
    """

    points: tuple[tuple[Point, ...], ...]
    weights: tuple[tuple[float, ...], ...] | None = None

    def __post_init__(self):
        pts, wts = _validated_grid(self.points, self.weights, "a triangular surface")
        n = len(pts) - 1
        for i, row in enumerate(pts):
            if len(row) != n - i + 1:
                raise DomainError(
                    f"triangular grid row {i} must hold {n - i + 1} points"
                )
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)

    @property
    def n(self) -> int:
        return len(self.points) - 1

    @property
    def d(self) -> int:
        return len(self.points[0][0])

    def weight(self, i: int, j: int) -> float:
        return 1.0 if self.weights is None else self.weights[i][j]


def _boundary_curve_rect(spec: RectSurfaceSpec, s: float, t: float):
    """Boundary curve and parameter for an edge point of the unit square."""
    if s == 0.0 or s == 1.0:
        i = 0 if s == 0.0 else spec.m
        return CurveSpec(spec.points[i], spec.weights[i] if spec.weights else None), t
    j = 0 if t == 0.0 else spec.n
    pts = tuple(row[j] for row in spec.points)
    wts = tuple(row[j] for row in spec.weights) if spec.weights else None
    return CurveSpec(pts, wts), s


def evaluate_rect(spec: RectSurfaceSpec, s: float, t: float, h_sink=None) -> Point:
    """Surface point at (s, t) in [0,1]^2.

    Interior parameters take one row-by-row convex-combination pass over
    the grid; boundary parameters evaluate the boundary curve instead.
    ``h_sink``, if given, receives every interior convex coefficient
    (test hook for the h in [0,1] invariant).
    """
    s, t = float(s), float(t)
    if not (0.0 <= s <= 1.0 and 0.0 <= t <= 1.0):
        raise DomainError(f"parameters ({s!r}, {t!r}) outside the unit square")
    if s in (0.0, 1.0) or t in (0.0, 1.0):
        curve, param = _boundary_curve_rect(spec, s, t)
        return evaluate(curve, param)
    m, n = spec.m, spec.n
    s1 = 1.0 - s
    t1 = 1.0 - t
    # Row-transition powers, built once by running products.
    tn = 1.0
    t1n = 1.0
    for _ in range(n):
        tn *= t
        t1n *= t1
    h = 1.0
    q = list(spec.points[0][0])
    for i in range(m + 1):
        if i > 0:
            # Stepping from the end of row i-1 to the start of row i.
            num = i * spec.weight(i - 1, n) * s1 * tn
            den = (m - i + 1) * spec.weight(i, 0) * h * s * t1n
            h = 1.0 / (1.0 + num / den)
            w = spec.points[i][0]
            h1 = 1.0 - h
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
            if h_sink is not None:
                h_sink.append(h)
        for j in range(1, n + 1):
            num = j * spec.weight(i, j - 1) * t1
            den = (n - j + 1) * spec.weight(i, j) * h * t
            h = 1.0 / (1.0 + num / den)
            w = spec.points[i][j]
            h1 = 1.0 - h
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
            if h_sink is not None:
                h_sink.append(h)
    return tuple(q)


def _boundary_curve_tri(spec: TriSurfaceSpec, s: float, t: float, r: float):
    """Boundary curve and parameter for an edge point of the triangle."""
    n = spec.n
    if t == 0.0:
        pts = tuple(spec.points[i][0] for i in range(n + 1))
        wts = (
            tuple(spec.weights[i][0] for i in range(n + 1))
            if spec.weights
            else None
        )
        return CurveSpec(pts, wts), s
    if s == 0.0:
        return (
            CurveSpec(spec.points[0], spec.weights[0] if spec.weights else None),
            t,
        )
    # r == 0: the diagonal edge, parameterized by s.
    pts = tuple(spec.points[i][n - i] for i in range(n + 1))
    wts = (
        tuple(spec.weights[i][n - i] for i in range(n + 1))
        if spec.weights
        else None
    )
    return CurveSpec(pts, wts), s


def evaluate_tri(spec: TriSurfaceSpec, s: float, t: float, h_sink=None) -> Point:
    """Surface point at barycentric (s, t) with 1-s-t >= 0.

    Row-by-row pass over the triangular grid for interior parameters;
    points on an edge of the triangle evaluate the edge curve instead.
    """
    s, t = float(s), float(t)
    r = 1.0 - s - t
    if s < 0.0 or t < 0.0 or r < 0.0:
        raise DomainError(
            f"parameters ({s!r}, {t!r}) outside the barycentric triangle"
        )
    if s == 0.0 or t == 0.0 or r == 0.0:
        curve, param = _boundary_curve_tri(spec, s, t, r)
        return evaluate(curve, param)
    n = spec.n
    # Power tables for the row transitions, by running products.
    tp = [1.0]
    rp = [1.0]
    for _ in range(n):
        tp.append(tp[-1] * t)
        rp.append(rp[-1] * r)
    h = 1.0
    q = list(spec.points[0][0])
    for i in range(n + 1):
        if i > 0:
            # From the last point of row i-1 (index (i-1, n-i+1)) to (i, 0).
            num = i * spec.weight(i - 1, n - i + 1) * tp[n - i + 1]
            den = (n - i + 1) * spec.weight(i, 0) * h * s * rp[n - i]
            h = 1.0 / (1.0 + num / den)
            w = spec.points[i][0]
            h1 = 1.0 - h
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
            if h_sink is not None:
                h_sink.append(h)
        for j in range(1, n - i + 1):
            num = j * spec.weight(i, j - 1) * r
            den = (n - i - j + 1) * spec.weight(i, j) * h * t
            h = 1.0 / (1.0 + num / den)
            w = spec.points[i][j]
            h1 = 1.0 - h
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
            if h_sink is not None:
                h_sink.append(h)
    return tuple(q)


def rect_sum_oracle(spec: RectSurfaceSpec, s: float, t: float) -> Point:
    """Literal tensor-product double sum in extended precision."""
    s, t = float(s), float(t)
    if not (0.0 <= s <= 1.0 and 0.0 <= t <= 1.0):
        raise DomainError(f"parameters ({s!r}, {t!r}) outside the unit square")
    m, n, d = spec.m, spec.n, spec.d
    with gmpy2.context(precision=_ORACLE_BITS):
        bs = _bernstein_row(m, s)
        bt = _bernstein_row(n, t)
        num = [gmpy2.mpfr(0)] * d
        den = gmpy2.mpfr(0)
        for i in range(m + 1):
            for j in range(n + 1):
                term = bs[i] * bt[j]
                if spec.weights is not None:
                    term *= gmpy2.mpfr(spec.weights[i][j])
                den += term
                p = spec.points[i][j]
                for c in range(d):
                    num[c] += term * gmpy2.mpfr(p[c])
        return tuple(float(x / den) for x in num)


def tri_sum_oracle(spec: TriSurfaceSpec, s: float, t: float) -> Point:
    """Literal triangular-basis double sum in extended precision."""
    s, t = float(s), float(t)
    if s < 0.0 or t < 0.0 or 1.0 - s - t < 0.0:
        raise DomainError(
            f"parameters ({s!r}, {t!r}) outside the barycentric triangle"
        )
    n, d = spec.n, spec.d
    with gmpy2.context(precision=_ORACLE_BITS):
        sm = gmpy2.mpfr(s)
        tm = gmpy2.mpfr(t)
        rm = 1 - sm - tm
        sp = _powers(sm, n)
        tp = _powers(tm, n)
        rp = _powers(rm, n)
        num = [gmpy2.mpfr(0)] * d
        den = gmpy2.mpfr(0)
        fact = math.factorial
        for i in range(n + 1):
            for j in range(n - i + 1):
                coeff = fact(n) // (fact(i) * fact(j) * fact(n - i - j))
                term = coeff * sp[i] * tp[j] * rp[n - i - j]
                if spec.weights is not None:
                    term *= gmpy2.mpfr(spec.weights[i][j])
                den += term
                p = spec.points[i][j]
                for c in range(d):
                    num[c] += term * gmpy2.mpfr(p[c])
        return tuple(float(x / den) for x in num)


def _powers(x, n):
    out = [gmpy2.mpfr(1)]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def _bernstein_row(n, x):
    xm = gmpy2.mpfr(x)
    um = 1 - xm
    xp = _powers(xm, n)
    up = _powers(um, n)
    return [math.comb(n, k) * xp[k] * up[n - k] for k in range(n + 1)]
