"""Convex-combination evaluation of rational objects over a positive basis.

Any object of the form

    S_N = (sum_k w_k * b_k * W_k) / (sum_k w_k * b_k)

with weights w_k > 0, basis values b_k >= 0 summing to 1, and control
points W_k can be evaluated in one pass that forms nothing but convex
combinations of the W_k.  The engine below consumes the weighted basis
values (or their consecutive ratios) as an abstract stream, so the same
code serves Bernstein curves, tensor-product surfaces and anything else
with a nonnegative partition-of-unity basis.

Zero basis values are rejected here by contract; callers are expected to
resolve those cases before invoking the engine (for Bernstein bases the
only such parameters are the interval endpoints, which the curve module
handles itself).
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError

#: Half the spacing between 1.0 and the next double.
UNIT_ROUNDOFF = sys.float_info.epsilon / 2

Point = tuple[float, ...]


def _check_points(points: Sequence[Sequence[float]]) -> int:
    """Validate a nonempty list of equal-dimension points, return d."""
    if not points:
        raise DomainError("need at least one control point")
    d = len(points[0])
    if d < 1:
        raise DomainError("points must have dimension >= 1")
    for p in points:
        if len(p) != d:
            raise DomainError(f"dimension mismatch: {len(p)} != {d}")
    return d


class WeightedBasisStream:
    """Weighted basis values w_k*b_k at a fixed parameter, k = 0..N.

    The stream may be built either from the N+1 absolute values or from
    the N consecutive ratios rho_k = (w_{k-1}*b_{k-1}) / (w_k*b_k).
    Ratios are what the evaluation recurrence actually consumes, so a
    caller that can form them stably (avoiding under/overflowing basis
    values) should prefer :meth:`from_ratios`.

    Every stored value must be finite and strictly positive.
    """

    __slots__ = ("_values", "_ratios")

    def __init__(self, values=None, ratios=None):
        if (values is None) == (ratios is None):
            raise DomainError("provide either values or ratios, not both")
        if values is not None:
            values = tuple(float(v) for v in values)
            if not values:
                raise DomainError("stream must have length >= 1")
            for v in values:
                if not math.isfinite(v) or v <= 0.0:
                    raise DomainError(
                        f"stream value {v!r} is not finite and positive; "
                        "zero-basis parameters must be handled by the caller"
                    )
        if ratios is not None:
            ratios = tuple(float(r) for r in ratios)
            for r in ratios:
                if not math.isfinite(r) or r <= 0.0:
                    raise DomainError(
                        f"stream ratio {r!r} is not finite and positive"
                    )
        self._values = values
        self._ratios = ratios

    @classmethod
    def from_values(cls, values) -> "WeightedBasisStream":
        return cls(values=values)

    @classmethod
    def from_ratios(cls, ratios) -> "WeightedBasisStream":
        """Build from rho_1..rho_N (an empty sequence means N = 0)."""
        return cls(ratios=ratios)

    @property
    def length(self) -> int:
        """Number of stream entries, N+1."""
        if self._values is not None:
            return len(self._values)
        return len(self._ratios) + 1

    @property
    def has_values(self) -> bool:
        return self._values is not None

    def ratios(self) -> tuple[float, ...]:
        """Consecutive ratios rho_1..rho_N."""
        if self._ratios is None:
            v = self._values
            self._ratios = tuple(v[k - 1] / v[k] for k in range(1, len(v)))
        return self._ratios

    def values(self) -> tuple[float, ...]:
        """Stream values, reconstructed from ratios when necessary.

        A ratio-built stream determines the values only up to a common
        positive factor; the reconstruction is normalized to start at 1.
        All uses of values inside this module are scale-invariant.
        """
        if self._values is None:
            out = [1.0]
            for r in self._ratios:
                out.append(out[-1] / r)
            self._values = tuple(out)
        return self._values


@dataclass(frozen=True)
class EvalTrace:
    """The convex coefficients h_k and running points Q_k of one pass.

    h[0] == 1 and every h[k] lies in [0,1]; q[k] is the convex combination
    (1-h[k])*q[k-1] + h[k]*W_k, so each q[k] stays inside the convex hull
    of the control points consumed so far.
    """

    h: tuple[float, ...]
    q: tuple[Point, ...]

    def __post_init__(self):
        if len(self.h) != len(self.q) or not self.h:
            raise DomainError("trace h and q must have equal positive length")


def gen_eval(
    stream: WeightedBasisStream,
    points: Sequence[Sequence[float]],
    with_trace: bool = True,
) -> tuple[Point, EvalTrace | None]:
    """One-pass convex-combination evaluation of the rational object.

    Returns the final point Q_N together with the full trace (pass
    ``with_trace=False`` for the constant-memory path that discards the
    intermediate h_k and Q_k).
    """
    _check_points(points)
    n_total = stream.length
    if n_total != len(points):
        raise DomainError(
            f"stream length {n_total} != number of points {len(points)}"
        )
    ratios = stream.ratios()
    h = 1.0
    q = list(points[0])
    hs = [h] if with_trace else None
    qs = [tuple(q)] if with_trace else None
    for k in range(1, n_total):
        h = 1.0 / (1.0 + ratios[k - 1] / h)
        h1 = 1.0 - h
        w = points[k]
        q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
        if with_trace:
            hs.append(h)
            qs.append(tuple(q))
    point = tuple(q)
    if with_trace:
        return point, EvalTrace(h=tuple(hs), q=tuple(qs))
    return point, None


def gen_eval_subtraction_free(
    stream: WeightedBasisStream,
    points: Sequence[Sequence[float]],
    with_trace: bool = True,
) -> tuple[Point, EvalTrace | None]:
    """Like :func:`gen_eval`, but 1-h_k is never formed by subtraction.

    The complement is computed from the product identity
    ``1 - h_k = (h_k / h_{k-1}) * rho_k``, which is nonnegative by
    construction and avoids cancellation when h_k is close to 1.
    """
    _check_points(points)
    n_total = stream.length
    if n_total != len(points):
        raise DomainError(
            f"stream length {n_total} != number of points {len(points)}"
        )
    ratios = stream.ratios()
    h_prev = 1.0
    q = list(points[0])
    hs = [h_prev] if with_trace else None
    qs = [tuple(q)] if with_trace else None
    for k in range(1, n_total):
        rho = ratios[k - 1]
        h = 1.0 / (1.0 + rho / h_prev)
        h1 = (h / h_prev) * rho
        w = points[k]
        q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
        h_prev = h
        if with_trace:
            hs.append(h)
            qs.append(tuple(q))
    point = tuple(q)
    if with_trace:
        return point, EvalTrace(h=tuple(hs), q=tuple(qs))
    return point, None


def barycentric_certificate(trace: EvalTrace) -> list[float]:
    """Coefficients c_j >= 0 with sum 1 and sum_j c_j*W_j = Q_N.

    Unrolling the convex recurrence gives c_j = h_j * prod_{i>j} (1-h_i);
    the coefficients witness that the result lies in the convex hull of
    the control points.
    """
    h = trace.h
    n_last = len(h) - 1
    coeffs = [0.0] * (n_last + 1)
    suffix = 1.0
    for j in range(n_last, -1, -1):
        coeffs[j] = h[j] * suffix
        suffix *= 1.0 - h[j]
    return coeffs


def hull_window_coefficients(
    trace: EvalTrace,
    stream_t: WeightedBasisStream,
    stream_u: WeightedBasisStream,
) -> list[float]:
    """Express the object's value at u as an affine combination of Q_0..Q_N.

    The trace and ``stream_t`` come from an evaluation at parameter t;
    ``stream_u`` carries the weighted basis values at a second parameter
    u.  The returned coefficients always sum to 1, and they are all
    nonnegative exactly when the consecutive basis ratios at t are
    dominated by those at u, in which case the value at u lies inside the
    convex hull of the trace points.

    Requires every h_k in the trace to be nonzero.
    """
    h = trace.h
    n_last = len(h) - 1
    if stream_t.length != n_last + 1 or stream_u.length != n_last + 1:
        raise DomainError("stream lengths must match the trace length")
    for hk in h:
        if hk == 0.0:
            raise DomainError("hull-window coefficients need nonzero h_k")
    cu = stream_u.values()
    denom = math.fsum(cu)
    coeffs = [0.0] * (n_last + 1)
    coeffs[n_last] = cu[n_last] / h[n_last] / denom
    both_values = stream_t.has_values and stream_u.has_values
    at = stream_t.values() if both_values else None
    rt = None if both_values else stream_t.ratios()
    ru = None if both_values else stream_u.ratios()
    for k in range(n_last):
        # Grouped so that identical t and u streams contract to an exact
        # zero factor (same products, or the same ratio divided by itself).
        if both_values:
            factor = 1.0 - (at[k] * cu[k + 1]) / (at[k + 1] * cu[k])
        else:
            factor = 1.0 - rt[k] / ru[k]
        coeffs[k] = cu[k] / h[k] * factor / denom
    return coeffs
