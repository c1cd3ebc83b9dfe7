"""Reference curve evaluators.

Two kinds of ground truth live here: the classic de Casteljau schemes
(geometric, quadratic-work baselines that every faster evaluator is
compared against) and a literal weighted-basis summation carried out in
extended precision, which serves as the accuracy reference in tests.
"""

from __future__ import annotations

import math

import gmpy2

from . import kernels
from .curve import CurveSpec
from .errors import DomainError
from .generic import Point

# At least twice the double-precision significand, so oracle results are
# correctly rounded for the degrees exercised in tests.
ORACLE_PRECISION_BITS = 120


def _check_param(t: float) -> float:
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"parameter {t!r} outside [0, 1]")
    return t


def decasteljau(spec: CurveSpec, t: float) -> Point:
    """Triangular-scheme evaluation of a polynomial curve.

    Works on an in-place row of n+1 points, interpolating neighbor pairs
    n times; linear working memory, quadratic work.
    """
    if spec.is_rational:
        raise DomainError("decasteljau handles polynomial curves; "
                          "use rational_decasteljau for weighted ones")
    t = _check_param(t)
    return tuple(kernels.decasteljau(spec.n, t, spec.points))


def rational_decasteljau(spec: CurveSpec, t: float) -> Point:
    """Triangular-scheme evaluation of a rational curve.

    Carries a working weight row alongside the points and blends with the
    weight-adjusted interpolation factor at every step.
    """
    if not spec.is_rational:
        raise DomainError("rational_decasteljau needs a weighted curve")
    t = _check_param(t)
    return tuple(kernels.rational_decasteljau(spec.n, t, spec.weights, spec.points))


def bernstein_sum_oracle(spec: CurveSpec, t: float) -> Point:
    """Literal weighted Bernstein summation in extended precision.

    Binomial coefficients are exact integers, parameter powers are built
    by repeated multiplication, and all arithmetic runs at
    ``ORACLE_PRECISION_BITS`` before the single final rounding to double.
    Deliberately independent of the one-pass recurrences it is used to
    check.
    """
    t = _check_param(t)
    n, d = spec.n, spec.d
    with gmpy2.context(precision=ORACLE_PRECISION_BITS):
        tm = gmpy2.mpfr(t)
        um = 1 - tm
        tp = [gmpy2.mpfr(1)]
        up = [gmpy2.mpfr(1)]
        for _ in range(n):
            tp.append(tp[-1] * tm)
            up.append(up[-1] * um)
        num = [gmpy2.mpfr(0)] * d
        den = gmpy2.mpfr(0)
        for k in range(n + 1):
            term = math.comb(n, k) * tp[k] * up[n - k]
            if spec.weights is not None:
                term *= gmpy2.mpfr(spec.weights[k])
            den += term
            w = spec.points[k]
            for c in range(d):
                num[c] += term * gmpy2.mpfr(w[c])
        if spec.weights is None:
            return tuple(float(x) for x in num)
        return tuple(float(x / den) for x in num)
