"""Scalar-generic evaluation kernels for Bezier curves.

Every kernel is written against the plain arithmetic protocol (+, -, *, /
and ordering on the parameter), so one code path serves three
instantiations: Python floats in production, the counting scalar used for
operation accounting, and numpy arrays holding one lane per curve in the
benchmark harness.

The exact expression shapes and evaluation order are deliberate:

* operation counts per update must match the closed-form accounting
  (see ``bench.expected_flops``), so no term may be factored, fused or
  hoisted differently;
* at t = 0 and t = 1 the recurrences degenerate to exact endpoint
  results (0/(x+0) and x/x) with no special-casing.

Points are sequences of d scalars; control polygons are sequences of
points.  Kernels do not validate inputs; the public wrappers in
``curve`` and ``baselines`` do.

``one`` seeds the running convex coefficient and must be the unit of the
scalar instantiation; the counting path passes a counted 1 so that the
first coefficient update is tallied like every other.
"""

from __future__ import annotations


def poly_plain(n, t, points, one=1):
    """Unbranched linear-time evaluator, polynomial case."""
    h = one
    u = 1 - t
    n1 = n + 1
    q = list(points[0])
    for k in range(1, n1):
        h = h * t * (n1 - k)
        h = h / (k * u + h)
        h1 = 1 - h
        w = points[k]
        q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
    return q


def rational_plain(n, t, weights, points, one=1):
    """Unbranched linear-time evaluator, rational case."""
    h = one
    u = 1 - t
    n1 = n + 1
    q = list(points[0])
    for k in range(1, n1):
        h = h * t * (n1 - k) * weights[k]
        h = h / (k * u * weights[k - 1] + h)
        h1 = 1 - h
        w = points[k]
        q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
    return q


def poly_branched(n, t, points, one=1):
    """Branched linear-time evaluator, polynomial case.

    Precomputing the ratio t/(1-t) (or its reciprocal, whichever is <= 1)
    saves one multiplication per step at the cost of one branch on t.
    """
    h = one
    u = 1 - t
    n1 = n + 1
    q = list(points[0])
    if t <= 0.5:
        u = t / u
        for k in range(1, n1):
            h = h * u * (n1 - k)
            h = h / (k + h)
            h1 = 1 - h
            w = points[k]
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
    else:
        u = u / t
        for k in range(1, n1):
            h = h * (n1 - k)
            h = h / (k * u + h)
            h1 = 1 - h
            w = points[k]
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
    return q


def rational_branched(n, t, weights, points, one=1):
    """Branched linear-time evaluator, rational case."""
    h = one
    u = 1 - t
    n1 = n + 1
    q = list(points[0])
    if t <= 0.5:
        u = t / u
        for k in range(1, n1):
            h = h * u * (n1 - k) * weights[k]
            h = h / (k * weights[k - 1] + h)
            h1 = 1 - h
            w = points[k]
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
    else:
        u = u / t
        for k in range(1, n1):
            h = h * (n1 - k) * weights[k]
            h = h / (k * u * weights[k - 1] + h)
            h1 = 1 - h
            w = points[k]
            q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
    return q


def poly_batch(n, t, curves, one=1):
    """Evaluate several same-degree polynomial control polygons at one t.

    The convex coefficients do not depend on the control points, so they
    are computed once and applied to every curve (the h loop is outer,
    the curve loop inner).
    """
    qs = [list(points[0]) for points in curves]
    h = one
    u = 1 - t
    n1 = n + 1
    if t <= 0.5:
        u = t / u
        for k in range(1, n1):
            h = h * u * (n1 - k)
            h = h / (k + h)
            h1 = 1 - h
            for j, points in enumerate(curves):
                w = points[k]
                qs[j] = [h1 * qc + h * wc for qc, wc in zip(qs[j], w)]
    else:
        u = u / t
        for k in range(1, n1):
            h = h * (n1 - k)
            h = h / (k * u + h)
            h1 = 1 - h
            for j, points in enumerate(curves):
                w = points[k]
                qs[j] = [h1 * qc + h * wc for qc, wc in zip(qs[j], w)]
    return qs


def plain_with_trace(n, t, weights, points):
    """Unbranched evaluator retaining the h_k and Q_k sequences.

    ``weights`` may be None for the polynomial case.  Returns
    (point, h_list, q_list) with q_list entries as tuples.
    """
    u = 1 - t
    n1 = n + 1
    h = 1.0
    q = list(points[0])
    hs = [1.0]
    qs = [tuple(q)]
    for k in range(1, n1):
        if weights is None:
            num = h * t * (n1 - k)
            h = num / (k * u + num)
        else:
            num = h * t * (n1 - k) * weights[k]
            h = num / (k * u * weights[k - 1] + num)
        h1 = 1 - h
        w = points[k]
        q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
        hs.append(h)
        qs.append(tuple(q))
    return tuple(q), hs, qs


def plain_subtraction_free(n, t, weights, points):
    """Unbranched evaluator forming 1-h by a product, never a subtraction.

    Uses the identity 1 - h_k = (h_k/h_{k-1}) * rho_k, where rho_k is the
    consecutive weighted-basis ratio; every complement is nonnegative by
    construction.  Requires t in (0,1): the ratio divides by t and 1-t,
    so the caller resolves the (exact) endpoints itself.
    """
    u = 1 - t
    n1 = n + 1
    h_prev = 1.0
    q = list(points[0])
    for k in range(1, n1):
        if weights is None:
            num = k * u
            den = t * (n1 - k)
        else:
            num = weights[k - 1] * k * u
            den = weights[k] * t * (n1 - k)
        a = h_prev * den
        h = a / (num + a)
        h1 = (h / h_prev) * (num / den)
        w = points[k]
        q = [h1 * qc + h * wc for qc, wc in zip(q, w)]
        h_prev = h
    return q


def decasteljau(n, t, points):
    """Classic triangular evaluator, polynomial case.

    Repeated pairwise interpolation over an in-place working row of n+1
    points; quadratic work, linear working memory.
    """
    t1 = 1 - t
    q = [list(p) for p in points]
    for k in range(1, n + 1):
        for i in range(n - k + 1):
            a = q[i]
            b = q[i + 1]
            q[i] = [t1 * ac + t * bc for ac, bc in zip(a, b)]
    return q[0]


def rational_decasteljau(n, t, weights, points):
    """Classic triangular evaluator, rational case.

    Blends weights alongside points: each step forms u = (1-t)w_i,
    v = t*w_{i+1}, replaces w_i by u+v and interpolates with u/(u+v).
    """
    t1 = 1 - t
    w = list(weights)
    q = [list(p) for p in points]
    for k in range(1, n + 1):
        for i in range(n - k + 1):
            u = t1 * w[i]
            v = t * w[i + 1]
            w[i] = u + v
            u = u / w[i]
            v = 1 - u
            a = q[i]
            b = q[i + 1]
            q[i] = [u * ac + v * bc for ac, bc in zip(a, b)]
    return q[0]
