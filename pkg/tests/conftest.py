"""Shared test helpers: random specs and the hull-scale error metric."""

import numpy as np
import pytest

from bezeval import CurveSpec

# Half the spacing between 1.0 and the next double.
U = 2.0 ** -53


def component_scales(points):
    """Per-component magnitude of the control data.

    Every evaluator here forms convex combinations, so its result and its
    roundoff both scale with the largest control coordinate of each
    component; errors are measured relative to that scale (an exact zero
    crossing of one component would make result-relative error unbounded
    for any floating-point method).
    """
    d = len(points[0])
    return [max(abs(p[c]) for p in points) for c in range(d)]


def assert_points_close(result, reference, scales, tol, label=""):
    assert len(result) == len(reference) == len(scales)
    for x, r, s in zip(result, reference, scales):
        if s == 0.0:
            assert x == 0.0 and r == 0.0, label
        else:
            assert abs(x - r) <= tol * s, (
                f"{label}: |{x} - {r}| = {abs(x - r)} > {tol * s}"
            )


def random_curve(rng, n, d, rational):
    points = tuple(tuple(float(c) for c in rng.uniform(-1.0, 1.0, d))
                   for _ in range(n + 1))
    weights = None
    if rational:
        weights = tuple(float(w) for w in rng.uniform(0.01, 1.0, n + 1))
    return CurveSpec(points=points, weights=weights)


@pytest.fixture
def rng():
    return np.random.default_rng(20240911)
