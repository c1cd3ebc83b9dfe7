"""Triangular baselines and the extended-precision summation oracle."""

import tracemalloc

import pytest

from bezeval import (
    CurveSpec,
    DomainError,
    bernstein_sum_oracle,
    decasteljau,
    rational_decasteljau,
)
from bezeval import kernels
from conftest import U, assert_points_close, component_scales, random_curve

QUAD = CurveSpec(points=((0.0, 0.0), (1.0, 2.0), (2.0, 0.0)))


class TestDeCasteljau:
    def test_quadratic_midpoint(self):
        assert decasteljau(QUAD, 0.5) == (1.0, 1.0)

    def test_endpoints(self, rng):
        spec = random_curve(rng, 6, 3, False)
        assert decasteljau(spec, 0.0) == spec.points[0]
        assert decasteljau(spec, 1.0) == spec.points[-1]

    def test_single_interpolation(self):
        spec = CurveSpec(points=((0.0, 0.0), (4.0, 8.0)))
        assert decasteljau(spec, 0.25) == (1.0, 2.0)

    def test_rejects_weighted(self, rng):
        with pytest.raises(DomainError):
            decasteljau(random_curve(rng, 3, 2, True), 0.5)


class TestRationalDeCasteljau:
    def test_weighted_line(self):
        spec = CurveSpec(points=((0.0, 0.0), (1.0, 0.0)), weights=(1.0, 3.0))
        assert rational_decasteljau(spec, 0.5) == (0.75, 0.0)

    def test_equal_weights_match_polynomial(self, rng):
        for _ in range(30):
            n = int(rng.integers(1, 13))
            poly = random_curve(rng, n, 2, False)
            w = float(rng.uniform(0.1, 2.0))
            weighted = CurveSpec(points=poly.points, weights=(w,) * (n + 1))
            a = rational_decasteljau(weighted, 0.37)
            b = decasteljau(poly, 0.37)
            assert_points_close(
                a, b, component_scales(poly.points), 8 * U, "equal weights"
            )

    def test_t_zero(self, rng):
        spec = random_curve(rng, 5, 2, True)
        assert rational_decasteljau(spec, 0.0) == spec.points[0]

    def test_rejects_polynomial(self, rng):
        with pytest.raises(DomainError):
            rational_decasteljau(random_curve(rng, 3, 2, False), 0.5)


class TestOracle:
    def test_quadratic_midpoint_by_hand(self):
        # Degree-2 basis at 1/2 is (1/4, 1/2, 1/4).
        assert bernstein_sum_oracle(QUAD, 0.5) == (1.0, 1.0)

    def test_endpoint(self, rng):
        spec = random_curve(rng, 8, 2, True)
        assert bernstein_sum_oracle(spec, 0.0) == spec.points[0]

    def test_weighted_line_by_hand(self):
        spec = CurveSpec(points=((0.0, 0.0), (1.0, 0.0)), weights=(1.0, 3.0))
        assert bernstein_sum_oracle(spec, 0.5) == (0.75, 0.0)

    def test_baselines_track_oracle(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 21))
            rational = bool(rng.integers(0, 2))
            spec = random_curve(rng, n, 3, rational)
            t = float(rng.uniform())
            got = (
                rational_decasteljau(spec, t)
                if rational
                else decasteljau(spec, t)
            )
            want = bernstein_sum_oracle(spec, t)
            assert_points_close(
                got, want, component_scales(spec.points), 1e3 * U, "baseline"
            )


def _peak_bytes(fn):
    fn()  # warm caches outside the measurement
    best = None
    for _ in range(3):
        tracemalloc.start()
        fn()
        _, peak = tracemalloc.get_traced_memory()
        tracemalloc.stop()
        best = peak if best is None else min(best, peak)
    return best


class TestWorkingMemory:
    def test_triangular_scratch_grows_linearly_one_pass_does_not(self, rng):
        def inputs(n):
            spec = random_curve(rng, n, 3, False)
            return spec.n, spec.points

        n_small, pts_small = inputs(8)
        n_big, pts_big = inputs(64)

        dc_small = _peak_bytes(lambda: kernels.decasteljau(n_small, 0.4, pts_small))
        dc_big = _peak_bytes(lambda: kernels.decasteljau(n_big, 0.4, pts_big))
        new_small = _peak_bytes(lambda: kernels.poly_branched(n_small, 0.4, pts_small))
        new_big = _peak_bytes(lambda: kernels.poly_branched(n_big, 0.4, pts_big))

        # The triangular working row scales with n; the one-pass state is
        # a single point plus a handful of scalars.
        assert dc_big > 4 * dc_small
        assert new_big < 2 * new_small + 512
        assert new_big * 4 < dc_big
