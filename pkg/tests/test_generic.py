"""Generic convex-combination engine: frozen examples and properties."""

import math

import gmpy2
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bezeval import (
    DomainError,
    EvalTrace,
    WeightedBasisStream,
    barycentric_certificate,
    gen_eval,
    gen_eval_subtraction_free,
    hull_window_coefficients,
)
from conftest import U, assert_points_close, component_scales


def stream_sum_oracle(values, points):
    """Direct weighted sum of the stream definition in extended precision."""
    with gmpy2.context(precision=120):
        den = gmpy2.mpfr(0)
        num = [gmpy2.mpfr(0)] * len(points[0])
        for v, p in zip(values, points):
            vm = gmpy2.mpfr(v)
            den += vm
            for c, x in enumerate(p):
                num[c] += vm * gmpy2.mpfr(x)
        return tuple(float(x / den) for x in num)


class TestGenEval:
    def test_single_point_object(self):
        stream = WeightedBasisStream.from_values([0.7])
        point, trace = gen_eval(stream, [(3.0, 7.0)])
        assert point == (3.0, 7.0)
        assert trace.h == (1.0,)

    def test_three_point_frozen_example(self):
        # Stream 0.25, 0.5, 0.25 over (0,0), (1,2), (2,0): the direct
        # weighted sum gives (1, 1) and the running coefficients are
        # 1, 2/3, 1/4 (each value over the prefix sum).
        stream = WeightedBasisStream.from_values([0.25, 0.5, 0.25])
        point, trace = gen_eval(stream, [(0.0, 0.0), (1.0, 2.0), (2.0, 0.0)])
        assert point == (1.0, 1.0)
        assert trace.h[0] == 1.0
        assert trace.h[1] == pytest.approx(2.0 / 3.0, abs=2 * U)
        assert trace.h[2] == pytest.approx(0.25, abs=2 * U)

    def test_two_point_weighted_example(self):
        # Values 0.5 and 1.5: (0.5*(0,0) + 1.5*(1,0)) / 2 = (0.75, 0).
        stream = WeightedBasisStream.from_values([0.5, 1.5])
        point, _ = gen_eval(stream, [(0.0, 0.0), (1.0, 0.0)])
        assert point == (0.75, 0.0)

    def test_no_trace_fast_path(self):
        stream = WeightedBasisStream.from_values([0.25, 0.5, 0.25])
        point, trace = gen_eval(
            stream, [(0.0, 0.0), (1.0, 2.0), (2.0, 0.0)], with_trace=False
        )
        assert point == (1.0, 1.0)
        assert trace is None

    def test_dimension_mismatch_rejected(self):
        stream = WeightedBasisStream.from_values([1.0, 1.0])
        with pytest.raises(DomainError):
            gen_eval(stream, [(0.0, 0.0), (1.0,)])

    def test_length_mismatch_rejected(self):
        stream = WeightedBasisStream.from_values([1.0, 1.0, 1.0])
        with pytest.raises(DomainError):
            gen_eval(stream, [(0.0,), (1.0,)])

    @pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
    def test_nonpositive_stream_rejected(self, bad):
        with pytest.raises(DomainError):
            WeightedBasisStream.from_values([1.0, bad])
        with pytest.raises(DomainError):
            WeightedBasisStream.from_ratios([bad])

    def test_ratio_and_value_forms_agree(self, rng):
        values = [float(v) for v in rng.uniform(0.05, 5.0, 9)]
        points = [tuple(map(float, rng.uniform(-1, 1, 3))) for _ in range(9)]
        ratios = [values[k - 1] / values[k] for k in range(1, 9)]
        p1, t1 = gen_eval(WeightedBasisStream.from_values(values), points)
        p2, t2 = gen_eval(WeightedBasisStream.from_ratios(ratios), points)
        assert p1 == p2
        assert t1.h == t2.h

    def test_matches_direct_sum_randomized(self, rng):
        for _ in range(200):
            n = int(rng.integers(0, 51))
            d = int(rng.integers(1, 6))
            values = [float(v) for v in rng.uniform(1e-3, 1e3, n + 1)]
            points = [tuple(map(float, rng.uniform(-1, 1, d)))
                      for _ in range(n + 1)]
            want = stream_sum_oracle(values, points)
            got, trace = gen_eval(WeightedBasisStream.from_values(values), points)
            scales = component_scales(points)
            assert_points_close(got, want, scales, 64 * U * (n + 1), "gen_eval")
            assert trace.h[0] == 1.0
            assert all(0.0 <= h <= 1.0 for h in trace.h)


class TestSubtractionFree:
    def test_agrees_with_standard(self, rng):
        for _ in range(100):
            n = int(rng.integers(0, 30))
            values = [float(v) for v in rng.uniform(1e-3, 1e3, n + 1)]
            points = [tuple(map(float, rng.uniform(-1, 1, 2)))
                      for _ in range(n + 1)]
            stream = WeightedBasisStream.from_values(values)
            p1, _ = gen_eval(stream, points)
            p2, _ = gen_eval_subtraction_free(stream, points)
            scales = component_scales(points)
            assert_points_close(p1, p2, scales, 8 * U * (n + 1), "sub-free")

    def test_complements_nonnegative_near_one(self):
        # Ratios of a few units in the last place drive every h_k to
        # within a few roundoffs of 1, the regime where naive 1 - h
        # cancels.  The product form must stay nonnegative.
        for rho_scale in (0.25 * U, U, 4 * U):
            ratios = [rho_scale] * 12
            points = [(float(k), 1.0) for k in range(13)]
            stream = WeightedBasisStream.from_ratios(ratios)
            point, trace = gen_eval_subtraction_free(stream, points)
            for k in range(1, 13):
                assert trace.h[k] >= 1.0 - 8 * U
                # Identical expression to the kernel's complement update.
                complement = (trace.h[k] / trace.h[k - 1]) * ratios[k - 1]
                assert complement >= 0.0

    def test_degenerate_single_point(self):
        stream = WeightedBasisStream.from_values([2.0])
        point, trace = gen_eval_subtraction_free(stream, [(5.0,)])
        assert point == (5.0,)
        assert trace.h == (1.0,)


class TestBarycentricCertificate:
    def test_trivial_trace(self):
        trace = EvalTrace(h=(1.0,), q=((0.0, 0.0),))
        assert barycentric_certificate(trace) == [1.0]

    def test_frozen_expansion(self):
        # h = [1, 2/3, 1/4] unrolls to [1*(1/3)*(3/4), (2/3)*(3/4), 1/4].
        trace = EvalTrace(
            h=(1.0, 2.0 / 3.0, 0.25),
            q=((0.0, 0.0), (0.0, 0.0), (0.0, 0.0)),
        )
        c = barycentric_certificate(trace)
        assert c[0] == pytest.approx(0.25, abs=4 * U)
        assert c[1] == pytest.approx(0.5, abs=4 * U)
        assert c[2] == pytest.approx(0.25, abs=4 * U)

    @given(
        st.lists(st.floats(min_value=1e-3, max_value=1e3), min_size=1, max_size=40)
    )
    @settings(max_examples=60, deadline=None)
    def test_nonnegative_normalized_reconstructing(self, values):
        n = len(values) - 1
        points = [(float(k),) for k in range(n + 1)]
        point, trace = gen_eval(WeightedBasisStream.from_values(values), points)
        c = barycentric_certificate(trace)
        assert all(x >= 0.0 for x in c)
        assert abs(math.fsum(c) - 1.0) <= 8 * U * (n + 1)
        recon = math.fsum(cj * p[0] for cj, p in zip(c, points))
        scale = max(abs(p[0]) for p in points)
        assert abs(recon - point[0]) <= 64 * U * (n + 1) * max(scale, 1.0)


class TestHullWindowCoefficients:
    def test_same_stream_concentrates_on_last(self):
        values = [0.2, 0.5, 0.3]
        stream = WeightedBasisStream.from_values(values)
        points = [(0.0, 0.0), (1.0, 2.0), (2.0, 0.0)]
        _, trace = gen_eval(stream, points)
        coeffs = hull_window_coefficients(trace, stream, stream)
        assert coeffs[0] == 0.0
        assert coeffs[1] == 0.0
        assert coeffs[2] == pytest.approx(1.0, abs=8 * U)

    def test_same_ratio_stream_concentrates_on_last(self):
        ratios = [0.4, 5.0 / 3.0]
        s1 = WeightedBasisStream.from_ratios(ratios)
        s2 = WeightedBasisStream.from_ratios(list(ratios))
        points = [(0.0, 0.0), (1.0, 2.0), (2.0, 0.0)]
        _, trace = gen_eval(s1, points)
        coeffs = hull_window_coefficients(trace, s1, s2)
        assert coeffs[0] == 0.0 and coeffs[1] == 0.0
        assert coeffs[2] == pytest.approx(1.0, abs=8 * U)

    def test_sums_to_one_and_reconstructs(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 16))
            vt = [float(v) for v in rng.uniform(0.05, 5.0, n + 1)]
            vu = [float(v) for v in rng.uniform(0.05, 5.0, n + 1)]
            points = [tuple(map(float, rng.uniform(-1, 1, 2)))
                      for _ in range(n + 1)]
            st_t = WeightedBasisStream.from_values(vt)
            st_u = WeightedBasisStream.from_values(vu)
            _, trace = gen_eval(st_t, points)
            coeffs = hull_window_coefficients(trace, st_t, st_u)
            assert math.fsum(coeffs) == pytest.approx(1.0, abs=64 * U * (n + 1))
            want = stream_sum_oracle(vu, points)
            got = tuple(
                math.fsum(c * q[i] for c, q in zip(coeffs, trace.q))
                for i in range(2)
            )
            # The expansion can have large mixed-sign coefficients, so
            # allow headroom proportional to their total size.
            blowup = max(1.0, math.fsum(abs(c) for c in coeffs))
            scales = [max(s, 1e-2) for s in component_scales(points)]
            assert_points_close(
                got, want, scales, 1e3 * U * (n + 1) * blowup, "hull window"
            )

    def test_nonnegative_under_ratio_monotonicity(self, rng):
        # Ratios at t dominated by ratios at u force nonnegativity.
        for _ in range(100):
            n = int(rng.integers(1, 12))
            rt = [float(v) for v in rng.uniform(0.1, 2.0, n)]
            ru = [r * float(f) for r, f in zip(rt, rng.uniform(1.0, 3.0, n))]
            points = [tuple(map(float, rng.uniform(-1, 1, 2)))
                      for _ in range(n + 1)]
            st_t = WeightedBasisStream.from_ratios(rt)
            st_u = WeightedBasisStream.from_ratios(ru)
            _, trace = gen_eval(st_t, points)
            coeffs = hull_window_coefficients(trace, st_t, st_u)
            assert min(coeffs) >= -8 * U * (n + 1)

    def test_zero_h_rejected(self):
        trace = EvalTrace(h=(1.0, 0.0), q=((0.0,), (0.0,)))
        stream = WeightedBasisStream.from_values([1.0, 1.0])
        with pytest.raises(DomainError):
            hull_window_coefficients(trace, stream, stream)


class TestStream:
    def test_length_from_ratios(self):
        assert WeightedBasisStream.from_ratios([]).length == 1
        assert WeightedBasisStream.from_ratios([1.0, 2.0]).length == 3

    def test_values_reconstruction_is_normalized(self):
        s = WeightedBasisStream.from_ratios([0.5, 2.0])
        assert s.values() == (1.0, 2.0, 1.0)

    def test_ratios_from_values(self):
        s = WeightedBasisStream.from_values([1.0, 2.0, 4.0])
        assert s.ratios() == (0.5, 0.5)
