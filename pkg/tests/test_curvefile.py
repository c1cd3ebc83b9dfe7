"""Text format round-trips and rejection of malformed documents."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bezeval import (
    CurveSpec,
    ParseError,
    RectSurfaceSpec,
    TriSurfaceSpec,
    parse_text,
    write_text,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
positive = st.floats(min_value=1e-3, max_value=1e3)


def test_parse_minimal_curve():
    spec = parse_text("curve 2 2\n0 0\n1 2\n2 0\n")
    assert isinstance(spec, CurveSpec)
    assert spec.points == ((0.0, 0.0), (1.0, 2.0), (2.0, 0.0))
    assert spec.weights is None


def test_parse_rational_curve_with_comments():
    text = """
    # a weighted segment
    curve 2 1 rational
    0 0   # start
    1 0
    1
    3
    """
    spec = parse_text(text)
    assert spec.weights == (1.0, 3.0)


def test_parse_rect_surface():
    text = "rectsurface 3 1 1\n0 0 0\n0 1 0\n1 0 0\n1 1 1\n"
    spec = parse_text(text)
    assert isinstance(spec, RectSurfaceSpec)
    assert spec.m == 1 and spec.n == 1 and spec.d == 3


def test_parse_tri_surface():
    text = "trisurface 2 1 rational\n0 0\n0 1\n1 0\n1\n1\n2\n"
    spec = parse_text(text)
    assert isinstance(spec, TriSurfaceSpec)
    assert spec.n == 1
    assert spec.weights == ((1.0, 1.0), (2.0,))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "curve 2\n0 0\n",
        "helix 2 1\n0 0\n1 1\n",
        "curve 2 1\n0 0\n1\n",  # wrong coordinate count
        "curve 2 1\n0 0\n",  # missing point line
        "curve 2 1\n0 0\n1 1\nextra 1\n",  # trailing content
        "curve 2 1\n0 nan\n1 1\n",
        "curve 2 1\n0 inf\n1 1\n",
        "curve 2 1 rational\n0 0\n1 1\n1\n-2\n",  # bad weight
        "curve 2 1 rational\n0 0\n1 1\n1\n",  # missing weight
        "curve 0 1\n\n",  # bad dimension
    ],
)
def test_malformed_documents_rejected(text):
    with pytest.raises(ParseError):
        parse_text(text)


@given(
    n=st.integers(min_value=0, max_value=8),
    d=st.integers(min_value=1, max_value=4),
    rational=st.booleans(),
    data=st.data(),
)
@settings(max_examples=60, deadline=None)
def test_curve_round_trip(n, d, rational, data):
    points = tuple(
        tuple(data.draw(finite) for _ in range(d)) for _ in range(n + 1)
    )
    weights = (
        tuple(data.draw(positive) for _ in range(n + 1)) if rational else None
    )
    spec = CurveSpec(points=points, weights=weights)
    assert parse_text(write_text(spec)) == spec


def test_rect_round_trip():
    spec = RectSurfaceSpec(
        points=(
            ((0.1, -2.0), (0.3, 4.0), (1.0, 0.5)),
            ((5.0, 0.25), (-1.5, 2.0), (0.0, 0.0)),
        ),
        weights=((0.5, 1.0, 2.0), (0.125, 3.0, 1.0)),
    )
    assert parse_text(write_text(spec)) == spec


def test_tri_round_trip():
    spec = TriSurfaceSpec(
        points=(((0.0, 0.0), (0.5, 1.0), (0.0, 2.0)), ((1.0, 0.0), (1.5, 1.0)), ((2.0, 0.0),)),
        weights=((1.0, 0.5, 2.0), (1.5, 1.0), (0.25,)),
    )
    assert parse_text(write_text(spec)) == spec


def test_round_trip_preserves_exact_binary_values():
    spec = CurveSpec(points=((0.1, 1 / 3), (2 / 7, 1e-300)))
    again = parse_text(write_text(spec))
    assert again.points == spec.points
