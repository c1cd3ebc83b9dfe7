"""Operation accounting and the timing harness.

Flop accounting instruments the very kernels that production uses: the
counting scalar below is just another instantiation of the generic code
paths in ``kernels``, so what is counted is what is timed.  Counted
operations are scalar +, -, * and / only; comparisons, integer index
arithmetic and loop overhead are free, and integer loop constants count
only where a kernel actually multiplies or adds them into a scalar.

The benchmark harness instantiates the same kernels with numpy arrays
holding one lane per curve, evaluates every generated curve at a fixed
parameter grid with each algorithm, and records single-run wall times
per (algorithm, degree, dimension, rationality) cell.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .curve import CurveSpec
from .errors import DomainError

ALGORITHMS = ("new_branched", "new_plain", "decasteljau", "rational_decasteljau")


class FlopCounter:
    """Mutable per-invocation tally of scalar arithmetic."""

    __slots__ = ("adds_subs", "mults", "divs")

    def __init__(self):
        self.adds_subs = 0
        self.mults = 0
        self.divs = 0

    @property
    def total(self) -> int:
        return self.adds_subs + self.mults + self.divs


class CountedFloat:
    """A float that reports every +, -, *, / to its counter.

    Comparisons and conversions are free.  Mixed operations with plain
    ints and floats count as one flop, matching the accounting convention
    for integer constants promoted into scalar expressions.
    """

    __slots__ = ("v", "c")

    def __init__(self, value, counter):
        self.v = value
        self.c = counter

    def __float__(self):
        return float(self.v)

    def __repr__(self):
        return f"CountedFloat({self.v!r})"

    def __add__(self, other):
        c = self.c
        c.adds_subs += 1
        o = other.v if type(other) is CountedFloat else other
        return CountedFloat(self.v + o, c)

    def __radd__(self, other):
        c = self.c
        c.adds_subs += 1
        return CountedFloat(other + self.v, c)

    def __sub__(self, other):
        c = self.c
        c.adds_subs += 1
        o = other.v if type(other) is CountedFloat else other
        return CountedFloat(self.v - o, c)

    def __rsub__(self, other):
        c = self.c
        c.adds_subs += 1
        return CountedFloat(other - self.v, c)

    def __mul__(self, other):
        c = self.c
        c.mults += 1
        o = other.v if type(other) is CountedFloat else other
        return CountedFloat(self.v * o, c)

    def __rmul__(self, other):
        c = self.c
        c.mults += 1
        return CountedFloat(other * self.v, c)

    def __truediv__(self, other):
        c = self.c
        c.divs += 1
        o = other.v if type(other) is CountedFloat else other
        return CountedFloat(self.v / o, c)

    def __rtruediv__(self, other):
        c = self.c
        c.divs += 1
        return CountedFloat(other / self.v, c)

    def _cmp_value(self, other):
        return other.v if type(other) is CountedFloat else other

    def __le__(self, other):
        return self.v <= self._cmp_value(other)

    def __lt__(self, other):
        return self.v < self._cmp_value(other)

    def __ge__(self, other):
        return self.v >= self._cmp_value(other)

    def __gt__(self, other):
        return self.v > self._cmp_value(other)

    def __eq__(self, other):
        return self.v == self._cmp_value(other)


@dataclass(frozen=True)
class FlopReport:
    """Per-class operation counts for one evaluation."""

    algorithm: str
    n: int
    d: int
    rational: bool
    adds_subs: int
    mults: int
    divs: int

    @property
    def total(self) -> int:
        return self.adds_subs + self.mults + self.divs


def expected_flops(algorithm: str, n: int, d: int, rational: bool) -> FlopReport:
    """Closed-form operation counts for one curve evaluation.

    The branched one-pass method costs (3d+5)n+2 flops on a polynomial
    curve and (3d+7)n+2 on a rational one; the unbranched variant costs
    one more multiplication per step but saves the up-front ratio
    division.  The triangular baselines are quadratic: 3dn(n+1)/2+1 and
    (3d+5)n(n+1)/2+1.  Per-class splits for the unbranched variant follow
    from its update shape (only its totals have independent closed
    forms).
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if n < 0 or d < 1:
        raise DomainError("need degree n >= 0 and dimension d >= 1")
    if algorithm == "decasteljau" and rational:
        raise DomainError("decasteljau is the polynomial baseline")
    if algorithm == "rational_decasteljau" and not rational:
        raise DomainError("rational_decasteljau is the rational baseline")
    if algorithm == "new_branched":
        adds = (d + 2) * n + 1
        mults = 2 * (d + 2) * n if rational else 2 * (d + 1) * n
        divs = n + 1
    elif algorithm == "new_plain":
        adds = (d + 2) * n + 1
        mults = (2 * d + 5) * n if rational else (2 * d + 3) * n
        divs = n
    elif algorithm == "decasteljau":
        adds = d * n * (n + 1) // 2 + 1
        mults = d * n * (n + 1)
        divs = 0
    else:
        adds = (d + 2) * n * (n + 1) // 2 + 1
        mults = (d + 1) * n * (n + 1)
        divs = n * (n + 1) // 2
    return FlopReport(algorithm, n, d, rational, adds, mults, divs)


def expected_batch_flops(m_curves: int, n: int, d: int) -> FlopReport:
    """Closed-form counts for evaluating m same-degree polynomial curves
    at one parameter with shared convex coefficients: (3dM+5)n+2 total."""
    if m_curves < 1:
        raise DomainError("need at least one curve")
    adds = (d * m_curves + 2) * n + 1
    mults = (2 * d * m_curves + 2) * n
    divs = n + 1
    return FlopReport("new_batch", n, d, False, adds, mults, divs)


def _counted_inputs(spec: CurveSpec, t: float, counter: FlopCounter):
    tc = CountedFloat(float(t), counter)
    points = [
        [CountedFloat(c, counter) for c in p] for p in spec.points
    ]
    weights = None
    if spec.weights is not None:
        weights = [CountedFloat(w, counter) for w in spec.weights]
    return tc, weights, points


def count_flops(algorithm: str, spec: CurveSpec, t: float) -> FlopReport:
    """Observed operation counts for one evaluation of ``spec`` at t.

    Runs the production kernel for ``algorithm`` on counting scalars and
    tallies the arithmetic.  The counter is private to the invocation.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"parameter {t!r} outside [0, 1]")
    counter = FlopCounter()
    tc, weights, points = _counted_inputs(spec, t, counter)
    one = CountedFloat(1.0, counter)
    if algorithm == "decasteljau":
        if spec.is_rational:
            raise DomainError("decasteljau is the polynomial baseline")
        kernels.decasteljau(spec.n, tc, points)
    elif algorithm == "rational_decasteljau":
        if not spec.is_rational:
            raise DomainError("rational_decasteljau needs a weighted curve")
        kernels.rational_decasteljau(spec.n, tc, weights, points)
    elif algorithm == "new_branched":
        if spec.is_rational:
            kernels.rational_branched(spec.n, tc, weights, points, one=one)
        else:
            kernels.poly_branched(spec.n, tc, points, one=one)
    else:
        if spec.is_rational:
            kernels.rational_plain(spec.n, tc, weights, points, one=one)
        else:
            kernels.poly_plain(spec.n, tc, points, one=one)
    return FlopReport(
        algorithm,
        spec.n,
        spec.d,
        spec.is_rational,
        counter.adds_subs,
        counter.mults,
        counter.divs,
    )


def count_batch_flops(specs, t: float) -> FlopReport:
    """Observed counts for one shared-coefficient batch evaluation."""
    if not specs:
        raise DomainError("need at least one curve")
    n = specs[0].n
    d = specs[0].d
    for s in specs:
        if s.is_rational or s.n != n:
            raise DomainError("batch counting needs polynomial curves of one degree")
    counter = FlopCounter()
    tc = CountedFloat(float(t), counter)
    curves = [
        [[CountedFloat(c, counter) for c in p] for p in s.points] for s in specs
    ]
    kernels.poly_batch(n, tc, curves, one=CountedFloat(1.0, counter))
    return FlopReport(
        "new_batch", n, d, False, counter.adds_subs, counter.mults, counter.divs
    )


@dataclass(frozen=True)
class BenchConfig:
    """Benchmark shape: which cells to run and how much work per cell.

    Curves are generated per cell from ``rng_seed`` (coordinates uniform
    in ``point_range``, weights uniform in ``weight_range``) and each is
    evaluated at ``eval_points`` parameters t_i = i/(eval_points-1).
    Timing runs in double precision by default; ``precision="single"``
    stores the generated data as float32 instead.
    """

    degrees: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 10, 15, 20)
    dims: tuple[int, ...] = (2, 3)
    curves_per_cell: int = 1000
    eval_points: int = 501
    rng_seed: int = 0
    point_range: tuple[float, float] = (-1.0, 1.0)
    weight_range: tuple[float, float] = (0.01, 1.0)
    precision: str = "double"

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(n) for n in self.degrees))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if not self.degrees or min(self.degrees) < 1:
            raise DomainError("degrees must be integers >= 1")
        if not self.dims or min(self.dims) < 1:
            raise DomainError("dimensions must be integers >= 1")
        if self.curves_per_cell < 1 or self.eval_points < 1:
            raise DomainError("curve and evaluation counts must be >= 1")
        if self.rng_seed < 0:
            raise DomainError("rng_seed must be nonnegative")
        lo, hi = self.point_range
        if not lo < hi:
            raise DomainError("point_range must be nonempty")
        wlo, whi = self.weight_range
        if not (0.0 < wlo < whi):
            raise DomainError("weight_range must be positive and nonempty")
        if self.precision not in ("double", "single"):
            raise DomainError("precision must be 'double' or 'single'")

    def parameter_grid(self) -> list[float]:
        p = self.eval_points
        if p == 1:
            return [0.0]
        return [i / (p - 1) for i in range(p)]


@dataclass(frozen=True)
class BenchCell:
    """One timed (algorithm, degree, dimension, rationality) cell."""

    algorithm: str
    n: int
    d: int
    rational: bool
    curves: int
    evals: int
    total_seconds: float
    ratio_vs_decasteljau: float
    result_checksum: float

    @property
    def mean_seconds_per_eval(self) -> float:
        return self.total_seconds / self.evals


@dataclass(frozen=True)
class BenchReport:
    config: BenchConfig
    cells: tuple[BenchCell, ...]
    failures: tuple[tuple[int, int, bool, str], ...] = field(default=())

    def cell(self, algorithm: str, n: int, d: int, rational: bool) -> BenchCell:
        for c in self.cells:
            if (c.algorithm, c.n, c.d, c.rational) == (algorithm, n, d, rational):
                return c
        raise KeyError((algorithm, n, d, rational))


def _cell_inputs(config: BenchConfig, n: int, d: int, rational: bool):
    rng = np.random.default_rng([config.rng_seed, n, d, int(rational)])
    m = config.curves_per_cell
    lo, hi = config.point_range
    dtype = np.float64 if config.precision == "double" else np.float32
    coords = rng.uniform(lo, hi, size=(n + 1, d, m)).astype(dtype, copy=False)
    points = [[coords[k, c] for c in range(d)] for k in range(n + 1)]
    weights = None
    if rational:
        wlo, whi = config.weight_range
        wgrid = rng.uniform(wlo, whi, size=(n + 1, m)).astype(dtype, copy=False)
        weights = [wgrid[k] for k in range(n + 1)]
    return points, weights


def _timed_pass(eval_at, tgrid):
    """Time one full sweep over the parameter grid.

    The evaluated coordinates are folded into a checksum inside the loop;
    the folding cost is identical for every algorithm, and the checksum
    doubles as a determinism witness for the report.
    """
    eval_at(0.5)  # warmup
    checksum = 0.0
    start = time.perf_counter()
    for t in tgrid:
        q = eval_at(t)
        for c in q:
            checksum += float(c.sum())
    elapsed = time.perf_counter() - start
    return elapsed, checksum


def _run_cell(config: BenchConfig, n: int, d: int, rational: bool):
    points, weights = _cell_inputs(config, n, d, rational)
    tgrid = config.parameter_grid()
    if rational:
        new_eval = lambda t: kernels.rational_branched(n, t, weights, points)
        base_eval = lambda t: kernels.rational_decasteljau(n, t, weights, points)
        base_name = "rational_decasteljau"
    else:
        new_eval = lambda t: kernels.poly_branched(n, t, points)
        base_eval = lambda t: kernels.decasteljau(n, t, points)
        base_name = "decasteljau"
    new_time, new_sum = _timed_pass(new_eval, tgrid)
    base_time, base_sum = _timed_pass(base_eval, tgrid)
    evals = config.curves_per_cell * len(tgrid)
    ratio = base_time / new_time if new_time > 0.0 else float("inf")
    return [
        BenchCell("new_branched", n, d, rational, config.curves_per_cell,
                  evals, new_time, ratio, new_sum),
        BenchCell(base_name, n, d, rational, config.curves_per_cell,
                  evals, base_time, 1.0, base_sum),
    ]


def run_benchmark(config: BenchConfig) -> BenchReport:
    """Run every configured cell and collect single-run wall times.

    Curve generation happens outside the timed regions, every algorithm
    sees identical inputs, and the timed loops are single threaded.
    Everything except the wall times is deterministic in the seed; a
    per-cell checksum of the evaluated coordinates witnesses that.
    Cells that exhaust resources are reported in ``failures`` without
    aborting the rest.

    The polynomial one-pass cells share the parameter-only convex
    coefficients across the curves of the cell (the batch structure);
    rational coefficients depend on each curve's weights, so rational
    cells do per-curve work for every algorithm.
    """
    cells = []
    failures = []
    for n in config.degrees:
        for d in config.dims:
            for rational in (False, True):
                try:
                    cells.extend(_run_cell(config, n, d, rational))
                except MemoryError as exc:
                    failures.append((n, d, rational, f"out of memory: {exc}"))
    return BenchReport(config=config, cells=tuple(cells), failures=tuple(failures))


CSV_HEADER = "algorithm,n,d,rational,curves,evals,total_seconds,ratio_vs_decasteljau"


def report_to_csv(report: BenchReport) -> str:
    lines = [CSV_HEADER]
    for c in report.cells:
        lines.append(
            f"{c.algorithm},{c.n},{c.d},{'yes' if c.rational else 'no'},"
            f"{c.curves},{c.evals},{c.total_seconds:.6f},"
            f"{c.ratio_vs_decasteljau:.3f}"
        )
    return "\n".join(lines) + "\n"


def report_to_markdown(report: BenchReport) -> str:
    """Aligned table of per-cell times: one row per (n, d), four time
    columns (polynomial and rational, one-pass method and baseline)."""

    def fmt(algorithm, n, d, rational):
        try:
            return f"{report.cell(algorithm, n, d, rational).total_seconds:.3f}"
        except KeyError:
            return "-"

    header = (
        "| n | d | curve new (s) | curve de Casteljau (s) "
        "| rational new (s) | rational de Casteljau (s) |"
    )
    rule = "|---|---|---|---|---|---|"
    rows = [header, rule]
    for n in report.config.degrees:
        for d in report.config.dims:
            rows.append(
                f"| {n} | {d} "
                f"| {fmt('new_branched', n, d, False)} "
                f"| {fmt('decasteljau', n, d, False)} "
                f"| {fmt('new_branched', n, d, True)} "
                f"| {fmt('rational_decasteljau', n, d, True)} |"
            )
    return "\n".join(rows) + "\n"
