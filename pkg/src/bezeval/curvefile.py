"""Line-oriented text files for curves and surfaces.

The format is deliberately plain so files diff well and need no parser
dependencies:

    curve d n [rational]          rectsurface d m n [rational]
    <n+1 point lines>             <(m+1)*(n+1) point lines, row-major>
    [<n+1 weight lines>]          [matching weight lines]

    trisurface d n [rational]
    <point lines for rows i = 0..n, row i holding n-i+1 points>
    [matching weight lines]

Each point line carries d scalars; weight lines carry one scalar each
and are present exactly when the header says ``rational``.  Blank lines
and ``#`` comments are ignored.  All scalars must be finite.
"""

from __future__ import annotations

from .curve import CurveSpec
from .errors import DomainError, ParseError
from .surface import RectSurfaceSpec, TriSurfaceSpec

Spec = CurveSpec | RectSurfaceSpec | TriSurfaceSpec


def _tokenized_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((idx, line.split()))
    return out


def _scalar(token: str, lineno: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {token!r} is not a number") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise ParseError(f"line {lineno}: nonfinite scalar {token!r}")
    return value


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {what} {token!r} is not an integer") from None


def _take_points(lines, start, count, d):
    points = []
    for ofs in range(count):
        if start + ofs >= len(lines):
            raise ParseError(f"expected {count} point lines, found {ofs}")
        lineno, tokens = lines[start + ofs]
        if len(tokens) != d:
            raise ParseError(
                f"line {lineno}: expected {d} coordinates, found {len(tokens)}"
            )
        points.append(tuple(_scalar(tok, lineno) for tok in tokens))
    return points, start + count


def _take_weights(lines, start, count):
    weights = []
    for ofs in range(count):
        if start + ofs >= len(lines):
            raise ParseError(f"expected {count} weight lines, found {ofs}")
        lineno, tokens = lines[start + ofs]
        if len(tokens) != 1:
            raise ParseError(f"line {lineno}: expected one weight per line")
        weights.append(_scalar(tokens[0], lineno))
    return weights, start + count


def parse_text(text: str) -> Spec:
    """Parse one curve or surface document.

    Invariant violations (bad weights, inconsistent dimensions) surface
    as :class:`ParseError` too: a file that breaks them is malformed.
    """
    lines = _tokenized_lines(text)
    if not lines:
        raise ParseError("empty document")
    lineno, header = lines[0]
    kind = header[0].lower()
    rational = False
    if header and header[-1].lower() == "rational":
        rational = True
        header = header[:-1]
    try:
        if kind == "curve":
            if len(header) != 3:
                raise ParseError(f"line {lineno}: curve header needs 'curve d n'")
            d = _int(header[1], lineno, "dimension")
            n = _int(header[2], lineno, "degree")
            if d < 1 or n < 0:
                raise ParseError(f"line {lineno}: need d >= 1 and n >= 0")
            pos = 1
            points, pos = _take_points(lines, pos, n + 1, d)
            weights = None
            if rational:
                weights, pos = _take_weights(lines, pos, n + 1)
            _expect_end(lines, pos)
            return CurveSpec(points=tuple(points), weights=weights)
        if kind == "rectsurface":
            if len(header) != 4:
                raise ParseError(
                    f"line {lineno}: rectsurface header needs 'rectsurface d m n'"
                )
            d = _int(header[1], lineno, "dimension")
            m = _int(header[2], lineno, "degree m")
            n = _int(header[3], lineno, "degree n")
            if d < 1 or m < 0 or n < 0:
                raise ParseError(f"line {lineno}: need d >= 1 and m, n >= 0")
            pos = 1
            rows = []
            for _ in range(m + 1):
                row, pos = _take_points(lines, pos, n + 1, d)
                rows.append(tuple(row))
            wrows = None
            if rational:
                wrows = []
                for _ in range(m + 1):
                    wrow, pos = _take_weights(lines, pos, n + 1)
                    wrows.append(tuple(wrow))
                wrows = tuple(wrows)
            _expect_end(lines, pos)
            return RectSurfaceSpec(points=tuple(rows), weights=wrows)
        if kind == "trisurface":
            if len(header) != 3:
                raise ParseError(
                    f"line {lineno}: trisurface header needs 'trisurface d n'"
                )
            d = _int(header[1], lineno, "dimension")
            n = _int(header[2], lineno, "degree")
            if d < 1 or n < 0:
                raise ParseError(f"line {lineno}: need d >= 1 and n >= 0")
            pos = 1
            rows = []
            for i in range(n + 1):
                row, pos = _take_points(lines, pos, n - i + 1, d)
                rows.append(tuple(row))
            wrows = None
            if rational:
                wrows = []
                for i in range(n + 1):
                    wrow, pos = _take_weights(lines, pos, n - i + 1)
                    wrows.append(tuple(wrow))
                wrows = tuple(wrows)
            _expect_end(lines, pos)
            return TriSurfaceSpec(points=tuple(rows), weights=wrows)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"line {lineno}: unknown document kind {kind!r}")


def _expect_end(lines, pos):
    if pos < len(lines):
        lineno, tokens = lines[pos]
        raise ParseError(f"line {lineno}: unexpected trailing content {tokens!r}")


def parse_file(path: str) -> Spec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path!r}: {exc}") from exc
    return parse_text(text)


def _fmt(x: float) -> str:
    return repr(float(x))


def write_text(spec: Spec) -> str:
    """Canonical writer; output re-parses to an identical spec."""
    lines = []
    if isinstance(spec, CurveSpec):
        head = f"curve {spec.d} {spec.n}"
        lines.append(head + (" rational" if spec.is_rational else ""))
        for p in spec.points:
            lines.append(" ".join(_fmt(c) for c in p))
        if spec.weights is not None:
            for w in spec.weights:
                lines.append(_fmt(w))
    elif isinstance(spec, RectSurfaceSpec):
        head = f"rectsurface {spec.d} {spec.m} {spec.n}"
        lines.append(head + (" rational" if spec.weights is not None else ""))
        for row in spec.points:
            for p in row:
                lines.append(" ".join(_fmt(c) for c in p))
        if spec.weights is not None:
            for row in spec.weights:
                for w in row:
                    lines.append(_fmt(w))
    elif isinstance(spec, TriSurfaceSpec):
        head = f"trisurface {spec.d} {spec.n}"
        lines.append(head + (" rational" if spec.weights is not None else ""))
        for row in spec.points:
            for p in row:
                lines.append(" ".join(_fmt(c) for c in p))
        if spec.weights is not None:
            for row in spec.weights:
                for w in row:
                    lines.append(_fmt(w))
    else:
        raise TypeError(f"cannot serialize {type(spec).__name__}")
    return "\n".join(lines) + "\n"
