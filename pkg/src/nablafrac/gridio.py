"""Grid file I/O and deterministic report serialization.

Grid CSV format: header ``t,value``, one row per integer ``t``, contiguous
and ascending; values are decimals or ``p/q`` rationals.  Rationals round-trip
losslessly as ``p/q`` strings; floats are written with 17 significant digits.
JSON output is rendered with sorted keys and fixed separators so repeated
runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import IO, Union

from .errors import DomainError, ParameterError, ParseError
from .grid import GridFunction
from .harness import SuiteResult
from .ineq import InequalityReport
from .scalars import Backend, Scalar

__all__ = [
    "format_scalar",
    "parse_scalar",
    "read_grid",
    "read_grid_csv",
    "read_grid_json",
    "render_report",
    "report_to_dict",
    "suite_to_dict",
    "to_json",
    "write_grid_csv",
    "write_grid_json",
    "write_report",
]

VERSION = "0.1.0"


def format_scalar(value: Scalar) -> str:
    """Lossless textual form: rationals as ``p/q`` (or a plain integer), floats
    with 17 significant digits."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return f"{value:.17g}"


def parse_scalar(text: str, backend: Backend = Backend.EXACT) -> Scalar:
    """Parse a decimal or ``p/q`` value into the requested backend."""
    text = text.strip()
    try:
        exact = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed value {text!r}") from exc
    if backend is Backend.FLOAT:
        return float(exact)
    return exact


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, float):
        if value != value:  # NaN
            return "nan"
        if value in (float("inf"), float("-inf")):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, Backend):
        return str(value)
    return value


def to_json(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


# ---------------------------------------------------------------------------
# grids


def read_grid_csv(source: Union[str, IO[str]], backend: Backend = Backend.EXACT) -> GridFunction:
    """Read a ``t,value`` CSV into a grid function."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            return read_grid_csv(handle, backend)
    reader = csv.reader(source)
    rows = list(reader)
    if not rows or [c.strip() for c in rows[0]] != ["t", "value"]:
        raise ParseError("line 1: expected header 't,value'")
    points = []
    values = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise ParseError(f"line {lineno}: expected two columns, got {len(row)}")
        try:
            t = int(row[0].strip())
        except ValueError as exc:
            raise ParseError(f"line {lineno}: malformed index {row[0]!r}") from exc
        try:
            value = parse_scalar(row[1], backend)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        points.append(t)
        values.append(value)
    if not points:
        raise ParseError("no data rows")
    for prev, nxt in zip(points, points[1:]):
        if nxt != prev + 1:
            raise DomainError(f"grid misses index {prev + 1} (next row has t={nxt})")
    return GridFunction(points[0], tuple(values))


def write_grid_csv(f: GridFunction, sink: Union[str, IO[str]]) -> None:
    if isinstance(sink, str):
        with open(sink, "w", encoding="utf-8", newline="") as handle:
            write_grid_csv(f, handle)
            return
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["t", "value"])
    for t in f.domain.points():
        writer.writerow([t, format_scalar(f.at(t))])


def read_grid_json(source: Union[str, IO[str]], backend: Backend = Backend.EXACT) -> GridFunction:
    """Read ``{"lo": int, "values": [...]}`` into a grid function."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as handle:
            return read_grid_json(handle, backend)
    try:
        payload = json.load(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON grid: {exc}") from exc
    if not isinstance(payload, dict) or "lo" not in payload or "values" not in payload:
        raise ParseError("JSON grid needs keys 'lo' and 'values'")
    lo = payload["lo"]
    if not isinstance(lo, int):
        raise ParseError(f"grid 'lo' must be an integer, got {lo!r}")
    values = []
    for v in payload["values"]:
        if isinstance(v, bool):
            raise ParseError("grid values must be numbers or 'p/q' strings")
        if isinstance(v, str):
            values.append(parse_scalar(v, backend))
        elif isinstance(v, int):
            values.append(Fraction(v) if backend is Backend.EXACT else float(v))
        elif isinstance(v, float):
            if backend is Backend.EXACT:
                raise ParseError(
                    f"decimal literal {v!r} in an exact grid; quote it as a string"
                )
            values.append(v)
        else:
            raise ParseError(f"unsupported grid value {v!r}")
    return GridFunction(lo, tuple(values))


def write_grid_json(f: GridFunction, sink: Union[str, IO[str]]) -> None:
    if isinstance(sink, str):
        with open(sink, "w", encoding="utf-8") as handle:
            write_grid_json(f, handle)
            return
    payload = {"lo": f.lo, "values": [format_scalar(v) for v in f.values]}
    sink.write(to_json(payload))


def read_grid(path: str, fmt: str = None, backend: Backend = Backend.EXACT) -> GridFunction:
    """Read a grid file, dispatching on ``fmt`` (``csv``/``json``) or, when
    omitted, on the file extension."""
    if fmt is None:
        fmt = "json" if path.endswith(".json") else "csv"
    if fmt == "csv":
        return read_grid_csv(path, backend)
    if fmt == "json":
        return read_grid_json(path, backend)
    raise ParameterError(f"unknown grid format {fmt!r}")


# ---------------------------------------------------------------------------
# reports


def report_to_dict(report: InequalityReport) -> dict:
    return {
        "name": report.name,
        "params": _jsonable(report.params),
        "lhs": _jsonable(report.lhs),
        "rhs": _jsonable(report.rhs),
        "slack": _jsonable(report.slack),
        "holds": report.holds,
        "components": _jsonable(report.components),
    }


def suite_to_dict(result: SuiteResult) -> dict:
    return {
        "name": result.suite,
        "trials": result.trials,
        "master_seed": result.master_seed,
        "backend": str(result.backend),
        "version": VERSION,
        "failures": result.failures,
        "worst_slack": _jsonable(result.worst_slack),
        "failing_seeds": list(result.failing_seeds),
    }


def _flatten(obj: dict) -> list:
    rows = []
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, dict):
            for sub, v in _flatten(value):
                rows.append((f"{key}.{sub}", v))
        elif isinstance(value, list):
            rows.append((key, ";".join(str(v) for v in value)))
        else:
            rows.append((key, value))
    return rows


def render_report(obj: Union[InequalityReport, SuiteResult], fmt: str = "table") -> str:
    """Render a report or suite result as ``json``, ``csv`` or ``table`` text."""
    payload = report_to_dict(obj) if isinstance(obj, InequalityReport) else suite_to_dict(obj)
    if fmt == "json":
        return to_json(payload)
    rows = _flatten(payload)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["field", "value"])
        writer.writerows(rows)
        return buffer.getvalue()
    if fmt == "table":
        width = max(len(key) for key, _ in rows)
        return "\n".join(f"{key.ljust(width)}  {value}" for key, value in rows) + "\n"
    raise ParameterError(f"unknown format {fmt!r}")


def write_report(obj, sink: Union[str, IO[str]], fmt: str = "json") -> None:
    text = render_report(obj, fmt)
    if isinstance(sink, str):
        with open(sink, "w", encoding="utf-8") as handle:
            handle.write(text)
        return
    sink.write(text)
