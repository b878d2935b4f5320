"""File formats.

Exact form (canonical)::

    {"dim": 2, "points": [["0/1", "0/1"], ["2/1", "0/1"]], "meta": {...}}

Float form: CSV with header ``x0,x1,...`` and one point per row, written with
17 significant digits.  CSV is an export; reading it back gives the exact
binary values of the floats (or convergents, if ``max_denominator`` is given).
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .geometry import PointSet, rationalize

FORMAT_VERSION = 1
_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


class FormatError(ValueError):
    """Malformed input file; the message names the offending location."""


def qstr(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text) if isinstance(text, str) else None
    if m is None:
        raise ValueError(f"not a rational of the form 'p/q': {text!r}")
    den = int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def pointset_to_json(X: PointSet) -> dict:
    meta = {**X.meta, "format_version": FORMAT_VERSION, "tool_version": __version__}
    return {"dim": X.dim, "points": [[qstr(c) for c in p] for p in X.points], "meta": meta}


def pointset_from_json(obj: dict, source: str = "<json>") -> PointSet:
    if not isinstance(obj, dict) or "dim" not in obj or "points" not in obj:
        raise FormatError(f"{source}: expected an object with 'dim' and 'points'")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise FormatError(f"{source}: 'dim' must be a positive integer, got {dim!r}")
    if not isinstance(obj["points"], list):
        raise FormatError(f"{source}: 'points' must be a list")
    pts = []
    for i, row in enumerate(obj["points"]):
        if not isinstance(row, list) or len(row) != dim:
            raise FormatError(f"{source}: point {i} must be a list of {dim} coordinates")
        coords = []
        for j, c in enumerate(row):
            try:
                coords.append(parse_rational(c))
            except ValueError as exc:
                raise FormatError(f"{source}: point {i}, coordinate {j}: {exc}") from None
        pts.append(tuple(coords))
    meta = dict(obj.get("meta") or {})
    try:
        return PointSet(dim, tuple(pts), meta)
    except ValueError as exc:
        raise FormatError(f"{source}: {exc}") from None


def dumps_pointset(X: PointSet) -> str:
    obj = pointset_to_json(X)
    rows = ",\n  ".join(json.dumps(row) for row in obj["points"])
    meta = json.dumps(obj["meta"], indent=1).replace("\n", "\n ")
    return f'{{\n "dim": {obj["dim"]},\n "points": [\n  {rows}\n ],\n "meta": {meta}\n}}'



def loads_pointset(text: str, source: str = "<json>") -> PointSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    return pointset_from_json(obj, source)


def pointset_to_csv(X: PointSet) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{k}" for k in range(X.dim)])
    for p in X.points:
        w.writerow([f"{float(c):.17g}" for c in p])
    return buf.getvalue()


def pointset_from_csv(text: str, source: str = "<csv>", max_denominator: Optional[int] = None) -> PointSet:
    """Read the float form.  Line numbers in errors count the header as line 1."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise FormatError(f"{source}:1: empty file")
    header = [h.strip() for h in rows[0]]
    if header != [f"x{k}" for k in range(len(header))] or not header:
        raise FormatError(f"{source}:1: header must be x0,x1,...")
    dim = len(header)
    pts = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != dim:
            raise FormatError(f"{source}:{lineno}: expected {dim} values, got {len(row)}")
        try:
            vals = [float(c) for c in row]
        except ValueError as exc:
            raise FormatError(f"{source}:{lineno}: {exc}") from None
        try:
            if max_denominator is None:
                if not all(abs(v) < float("inf") for v in vals):
                    raise ValueError("non-finite value")
                pts.append(tuple(Fraction(v) for v in vals))
            else:
                pts.append(tuple(rationalize(vals, max_denominator)))
        except ValueError as exc:
            raise FormatError(f"{source}:{lineno}: {exc}") from None
    try:
        return PointSet(dim, tuple(pts), {"source": "external", "float_import": True})
    except ValueError as exc:
        raise FormatError(f"{source}: {exc}") from None


def read_pointset(path, max_denominator: Optional[int] = None) -> PointSet:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".csv":
        return pointset_from_csv(text, str(path), max_denominator)
    return loads_pointset(text, str(path))


def write_pointset(X: PointSet, path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        path.write_text(pointset_to_csv(X))
    else:
        path.write_text(dumps_pointset(X) + "\n")
