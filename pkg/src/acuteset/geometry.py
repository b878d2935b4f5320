"""Exact rational points, point sets and the apex scalar product.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator, so equality of coordinates is structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

Rational = Fraction
Point = tuple[Fraction, ...]


class DimensionError(ValueError):
    """Points of different dimension were combined."""


class DuplicatePointError(ValueError):
    """A point set contains the same point twice."""

    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} coincide")
        self.indices = (i, j)


def as_point(coords: Iterable[Any]) -> Point:
    """Convert ints, Fractions or ``"p/q"`` strings to an exact point.

    Floats are accepted only when they are integral; use :func:`rationalize`
    for anything else so that the approximation is explicit.
    """
    out = []
    for c in coords:
        if isinstance(c, float) and not c.is_integer():
            raise TypeError(f"refusing to convert non-integral float {c!r}; rationalize it first")
        out.append(Fraction(c))
    return tuple(out)


def apex_dot(x: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]) -> Fraction:
    """Exact value of <y - x, z - x>; positive means the angle at x is acute."""
    if not (len(x) == len(y) == len(z)):
        raise DimensionError(f"dimension mismatch: {len(x)}, {len(y)}, {len(z)}")
    return sum(((b - a) * (c - a) for a, b, c in zip(x, y, z)), Fraction(0))


def _convergent(x: Fraction, max_denominator: int) -> Fraction:
    # last continued-fraction convergent of x with denominator <= max_denominator
    p0, q0, p1, q1 = 0, 1, 1, 0
    n, d = x.numerator, x.denominator
    while d:
        a, r = divmod(n, d)
        p2, q2 = a * p1 + p0, a * q1 + q0
        if q2 > max_denominator:
            break
        p0, q0, p1, q1 = p1, q1, p2, q2
        n, d = d, r
    return Fraction(p1, q1)


def rationalize(values: Iterable[float], max_denominator: int) -> list[Fraction]:
    """Replace each float by its last continued-fraction convergent.

    The convergent p/q has ``q <= max_denominator`` and lies within
    ``1 / (q * max_denominator)`` of the input.  Floats are expanded from
    their exact binary value, so the result is deterministic.

    >>> rationalize([0.5, 0.3333333333, 0.0], 100)
    [Fraction(1, 2), Fraction(1, 3), Fraction(0, 1)]
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    out = []
    for v in values:
        v = float(v)
        if not math.isfinite(v):
            raise ValueError(f"cannot rationalize non-finite value {v!r}")
        out.append(_convergent(Fraction(v), max_denominator))
    return out


@dataclass(frozen=True)
class PointSet:
    """A finite set of distinct points in R^dim with exact coordinates.

    ``meta`` holds provenance (``{"source": "catalog" | "search" | "external" |
    "construction", ...}``) and is carried through serialization untouched.
    """

    dim: int
    points: tuple[Point, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        pts = tuple(as_point(p) for p in self.points)
        for i, p in enumerate(pts):
            if len(p) != self.dim:
                raise DimensionError(f"point {i} has {len(p)} coordinates, expected {self.dim}")
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise DuplicatePointError(seen[p], i)
            seen[p] = i
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_floats(cls, rows, max_denominator: int = 10**4, meta: dict | None = None) -> "PointSet":
        rows = [list(r) for r in rows]
        pts = [tuple(rationalize(r, max_denominator)) for r in rows]
        dim = len(pts[0]) if pts else 1
        return cls(dim, tuple(pts), dict(meta or {}))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def to_float(self):
        import numpy as np

        return np.array([[float(c) for c in p] for p in self.points], dtype=float).reshape(len(self), self.dim)

    def with_meta(self, **kw) -> "PointSet":
        return PointSet(self.dim, self.points, {**self.meta, **kw})

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(self.dim, tuple(self.points[i] for i in indices), dict(self.meta))

    def transformed(self, scale: Fraction = Fraction(1), shift: Sequence[Fraction] | None = None,
                    perm: Sequence[int] | None = None) -> "PointSet":
        """Return ``scale * p + shift`` with coordinates reordered by ``perm``."""
        shift = [Fraction(0)] * self.dim if shift is None else [Fraction(s) for s in shift]
        perm = range(self.dim) if perm is None else perm
        pts = tuple(tuple(scale * p[k] + shift[k] for k in perm) for p in self.points)
        return PointSet(self.dim, pts, dict(self.meta))
