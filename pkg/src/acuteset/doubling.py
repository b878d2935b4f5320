"""Lift an acute set in R^d to an acute set of twice the size in R^{d+2}.

Each point x receives a partner phi(x) on a circle of radius r centred at the
origin and is replaced by the two points (x, +phi(x)) and (x, -phi(x)).  With
``s`` the minimum apex dot of the input (squared distances included), any
radius with ``4 r**2 < s`` works, provided the 2n points +-phi(x) are
pairwise distinct.

Positivity after the lift comes from two cases:

* different base points at the apex and the legs: the dot is the old dot plus
  a circle term of absolute value at most ``(2r)**2``, so it is
  ``>= s - 4 r**2``;
* a leg sharing the apex's base point: the dot is
  ``2 (r**2 +- <phi(x), phi(z)>) >= 2 (r**2 - M)`` where ``M`` is the largest
  ``|<phi_i, phi_j>|`` over i != j.

The minimum of the two is a certified lower bound for the next step, so the
cubic-time exact recomputation is never needed along a construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geometry import PointSet
from .verifier import min_apex_dot


@dataclass(frozen=True)
class CirclePoint:
    t: Fraction
    coords: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class DoublingStep:
    dim_before: int
    n_before: int
    s_lower_bound: Fraction
    r: Fraction
    ts: tuple[Fraction, ...]
    M: Fraction
    s_next: Fraction
    s_exact: Optional[Fraction] = None

    def to_dict(self) -> dict:
        q = _qstr
        return {
            "dim_before": self.dim_before,
            "n_before": self.n_before,
            "s_lower_bound": q(self.s_lower_bound),
            "r": q(self.r),
            "t": [q(t) for t in self.ts],
            "M": q(self.M),
            "s_next": q(self.s_next),
            "s_exact": None if self.s_exact is None else q(self.s_exact),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DoublingStep":
        F = Fraction
        return cls(d["dim_before"], d["n_before"], F(d["s_lower_bound"]), F(d["r"]),
                   tuple(F(t) for t in d["t"]), F(d["M"]), F(d["s_next"]),
                   None if d.get("s_exact") is None else F(d["s_exact"]))


@dataclass
class ConstructionTrace:
    base_id: str
    base_s: Fraction
    steps: list[DoublingStep] = field(default_factory=list)

    @property
    def final_bound(self) -> Fraction:
        return self.steps[-1].s_next if self.steps else self.base_s

    def to_dict(self) -> dict:
        return {"base_id": self.base_id, "base_s": _qstr(self.base_s),
                "steps": [s.to_dict() for s in self.steps]}

    @classmethod
    def from_dict(cls, d: dict) -> "ConstructionTrace":
        return cls(d["base_id"], Fraction(d["base_s"]), [DoublingStep.from_dict(s) for s in d["steps"]])


def _qstr(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def choose_radius(s: Fraction) -> Fraction:
    """Largest r = 2**-k (k >= 0) with 4 r**2 < s."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError(f"need s > 0, got {s}")
    r = Fraction(1)
    while 4 * r * r >= s:
        r /= 2
    return r


def circle_points(n: int, r: Fraction) -> list[CirclePoint]:
    """n rational points of norm exactly r in the open first quadrant.

    Uses t -> r((1-t^2)/(1+t^2), 2t/(1+t^2)) at t = (i+1)/(n+1).  Distinct
    first-quadrant points are never antipodal, so the 2n points +-phi are
    pairwise distinct.
    """
    if n < 1:
        raise ValueError("need at least one circle point")
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    out = []
    for i in range(n):
        t = Fraction(i + 1, n + 1)
        w = 1 + t * t
        out.append(CirclePoint(t, (r * (1 - t * t) / w, r * 2 * t / w)))
    return out


def _dot2(p, q) -> Fraction:
    return p[0] * q[0] + p[1] * q[1]


def max_cross_dot(phis: list[CirclePoint]) -> Fraction:
    m = Fraction(0)
    for i, p in enumerate(phis):
        for q in phis[i + 1:]:
            m = max(m, abs(_dot2(p.coords, q.coords)))
    return m


def certified_s_bound(s_lb: Fraction, r: Fraction, phis: list[CirclePoint]) -> Fraction:
    """Lower bound on the minimum apex dot of the lifted set: ``min(s - 4r^2, 2(r^2 - M))``."""
    s_lb, r = Fraction(s_lb), Fraction(r)
    r2 = r * r
    if not 4 * r2 < s_lb:
        raise ValueError("radius too large: need 4 r^2 < s")
    seen = set()
    for p in phis:
        if _dot2(p.coords, p.coords) != r2:
            raise ValueError(f"circle point {p.coords} does not have norm r")
        neg = (-p.coords[0], -p.coords[1])
        if p.coords in seen or neg in seen or p.coords == neg:
            raise ValueError("circle points must be distinct and non-antipodal")
        seen.add(p.coords)
    M = max_cross_dot(phis)
    return min(s_lb - 4 * r2, 2 * (r2 - M))


def double(X: PointSet, s_lb: Fraction) -> tuple[PointSet, DoublingStep]:
    """Apply one lift; point 2i is (x_i, +phi_i) and 2i+1 is (x_i, -phi_i)."""
    s_lb = Fraction(s_lb)
    if s_lb <= 0:
        raise ValueError("s lower bound must be positive")
    if len(X) < 1:
        raise ValueError("cannot double an empty set")
    r = choose_radius(s_lb)
    phis = circle_points(len(X), r)
    pts = []
    for x, phi in zip(X.points, phis):
        u, v = phi.coords
        pts.append(x + (u, v))
        pts.append(x + (-u, -v))
    step = DoublingStep(X.dim, len(X), s_lb, r, tuple(p.t for p in phis), max_cross_dot(phis),
                        certified_s_bound(s_lb, r, phis))
    Y = PointSet(X.dim + 2, tuple(pts), {"source": "construction"})
    return Y, step


def expected_size(d: int) -> int:
    """Size of ``construct(d)`` for the shipped catalog."""
    from .basecases import CATALOG_SIZES

    if d < 1:
        raise ValueError("dimension must be >= 1")
    if d <= 5:
        return CATALOG_SIZES[d]
    base = 4 if d % 2 == 0 else 5
    return CATALOG_SIZES[base] * 2 ** ((d - base) // 2)


def construct(d: int, base: Optional[str] = None, recheck_exact: bool = False,
              workers: Optional[int] = None) -> tuple[PointSet, ConstructionTrace]:
    """Build a certified acute set in R^d from a catalog base by repeated doubling.

    Without ``base``, dimensions up to 5 come straight from the catalog and
    higher ones start from the d=4 (even) or d=5 (odd) entry.  The initial
    bound is the exact minimum apex dot of the base; later bounds are carried.
    ``recheck_exact`` recomputes the exact minimum after every step and
    records it; it never changes the output.
    """
    from .basecases import base_set, catalog_entry

    if d < 1:
        raise ValueError("dimension must be >= 1")
    if base is None:
        entry = base_set(d if d <= 5 else (4 if d % 2 == 0 else 5))
    else:
        entry = catalog_entry(base)
    if entry.dim > d or (d - entry.dim) % 2:
        raise ValueError(f"base {entry.id} (dim {entry.dim}) cannot reach dimension {d}")
    X = entry.points
    trace = ConstructionTrace(entry.id, entry.certificate.s_min)
    s = trace.base_s
    for _ in range((d - entry.dim) // 2):
        X, step = double(X, s)
        if recheck_exact:
            exact, _w = min_apex_dot(X, workers)
            if exact < step.s_next:
                raise AssertionError(f"carried bound {step.s_next} exceeds exact minimum {exact}")
            step = DoublingStep(**{**step.__dict__, "s_exact": exact})
        trace.steps.append(step)
        s = step.s_next
    meta = {"source": "construction" if trace.steps else "catalog", "trace": trace.to_dict()}
    return X.with_meta(**meta), trace
