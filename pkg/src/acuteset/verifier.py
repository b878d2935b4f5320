"""Certify or refute acuteness of a point set.

Exact mode scales all coordinates by the common denominator ``L`` so that the
Gram matrix ``G`` is integral.  For apex ``x`` the scalar product is then

    <y - x, z - x> * L**2 = G[y, z] - G[x, y] - G[x, z] + G[x, x]

which is evaluated on Python integers (numpy object arrays), one apex row at a
time.  Apexes are independent, so they are split across worker processes and
reduced on the key ``(value, (x, y, z))``; the result does not depend on the
worker count.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .geometry import PointSet

ACUTE = "acute"
RIGHT = "right_angle_present"
OBTUSE = "obtuse_present"
INDETERMINATE = "indeterminate"

DEFAULT_TOLERANCE = 1e-9
# below this many points the process pool costs more than it saves
PARALLEL_MIN_POINTS = 48


@dataclass(frozen=True)
class VerificationReport:
    verdict: str
    s_min: Optional[Fraction]
    witness: Optional[tuple[int, int, int]]
    min_angle_deg: Optional[float]
    mode: str
    tolerance: Optional[float]
    n: int
    dim: int
    elapsed_ms: float = 0.0

    @property
    def is_acute(self) -> bool:
        return self.verdict == ACUTE

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "s_min": None if self.s_min is None else f"{self.s_min.numerator}/{self.s_min.denominator}",
            "witness": None if self.witness is None else list(self.witness),
            "min_angle_deg": self.min_angle_deg,
            "mode": self.mode,
            "tolerance": self.tolerance,
            "n": self.n,
            "dim": self.dim,
            "elapsed_ms": self.elapsed_ms,
        }


def integer_gram(X: PointSet) -> tuple[np.ndarray, int]:
    """Return ``(G, L)`` with ``G`` the Gram matrix of ``L * X`` (Python ints)."""
    L = 1
    for p in X.points:
        for c in p:
            L = math.lcm(L, c.denominator)
    P = np.array([[c.numerator * (L // c.denominator) for c in p] for p in X.points], dtype=object)
    P = P.reshape(len(X), X.dim)
    return P.dot(P.T), L


def _scan_apexes(G: np.ndarray, apexes, include_equal: bool):
    """Minimum of the scaled apex dot over the given apexes.

    Pairs are ``y <= z`` (or ``y < z`` when ``include_equal`` is false) with
    ``y, z != x``; returns ``(value, (x, y, z))`` for the first minimiser in
    lexicographic order, or ``None`` if no pair exists.
    """
    n = G.shape[0]
    iy, iz = np.triu_indices(n, k=0 if include_equal else 1)
    Gtri = G[iy, iz]
    best = None
    for x in apexes:
        keep = (iy != x) & (iz != x)
        if not keep.any():
            continue
        y, z = iy[keep], iz[keep]
        g = G[x]
        vals = Gtri[keep] - g[y] - g[z] + G[x, x]
        k = int(vals.argmin())
        cand = (vals[k], (int(x), int(y[k]), int(z[k])))
        if best is None or cand < best:
            best = cand
    return best


def _exact_min(G: np.ndarray, include_equal: bool, workers: Optional[int]):
    n = G.shape[0]
    workers = (os.cpu_count() or 1) if workers is None else max(1, workers)
    if workers == 1 or n < PARALLEL_MIN_POINTS:
        return _scan_apexes(G, range(n), include_equal)
    # interleave apexes so chunks have similar cost
    parts = [range(i, n, workers * 4) for i in range(workers * 4)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_scan_apexes, [G] * len(parts), parts, [include_equal] * len(parts)))
    results = [r for r in results if r is not None]
    return min(results) if results else None


def min_apex_dot(X: PointSet, workers: Optional[int] = None) -> tuple[Fraction, tuple[int, int, int]]:
    """Exact ``min <y-x, z-x>`` over ``x != y``, ``x != z`` (``y == z`` allowed).

    The witness is the lexicographically smallest ``(apex, y, z)`` attaining it.
    """
    if len(X) < 2:
        raise ValueError("min_apex_dot needs at least two points")
    G, L = integer_gram(X)
    value, witness = _exact_min(G, True, workers)
    return Fraction(value, L * L), witness


def min_angle_deg(X: PointSet) -> float:
    """Smallest angle (degrees) over all triples of distinct points, in floats."""
    n = len(X)
    if n < 3:
        raise ValueError("min_angle_deg needs at least three points")
    P = X.to_float()
    best = -1.0
    for x in range(n):
        V = np.delete(P, x, axis=0) - P[x]
        U = V / np.linalg.norm(V, axis=1)[:, None]
        C = U @ U.T
        np.fill_diagonal(C, -np.inf)
        best = max(best, float(C.max()))
    return math.degrees(math.acos(min(1.0, best)))


def _float_scan(P: np.ndarray):
    """Yield ``(x, dots)`` with ``dots[y, z] = <y-x, z-x>`` for ``y < z``, others nan."""
    n = len(P)
    iy, iz = np.triu_indices(n, k=1)
    for x in range(n):
        V = P - P[x]
        D = V @ V.T
        keep = (iy != x) & (iz != x)
        yield x, iy[keep], iz[keep], D[iy[keep], iz[keep]]


def verify_acute(X: PointSet, mode: str = "exact", tolerance: float = DEFAULT_TOLERANCE,
                 workers: Optional[int] = None) -> VerificationReport:
    """Decide whether every triple of distinct points of ``X`` is acute.

    ``mode="exact"`` gives a certificate: the verdict follows the sign of the
    exact statistic ``s_min`` (see :func:`min_apex_dot`).  ``mode="float"`` is a
    pre-filter; any scalar product within ``tolerance`` of zero makes the
    verdict ``indeterminate``.  Sets with fewer than three points are
    vacuously acute.
    """
    t0 = time.perf_counter()
    n = len(X)
    angle = min_angle_deg(X) if n >= 3 else None
    if mode == "exact":
        s_min = witness = None
        verdict = ACUTE
        if n >= 2:
            s_min, witness = min_apex_dot(X, workers)
            verdict = ACUTE if s_min > 0 else RIGHT if s_min == 0 else OBTUSE
        tol = None
    elif mode == "float":
        if not tolerance > 0:
            raise ValueError("float mode needs a positive tolerance")
        s_min = witness = None
        verdict = ACUTE
        if n >= 3:
            P = X.to_float()
            lowest, near_zero = math.inf, False
            for x, y, z, d in _float_scan(P):
                if np.any(np.abs(d) < tolerance):
                    near_zero = True
                k = int(d.argmin())
                if d[k] < lowest:
                    lowest, witness = float(d[k]), (x, int(y[k]), int(z[k]))
            if near_zero:
                verdict = INDETERMINATE
            elif lowest < 0:
                verdict = OBTUSE
        tol = tolerance
    else:
        raise ValueError(f"unknown mode {mode!r}")
    elapsed = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(verdict, s_min, witness, angle, mode, tol, n, X.dim, elapsed)
