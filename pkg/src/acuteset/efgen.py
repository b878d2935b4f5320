"""Random cube vertices with right-angle deletion.

Vertices of {0,1}^d never form obtuse angles: <y-x, z-x> counts coordinates
where y and z agree and differ from x, so it is a non-negative integer.
Sampling a few vertices and deleting one point from every right triple
leaves an acute set.  Only the size bound (1/2)(2/sqrt 3)^d is classical;
the deletion schedule here (highest index of the lexicographically first
right triple, rescan) is our own choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import PointSet
from .verifier import VerificationReport, verify_acute


@dataclass(frozen=True)
class EfRun:
    dim: int
    sample_size: int
    seed: int
    sampled: tuple[tuple[int, ...], ...]
    right_triples_found: int
    duplicates_removed: int
    deleted: int
    output: PointSet
    certificate: VerificationReport

    def summary(self) -> dict:
        return {
            "dim": self.dim,
            "sample_size": self.sample_size,
            "seed": self.seed,
            "right_triples_found": self.right_triples_found,
            "duplicates_removed": self.duplicates_removed,
            "deleted": self.deleted,
            "output_size": len(self.output),
            "verdict": self.certificate.verdict,
        }


def default_sample_size(d: int) -> int:
    return math.ceil((2 / math.sqrt(3)) ** d)


def cube_apex_dots(P: np.ndarray, x: int) -> np.ndarray:
    V = P - P[x]
    return V @ V.T


def count_right_triples(P: np.ndarray) -> int:
    """Number of (apex, {y, z}) with distinct points and zero apex dot."""
    n = len(P)
    iy, iz = np.triu_indices(n, k=1)
    total = 0
    for x in range(n):
        D = cube_apex_dots(P, x)
        keep = (iy != x) & (iz != x)
        total += int(np.count_nonzero(D[iy[keep], iz[keep]] == 0))
    return total


def first_right_triple(P: np.ndarray) -> Optional[tuple[int, int, int]]:
    n = len(P)
    iy, iz = np.triu_indices(n, k=1)
    for x in range(n):
        D = cube_apex_dots(P, x)
        keep = (iy != x) & (iz != x)
        hits = np.flatnonzero(D[iy[keep], iz[keep]] == 0)
        if hits.size:
            k = hits[0]
            return x, int(iy[keep][k]), int(iz[keep][k])
    return None


def ef_generate(d: int, seed: int, N: Optional[int] = None) -> EfRun:
    """Sample ``N`` uniform cube vertices (default ceil((2/sqrt 3)^d)) and delete right triples."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    N = default_sample_size(d) if N is None else N
    if N < 1:
        raise ValueError("sample size must be positive")
    rng = np.random.default_rng(seed)
    sampled = rng.integers(0, 2, size=(N, d), dtype=np.int64)
    _, first = np.unique(sampled, axis=0, return_index=True)
    P = sampled[np.sort(first)]
    for x in range(len(P)):
        # the cube lemma: no obtuse angles at all
        assert cube_apex_dots(P, x).min() >= 0
    right = count_right_triples(P)
    kept = P
    deleted = 0
    while (t := first_right_triple(kept)) is not None:
        kept = np.delete(kept, max(t), axis=0)
        deleted += 1
    X = PointSet(d, tuple(tuple(int(v) for v in row) for row in kept),
                 {"source": "ef", "seed": seed, "sample_size": N})
    report = verify_acute(X, "exact", workers=1)
    if not report.is_acute:
        raise AssertionError(f"deletion left a non-acute set: {report.verdict}")
    return EfRun(d, N, seed, tuple(tuple(int(v) for v in row) for row in sampled), right,
                 N - len(P), deleted, X, report)
