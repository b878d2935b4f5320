"""Certified small acute sets (d = 1..5) and the randomized search behind them.

The catalog files in ``data/`` were produced by :func:`search_acute` (d = 3,
4, 5) or written by hand (d = 1, 2).  They are re-verified in exact
arithmetic every time they are loaded.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

import numpy as np

from .geometry import DuplicatePointError, PointSet
from .verifier import ACUTE, VerificationReport, verify_acute

CATALOG_SIZES = {1: 2, 2: 3, 3: 5, 4: 8, 5: 12}


class CatalogError(ValueError):
    """A shipped catalog file is missing or fails its certificate."""


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    target_size: int
    points: PointSet
    certificate: VerificationReport


@dataclass(frozen=True)
class SearchConfig:
    dim: int
    target_size: int
    seed: int = 0
    max_iters: int = 20000
    initial_temperature: float = 0.02
    cooling_rate: float = 0.9995
    perturbation_scale: float = 0.1
    max_denominator: int = 10**4
    epsilon: float = 0.005

    def __post_init__(self):
        if self.dim < 1 or self.target_size < 1 or self.max_iters < 1 or self.max_denominator < 1:
            raise ValueError("dim, target_size, max_iters and max_denominator must be positive")
        if not (self.initial_temperature > 0 and self.perturbation_scale > 0 and self.epsilon > 0):
            raise ValueError("temperature, perturbation scale and epsilon must be positive")
        if not 0 < self.cooling_rate < 1:
            raise ValueError("cooling_rate must lie in (0, 1)")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def catalog_id(d: int) -> str:
    return f"acute-d{d}-n{CATALOG_SIZES[d]}"


def min_cosine(P: np.ndarray) -> float:
    """Smallest cos of an angle over all triples of distinct rows of ``P``."""
    n = len(P)
    if n < 3:
        return 1.0
    V = P[None, :, :] - P[:, None, :]
    norms = np.linalg.norm(V, axis=2)
    np.fill_diagonal(norms, 1.0)
    if np.any(norms == 0):
        return -1.0
    U = V / norms[:, :, None]
    C = np.einsum("xyk,xzk->xyz", U, U)
    idx = np.arange(n)
    C[:, idx, idx] = np.inf
    C[idx, idx, :] = np.inf
    C[idx, :, idx] = np.inf
    return float(C.min())


def _normalize(P: np.ndarray) -> np.ndarray:
    P = P - P.mean(axis=0)
    rms = math.sqrt(float((P * P).sum()) / len(P))
    return P / rms if rms > 0 else P


def _certify(P: np.ndarray, cfg: SearchConfig, iteration: int, objective: float) -> Optional[CatalogEntry]:
    try:
        X = PointSet.from_floats(P, cfg.max_denominator)
    except DuplicatePointError:
        return None
    report = verify_acute(X, "exact", workers=1)
    if not report.is_acute:
        return None
    meta = {"source": "search", "seed": cfg.seed, "iteration": iteration,
            "float_objective": objective, "max_denominator": cfg.max_denominator}
    entry_id = f"search-d{cfg.dim}-n{cfg.target_size}-seed{cfg.seed}"
    return CatalogEntry(entry_id, cfg.dim, cfg.target_size, X.with_meta(**meta), report)


def search_acute(cfg: SearchConfig) -> Optional[CatalogEntry]:
    """Simulated annealing for ``target_size`` points in R^dim maximising the min cosine.

    Once the best float configuration beats ``epsilon`` it is rationalized and
    certified exactly; only an exact certificate is ever returned.  Returns
    ``None`` if none is found within ``max_iters``.
    """
    rng = np.random.default_rng(cfg.seed)
    n, d = cfg.target_size, cfg.dim
    P = rng.uniform(0.0, 1.0, size=(n, d))
    k = min(n, d)
    P[:k] = np.eye(d)[:k] + 0.05 * rng.uniform(-1.0, 1.0, size=(k, d))
    P = _normalize(P)
    cur = min_cosine(P)
    best, best_P = cur, P
    tried = -math.inf
    T = cfg.initial_temperature
    for it in range(cfg.max_iters):
        i = int(rng.integers(n))
        step = cfg.perturbation_scale * max(math.sqrt(T / cfg.initial_temperature), 0.05)
        Q = P.copy()
        Q[i] += rng.normal(0.0, step, size=d)
        Q = _normalize(Q)
        f = min_cosine(Q)
        if f >= cur or rng.random() < math.exp((f - cur) / T):
            P, cur = Q, f
            if cur > best:
                best, best_P = cur, P
        T *= cfg.cooling_rate
        if best > cfg.epsilon and best > tried:
            tried = best
            entry = _certify(best_P, cfg, it, best)
            if entry is not None:
                return entry
    return None


def load_pointset_resource(name: str) -> PointSet:
    from .io import pointset_from_json

    try:
        text = resources.files("acuteset.data").joinpath(name).read_text()
    except FileNotFoundError as exc:
        raise CatalogError(f"missing catalog file {name}") from exc
    return pointset_from_json(json.loads(text))


@lru_cache(maxsize=None)
def catalog_entry(entry_id: str) -> CatalogEntry:
    """Load a shipped entry by id and re-verify it exactly."""
    for d, size in CATALOG_SIZES.items():
        if catalog_id(d) == entry_id:
            break
    else:
        raise CatalogError(f"unknown catalog id {entry_id!r}; known: {[catalog_id(d) for d in CATALOG_SIZES]}")
    X = load_pointset_resource(f"{entry_id}.json")
    if X.dim != d or len(X) != size:
        raise CatalogError(f"{entry_id}: expected {size} points in R^{d}, got {len(X)} in R^{X.dim}")
    report = verify_acute(X, "exact", workers=1)
    if report.verdict != ACUTE:
        raise CatalogError(f"{entry_id}: certificate failed ({report.verdict})")
    recorded = X.meta.get("certificate", {}).get("s_min")
    if recorded is not None and recorded != report.to_dict()["s_min"]:
        raise CatalogError(f"{entry_id}: stored s_min {recorded} does not match recomputed value")
    return CatalogEntry(entry_id, d, size, X, report)


def base_set(d: int) -> CatalogEntry:
    """The certified catalog set in R^d, 1 <= d <= 5."""
    if d not in CATALOG_SIZES:
        raise ValueError(f"catalog covers dimensions 1..5, got {d}")
    return catalog_entry(catalog_id(d))
