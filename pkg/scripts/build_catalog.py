#!/usr/bin/env python3
"""Regenerate src/acuteset/data/*.json.

d = 1, 2 are written by hand; d = 3, 4, 5 come from simulated annealing with
the configurations below and are certified exactly before being written.
"""
from dataclasses import asdict
from pathlib import Path

from acuteset.basecases import CATALOG_SIZES, SearchConfig, catalog_id, search_acute
from acuteset.geometry import PointSet
from acuteset.io import write_pointset
from acuteset.verifier import verify_acute

DATA = Path(__file__).resolve().parents[1] / "src" / "acuteset" / "data"

CONFIGS = {
    3: SearchConfig(3, 5, seed=0, max_iters=50000, epsilon=0.1, cooling_rate=0.9999),
    4: SearchConfig(4, 8, seed=0, max_iters=100000, epsilon=0.025, cooling_rate=0.9999),
    5: SearchConfig(5, 12, seed=1, max_iters=200000, epsilon=0.012, cooling_rate=0.99995),
}


def main():
    sets = {
        1: PointSet(1, ((0,), (1,)), {"source": "catalog", "origin": "segment"}),
        2: PointSet(2, ((0, 0), (2, 0), (1, 2)), {"source": "catalog", "origin": "acute triangle"}),
    }
    for d, cfg in CONFIGS.items():
        entry = search_acute(cfg)
        if entry is None:
            raise SystemExit(f"search failed for d={d}: {cfg}")
        sets[d] = entry.points.with_meta(source="catalog", origin="search", search_config=asdict(cfg))
    for d, X in sets.items():
        assert len(X) == CATALOG_SIZES[d]
        report = verify_acute(X, "exact", workers=1)
        assert report.is_acute, (d, report)
        X = X.with_meta(certificate={"verdict": report.verdict, "s_min": report.to_dict()["s_min"]})
        write_pointset(X, DATA / f"{catalog_id(d)}.json")
        print(catalog_id(d), report.verdict, float(report.s_min), report.min_angle_deg)


if __name__ == "__main__":
    main()
