import itertools
import math

import numpy as np
import pytest

from acuteset.efgen import count_right_triples, default_sample_size, ef_generate
from acuteset.verifier import verify_acute
from oracles import brute_distinct_min


def test_cube_coordinate_products_are_zero_or_one():
    assert {(y - x) * (z - x) for x, y, z in itertools.product((0, 1), repeat=3)} == {0, 1}


@pytest.mark.parametrize("seed", range(10))
def test_dimension_two(seed):
    run = ef_generate(2, seed)
    assert len(run.output) <= 3
    assert verify_acute(run.output).is_acute


@pytest.mark.parametrize("d, seed, N", [(6, 0, 20), (8, 1, 30), (10, 7, None), (5, 3, 32)])
def test_output_is_acute_subset_of_samples(d, seed, N):
    run = ef_generate(d, seed, N)
    assert run.sample_size == (N or default_sample_size(d))
    sampled = set(run.sampled)
    out = [tuple(int(c) for c in p) for p in run.output.points]
    assert set(out) <= sampled
    assert len(sampled) == run.sample_size - run.duplicates_removed
    assert len(out) == len(sampled) - run.deleted
    assert run.deleted <= run.right_triples_found
    assert len(out) < 3 or brute_distinct_min(run.output.points) > 0


def test_sampled_vertices_have_no_obtuse_angles():
    run = ef_generate(7, 11, 40)
    P = np.unique(np.array(run.sampled), axis=0)
    assert brute_distinct_min([tuple(map(int, p)) for p in P]) >= 0
    assert count_right_triples(P) > 0


def test_deterministic():
    a, b = ef_generate(9, 42, 25), ef_generate(9, 42, 25)
    assert a.sampled == b.sampled and a.output.points == b.output.points
    assert ef_generate(9, 43, 25).sampled != a.sampled


def test_default_sample_size():
    assert default_sample_size(10) == math.ceil((2 / math.sqrt(3)) ** 10) == 5
    with pytest.raises(ValueError):
        ef_generate(1, 0)
