"""
Random cube vertices versus doubling
====================================

Vertices of {0, 1}^d never span an obtuse angle.  Sampling about
(2/sqrt 3)^d of them and removing a point from each right angle leaves an
acute set, on average of size at least (1/2)(2/sqrt 3)^d.  The doubling
construction is much larger already in modest dimension.
"""

import statistics

from acuteset import construct, ef_generate

run = ef_generate(10, seed=0)
print(run.summary())

for d in range(6, 15, 2):
    sizes = [len(ef_generate(d, seed).output) for seed in range(50)]
    print(f"d={d:2d}  random cube: {statistics.mean(sizes):5.2f}   doubling: {len(construct(d)[0])}")
