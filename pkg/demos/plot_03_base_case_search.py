"""
Searching for base cases
========================

Acute sets of 8 points in R^4 and 12 points in R^5 exist; concrete ones are
found with simulated annealing on the smallest angle cosine, then rounded to
rationals and certified exactly.  A candidate that loses acuteness in
rounding is thrown away.
"""

from acuteset import SearchConfig, base_set, search_acute

entry = search_acute(SearchConfig(dim=3, target_size=5, seed=0))
print(entry.id, entry.certificate.verdict, float(entry.certificate.s_min))

# Four points in the plane always contain a non-acute angle: nothing is returned
print(search_acute(SearchConfig(dim=2, target_size=4, seed=0, max_iters=3000)))

###############################################################################
# The shipped catalog is re-verified every time it is loaded

for d in range(1, 6):
    e = base_set(d)
    print(d, len(e.points), e.certificate.verdict, e.certificate.min_angle_deg)
