"""
Doubling an acute set
=====================

Given an acute set X in R^d with minimum apex product s, pick r with
4 r^2 < s and distinct points +-phi(x) on the radius-r circle.  The points
(x, +phi(x)) and (x, -phi(x)) form an acute set of size 2|X| in R^{d+2}.
Starting from the 8-point set in R^4 and the 12-point set in R^5 this gives
2^(d/2 + 1) points in every even dimension d >= 4.
"""

from acuteset import choose_radius, circle_points, construct, double, min_apex_dot, verify_acute
from acuteset.geometry import PointSet

segment = PointSet(1, [(0,), (1,)])
s, _ = min_apex_dot(segment)
r = choose_radius(s)
print("s =", s, " r =", r)
for phi in circle_points(2, r):
    print("  t =", phi.t, " phi =", phi.coords)

Y, step = double(segment, s)
for p in Y:
    print(p)
print(verify_acute(Y).verdict, "carried bound", step.s_next, "exact", min_apex_dot(Y)[0])

###############################################################################
# A full construction keeps a trace of every step.  The carried bound
# replaces the cubic recomputation of s; here it happens to be tight.

X, trace = construct(10, recheck_exact=True)
print(len(X), "points in R^10 from", trace.base_id)
for st in trace.steps:
    print(f"  {st.n_before:4d} -> {2 * st.n_before:4d}  r = {st.r}  bound = {float(st.s_next):.3e}"
          f"  exact = {float(st.s_exact):.3e}")

###############################################################################
# Sizes grow like 2^(d/2), against (2/sqrt 3)^d for the probabilistic method.

for d in range(4, 17):
    print(d, len(construct(d)[0]))
