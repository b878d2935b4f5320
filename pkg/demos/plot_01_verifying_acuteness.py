"""
Certifying acuteness exactly
============================

A set is acute when every angle formed by three of its points is strictly
below 90 degrees.  For an angle with apex x this is the sign of the scalar
product <y - x, z - x>, which we evaluate in exact rational arithmetic.
"""

from fractions import Fraction

from acuteset import PointSet, apex_dot, min_apex_dot, rationalize, verify_acute

# A triangle with apex angles 63.4, 63.4 and 53.1 degrees
triangle = PointSet(2, [(0, 0), (2, 0), (1, 2)])
print(apex_dot(triangle[0], triangle[1], triangle[2]))   # 2 -> acute at (0, 0)

# The full report: verdict, the exact minimum apex product and a witness
report = verify_acute(triangle)
print(report.to_dict())

# The minimum also ranges over y == z, where the product is a squared
# distance.  This is the quantity the doubling construction feeds on.
print(min_apex_dot(PointSet(1, [(0,), (1,)])))           # (Fraction(1, 1), (0, 1, 1))

###############################################################################
# Right and obtuse angles are reported with a witness triple

square = PointSet(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
print(verify_acute(square).verdict, verify_acute(square).witness)

# Floats are never trusted silently: convert them first
obtuse = PointSet(2, [rationalize(p, 10**4) for p in ([0.0, 0.0], [4.0, 0.0], [1.0, 0.2])])
print(obtuse.points[2], verify_acute(obtuse).verdict)

###############################################################################
# Float mode is a quick filter.  Near-zero products make it refuse to decide.

print(verify_acute(triangle, "float", 1e-9).verdict)
print(verify_acute(square, "float", 1e-9).verdict)        # indeterminate

# Scaling changes the minimum by the square of the factor, never the verdict
print(verify_acute(triangle.transformed(Fraction(1, 3))).s_min)   # 2/9
