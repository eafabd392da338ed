"""Cone conversions with the double description engine.

Run with ``python demos/02_cone_engine.py``.
"""
from dpflex.cone import (
    Membership, brute_force_rays, cone_from_generators, cone_from_inequalities, dual, intersect, membership,
)

# %% Generators -> facets; redundant generators are dropped
c = cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 1, -1)], 3)
print(c)
print("rays  ", c.rays)
print("facets", c.facets)
c.certify()

# %% The dual swaps the two descriptions
d = dual(c)
print("dual rays", d.rays)
assert dual(d) == c

# %% Facets -> rays, checked against the brute-force oracle
normals = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 1), (-1, 2, 1)]
h = cone_from_inequalities(normals, 3)
print("rays from inequalities", h.rays)
print("oracle agrees:", list(h.rays) == brute_force_rays(normals, 3))

# %% Lower-dimensional and non-pointed cones
flat = cone_from_generators([(1, 0, 0), (0, 1, 0)], 3)
print(flat, "equations", flat.equations)
print("(1,1,0):", membership((1, 1, 0), flat), " (1,1,1):", membership((1, 1, 1), flat))
wedge = cone_from_generators([(1, 0, 0), (-1, 0, 0), (0, 1, 0)], 3)
print(wedge, "lineality", wedge.lineality)

# %% Intersection and three-valued membership
quadrant = cone_from_generators([(1, 0), (0, 1)], 2)
both = intersect([quadrant, cone_from_inequalities([(-1, 1)], 2)])
print("quadrant with x <= y:", both.rays)
for v in [(1, 2), (1, 1), (2, 1)]:
    print(v, membership(v, both))
assert membership((1, 2), both) is Membership.INTERIOR
