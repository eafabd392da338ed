"""Degree 5: fifteen cylinders, their polarity cones, and the cover.

Run with ``python demos/03_degree5_cylinders.py``.
"""
from dpflex import scenarios as sc
from dpflex.cone import Membership, membership
from dpflex.lattice import class_name

# %% The ample cone and its ten extremal rays
nef = sc.nef_cone(sc.DEG5)
print("nef cone rays:", ", ".join(class_name(r) for r in nef.rays))

# %% Cylinders: per blowdown, two lines through pairs of blown-down points
cyls = sc.cylinders_deg5()
for c in cyls[:3]:
    print(f"U{c.id}: complement", ", ".join(class_name(x) for x in c.complement))
print(len(cyls), "cylinders")

# %% Polarity: every nef ray is a nonnegative combination of complement classes
u1 = sc.polarity_cone(cyls[0].complement)
print("U1 polarity cone:", u1)
print("-K in U1:", membership(sc.anticanonical_class(sc.DEG5), u1))
print("all 15 cylinders H-polar for every ample H:", sc.check_polarity_deg5().passed)

# %% A random ample class is polar for every cylinder
h = sc.random_ample_classes(sc.DEG5, 1, seed=3)[0]
print(class_name(h), all(membership(h, sc.polarity_cone(c.complement)) is Membership.INTERIOR for c in cyls))

# %% Cover: every pair of meeting (-1)-curves avoided by some complement
report = sc.check_cover_deg5()
print("cover:", report.passed, "base points", report.details["base_points"],
      "det", report.details["collinearity_determinant"])
