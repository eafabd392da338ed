"""Degree 4: cylinder families over conic pencils and the 72-ray cone.

Run with ``python demos/04_degree4_flexibility_cone.py``.
"""
from collections import Counter

from dpflex import scenarios as sc
from dpflex.cone import membership
from dpflex.lattice import class_name

# %% Which orbit of base curves reproduces the published ray list?
sel = sc.select_orbit()
for orbit, info in sel["candidates"].items():
    print(f"{orbit:15s} {info['rays']:3d} rays, rotation match: {info['rotation']}")
print("selected:", sel["selected"])

# %% The five families
for f in sc.families_deg4():
    print(f"C = {class_name(f.base_curve)}: line class {class_name(f.line_class)}")

# %% Intersect the five polar cones
flex = sc.flexibility_cone_deg4()
print(flex)
orbits = sc.rotation_orbits(flex.rays)
print("orbit sizes under the index cycle:", Counter(len(o) for o in orbits))
for o in orbits:
    print("  ", class_name(o[0]))

# %% Memberships
print("-K:", membership(sc.anticanonical_class(sc.DEG4), flex))
print("8e0-2e1-4e2-e3-e4-3e5: ample =", sc.is_ample(sc.COUNTEREXAMPLE_DEG4, sc.DEG4),
      "| in flex cone:", membership(sc.COUNTEREXAMPLE_DEG4, flex))
print("cover:", sc.check_cover_deg4().passed)
