"""(-1)-curves on del Pezzo surfaces of degree 5 and 4.

Run with ``python demos/01_lattice_and_curves.py``.
"""
from dpflex.curves import blowdowns, incidence_graph, minus_one_classes, neighbors
from dpflex.lattice import Surface, anticanonical_class, class_name, pairing

# %% The Picard lattice: Z^(r+1) with form diag(1, -1, ..., -1)
for degree in (5, 4):
    s = Surface(degree)
    mk = anticanonical_class(s)
    print(f"degree {degree}: rank {s.rank}, -K = {class_name(mk)}, (-K)^2 = {pairing(mk, mk, s)}")

# %% Enumerate (-1)-classes: c.c = -1 and c.K = -1
for degree in (3, 4, 5, 6, 7):
    print(f"degree {degree}: {len(minus_one_classes(Surface(degree)))} (-1)-classes")

s5 = Surface(5)
cs5 = minus_one_classes(s5)
print("degree 5:", ", ".join(class_name(c) for c in cs5))

# %% Incidence graphs are the Petersen and Clebsch graphs
for degree in (5, 4):
    g = incidence_graph(minus_one_classes(Surface(degree)))
    print(f"degree {degree}: {len(g.curves)} vertices, {len(g.edges)} edges, "
          f"degrees {sorted(set(g.degrees()))}, girth {g.girth()}, triangles {len(g.triangles())}")

# %% Blowdowns to the plane and their line classes
for bd in blowdowns(cs5):
    print("contract", ", ".join(class_name(f) for f in bd.contracted), "-> line class", class_name(bd.line_class))

s4 = Surface(4)
conic = (2, -1, -1, -1, -1, -1)
print("curves meeting", class_name(conic), ":", [class_name(c) for c in neighbors(minus_one_classes(s4), conic)])
