"""Two degenerate cases where the boundary variables split off.

For a horospherical space every relation is already homogeneous for the
weight grading, so homogenization leaves it alone and the W_l are free.
With no colors at all the space is a torus and the Cox ring is the
polynomial ring on the rays.
"""
import random

from spherical_cox import EmbeddingDatum, build_fan_X, cox_presentation, load_fixture, valuation_cone
from spherical_cox.lattice import is_primitive

p = load_fixture("sl3_horospherical")
vc = valuation_cone(list(p.space.relations), p.space.table)
print("horospherical relation:", p.space.relations[0])
print("valuation cone is everything:", vc.is_full_space)

rng = random.Random(7)
for _ in range(3):
    rays = []
    while len(rays) < 2:
        u = (rng.randint(-3, 3), rng.randint(-3, 3))
        if any(u) and is_primitive(u) and u not in rays:
            rays.append(u)
    pres = cox_presentation(p.space, EmbeddingDatum(tuple(rays)), valuation=vc)
    fan = build_fan_X(p.space.dims, p.space.m, rays)
    print(f"rays {rays}: relations {pres.relation_strings()}, "
          f"W vars {[str(w) for w in pres.variables_of_kind('W')]}, {len(fan)} smooth cones")

t = load_fixture("toric")
pres = cox_presentation(t.space, t.embedding)
print("toric Cox ring: C[" + ", ".join(map(str, pres.variables)) + "], Cl =", pres.class_group)
