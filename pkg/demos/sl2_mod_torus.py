"""SL(2)/T and its normalizer quotient, computed through a lift with trivial class group.

SL(2)/T is not factorial, so we work on the lift SL(2) x C* / H, homogenize
its single relation, then read the grading off the bold (unlifted) data.
Run with ``python demos/sl2_mod_torus.py``.
"""
from spherical_cox import (cl_of_embedding, cox_presentation, descend_valuation_cone, load_fixture,
                           pic_g_sequence, valuation_cone)
from spherical_cox.descent import format_pushforward
from spherical_cox.lattice import FreeLattice

for name in ("sl2_torus", "sl2_ntorus"):
    p = load_fixture(name)
    space, bold = p.space, p.bold
    print(f"== {name}")
    print("relation on the lift:", space.relations[0])

    vc = valuation_cone(list(space.relations), space.table)
    weights = FreeLattice(space.rank, space.weight_labels())
    print("valuation cone:", ", ".join(f"{weights.format(g)} <= 0" for g in vc.roots))

    # the valuation cone of the bold space is the image under pushforward
    down = descend_valuation_cone(vc, bold)
    print("bold valuation cone roots:", down.roots)

    print("rays of the lifted fan:", p.embedding.rays)
    print("pushforward:", "; ".join(format_pushforward(bold)))

    pres = cox_presentation(space, p.embedding, valuation=vc, bold=bold)
    print("Cox ring generators:", " ".join(map(str, pres.variables)))
    for f in pres.relations:
        print("  relation:", f)
    group, dm = cl_of_embedding(bold)
    print("Cl =", group, " Pic_G =", pic_g_sequence(bold), " factorial:", pres.factorial_flag)
    for v in pres.variables:
        print(f"  deg {v} = {pres.degrees[v]}")
    print()
