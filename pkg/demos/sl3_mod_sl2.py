"""SL(3)/SL(2): homogenization against base change from the wonderful embedding.

The embedding has two boundary rays. Its Cox ring comes out of
homogenizing the quadric relation, and again out of substituting a
W-monomial for the canonical section Z of the wonderful Cox ring. The two
presentations must agree.
"""
from spherical_cox import (cox_presentation, load_fixture, presentations_agree, tensor_presentation,
                           valuation_cone, z_substitution)
from spherical_cox.brion import natural_correspondence
from spherical_cox.data import EmbeddingDatum
from spherical_cox.homogenize import OutsideValuationConeError
from spherical_cox.lattice import FreeLattice

p = load_fixture("sl_d")
space, emb = p.space, p.embedding
vc = valuation_cone(list(space.relations), space.table)
lat = FreeLattice(space.rank, space.weight_labels())
print("spherical roots:", [lat.format(g) for g in vc.roots])

homog = cox_presentation(space, emb, valuation=vc)
print("homogenized:", *homog.relation_strings())

print("Z ->", z_substitution(p.wonderful.roots, emb)[0])
tensor = tensor_presentation(p.wonderful, emb)
print("tensor:     ", *tensor.relation_strings())

agree = presentations_agree(homog, tensor, natural_correspondence(homog, tensor))
print("agree:", agree)

# a ray outside the valuation cone is refused unless explicitly allowed
try:
    cox_presentation(space, EmbeddingDatum(((1, 1),)), valuation=vc)
except OutsideValuationConeError as exc:
    print("refused:", exc)
