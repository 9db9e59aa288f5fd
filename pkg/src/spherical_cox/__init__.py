"""Cox rings of spherical embeddings from lattice and polynomial data."""
from .brion import WonderfulPresentation, presentations_agree, tensor_presentation, z_substitution
from .classgroup import cl_of_embedding, factorial_flag, pic_g_sequence
from .data import BoldSpaceDatum, EmbeddingDatum, SphericalDatum
from .descent import descend_valuation_cone, gamma_iso, lift_fan, pushforward
from .homogenize import CoxPresentation, alpha, beta, cox_presentation, h, ord_u
from .inputs import load, load_fixture
from .lattice import (AbelianGroup, FreeLattice, LatticeMap, cokernel, is_primitive, preimage_basis,
                      smith_normal_form)
from .multipoly import LaurentPoly, VarTable, homogeneous_components, is_M_homogeneous, parse, weight_of_monomial
from .polyhedra import (Cone, Fan, build_fan_hat, build_fan_X, build_sigma_cone, dual_halfspaces, enumerate_A,
                        intersect_is_face, is_smooth)
from .tropical import ValuationCone, monomial_weights, ray_membership, valuation_cone

__version__ = "0.1.0"
