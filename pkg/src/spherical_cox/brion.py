"""Cox rings by base change from a wonderful embedding.

Given the Cox ring of a wonderful variety with canonical sections
``Z_1..Z_s`` (one per spherical root ``gamma_i``), the Cox ring of an
embedding with rays ``u_1..u_n`` is obtained by tensoring over
``C[Z_1..Z_s]`` with ``C[W_1..W_n]`` along

    Z_i |-> prod_l W_l^(-<u_l, gamma_i>).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .data import EmbeddingDatum
from .lattice import dot
from .multipoly import LaurentPoly, Var, W
from .homogenize import CoxPresentation


class BrionError(ValueError):
    pass


@dataclass(frozen=True)
class WonderfulPresentation:
    """Generators and relations of the wonderful Cox ring plus its canonical sections."""

    variables: tuple[Var, ...]
    z_sections: tuple[LaurentPoly, ...]
    roots: tuple[tuple[int, ...], ...]
    relations: tuple[LaurentPoly, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(tuple(int(x) for x in g) for g in self.roots))
        if len(self.z_sections) != len(self.roots):
            raise BrionError("one canonical section per spherical root")
        known = set(self.variables)
        for z in tuple(self.z_sections) + tuple(self.relations):
            if z.is_zero():
                raise BrionError("canonical sections and relations must be nonzero")
            stray = [v for v in z.variables() if v not in known]
            if stray:
                raise BrionError(f"unknown variable {stray[0]}")


def z_substitution(roots: Sequence[Sequence[int]], rays) -> list[LaurentPoly]:
    """The W-monomial replacing each ``Z_i``."""
    if isinstance(rays, EmbeddingDatum):
        rays = rays.rays
    out = []
    for g in roots:
        exps = {}
        for l, u in enumerate(rays, start=1):
            p = dot(u, g)
            if p > 0:
                raise BrionError(f"ray {tuple(u)} pairs positively with root {tuple(g)}")
            exps[W(l)] = -p
        out.append(LaurentPoly.monomial(exps))
    return out


def tensor_presentation(w: WonderfulPresentation, rays) -> CoxPresentation:
    rays_t = rays.rays if isinstance(rays, EmbeddingDatum) else tuple(rays)
    subs = z_substitution(w.roots, rays_t)
    rels = []
    for f in list(w.relations) + [z - m for z, m in zip(w.z_sections, subs)]:
        if not f.is_zero() and all(f.normalized() != g.normalized() for g in rels):
            rels.append(f)
    variables = tuple(w.variables) + tuple(W(l) for l in range(1, len(rays_t) + 1))
    return CoxPresentation(variables=variables, relations=tuple(rels))


def _canonical(rels) -> set[LaurentPoly]:
    return {f.normalized() for f in rels if not f.is_zero()}


def presentations_agree(a: CoxPresentation, b: CoxPresentation,
                        correspondence: Mapping[Var, Var] | None = None) -> bool:
    """Relation sets equal after renaming the variables of ``a`` into those of ``b``.

    ``correspondence`` must be a bijection from the variables of ``a`` onto
    those of ``b``; variables it leaves out map to themselves.
    """
    corr = {v: v for v in a.variables}
    corr.update(correspondence or {})
    unknown = [v for v in corr if v not in a.variables]
    if unknown:
        raise BrionError(f"{unknown[0]} is not a variable of the first presentation")
    images = [corr[v] for v in a.variables]
    if len(set(images)) != len(images) or set(images) != set(b.variables):
        raise BrionError("variable correspondence is not a bijection")
    renamed = [f.rename(corr) for f in a.relations]
    return _canonical(renamed) == _canonical(b.relations)


def natural_correspondence(a: CoxPresentation, b: CoxPresentation) -> dict[Var, Var]:
    """``S[i,j] -> X[i,j]``, identity on ``W``."""
    corr = {}
    for v in a.variables:
        if v.kind == "S":
            corr[v] = Var("X", v.index)
    return corr
