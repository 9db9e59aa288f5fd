"""Homogenization ``h = beta o alpha`` and assembly of Cox ring presentations.

For a relation ``f`` on ``C^{sum s_i} x (C^*)^m`` and embedding rays
``u_1..u_n``:

* ``ord_u(f)`` is the minimum of ``<u, mu>`` over the weights of the
  nonzero homogeneous components of ``f``;
* ``alpha`` multiplies the component of weight ``mu`` by
  ``prod_l W_l^(<u_l, mu> - ord_{u_l}(f))``;
* ``beta`` sets every ``T_k`` to 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .classgroup import DegreeMap, cl_of_embedding, factorial_flag
from .data import BoldSpaceDatum, EmbeddingDatum, SphericalDatum
from .lattice import AbelianGroup, dot
from .multipoly import LaurentPoly, Var, VarTable, W, homogeneous_components, is_M_homogeneous
from .tropical import ValuationCone, ray_membership

NOT_GUARANTEED_GENERATING = "NOT-GUARANTEED-GENERATING"


class HomogenizationError(ValueError):
    pass


class OutsideValuationConeError(HomogenizationError):
    pass


class InhomogeneousRelationError(HomogenizationError):
    pass


def _rays(rays) -> tuple[tuple[int, ...], ...]:
    if isinstance(rays, EmbeddingDatum):
        return rays.rays
    return tuple(tuple(int(x) for x in u) for u in rays)


def ord_u(f: LaurentPoly, u: Sequence[int], table: VarTable) -> int:
    if f.is_zero():
        raise HomogenizationError("ord of the zero polynomial is undefined")
    return min(dot(u, mu) for mu in homogeneous_components(f, table))


def alpha(f: LaurentPoly, rays, table: VarTable) -> LaurentPoly:
    """Insert ``W_l`` with the exponents ``<u_l, mu> - ord_{u_l}(f)``."""
    if f.is_zero():
        raise HomogenizationError("alpha is undefined on the zero polynomial")
    rays = _rays(rays)
    comps = homogeneous_components(f, table)
    shifts = [min(dot(u, mu) for mu in comps) for u in rays]
    out = LaurentPoly()
    for mu, part in comps.items():
        w = LaurentPoly.monomial({W(l): dot(u, mu) - o for l, (u, o) in enumerate(zip(rays, shifts), start=1)})
        out = out + part * w
    return out


def beta(f: LaurentPoly) -> LaurentPoly:
    """Set all unit coordinates ``T_k`` to 1."""
    return f.substitute({v: 1 for v in f.variables() if v.kind == "T"})


def h(f: LaurentPoly, rays, table: VarTable) -> LaurentPoly:
    return beta(alpha(f, rays, table))


@dataclass(frozen=True)
class CoxPresentation:
    """Generators and relations of a Cox ring.

    ``degrees`` maps each variable to its class in ``class_group``; both may
    be absent for presentations built without class-group data.
    """

    variables: tuple[Var, ...]
    relations: tuple[LaurentPoly, ...]
    class_group: AbelianGroup | None = None
    degrees: dict = field(default_factory=dict, compare=False)
    factorial_flag: bool | None = None
    warnings: tuple[str, ...] = ()
    degree_map: DegreeMap | None = field(default=None, compare=False, repr=False)

    @property
    def is_polynomial_ring(self) -> bool:
        return not self.relations

    def relation_strings(self) -> list[str]:
        return [str(f) for f in self.relations]

    def variables_of_kind(self, kind: str) -> list[Var]:
        return [v for v in self.variables if v.kind == kind]


def _check_in_cone(rays, vc: ValuationCone | None, allow_outside: bool) -> None:
    if vc is None or allow_outside:
        return
    for u in rays:
        if not ray_membership(u, vc):
            raise OutsideValuationConeError(f"ray {u} lies outside the valuation cone")


def cox_presentation(space: SphericalDatum, emb: EmbeddingDatum, *,
                     valuation: ValuationCone | None = None,
                     bold: BoldSpaceDatum | None = None,
                     allow_outside_valuation_cone: bool = False) -> CoxPresentation:
    """Cox ring ``S(V)[W_1..W_n] / (g^h : g a supplied generator)``.

    With ``bold`` the grading is that of the bold space (whose own rays must
    correspond one to one with ``emb``); otherwise that of the embedding of
    ``space`` itself.
    """
    emb.check_rank(space.rank)
    _check_in_cone(emb.rays, valuation, allow_outside_valuation_cone)
    table = space.table
    relations = []
    for g in space.relations:
        f = h(g, emb.rays, table)
        if not f.is_zero() and all(f.normalized() != e.normalized() for e in relations):
            relations.append(f)
    if bold is not None:
        if len(bold.rays) != emb.n:
            raise HomogenizationError("bold rays and lifted rays differ in number")
        if bold.r != space.r:
            raise HomogenizationError("bold space and lifted space have different numbers of colors")
        group, dm = cl_of_embedding(bold)
        flag = factorial_flag(bold)
    else:
        group, dm = cl_of_embedding(space, emb)
        flag = factorial_flag(space)
    for f in relations:
        if not dm.is_homogeneous(f):
            raise InhomogeneousRelationError(f"relation {f} is not homogeneous for the class-group grading")
    variables = tuple(v for v in table.variables if v.kind == "S") + tuple(W(l) for l in range(1, emb.n + 1))
    warnings = []
    if len(space.relations) > 1:
        warnings.append(NOT_GUARANTEED_GENERATING)
    return CoxPresentation(
        variables=variables,
        relations=tuple(relations),
        class_group=group,
        degrees={v: dm.of_var(v) for v in variables},
        factorial_flag=flag,
        warnings=tuple(warnings),
        degree_map=dm,
    )


def is_horospherical(space: SphericalDatum) -> bool:
    """All generators M-homogeneous, so the Cox ring adds the ``W_l`` freely."""
    return all(is_M_homogeneous(g, space.table) for g in space.relations)
