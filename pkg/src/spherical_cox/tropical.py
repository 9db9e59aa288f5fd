"""Valuation cones from the tropical hypersurface of a single relation.

On the coweight lattice a monomial of the big torus takes the value
``<u, mu>`` where ``mu`` is its M-weight.  A point ``u`` lies on the
tropical hypersurface when the minimum over the monomials of the relation
is attained at least twice, counting distinct big-torus exponents (two
monomials with the same M-weight tie everywhere).  Coefficients play no
role.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .lattice import dot, rank
from .multipoly import LaurentPoly, Monomial, VarTable, weight_of_monomial
from .polyhedra import Cone, dual_halfspaces


class TropicalError(ValueError):
    pass


class NonPrincipalError(TropicalError):
    pass


@dataclass(frozen=True)
class TropicalPiece:
    """Region of the coweight space where the weights ``pair`` tie for the minimum."""

    cone: Cone
    pair: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ValuationCone:
    """``{u : <u, gamma> <= 0 for every root gamma}`` with primitive, independent roots."""

    cone: Cone
    roots: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.roots and rank(list(self.roots)) != len(self.roots):
            raise TropicalError(f"spherical roots {self.roots} are not linearly independent")

    @classmethod
    def from_roots(cls, roots: Sequence[Sequence[int]], ambient: int) -> "ValuationCone":
        roots = tuple(sorted(tuple(int(x) for x in g) for g in roots))
        return cls(Cone.from_halfspaces(roots, ambient), roots)

    @property
    def is_full_space(self) -> bool:
        return not self.roots

    @property
    def ambient_rank(self) -> int:
        return self.cone.ambient.rank

    def contains(self, u: Sequence[int]) -> bool:
        return ray_membership(u, self)


def monomial_weights(f: LaurentPoly, table: VarTable) -> list[tuple[Monomial, tuple[int, ...]]]:
    """One ``(exponent, M-weight)`` pair per monomial of ``f``."""
    if f.is_zero():
        raise TropicalError("the zero polynomial has no tropicalization")
    return [(m, weight_of_monomial(m, table)) for m, _ in f.sorted_terms()]


def _weight_classes(f: LaurentPoly, table: VarTable) -> dict[tuple[int, ...], int]:
    classes: dict[tuple[int, ...], int] = {}
    for _, mu in monomial_weights(f, table):
        classes[mu] = classes.get(mu, 0) + 1
    return classes


def min_attained_twice(u: Sequence, f: LaurentPoly, table: VarTable) -> bool:
    """Direct test at one point: is the minimal monomial value attained at least twice?"""
    values = [dot(u, mu) for _, mu in monomial_weights(f, table)]
    low = min(values)
    return values.count(low) >= 2


def tropical_pieces(f: LaurentPoly, table: VarTable) -> list[TropicalPiece]:
    """Polyhedral pieces of the tropical hypersurface restricted to the coweight space."""
    classes = _weight_classes(f, table)
    weights = sorted(classes)
    d = table.rank
    pieces = []

    def diff(a, b):
        return tuple(x - y for x, y in zip(a, b))

    for a in weights:
        if classes[a] >= 2:
            ineq = [diff(a, c) for c in weights if c != a]
            pieces.append(TropicalPiece(Cone.from_halfspaces(ineq, d), (a,)))
    for a, b in itertools.combinations(weights, 2):
        ineq = [diff(a, c) for c in weights if c not in (a, b)]
        pieces.append(TropicalPiece(Cone.from_halfspaces(ineq, d, [diff(a, b)]), (a, b)))
    return pieces


def _cells(hull: Cone, normals: Sequence[Sequence[int]]) -> list[Cone]:
    """Full-dimensional (relative to ``hull``) cells of the arrangement of hyperplanes."""
    cells = [hull]
    for a in normals:
        nxt = []
        for c in cells:
            if all(dot(a, g) == 0 for g in c.generators()):
                nxt.append(c)
                continue
            for sign in (1, -1):
                half = Cone.from_halfspaces(c.facets + [tuple(sign * x for x in a)], c.ambient, c.equations)
                if half.dim == hull.dim:
                    nxt.append(half)
        cells = nxt
    return cells


def valuation_cone(relations: LaurentPoly | Sequence[LaurentPoly], table: VarTable) -> ValuationCone:
    """Valuation cone of a space whose ideal is generated by one relation.

    Raises :class:`NonPrincipalError` for several relations and
    :class:`TropicalError` when the restricted tropical hypersurface is
    empty or not a convex cone.
    """
    if isinstance(relations, LaurentPoly):
        relations = [relations]
    relations = list(relations)
    d = table.rank
    if not relations:
        # zero ideal: the whole torus, every valuation occurs
        return ValuationCone(Cone.full_space(d), ())
    if len(relations) != 1:
        raise NonPrincipalError(
            f"tropicalization needs a principal ideal, got {len(relations)} generators"
        )
    f = relations[0]
    pieces = tropical_pieces(f, table)
    if not pieces:
        raise TropicalError("a monomial has empty tropical hypersurface")
    hull = Cone([g for p in pieces for g in p.cone.generators()], (), d)
    if hull.dim < d:
        raise TropicalError("the tropical hypersurface restricted to the coweight space is not full-dimensional")
    # the hull is the union iff every top-dimensional cell of the weight arrangement is covered
    weights = sorted(_weight_classes(f, table))
    normals = [tuple(x - y for x, y in zip(a, b)) for a, b in itertools.combinations(weights, 2)]
    for cell in _cells(hull, normals):
        if not min_attained_twice(cell.interior_point(), f, table):
            raise TropicalError("the restricted tropical hypersurface is not convex")
    roots = dual_halfspaces(hull)
    return ValuationCone(hull, tuple(roots))


def ray_membership(u: Sequence[int], vc: ValuationCone) -> bool:
    """``<u, gamma> <= 0`` for every spherical root."""
    return all(dot(u, g) <= 0 for g in vc.roots)


def spherical_roots(f: LaurentPoly, table: VarTable) -> list[tuple[int, ...]]:
    return list(valuation_cone(f, table).roots)
