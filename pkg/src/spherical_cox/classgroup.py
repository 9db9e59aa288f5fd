"""Divisor class groups of embeddings and the Picard sequence of a bold space.

For an embedding with invariant divisors ``D_1..D_r`` (colors) and
``Y_1..Y_n`` (boundary), ``Cl`` is the cokernel of

    mu  |->  ((<rho(D_i), mu>)_i, (<u_l, mu>)_l)

where ``rho(D_i)`` is ``v_i`` on a space with trivial class group and the
row ``d_matrix[i]`` on a bold space.  Classes are written in the
coordinates of :class:`~spherical_cox.lattice.Cokernel` (free part,
then torsion residues) so that equality is syntactic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .data import BoldSpaceDatum, EmbeddingDatum, SphericalDatum
from .lattice import AbelianGroup, Cokernel, FreeLattice, LatticeMap, cokernel_data
from .multipoly import LaurentPoly, Monomial, Var


class ClassGroupError(ValueError):
    pass


@dataclass(frozen=True)
class DegreeMap:
    """Cl-degrees of the divisor generators and of the Cox ring variables."""

    cokernel: Cokernel
    divisors: tuple[str, ...]
    degrees: tuple[tuple[int, ...], ...]

    @property
    def group(self) -> AbelianGroup:
        return self.cokernel.group

    def __getitem__(self, label: str) -> tuple[int, ...]:
        return self.degrees[self.divisors.index(label)]

    def as_dict(self) -> dict[str, tuple[int, ...]]:
        return dict(zip(self.divisors, self.degrees))

    def zero(self) -> tuple[int, ...]:
        return tuple([0] * len(self.cokernel.moduli))

    def of_var(self, v: Var) -> tuple[int, ...]:
        # S[i,j] sits in degree [D_i], W[l] in degree [Y_l]
        if v.kind == "S":
            return self[f"D{v.index[0]}"]
        if v.kind == "W":
            return self[f"Y{v.index[0]}"]
        raise ClassGroupError(f"{v} has no class-group degree")

    def of_monomial(self, mono: Monomial) -> tuple[int, ...]:
        acc = self.zero()
        for v, e in mono:
            dv = self.of_var(v)
            acc = self.cokernel.add(acc, tuple(e * x for x in dv))
        return acc

    def is_homogeneous(self, f: LaurentPoly) -> bool:
        return len({self.of_monomial(m) for m in f.terms}) <= 1

    def format(self, deg: Sequence[int]) -> str:
        return "(" + ", ".join(str(x) for x in deg) + ")"


def _divisor_map(rows: Sequence[Sequence[int]], rays: Sequence[Sequence[int]], rank: int) -> LatticeMap:
    matrix = [tuple(r) for r in rows] + [tuple(u) for u in rays]
    return LatticeMap(FreeLattice(rank), FreeLattice(len(matrix)), tuple(matrix))


def cl_of_embedding(space: SphericalDatum | BoldSpaceDatum,
                    rays: EmbeddingDatum | Sequence[Sequence[int]] | None = None,
                    ) -> tuple[AbelianGroup, DegreeMap]:
    """Class group of the embedding given by ``rays``, with the degrees of ``D_i`` and ``Y_l``.

    For a bold space the rays default to its own ``rays`` field.
    """
    if isinstance(rays, EmbeddingDatum):
        rays = rays.rays
    if isinstance(space, BoldSpaceDatum):
        rank = space.weight_rank
        rows = space.d_matrix
        rays = space.rays if rays is None else rays
    else:
        rank = space.rank
        rows = [tuple(int(t == i) for t in range(rank)) for i in range(space.r)]
        rays = rays or ()
    for u in rays:
        if len(u) != rank:
            raise ClassGroupError(f"ray {tuple(u)} does not live in a lattice of rank {rank}")
    coker = cokernel_data(_divisor_map(rows, rays, rank))
    labels = tuple(f"D{i}" for i in range(1, len(rows) + 1)) + tuple(f"Y{l}" for l in range(1, len(rays) + 1))
    total = len(labels)
    degrees = tuple(coker.coordinates([int(t == k) for t in range(total)]) for k in range(total))
    dm = DegreeMap(coker, labels, degrees)
    return dm.group, dm


def pic_g_sequence(b: BoldSpaceDatum) -> AbelianGroup:
    """Cokernel of ``M -> X(C) + Z^D``, ``mu |-> (-mu|_C, d(mu))``.

    This is the equivariant Picard group of the bold space (isomorphic to
    the character group of its stabilizer).  The map must be injective.
    """
    rows = [tuple(-x for x in row) for row in b.mu_restriction] + list(b.d_matrix)
    f = _divisor_map(rows, (), b.weight_rank)
    if not f.is_injective():
        raise ClassGroupError("the map from the weight lattice to X(C) + Z^D is not injective")
    return cokernel_data(f).group


def factorial_flag(space: SphericalDatum | BoldSpaceDatum) -> bool:
    """Echo of the connectedness assertion; no ring-theoretic check is made."""
    return bool(space.h_connected)


def class_of(dm: DegreeMap, counts: Mapping[str, int]) -> tuple[int, ...]:
    """Class of the divisor ``sum counts[label] * label``."""
    acc = dm.zero()
    for lab, c in counts.items():
        acc = dm.cokernel.add(acc, tuple(c * x for x in dm[lab]))
    return acc

