"""Passing between a bold space and its lift with trivial class group.

The lift has ``r`` colors (those of the bold space) and unit weights
``w_1*..w_m*`` with ``m = rank`` of the bold weight lattice.  We take the
basis of the unit weights to be ``w_k* := gamma(mu_k)`` for the chosen basis
``mu_k``, where

    gamma(mu) = mu|_C - sum_i d_i(mu) eta_i     in  X(C) + Z^D.

With that choice ``gamma`` is the identity in ``M_T`` coordinates, the
pullback of weights is ``mu |-> sum_i d_i(mu) v_i* + gamma(mu)``, i.e. the
matrix ``[d_matrix ; I]``, and the pushforward of coweights is its
transpose: ``v_i |-> d_i`` and ``w_k |-> e_k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classgroup import pic_g_sequence
from .data import BoldSpaceDatum, EmbeddingDatum, SphericalDatum
from .lattice import FreeLattice, LatticeMap, dot, identity, primitive, solve_rational
from .multipoly import homogeneous_components
from .polyhedra import Cone
from .tropical import ValuationCone


class DescentError(ValueError):
    pass


def _labels(prefix: str, n: int, star: str = "") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}{star}" for i in range(1, n + 1))


def gamma_iso(b: BoldSpaceDatum) -> LatticeMap:
    """``gamma`` from the bold weight lattice onto ``M_T`` (identity in the chosen basis)."""
    pic_g_sequence(b)  # injectivity check
    k = b.weight_rank
    return LatticeMap(FreeLattice(k, _labels("mu", k)), FreeLattice(k, _labels("w", k, "*")),
                      tuple(map(tuple, identity(k))))


def gamma_embedding(b: BoldSpaceDatum) -> LatticeMap:
    """``gamma`` as a map into ``X(C) + Z^D``, rows ``mu|_C`` then ``-d_i``."""
    k = b.weight_rank
    rows = [tuple(row) for row in b.mu_restriction] + [tuple(-x for x in row) for row in b.d_matrix]
    labels = _labels("c", b.xc_rank) + _labels("eta", b.r)
    return LatticeMap(FreeLattice(k, _labels("mu", k)), FreeLattice(len(rows), labels), tuple(rows))


def pullback(b: BoldSpaceDatum) -> LatticeMap:
    """Weights of the bold space inside the weights ``v_i*, w_k*`` of the lift."""
    g = gamma_iso(b).matrix
    k = b.weight_rank
    rows = [tuple(row) for row in b.d_matrix] + [tuple(row) for row in g]
    target = FreeLattice(b.r + k, _labels("v", b.r, "*") + _labels("w", k, "*"))
    return LatticeMap(FreeLattice(k, _labels("mu", k)), target, tuple(rows))


def pushforward(b: BoldSpaceDatum) -> LatticeMap:
    """Coweights of the lift onto the coweights of the bold space."""
    k = b.weight_rank
    pb = pullback(b)
    source = FreeLattice(b.r + k, _labels("v", b.r) + _labels("w", k))
    return LatticeMap(source, FreeLattice(k, _labels("u", k)), pb.dual().matrix)


def _torus_block(b: BoldSpaceDatum) -> LatticeMap:
    pf = pushforward(b)
    k = b.weight_rank
    block = tuple(tuple(row[b.r:]) for row in pf.matrix)
    return LatticeMap(FreeLattice(k), FreeLattice(k), block)


def lift_fan(b: BoldSpaceDatum, bold_rays: Sequence[Sequence[int]] | None = None) -> EmbeddingDatum:
    """Rays in the unit-coweight part of the lift mapping onto the bold rays."""
    bold_rays = b.rays if bold_rays is None else bold_rays
    block = _torus_block(b)
    if not block.is_unimodular():
        raise DescentError("the pushforward is not an isomorphism on the unit coweights")
    rays = []
    for ub in bold_rays:
        sol = solve_rational(block.matrix, list(ub))
        if sol is None or any(x.denominator != 1 for x in sol):
            raise DescentError(f"bold ray {tuple(ub)} is not in the image of the unit coweights")
        u = tuple([0] * b.r + [int(x) for x in sol])
        rays.append(primitive(u))
    pf = pushforward(b)
    for u, ub in zip(rays, bold_rays):
        img = pf(u)
        if primitive(img) != primitive(ub) or dot(img, ub) <= 0:
            raise DescentError(f"lifted ray {u} does not map onto {tuple(ub)}")
    return EmbeddingDatum(tuple(rays))


def descend_valuation_cone(vc: ValuationCone, b: BoldSpaceDatum) -> ValuationCone:
    """Valuation cone of the bold space, checked against the lift by pulling back."""
    k = b.weight_rank
    pb = pullback(b)
    if vc.ambient_rank != b.r + k:
        raise DescentError("valuation cone and bold datum do not fit together")
    roots = []
    for g in vc.roots:
        gb = tuple(g[b.r:])
        if tuple(pb(gb)) != tuple(g):
            raise DescentError(f"root {g} is not pulled back from the bold space")
        roots.append(gb)
    down = ValuationCone.from_roots(roots, k)
    # the preimage of the descended cone must be the original cone
    back = Cone.from_halfspaces([pb(g) for g in down.roots], vc.ambient_rank)
    if back != vc.cone:
        raise DescentError("preimage of the descended valuation cone differs from the valuation cone")
    return down


def check_relations(space: SphericalDatum, b: BoldSpaceDatum) -> None:
    """Every lifted relation must be homogeneous for ``v_i* -> eta_i``, ``w_k* -> gamma(mu_k)``.

    This is the weight with respect to the group acting on the lift; a
    mismatch means the relation and the valuation data disagree.
    """
    if space.r != b.r or space.m != b.weight_rank:
        raise DescentError(
            f"lift has r={space.r}, m={space.m} but bold datum needs r={b.r}, m={b.weight_rank}"
        )
    ge = gamma_embedding(b)
    width = b.xc_rank + b.r
    cols = []
    for i in range(b.r):
        cols.append(tuple([0] * b.xc_rank + [int(t == i) for t in range(b.r)]))
    for kk in range(b.weight_rank):
        cols.append(tuple(ge(tuple(int(t == kk) for t in range(b.weight_rank)))))
    for f in space.relations:
        images = {tuple(sum(c * col[t] for c, col in zip(mu, cols)) for t in range(len(cols[0])))
                  for mu in homogeneous_components(f, space.table)}
        if len(images) > 1:
            raise DescentError(f"relation {f} is not homogeneous for the action on the lift")


def format_pushforward(b: BoldSpaceDatum) -> list[str]:
    """Images of the color coweights in the basis ``pi(w_k)``, equal images chained."""
    pf = pushforward(b)
    target = FreeLattice(b.weight_rank, tuple(f"pi(w{k})" for k in range(1, b.weight_rank + 1)))
    groups: dict[tuple[int, ...], list[str]] = {}
    for i in range(b.r):
        groups.setdefault(tuple(row[i] for row in pf.matrix), []).append(f"pi(v{i + 1})")
    return [" = ".join(names + [target.format(img)]) for img, names in groups.items()]


@dataclass(frozen=True)
class LiftReport:
    rays: tuple[tuple[int, ...], ...]
    pushforward: tuple[str, ...]


def lift_report(b: BoldSpaceDatum) -> LiftReport:
    return LiftReport(lift_fan(b).rays, tuple(format_pushforward(b)))

