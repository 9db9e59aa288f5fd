"""Rational polyhedral cones and fans, computed exactly.

A :class:`Cone` keeps both descriptions: generators (extreme rays plus a
lineality basis) and half-spaces ``<x, a> <= 0`` plus equations
``<x, e> = 0``.  Conversions use the double description method over the
integers; intermediate vectors are reduced to primitive form after every
step so nothing leaves Z.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .lattice import FreeLattice, dot, invariant_factors, primitive, rank

Vec = tuple[int, ...]


class PolyhedraError(ValueError):
    pass


class SmoothnessError(PolyhedraError):
    def __init__(self, cone: "Cone", label=None):
        self.cone = cone
        self.label = label
        super().__init__(f"cone {label if label is not None else ''} is not smooth: rays {cone.rays}")


class CompatibilityError(PolyhedraError):
    def __init__(self, first, second, labels=None):
        self.pair = (first, second)
        self.labels = labels
        super().__init__(
            f"cones {labels if labels is not None else ''} do not meet in a common face: "
            f"{first.rays} and {second.rays}"
        )


def _neg(v: Sequence[int]) -> Vec:
    return tuple(-x for x in v)


def _canon_rays(vs: Iterable[Sequence[int]]) -> list[Vec]:
    out = {primitive(v) for v in vs if any(v)}
    return sorted(out)


# --------------------------------------------------------------------------
# double description


def _double_description(dim: int, inequalities: Sequence[Sequence[int]],
                        equations: Sequence[Sequence[int]] = ()) -> tuple[list[Vec], list[Vec]]:
    """Generators of ``{x : <x,a> <= 0 for a in inequalities, <x,e> = 0 for e in equations}``.

    Returns (extreme rays, lineality basis), both as primitive integer vectors.
    """
    lin: list[Vec] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[Vec] = []
    processed: list[Vec] = []

    def step(a: Vec, is_equation: bool):
        nonlocal lin, rays
        k = next((t for t, l in enumerate(lin) if dot(a, l)), None)
        if k is not None:
            piv = lin[k]
            c0 = dot(a, piv)
            if c0 > 0:
                piv, c0 = _neg(piv), -c0
            # make every other generator orthogonal to a using the pivot
            new_lin = []
            for t, l in enumerate(lin):
                if t == k:
                    continue
                cl = dot(a, l)
                if cl:
                    l = tuple(-c0 * x + cl * y for x, y in zip(l, piv))
                if any(l):
                    new_lin.append(primitive(l))
            new_rays = []
            for r in rays:
                cr = dot(a, r)
                if cr:
                    r = tuple(-c0 * x + cr * y for x, y in zip(r, piv))
                if any(r):
                    new_rays.append(primitive(r))
            if not is_equation:
                new_rays.append(primitive(piv))
            processed.append(a)
            lin = new_lin
            rays = _prune(new_rays, processed, dim - len(lin))
            return
        pos = [r for r in rays if dot(a, r) > 0]
        neg = [r for r in rays if dot(a, r) < 0]
        zero = [r for r in rays if dot(a, r) == 0]
        keep = zero if is_equation else zero + neg
        combos = []
        for p in pos:
            ap = dot(a, p)
            for n in neg:
                an = dot(a, n)
                combos.append(tuple(ap * x - an * y for x, y in zip(n, p)))
        processed.append(a)
        rays = _prune(keep + [c for c in combos if any(c)], processed, dim - len(lin))

    for e in equations:
        e = tuple(int(x) for x in e)
        if any(e):
            step(e, True)
    for a in inequalities:
        a = tuple(int(x) for x in a)
        if any(a):
            step(a, False)
    return _canon_rays(rays), _lineality_canon(lin, dim)


def _prune(candidates: list[Vec], constraints: list[Vec], depth: int) -> list[Vec]:
    """Keep extreme rays: tight constraints must have rank ``depth - 1``."""
    out = []
    seen = set()
    for r in candidates:
        r = primitive(r)
        if r in seen:
            continue
        tight = [a for a in constraints if dot(a, r) == 0]
        if rank(tight) == depth - 1:
            seen.add(r)
            out.append(r)
    return out


def _lineality_canon(lin: Sequence[Vec], dim: int) -> list[Vec]:
    """Reduced row echelon integer basis of a subspace, for reproducible output."""
    from fractions import Fraction

    rows = [[Fraction(x) for x in v] for v in lin]
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return [primitive(row) for row in rows[:r]]


# --------------------------------------------------------------------------
# cones


class Cone:
    """Rational polyhedral cone ``cone(rays) + span(lineality)``.

    Parameters
    ----------
    rays : generating vectors, need not be extreme
    lineality : vectors spanning a linear subspace contained in the cone
    ambient : lattice rank or :class:`FreeLattice`
    """

    def __init__(self, rays: Iterable[Sequence[int]] = (), lineality: Iterable[Sequence[int]] = (),
                 ambient: int | FreeLattice | None = None):
        rays = [tuple(int(x) for x in r) for r in rays]
        lineality = [tuple(int(x) for x in r) for r in lineality]
        if ambient is None:
            if not rays and not lineality:
                raise PolyhedraError("ambient rank is required for the zero cone")
            ambient = len((rays or lineality)[0])
        self.ambient = ambient if isinstance(ambient, FreeLattice) else FreeLattice(int(ambient))
        d = self.ambient.rank
        if any(len(v) != d for v in rays + lineality):
            raise PolyhedraError("generator of wrong length")
        gens = rays + lineality + [_neg(l) for l in lineality]
        # dual cone {y : <g, y> >= 0}; its generators are the facet data of self
        dual_rays, dual_lin = _double_description(d, [_neg(g) for g in gens if any(g)])
        self.facets: list[Vec] = sorted({primitive(_neg(y)) for y in dual_rays})
        self.equations: list[Vec] = dual_lin
        self.rays, self.lineality = _double_description(d, self.facets, self.equations)
        self._check(rays, lineality)

    @classmethod
    def from_halfspaces(cls, normals: Iterable[Sequence[int]], ambient: int | FreeLattice,
                        equations: Iterable[Sequence[int]] = ()) -> "Cone":
        """The cone ``{x : <x, a> <= 0 for a in normals, <x, e> = 0 for e in equations}``."""
        d = ambient.rank if isinstance(ambient, FreeLattice) else int(ambient)
        rays, lin = _double_description(d, list(normals), list(equations))
        return cls(rays, lin, ambient)

    @classmethod
    def full_space(cls, ambient: int | FreeLattice) -> "Cone":
        d = ambient.rank if isinstance(ambient, FreeLattice) else int(ambient)
        return cls((), [tuple(int(i == j) for j in range(d)) for i in range(d)], ambient)

    def _check(self, rays, lineality):
        # every input generator satisfies the facet description
        for g in rays + lineality:
            if not self.contains(g):
                raise PolyhedraError("double description mismatch: generator outside its cone")
        for l in lineality:
            if not self.contains(_neg(l)):
                raise PolyhedraError("double description mismatch: lineality not two-sided")
        if rank(list(rays) + list(lineality)) != self.dim:
            raise PolyhedraError("double description mismatch: dimension")

    # --- basic invariants
    @property
    def dim(self) -> int:
        return self.ambient.rank - len(self.equations)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_space(self) -> bool:
        return self.lineality_dim == self.ambient.rank

    def generators(self) -> list[Vec]:
        return list(self.rays) + list(self.lineality) + [_neg(l) for l in self.lineality]

    def contains(self, x: Sequence) -> bool:
        return all(dot(a, x) <= 0 for a in self.facets) and all(dot(e, x) == 0 for e in self.equations)

    def relative_interior_contains(self, x: Sequence) -> bool:
        return all(dot(a, x) < 0 for a in self.facets) and all(dot(e, x) == 0 for e in self.equations)

    def interior_point(self) -> Vec:
        """A lattice point in the relative interior."""
        return tuple(sum(col) for col in zip(*self.rays)) if self.rays else tuple([0] * self.ambient.rank)

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def issubset(self, other: "Cone") -> bool:
        return all(other.contains(g) for g in self.generators())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return self.ambient.rank == other.ambient.rank and self.issubset(other) and other.issubset(self)

    def __hash__(self):
        return hash((self.ambient.rank, self.dim, self.lineality_dim, len(self.rays)))

    def __repr__(self) -> str:
        extra = f", lineality={self.lineality}" if self.lineality else ""
        return f"Cone(rays={self.rays}{extra}, ambient={self.ambient.rank})"

    # --- faces and intersections
    def face(self, normal: Sequence[int]) -> "Cone":
        """``self ∩ {<x, normal> = 0}`` for a valid inequality ``normal``."""
        if any(dot(normal, g) > 0 for g in self.generators()):
            raise PolyhedraError("normal does not define a supporting hyperplane")
        rays = [r for r in self.rays if dot(normal, r) == 0]
        return Cone(rays, self.lineality, self.ambient)

    def intersection(self, other: "Cone") -> "Cone":
        if self.ambient.rank != other.ambient.rank:
            raise PolyhedraError("cones live in different lattices")
        return Cone.from_halfspaces(self.facets + other.facets, self.ambient, self.equations + other.equations)

    def faces_of_dim(self, k: int) -> list["Cone"]:
        out: list[Cone] = []
        todo = [self]
        seen = []
        while todo:
            c = todo.pop()
            if any(c == s for s in seen):
                continue
            seen.append(c)
            if c.dim == k:
                out.append(c)
            elif c.dim > k:
                todo.extend(c.face(a) for a in c.facets)
        return out


def is_smooth(c: Cone) -> bool:
    """Rays linearly independent and part of a lattice basis (pointed cones only)."""
    if c.lineality:
        return False
    if not c.rays:
        return True
    if rank(c.rays) != len(c.rays):
        return False
    return all(f == 1 for f in invariant_factors(c.rays, c.ambient.rank))


def is_face(f: Cone, c: Cone) -> bool:
    """Whether ``f`` is a face of ``c``.

    The smallest face of ``c`` containing ``f`` is cut out by the facets of
    ``c`` whose hyperplanes contain ``f``; ``f`` is a face iff it fills it.
    """
    if not f.issubset(c):
        return False
    gens = f.generators()
    tight = [a for a in c.facets if all(dot(a, g) == 0 for g in gens)]
    normal = tuple(sum(col) for col in zip(*tight)) if tight else tuple([0] * c.ambient.rank)
    smallest = c.face(normal)
    return smallest.issubset(f)


def intersect_is_face(c1: Cone, c2: Cone) -> bool:
    """Whether ``c1 ∩ c2`` is a face of both cones."""
    if c1.ambient.rank != c2.ambient.rank:
        raise PolyhedraError("cones live in different lattices")
    # independent joint rays: the cones meet in the cone over their common
    # rays, a face of both simplicial cones
    joint = sorted(set(c1.rays) | set(c2.rays))
    if c1.is_pointed and c2.is_pointed and rank(joint) == len(joint):
        return True
    meet = c1.intersection(c2)
    return is_face(meet, c1) and is_face(meet, c2)


def dual_halfspaces(c: Cone) -> list[Vec]:
    """Primitive facet normals ``a`` with ``c = {<x, a> <= 0}`` (plus equations).

    For a full-dimensional cone the normals are unique; the zero set (full
    space) gives an empty list.
    """
    return list(c.facets)


def dual_cone(c: Cone) -> Cone:
    """``{y : <x, y> >= 0 for all x in c}``."""
    return Cone([_neg(a) for a in c.facets], c.equations, c.ambient)


# --------------------------------------------------------------------------
# the index set of omitted coordinates and the fans built from it


@dataclass(frozen=True)
class OmitChoice:
    """An element of the index set: for each module ``i`` the one omitted ``j`` (1-based)."""

    omitted: tuple[int, ...]

    def members(self, dims: Sequence[int]) -> list[tuple[int, int]]:
        if len(dims) != len(self.omitted):
            raise PolyhedraError("choice does not match the module dimensions")
        return [(i, j) for i, (s, o) in enumerate(zip(dims, self.omitted), start=1)
                for j in range(1, s + 1) if j != o]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.omitted)) + ")"


def enumerate_A(dims: Sequence[int]) -> list[OmitChoice]:
    """All ways of omitting exactly one coordinate per module, lexicographically."""
    if any(s < 1 for s in dims):
        raise PolyhedraError("module dimensions must be >= 1")
    return [OmitChoice(t) for t in itertools.product(*(range(1, s + 1) for s in dims))]


def big_lattice_index(dims: Sequence[int], m: int) -> dict:
    """Coordinate positions of ``v_ij`` (keys ``(i, j)``) and ``w_k`` (keys ``k``) in N."""
    pos = {}
    t = 0
    for i, s in enumerate(dims, start=1):
        for j in range(1, s + 1):
            pos[(i, j)] = t
            t += 1
    for k in range(1, m + 1):
        pos[k] = t
        t += 1
    return pos


def embed_in_big_lattice(u: Sequence[int], dims: Sequence[int], m: int) -> Vec:
    """Image of ``u`` (over ``v_1..v_r, w_1..w_m``) under ``v_i -> sum_j v_ij``, ``w_k -> w_k``."""
    r = len(dims)
    if len(u) != r + m:
        raise PolyhedraError(f"expected a vector of length {r + m}")
    out = []
    for i, s in enumerate(dims):
        out.extend([int(u[i])] * s)
    out.extend(int(x) for x in u[r:])
    return tuple(out)


def _unit(n: int, t: int) -> Vec:
    return tuple(int(i == t) for i in range(n))


def build_sigma_cone(l: int, u: Sequence[int], a: OmitChoice, dims: Sequence[int], m: int) -> Cone:
    """``cone({u} ∪ a)`` in the big lattice N; ``l`` only labels the cone."""
    from .lattice import is_primitive

    if not is_primitive(u):
        raise PolyhedraError(f"ray {tuple(u)} for l={l} is not primitive")
    pos = big_lattice_index(dims, m)
    n = len(pos)
    rays = [embed_in_big_lattice(u, dims, m)] + [_unit(n, pos[ij]) for ij in a.members(dims)]
    return Cone(rays, (), n)


def build_hat_cone(l: int, n_rays: int, a: OmitChoice, dims: Sequence[int], m: int) -> Cone:
    """``cone({e_l} ∪ a)`` in ``N ⊕ Z^n``."""
    pos = big_lattice_index(dims, m)
    big = len(pos)
    total = big + n_rays
    rays = [_unit(total, big + l - 1)] + [_unit(total, pos[ij]) for ij in a.members(dims)]
    return Cone(rays, (), total)


class Fan:
    """A fan given by its generating cones; faces are implicit."""

    def __init__(self, cones: Sequence[Cone], labels: Sequence | None = None,
                 ambient: int | FreeLattice | None = None):
        if not cones and ambient is None:
            raise PolyhedraError("ambient rank is required for the empty fan")
        self.cones = list(cones)
        self.labels = list(labels) if labels is not None else list(range(len(self.cones)))
        rk = ambient if ambient is not None else self.cones[0].ambient
        self.ambient = rk if isinstance(rk, FreeLattice) else FreeLattice(int(rk))

    def __len__(self) -> int:
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    def rays(self) -> list[Vec]:
        return sorted({r for c in self.cones for r in c.rays})

    def non_smooth(self) -> list:
        return [lab for c, lab in zip(self.cones, self.labels) if not is_smooth(c)]

    def incompatible_pairs(self) -> list:
        bad = []
        for (i, c1), (j, c2) in itertools.combinations(enumerate(self.cones), 2):
            if not intersect_is_face(c1, c2):
                bad.append((self.labels[i], self.labels[j]))
        return bad

    def verify(self) -> None:
        """Raise on the first non-smooth cone or non-compatible pair."""
        for c, lab in zip(self.cones, self.labels):
            if not is_smooth(c):
                raise SmoothnessError(c, lab)
        for (i, c1), (j, c2) in itertools.combinations(enumerate(self.cones), 2):
            if not intersect_is_face(c1, c2):
                raise CompatibilityError(c1, c2, (self.labels[i], self.labels[j]))


def _check_rays(rays: Sequence[Sequence[int]]) -> None:
    from .lattice import is_primitive

    seen = set()
    for u in rays:
        if not is_primitive(u):
            raise PolyhedraError(f"ray {tuple(u)} is not primitive")
        if tuple(u) in seen:
            raise PolyhedraError(f"ray {tuple(u)} listed twice")
        seen.add(tuple(u))


def build_fan_X(dims: Sequence[int], m: int, rays: Sequence[Sequence[int]], verify: bool = True) -> Fan:
    """Fan in N generated by ``cone({u_l} ∪ a)`` for every ray and every omit choice.

    With ``verify`` the smoothness and pairwise-face conditions are checked
    and a :class:`SmoothnessError` / :class:`CompatibilityError` is raised.
    """
    _check_rays(rays)
    choices = enumerate_A(dims)
    cones, labels = [], []
    for l, u in enumerate(rays, start=1):
        for a in choices:
            cones.append(build_sigma_cone(l, u, a, dims, m))
            labels.append((l, a))
    fan = Fan(cones, labels, ambient=sum(dims) + m)
    if verify:
        fan.verify()
    return fan


def build_fan_hat(dims: Sequence[int], m: int, n_rays: int, verify: bool = True) -> Fan:
    """Fan in ``N ⊕ Z^n`` generated by ``cone({e_l} ∪ a)``."""
    choices = enumerate_A(dims)
    cones, labels = [], []
    for l in range(1, n_rays + 1):
        for a in choices:
            cones.append(build_hat_cone(l, n_rays, a, dims, m))
            labels.append((l, a))
    fan = Fan(cones, labels, ambient=sum(dims) + m + n_rays)
    if verify:
        fan.verify()
    return fan


def x0_cones(dims: Sequence[int], m: int) -> list[Cone]:
    """The cones ``cone(a)`` of the fan of the open part (``u_0 = 0``)."""
    pos = big_lattice_index(dims, m)
    n = len(pos)
    return [Cone([_unit(n, pos[ij]) for ij in a.members(dims)], (), n) for a in enumerate_A(dims)]


def expected_cone_count(dims: Sequence[int], n_rays: int) -> int:
    return n_rays * prod(dims)
