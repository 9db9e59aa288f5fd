"""Exact integer linear algebra on free abelian groups.

Everything here works with plain Python integers (arbitrary precision).
Matrices are sequences of rows; a matrix with zero rows still needs its
column count, which is why several functions take an explicit ``ncols``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


class LatticeError(ValueError):
    pass


def _copy(m: Sequence[Sequence[int]]) -> Matrix:
    return [[int(x) for x in row] for row in m]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Product ``a @ b``; ``ncols`` is the column count of ``b`` if ``b`` is empty."""
    if not b:
        width = ncols or 0
        return [[0] * width for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def is_primitive(v: Sequence[int]) -> bool:
    """True iff the gcd of the entries of the nonzero integer vector ``v`` is 1."""
    g = content(v)
    if g == 0:
        raise LatticeError("the zero vector is neither primitive nor non-primitive")
    return g == 1


def primitive(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector positively proportional to a rational vector."""
    if all(type(x) is int for x in v):
        g = content(v)
        if g == 0:
            raise LatticeError("cannot normalize the zero vector")
        return tuple(x // g for x in v)
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = content(ints)
    if g == 0:
        raise LatticeError("cannot normalize the zero vector")
    return tuple(x // g for x in ints)


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    """Rank over Q by exact Gaussian elimination."""
    if all(type(x) is int for row in m for x in row):
        return _int_rank([list(row) for row in m if any(row)])
    rows = [[Fraction(x) for x in row] for row in m]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def _int_rank(rows: list[list[int]]) -> int:
    # fraction-free elimination; rows are divided by their content to keep entries small
    r = 0
    while rows:
        piv = min(rows, key=lambda row: next(i for i, x in enumerate(row) if x))
        c = next(i for i, x in enumerate(piv) if x)
        rows.remove(piv)
        r += 1
        nxt = []
        for row in rows:
            if row[c]:
                a, b = piv[c], row[c]
                row = [a * x - b * y for x, y in zip(row, piv)]
                g = content(row)
                if g == 0:
                    continue
                row = [x // g for x in row]
            nxt.append(row)
        rows = nxt
    return r


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """One rational solution ``x`` of ``a x = b``, or None if inconsistent."""
    nr = len(a)
    nc = len(a[0]) if nr else 0
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(nr):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][nc] != 0 for i in range(r, nr)):
        return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(pivots):
        x[c] = aug[i][nc]
    return x


def determinant(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(det)


def smith_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``U @ m @ V == D``.

    Parameters
    ----------
    m : integer matrix, shape (p, q)
    ncols : column count, only needed when ``m`` has no rows

    Returns
    -------
    U : (p, p) unimodular
    D : (p, q) diagonal with nonnegative entries, d_i | d_{i+1}
    V : (q, q) unimodular

    The pivot at every stage is the entry of smallest nonzero absolute
    value in the remaining block, ties broken by row-major position, so
    the transforms are reproducible.
    """
    A = _copy(m)
    p = len(A)
    q = len(A[0]) if p else (ncols or 0)
    U = identity(p)
    V = identity(q)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(p, q)):
        while True:
            best = None
            for i in range(t, p):
                for j in range(t, q):
                    x = abs(A[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                return U, A, V
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, p):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // piv))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, q):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // piv))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, p) for j in range(t + 1, q) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


def invariant_factors(m: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    _, D, _ = smith_normal_form(m, ncols)
    out = []
    for i in range(min(len(D), len(D[0]) if D else 0)):
        if D[i][i]:
            out.append(D[i][i])
    return out


def kernel_basis(m: Sequence[Sequence[int]], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of the integer kernel of ``m``; the span is saturated in Z^q."""
    p = len(m)
    q = len(m[0]) if p else (ncols or 0)
    _, D, V = smith_normal_form(m, q)
    rk = sum(1 for i in range(min(p, q)) if D[i][i])
    return [tuple(V[i][j] for i in range(q)) for j in range(rk, q)]


def saturation_index(vectors: Sequence[Sequence[int]], dim: int) -> int:
    """Index of span_Z(vectors) in its saturation; 1 iff saturated."""
    if not vectors:
        return 1
    factors = invariant_factors(vectors, dim)
    out = 1
    for f in factors:
        out *= f
    return out


@dataclass(frozen=True)
class FreeLattice:
    rank: int
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self):
        labels = tuple(self.basis_labels) or tuple(f"e{i + 1}" for i in range(self.rank))
        object.__setattr__(self, "basis_labels", labels)
        if len(labels) != self.rank:
            raise LatticeError("rank and number of basis labels differ")
        if len(set(labels)) != len(labels):
            raise LatticeError("basis labels must be unique")

    def format(self, v: Sequence[int]) -> str:
        """Render an integer vector as a combination of basis labels."""
        parts = []
        for c, lab in zip(v, self.basis_labels):
            c = int(c)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append((sign, f"{mag}{lab}"))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])


@dataclass(frozen=True)
class LatticeMap:
    """Homomorphism ``source -> target`` given by a ``target.rank x source.rank`` matrix."""

    source: FreeLattice
    target: FreeLattice
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        if len(mat) != self.target.rank or any(len(row) != self.source.rank for row in mat):
            raise LatticeError(
                f"matrix shape does not match {self.target.rank}x{self.source.rank}"
            )

    @classmethod
    def from_matrix(cls, matrix, source_rank: int | None = None) -> "LatticeMap":
        rows = [list(r) for r in matrix]
        q = len(rows[0]) if rows else (source_rank or 0)
        return cls(FreeLattice(q), FreeLattice(len(rows)), tuple(map(tuple, rows)))

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.source.rank:
            raise LatticeError("vector does not live in the source lattice")
        return tuple(matvec(self.matrix, v))

    def dual(self) -> "LatticeMap":
        return LatticeMap(self.target, self.source, tuple(map(tuple, transpose(self.matrix, self.source.rank))))

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """``self ∘ other``."""
        return LatticeMap(
            other.source, self.target,
            tuple(map(tuple, matmul(self.matrix, other.matrix, other.source.rank))),
        )

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def is_injective(self) -> bool:
        return self.rank == self.source.rank

    def is_unimodular(self) -> bool:
        return self.source.rank == self.target.rank and abs(determinant(self.matrix)) == 1

    def kernel(self) -> list[tuple[int, ...]]:
        return kernel_basis(self.matrix, self.source.rank)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/d_1 + ... + Z/d_k``.

    Invariant factors equal to 1 are dropped so equal groups compare equal.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        tors = tuple(int(d) for d in self.torsion if int(d) != 1)
        if any(d < 2 for d in tors):
            raise LatticeError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise LatticeError("torsion coefficients must form a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Cokernel:
    """Cokernel of a lattice map with an explicit coordinate map.

    ``coordinates(y)`` sends a target vector to its class written as
    (free coordinates..., torsion residues...), matching ``group``.
    """

    group: AbelianGroup
    projection: tuple[tuple[int, ...], ...] = field(repr=False)
    moduli: tuple[int, ...] = field(repr=False)

    def coordinates(self, y: Sequence[int]) -> tuple[int, ...]:
        raw = matvec(self.projection, y)
        return tuple(x % d if d else x for x, d in zip(raw, self.moduli))

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x + y) % d if d else x + y for x, y, d in zip(a, b, self.moduli))


def cokernel_data(f: LatticeMap) -> Cokernel:
    U, D, _ = smith_normal_form(f.matrix, f.source.rank)
    p = f.target.rank
    diag = [D[i][i] if i < f.source.rank else 0 for i in range(p)]
    # torsion rows sorted by the chain order, free rows afterwards
    torsion_rows = [i for i in range(p) if diag[i] > 1]
    free_rows = [i for i in range(p) if diag[i] == 0]
    rows = free_rows + torsion_rows
    group = AbelianGroup(len(free_rows), tuple(diag[i] for i in torsion_rows))
    return Cokernel(
        group,
        tuple(tuple(U[i]) for i in rows),
        tuple([0] * len(free_rows) + [diag[i] for i in torsion_rows]),
    )


def cokernel(f: LatticeMap) -> AbelianGroup:
    """Invariant-factor decomposition of ``target / f(source)``."""
    return cokernel_data(f).group


def preimage_basis(f: LatticeMap, sub: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Saturated basis of ``f^{-1}(span_Q(sub))`` inside the source lattice."""
    t = f.target.rank
    for v in sub:
        if len(v) != t:
            raise LatticeError("vector does not live in the target lattice")
        if solve_rational(f.matrix, v) is None:
            raise LatticeError(f"{tuple(v)} is not in the rational image of the map")
    annihilator = kernel_basis([list(v) for v in sub], t) if sub else [
        tuple(int(i == j) for j in range(t)) for i in range(t)
    ]
    if not annihilator:
        return [tuple(int(i == j) for j in range(f.source.rank)) for i in range(f.source.rank)]
    return kernel_basis(matmul(annihilator, f.matrix, f.source.rank), f.source.rank)
