"""Input carriers shared by the pipeline modules."""
from __future__ import annotations

from dataclasses import dataclass

from .lattice import LatticeError, is_primitive
from .multipoly import LaurentPoly, VarTable


class DatumError(ValueError):
    pass


@dataclass(frozen=True)
class SphericalDatum:
    """A homogeneous space with trivial class group, as polynomial data.

    ``dims[i]`` is the dimension of the i-th module of functions (so the
    coordinates ``S[i,1..dims[i]]``), ``m`` the number of unit
    coordinates ``T[k]`` and ``relations`` generators of the ideal of the
    closure in ``C^{sum dims} x (C^*)^m``.
    """

    dims: tuple[int, ...]
    m: int = 0
    relations: tuple[LaurentPoly, ...] = ()
    h_connected: bool = True

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(s) for s in self.dims))
        object.__setattr__(self, "relations", tuple(self.relations))
        if any(s < 1 for s in self.dims) or self.m < 0:
            raise DatumError("module dimensions must be >= 1 and m >= 0")
        table = self.table
        for f in self.relations:
            if f.is_zero():
                raise DatumError("relations must be nonzero")
            try:
                table.check(f)
            except ValueError as exc:
                raise DatumError(str(exc)) from None

    @property
    def r(self) -> int:
        return len(self.dims)

    @property
    def rank(self) -> int:
        return self.r + self.m

    @property
    def principal(self) -> bool:
        return len(self.relations) == 1

    @property
    def table(self) -> VarTable:
        return VarTable.standard(self.dims, self.m)

    def coordinate_labels(self) -> tuple[str, ...]:
        """Labels of the basis ``v_1..v_r, w_1..w_m`` of the coweight lattice."""
        return tuple(f"v{i}" for i in range(1, self.r + 1)) + tuple(f"w{k}" for k in range(1, self.m + 1))

    def weight_labels(self) -> tuple[str, ...]:
        return tuple(lab + "*" for lab in self.coordinate_labels())


@dataclass(frozen=True)
class EmbeddingDatum:
    """Primitive rays ``u_1..u_n`` (over ``v_1..v_r, w_1..w_m``), one per invariant divisor."""

    rays: tuple[tuple[int, ...], ...] = ()
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in u) for u in self.rays)
        object.__setattr__(self, "rays", rays)
        labels = tuple(self.labels) or tuple(f"Y{l}" for l in range(1, len(rays) + 1))
        object.__setattr__(self, "labels", labels)
        if len(labels) != len(rays):
            raise DatumError("one label per ray")
        if len(set(rays)) != len(rays):
            raise DatumError("rays must be pairwise distinct")
        for u in rays:
            try:
                ok = is_primitive(u)
            except LatticeError:
                ok = False
            if not ok:
                raise DatumError(f"ray {u} is not primitive")

    @property
    def n(self) -> int:
        return len(self.rays)

    def check_rank(self, rank: int) -> None:
        for u in self.rays:
            if len(u) != rank:
                raise DatumError(f"ray {u} does not have length {rank}")


@dataclass(frozen=True)
class BoldSpaceDatum:
    """Lattice data of a space with possibly nontrivial class group.

    ``d_matrix[i][j]`` is the value of the i-th color valuation on the j-th
    basis weight ``mu_j``; ``mu_restriction[k][j]`` is the k-th coordinate
    of ``mu_j`` restricted to the central torus (``xc_rank`` rows).
    ``rays`` are the embedding rays in the coweight lattice of the space.
    """

    d_matrix: tuple[tuple[int, ...], ...]
    xc_rank: int = 0
    mu_restriction: tuple[tuple[int, ...], ...] = ()
    rays: tuple[tuple[int, ...], ...] = ()
    weight_rank: int | None = None
    h_connected: bool = True

    def __post_init__(self):
        d = tuple(tuple(int(x) for x in row) for row in self.d_matrix)
        mu = tuple(tuple(int(x) for x in row) for row in self.mu_restriction)
        object.__setattr__(self, "d_matrix", d)
        object.__setattr__(self, "mu_restriction", mu)
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in u) for u in self.rays))
        k = self.weight_rank
        if k is None:
            k = len(d[0]) if d else (len(mu[0]) if mu else 0)
            object.__setattr__(self, "weight_rank", k)
        if any(len(row) != k for row in d + mu):
            raise DatumError("d_matrix and mu_restriction must have one column per basis weight")
        if len(mu) != self.xc_rank:
            raise DatumError("mu_restriction needs xc_rank rows")
        for u in self.rays:
            if len(u) != k:
                raise DatumError(f"bold ray {u} does not have length {k}")
            if not any(u) or not is_primitive(u):
                raise DatumError(f"bold ray {u} is not primitive")

    @property
    def r(self) -> int:
        return len(self.d_matrix)

