import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from spherical_cox.lattice import (AbelianGroup, FreeLattice, LatticeError, LatticeMap, cokernel, cokernel_data,
                                   determinant, invariant_factors, is_primitive, matmul, preimage_basis, primitive,
                                   rank, smith_normal_form)


def _diag(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def _oracle_factors(m):
    # sympy computes the same normal form by an unrelated implementation
    d = sympy_snf(Matrix(m), domain=ZZ)
    return sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0)


@pytest.mark.parametrize("m, diag", [
    ([[2]], [2]),
    ([[1, 0], [0, 1]], [1, 1]),
    ([[2, 4], [6, 8]], [2, 4]),
])
def test_snf_examples(m, diag):
    U, D, V = smith_normal_form(m)
    assert _diag(D) == diag
    assert matmul(matmul(U, m), V) == D


def test_snf_empty():
    U, D, V = smith_normal_form([], 0)
    assert D == []


matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_identity_and_chain(m):
    U, D, V = smith_normal_form(m)
    assert matmul(matmul(U, m, len(m[0])), V, len(m[0])) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    d = _diag(D)
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(d, d[1:]) if a)
    assert sorted(nz) == _oracle_factors(m)


@settings(max_examples=60, deadline=None)
@given(matrices, st.randoms())
def test_cokernel_permutation_invariant(m, rnd):
    f = LatticeMap.from_matrix(m)
    rows = m[:]
    rnd.shuffle(rows)
    perm = list(range(len(m[0])))
    rnd.shuffle(perm)
    g = LatticeMap.from_matrix([[row[p] for p in perm] for row in rows])
    assert cokernel(f) == cokernel(g)


def test_cokernel_examples():
    assert cokernel(LatticeMap.from_matrix([[-2]])) == AbelianGroup(0, (2,))
    assert cokernel(LatticeMap.from_matrix([[0], [0]])) == AbelianGroup(2)
    assert cokernel(LatticeMap.from_matrix([[-1], [-1], [1]])) == AbelianGroup(2)
    assert str(AbelianGroup(0, (2,))) == "Z/2"
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 x Z/2 x Z/4"
    assert str(AbelianGroup(0)) == "0"


def test_cokernel_coordinates_kill_image(rng):
    for _ in range(40):
        m = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(4)]
        data = cokernel_data(LatticeMap.from_matrix(m))
        zero = data.coordinates([0] * 4)
        for c in range(3):
            col = [row[c] for row in m]
            assert data.coordinates(col) == zero


def test_abelian_group_validation():
    assert AbelianGroup(1, (1, 2)).torsion == (2,)
    with pytest.raises(LatticeError):
        AbelianGroup(0, (2, 3))


@pytest.mark.parametrize("v, expected", [((1, -1), True), ((2, 4), False), ((0, 0, 3), False), ((0, -1), True)])
def test_is_primitive(v, expected):
    assert is_primitive(v) is expected


def test_is_primitive_rejects_zero():
    with pytest.raises(LatticeError):
        is_primitive((0, 0))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5).filter(any))
def test_primitive_agrees_with_gcd(v):
    import math
    g = math.gcd(*v)
    assert is_primitive(v) == (g == 1)
    assert primitive(v) == tuple(x // g for x in v)


def test_preimage_examples():
    ident = LatticeMap.from_matrix([[1, 0], [0, 1]])
    assert [tuple(abs(x) for x in v) for v in preimage_basis(ident, [(1, 0)])] == [(1, 0)]
    proj = LatticeMap.from_matrix([[0, 0, 1]])
    assert rank(preimage_basis(proj, [(1,)])) == 3
    # pushforward of the lifted SL(2)/T space: v1, v2 -> -1, w1 -> 1
    pi = LatticeMap.from_matrix([[-1, -1, 1]])
    basis = preimage_basis(pi, [(1,)])
    assert rank(basis) == 3
    assert rank(basis + [(0, 0, 1)]) == 3 and rank(basis + list(pi.kernel())) == 3


def test_preimage_rejects_outside_image():
    f = LatticeMap.from_matrix([[1], [0]])
    with pytest.raises(LatticeError):
        preimage_basis(f, [(0, 1)])


def test_preimage_saturated_and_maps_into_span(rng):
    for _ in range(40):
        m = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)]
        f = LatticeMap.from_matrix(m)
        if f.rank == 0:
            continue
        x = [rng.randint(-2, 2) for _ in range(4)]
        sub = [f(x)] if any(f(x)) else []
        basis = preimage_basis(f, sub)
        for b in basis:
            img = f(b)
            assert rank(sub + [img]) == rank(sub) if sub else not any(img)
        if basis:
            assert invariant_factors(basis, 4) == [1] * len(basis)


def test_free_lattice_format():
    lat = FreeLattice(3, ("v1*", "v2*", "w1*"))
    assert lat.format((1, 1, -1)) == "v1* + v2* - w1*"
    assert lat.format((2, 0, -1)) == "2*v1* - w1*"
    assert lat.format((0, 0, 0)) == "0"
    with pytest.raises(LatticeError):
        FreeLattice(2, ("a", "a"))


def test_lattice_map_shape_checked():
    with pytest.raises(LatticeError):
        LatticeMap(FreeLattice(2), FreeLattice(1), ((1,),))
