import itertools
from fractions import Fraction

import pytest

from spherical_cox.multipoly import VarTable, parse
from spherical_cox.polyhedra import Cone, dual_cone
from spherical_cox.tropical import (NonPrincipalError, TropicalError, ValuationCone, min_attained_twice,
                                    monomial_weights, ray_membership, valuation_cone)

SPACES = {
    "sl_d": ((3, 3), 0, "S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3] - 1", [(1, 1)]),
    "sl2_torus": ((2, 2), 1, "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]", [(1, 1, -1)]),
    "sl2_ntorus": ((3,), 1, "S[1,1]*S[1,2] - S[1,3]^2 - T[1]", [(2, -1)]),
    "sl3_horospherical": ((3, 3), 0, "S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3]", []),
}


def _space(name):
    dims, m, text, roots = SPACES[name]
    table = VarTable.standard(dims, m)
    return table, parse(text, table), roots


@pytest.mark.parametrize("name", list(SPACES))
def test_roots(name):
    table, f, roots = _space(name)
    vc = valuation_cone(f, table)
    assert list(vc.roots) == roots


def test_monomial_weights():
    table, f, _ = _space("sl_d")
    ws = sorted(mu for _, mu in monomial_weights(f, table))
    assert ws == [(0, 0), (1, 1), (1, 1), (1, 1)]
    table, f, _ = _space("sl2_ntorus")
    assert sorted(mu for _, mu in monomial_weights(f, table)) == [(0, 1), (2, 0), (2, 0)]
    assert len(monomial_weights(parse("S[1,1]"), VarTable.standard((1,)))) == 1


@pytest.mark.parametrize("name", list(SPACES))
def test_grid_oracle(name):
    table, f, _ = _space(name)
    vc = valuation_cone(f, table)
    for u in itertools.product(range(-3, 4), repeat=table.rank):
        assert ray_membership(u, vc) == min_attained_twice(u, f, table)


def test_duality():
    for name in SPACES:
        table, f, _ = _space(name)
        vc = valuation_cone(f, table)
        d = table.rank
        # the cone spanned by the roots is dual to -V
        roots_cone = Cone(vc.roots, (), d) if vc.roots else Cone((), (), d)
        minus_v = Cone([tuple(-x for x in r) for r in vc.cone.rays], vc.cone.lineality, d)
        assert dual_cone(minus_v) == roots_cone


def test_ray_membership_examples():
    vc = ValuationCone.from_roots([(1, 1)], 2)
    assert ray_membership((-1, 0), vc)
    assert not ray_membership((1, 1), vc)
    vc2 = ValuationCone.from_roots([(1, 1, -1)], 3)
    assert ray_membership((0, 0, 1), vc2)


def test_homogeneous_gives_full_space():
    table = VarTable.standard((2, 2), 1)
    f = parse("S[1,1]*S[2,2] - S[1,2]*S[2,1]", table)
    assert valuation_cone(f, table).is_full_space


def test_errors():
    table = VarTable.standard((2,), 1)
    with pytest.raises(NonPrincipalError):
        valuation_cone([parse("S[1,1] - T[1]", table), parse("S[1,2] - 1", table)], table)
    with pytest.raises(TropicalError):
        valuation_cone(parse("S[1,1]", table), table)
    with pytest.raises(TropicalError):
        valuation_cone(parse("S[1,1] - T[1] - 1", table), table)  # tropical line: not convex
    with pytest.raises(TropicalError):
        valuation_cone(parse("S[1,1] - T[1]", table), table)  # a hyperplane
    with pytest.raises(TropicalError):
        ValuationCone(Cone.full_space(2), ((1, 0), (2, 0)))


def test_zero_ideal_full_space():
    assert valuation_cone([], VarTable.standard((), 2)).is_full_space


def test_rational_points_oracle(rng):
    for name in SPACES:
        table, f, _ = _space(name)
        vc = valuation_cone(f, table)
        for _ in range(100):
            u = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(table.rank))
            assert (all(sum(a * b for a, b in zip(u, g)) <= 0 for g in vc.roots)
                    == min_attained_twice(u, f, table))
