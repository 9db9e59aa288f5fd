import pytest

from spherical_cox.data import BoldSpaceDatum, SphericalDatum
from spherical_cox.descent import (DescentError, check_relations, descend_valuation_cone, format_pushforward,
                                   gamma_iso, lift_fan, pullback, pushforward)
from spherical_cox.lattice import matvec
from spherical_cox.multipoly import VarTable, parse
from spherical_cox.polyhedra import Cone
from spherical_cox.tropical import ValuationCone, valuation_cone

T_BOLD = BoldSpaceDatum(((-1,), (-1,)), 0, (), ((1,),))
N_BOLD = BoldSpaceDatum(((-2,),), 0, (), ((1,),))


def _lift(dims, text):
    t = VarTable.standard(dims, 1)
    f = parse(text, t)
    return SphericalDatum(dims, 1, (f,)), valuation_cone(f, t)


def test_gamma():
    assert gamma_iso(T_BOLD).matrix == ((1,),)
    assert gamma_iso(N_BOLD).matrix == ((1,),)
    assert gamma_iso(BoldSpaceDatum(((1, 0), (0, 1)), 0, (), ())).matrix == ((1, 0), (0, 1))


def test_pushforward_images():
    pf = pushforward(T_BOLD)
    v1, v2, w1 = pf((1, 0, 0)), pf((0, 1, 0)), pf((0, 0, 1))
    assert v1 == v2 == tuple(-x for x in w1)
    pf = pushforward(N_BOLD)
    assert pf((1, 0)) == tuple(-2 * x for x in pf((0, 1)))
    assert format_pushforward(T_BOLD) == ["pi(v1) = pi(v2) = -pi(w1)"]
    assert format_pushforward(N_BOLD) == ["pi(v1) = -2*pi(w1)"]
    trivial = BoldSpaceDatum((), 2, ((1, 0), (0, 1)), ())  # a torus: no colours
    assert pushforward(trivial).matrix == ((1, 0), (0, 1))


def test_lift_fan():
    assert lift_fan(T_BOLD).rays == ((0, 0, 1),)
    assert lift_fan(N_BOLD).rays == ((0, 1),)
    assert lift_fan(T_BOLD, []).rays == ()


def test_torus_part_unimodular():
    for b in (T_BOLD, N_BOLD):
        pf = pushforward(b)
        block = [row[b.r:] for row in pf.matrix]
        assert abs(block[0][0]) == 1


def test_pullback_identity():
    # gamma(mu) - pullback(mu) lies in the colour part
    for b in (T_BOLD, N_BOLD):
        pb = pullback(b)
        for k in range(b.weight_rank):
            mu = [int(t == k) for t in range(b.weight_rank)]
            diff = [a - c for a, c in zip(pb(mu), [0] * b.r + mu)]
            assert all(x == 0 for x in diff[b.r:])


@pytest.mark.parametrize("b, dims, text", [
    (T_BOLD, (2, 2), "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]"),
    (N_BOLD, (3,), "S[1,1]*S[1,2] - S[1,3]^2 - T[1]"),
])
def test_descend_valuation_cone(b, dims, text):
    space, vc = _lift(dims, text)
    check_relations(space, b)
    down = descend_valuation_cone(vc, b)
    assert down.roots == ((-1,),)  # {pi(w1)* >= 0}
    pb = pullback(b)
    back = Cone.from_halfspaces([pb(g) for g in down.roots], vc.ambient_rank)
    assert back == vc.cone


def test_descend_full_space():
    down = descend_valuation_cone(ValuationCone(Cone.full_space(3), ()), T_BOLD)
    assert down.is_full_space


def test_descend_rejects_foreign_root():
    with pytest.raises(DescentError):
        descend_valuation_cone(ValuationCone.from_roots([(1, 0, -1)], 3), T_BOLD)


def test_relation_consistency():
    space, _ = _lift((2, 2), "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]")
    with pytest.raises(DescentError):
        check_relations(space, BoldSpaceDatum(((-1,), (-2,)), 0, (), ((1,),)))
    wrong, _ = _lift((2, 2), "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]^2")
    with pytest.raises(DescentError):
        check_relations(wrong, T_BOLD)
