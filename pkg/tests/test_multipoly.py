from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spherical_cox.multipoly import (LaurentPoly, ParseError, PolynomialError, S, T, VarTable, W, X,
                                     homogeneous_components, is_M_homogeneous, parse, weight_of_monomial)

from conftest import random_poly

SL2T = VarTable.standard((2, 2), 1)
SL3 = VarTable.standard((3, 3), 0)


def test_parse_sl2_torus_relation():
    f = parse("S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]", SL2T)
    assert len(f) == 3
    assert str(f) == "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]"


@pytest.mark.parametrize("text", ["0", "S[1,1]*S[1,1] - S[1,1]^2", "(S[1,1] + 1)*(S[1,1] - 1) - S[1,1]^2 + 1"])
def test_parse_zero(text):
    assert parse(text, SL2T).is_zero()


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse("S[1,1] + * 2", SL2T)
    assert exc.value.position is not None
    with pytest.raises(PolynomialError):
        parse("S[3,1]", SL2T)
    with pytest.raises(PolynomialError):
        parse("S[1,1]^-1", SL2T)
    with pytest.raises(ParseError):
        parse("S[1,1] / S[1,2]", SL2T)
    with pytest.raises(ParseError):
        parse("Q[1]")


def test_laurent_exponent_and_division():
    f = parse("T[1]^-2*S[1,1]/3", SL2T)
    assert f == LaurentPoly.monomial({T(1): -2, S(1, 1): 1}, Fraction(1, 3))
    assert parse(str(f), SL2T) == f


def test_print_forms():
    assert str(parse("S[1,3]*S[1,3]")) == "S[1,3]^2"
    assert str(parse("3*S[1,1]/2 - 1")) == "3*S[1,1]/2 - 1"
    assert str(parse("X[1,2] - W[1]*W[2]^2")) == "X[1,2] - W[1]*W[2]^2"


def test_parse_print_roundtrip(rng):
    for _ in range(100):
        f = random_poly(rng, (2, 2), 1)
        assert parse(str(f), SL2T) == f


def test_ring_laws(rng):
    for _ in range(60):
        f, g, h = (random_poly(rng, (2, 1), 1) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f
        assert f - f == LaurentPoly()


def test_weights():
    assert weight_of_monomial(((S(1, 1), 1), (S(2, 2), 1)), SL2T) == (1, 1, 0)
    assert weight_of_monomial(((T(1), 1),), SL2T) == (0, 0, 1)
    assert weight_of_monomial((), SL2T) == (0, 0, 0)
    with pytest.raises(PolynomialError):
        weight_of_monomial(((W(1), 1),), SL2T)


def test_weight_additivity(rng):
    for _ in range(60):
        f = random_poly(rng, (2, 2), 1, n_terms=(1, 1))
        g = random_poly(rng, (2, 2), 1, n_terms=(1, 1))
        (mf, _), = f.items()
        (mg, _), = g.items()
        (mfg, _), = (f * g).items()
        wf, wg = weight_of_monomial(mf, SL2T), weight_of_monomial(mg, SL2T)
        assert weight_of_monomial(mfg, SL2T) == tuple(a + b for a, b in zip(wf, wg))


def test_components_sl2_torus():
    f = parse("S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]", SL2T)
    comps = homogeneous_components(f, SL2T)
    assert comps == {
        (1, 1, 0): parse("S[1,1]*S[2,2] - S[1,2]*S[2,1]", SL2T),
        (0, 0, 1): parse("-T[1]", SL2T),
    }
    assert not is_M_homogeneous(f, SL2T)


def test_components_horospherical():
    f = parse("S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3]", SL3)
    assert list(homogeneous_components(f, SL3)) == [(1, 1)]
    assert is_M_homogeneous(f, SL3)
    assert homogeneous_components(LaurentPoly(), SL3) == {}
    assert is_M_homogeneous(parse("7*S[1,2]^3*S[2,1]", SL3), SL3)


def test_components_direct_sum(rng):
    for _ in range(80):
        f = random_poly(rng, (2, 2), 1)
        comps = homogeneous_components(f, SL2T)
        total = LaurentPoly()
        for mu, part in comps.items():
            assert not part.is_zero()
            assert set(homogeneous_components(part, SL2T)) == {mu}
            total = total + part
        assert total == f


def test_substitute_and_rename():
    f = parse("S[1,1]*T[1]^-1 + W[1]")
    assert f.substitute({T(1): 1}) == parse("S[1,1] + W[1]")
    assert f.rename({S(1, 1): X(1, 1)}) == parse("X[1,1]*T[1]^-1 + W[1]")


def test_normalized():
    assert parse("-2*S[1,1] + 4").normalized() == parse("S[1,1] - 2")


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-2, 2), st.integers(-5, 5)), min_size=1, max_size=5))
def test_hypothesis_roundtrip(terms):
    f = LaurentPoly({((S(1, 1), a), (T(1), b)): c for a, b, c in terms})
    assert parse(str(f), VarTable.standard((1,), 1)) == f
