from itertools import product

import pytest
from hypothesis import given, strategies as st

from htres.errors import ContextMismatch, ParseError
from htres.monomials import (Monomial, MonomialIdeal, divides, lcm, minimalize, parse_ideal,
                             restrict_below)

from conftest import mono

monos3 = st.tuples(*[st.integers(0, 3)] * 3).map(Monomial)


def test_parse_squarefree_generators():
    I = parse_ideal("x1*x2, x1*x3, x2*x3", 3)
    assert len(I) == 3
    assert all(g.degree == 2 for g in I)


def test_parse_minimalizes():
    I = parse_ideal("x1, x1*x2", 2)
    assert I.gens == (Monomial((1, 0)),)


def test_parse_square_of_maximal_ideal():
    I = parse_ideal("x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2", 3)
    expected = {Monomial(e) for e in product(range(3), repeat=3) if sum(e) == 2}
    assert set(I.gens) == expected and len(I) == 6


def test_parse_is_whitespace_insensitive():
    assert parse_ideal(" x1 ^ 2 * x2 ,\n x3 ", 3) == parse_ideal("x1^2*x2,x3", 3)


@pytest.mark.parametrize("text, pos", [("x1*y2", 3), ("x1**x2", 3), ("x1,x4", 3), ("x1*", 2)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_ideal(text, 3)
    assert exc.value.pos == pos


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_ideal(" , \n", 3)


def test_lcm_examples():
    assert lcm(mono("x1^2*x2", 2), mono("x2^3", 2)) == mono("x1^2*x2^3", 2)
    assert lcm(mono("x1", 1), mono("x1", 1)) == mono("x1", 1)
    assert lcm(mono("x1*x3", 3), mono("x2*x3", 3)) == mono("x1*x2*x3", 3)


def test_divides_examples():
    assert divides(mono("x1*x2", 3), mono("x1*x2*x3", 3))
    assert not divides(mono("x1^2", 2), mono("x1*x2", 2))
    assert divides(Monomial.one(3), mono("x2^5", 3))


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        lcm(Monomial((1, 0)), Monomial((1, 0, 0)))
    with pytest.raises(ContextMismatch):
        divides(Monomial((1,)), Monomial((1, 0)))


def test_minimalize_examples():
    a, b, c = mono("x1", 2), mono("x1*x2", 2), mono("x2^2", 2)
    assert minimalize([a, b, c]) == {a, c}
    assert minimalize([b]) == {b}
    with pytest.raises(ValueError):
        minimalize([])


def test_exponent_caps():
    with pytest.raises(OverflowError):
        Monomial((10**6, 1))
    with pytest.raises(ValueError):
        Monomial((0,) * 33)
    with pytest.raises(ValueError):
        Monomial((-1, 0))


def test_restrict_below(m3):
    assert restrict_below(m3, mono("x1*x2*x3", 3)).gens == m3.gens
    assert restrict_below(m3, mono("x1*x2", 3)).gens == (mono("x1*x2", 3),)
    assert restrict_below(m3, mono("x1", 3)).is_zero()


def test_ideal_json_roundtrip(sq3):
    doc = sq3.to_json()
    assert doc["n"] == 3 and len(doc["gens"]) == 6
    assert MonomialIdeal.from_json(doc) == sq3


def test_canonical_order_is_degree_then_revlex(sq3):
    assert [str(g) for g in sq3.gens] == ["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]


@given(monos3, monos3, monos3)
def test_lcm_laws(a, b, c):
    assert lcm(a, b) == lcm(b, a)
    assert lcm(lcm(a, b), c) == lcm(a, lcm(b, c))
    assert lcm(a, a) == a
    assert divides(a, lcm(a, b))


@given(st.lists(monos3, min_size=1, max_size=8))
def test_minimalize_properties(ms):
    out = minimalize(ms)
    assert minimalize(out) == out
    assert all(any(g.divides(m) for g in out) for m in ms)
    assert all(not a.divides(b) for a in out for b in out if a != b)


@given(st.lists(monos3, min_size=1, max_size=8), monos3)
def test_restrict_below_idempotent(ms, mu):
    I = MonomialIdeal(3, tuple(ms))
    R = restrict_below(I, mu)
    assert restrict_below(R, mu) == R
    assert set(R.gens) <= set(I.gens)
