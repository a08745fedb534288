import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncpoisson.ainf import exterior_coalgebra, parse_coalgebra_spec
from ncpoisson.double_poisson import random_word, structure_for
from ncpoisson.errors import ParseError, UnknownGenerator
from ncpoisson.gerstenhaber import Cochain, random_cochain
from ncpoisson.hkr import PolyForm, random_form, random_polyvector
from ncpoisson.parser import (parse_cochain, parse_expression, parse_form, parse_polyvector,
                              parse_word)
from ncpoisson.tensor import FreeElement

seeds = st.integers(0, 10 ** 9)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@pytest.fixture(scope="module")
def gens():
    return structure_for(exterior_coalgebra(2)).gens


def test_word_examples(gens):
    w = parse_word("2*[s^-1 m(v1)|s^-1 m(v2)] - 1/3*[m(v1)] + 1", gens)
    a, b = gens.index["s^-1 m(v1)"], gens.index["s^-1 m(v2)"]
    assert w == FreeElement(gens, {(a, b): 2, (a,): Fraction(-1, 3), (): 1})
    assert parse_word("[ s^-1   m(v1) ]", gens) == parse_word("[s^-1 m(v1)]", gens)


@settings(max_examples=80, deadline=None)
@given(seeds, st.lists(coeffs, min_size=1, max_size=4))
def test_word_round_trip(seed, cs):
    P = structure_for(exterior_coalgebra(2))
    rng = random.Random(seed)
    terms = {}
    for c in cs:
        w = random_word(P.gens, rng, 4)
        terms[w] = terms.get(w, 0) + c
    x = FreeElement(P.gens, terms)
    assert parse_word(str(x), P.gens) == x


@settings(max_examples=80, deadline=None)
@given(seeds, st.sampled_from(["exterior:1", "exterior:3", "yang_mills:2"]))
def test_cochain_round_trip(seed, spec):
    C = parse_coalgebra_spec(spec)
    rng = random.Random(seed)
    f = Cochain(C)
    for _ in range(rng.randint(0, 3)):
        f = f + Fraction(rng.randint(-3, 3), rng.randint(1, 4)) * random_cochain(C, rng, 3)
    assert parse_cochain(str(f), C) == f


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(1, 5))
def test_form_and_polyvector_round_trip(seed, m):
    rng = random.Random(seed)
    a = random_form(m, rng, coeff_range=7)
    assert parse_form(str(a), m) == a
    xi = random_polyvector(m, rng)
    assert parse_polyvector(str(xi), m) == xi


def test_form_normalises_order():
    assert str(parse_form("x*y dz^dx")) == "-x*y dx^dz"
    assert not parse_form("dx^dx")
    assert parse_form("x*x") == parse_form("x^2")
    assert parse_form("x1^2 dx3", 4) == PolyForm.monomial(4, (2, 0, 0, 0), (2,), 1)


def test_cochain_examples():
    C = exterior_coalgebra(2)
    f = parse_cochain("(m(v1), m(v2) ; m(v1,v2)) - 2*( ; e)", C)
    assert f.terms == {((1, 2), 3): 1, ((), 0): -2}
    assert not parse_cochain("0", C)


@pytest.mark.parametrize("text,pos", [
    ("[s^-1 m(v1) | ]", 13),
    ("2*", 2),
    ("[s^-1 m(v1)", 11),
    ("[s^-1 m(v1)] +", 14),
    ("[]", 1),
])
def test_word_parse_errors(gens, text, pos):
    with pytest.raises(ParseError) as exc:
        parse_word(text, gens)
    assert exc.value.position == pos


def test_empty_letter_reported_before_unknown_letter(gens):
    with pytest.raises(ParseError) as exc:
        parse_word("[v1 | ]", gens)
    assert exc.value.position == 5


def test_unknown_names(gens):
    with pytest.raises(UnknownGenerator):
        parse_word("[s^-1 m(v7)]", gens)
    with pytest.raises(UnknownGenerator):
        parse_form("x4 dx")
    with pytest.raises(UnknownGenerator):
        parse_form("dz", 2)
    with pytest.raises(UnknownGenerator):
        parse_cochain("( ; m(v9))", exterior_coalgebra(2))


@pytest.mark.parametrize("text", ["", "w dx", "x*", "1/0", "dx^", "x ^", "x + + y", "3 3"])
def test_form_parse_errors(text):
    with pytest.raises(ParseError):
        parse_form(text)


def test_parse_expression_dispatch(gens):
    assert parse_expression("x dy", "form").value == parse_form("x dy")
    assert parse_expression("d/dx", "polyvector", 2).value == parse_polyvector("d/dx", 2)
    assert parse_expression("1", "word", gens).kind == "word"
    with pytest.raises(ParseError):
        parse_expression("x", "matrix")


def test_grammar_examples():
    g3 = structure_for(exterior_coalgebra(3)).gens
    w = parse_expression("[s^-1 m(v1,v2) | s^-1 m(v3)]", "word", g3).value
    assert [len(k) for k in w.terms] == [2]
    f = parse_expression("x^2*y*z dx", "form").value
    assert f == PolyForm.monomial(3, (2, 1, 1), (0,), 1) and len(f.terms) == 1
