import random
from fractions import Fraction

import pytest

from ncpoisson.ainf import exterior_coalgebra, parse_coalgebra_spec
from ncpoisson.errors import BadParameters, FundamentalClassMissing
from ncpoisson.gerstenhaber import (Cochain, HomologyClass, check_bracket_routes,
                                   check_delta_squared, check_leibniz_cohomology,
                                   check_phi_chain_map, check_bracket_transport, cochain_delta,
                                   corollary_1_5_bracket, cup, gerstenhaber_bracket,
                                   random_cochain, structure_cochain, summand_count,
                                   unit_cochain, verify_theorem_1_4)
from ncpoisson.hkr import (PolyForm, class_modulo_exact, hkr_bracket, random_form, volume_form,
                           worked_example)
from ncpoisson.parser import parse_form

PAIRED = ["exterior:1", "exterior:2", "exterior:3", "sklyanin3:1,2,3", "sklyanin3:0,1,1",
          "yang_mills:2"]


@pytest.fixture(scope="module")
def ext1():
    return exterior_coalgebra(1)


def test_structure_cochain_of_exterior_one(ext1):
    assert str(structure_cochain(ext1)) == "(e, e ; e) + (e, m(v1) ; m(v1)) - (m(v1), e ; m(v1))"
    M = structure_cochain(ext1)
    assert not gerstenhaber_bracket(M, M)


def test_unit_is_a_cocycle(ext1):
    assert not cochain_delta(unit_cochain(ext1))


@pytest.mark.parametrize("spec", ["exterior:2", "sklyanin3:1,2,3", "yang_mills:2"])
def test_cochain_identities(spec):
    C = parse_coalgebra_spec(spec)
    for check in (check_delta_squared, check_bracket_routes):
        rep = check(C, random.Random(spec), trials=30)
        assert rep.ok, rep.failures[:1]


def test_cup_is_compatible_with_delta():
    C = exterior_coalgebra(2)
    rng = random.Random(11)
    for _ in range(40):
        f, g = random_cochain(C, rng, 2), random_cochain(C, rng, 2)
        kf = next(iter(f.terms))
        lhs = cochain_delta(cup(f, g))
        rhs = cup(cochain_delta(f), g) - (-1) ** f.degree(kf) * cup(f, cochain_delta(g))
        assert lhs == rhs


@pytest.mark.parametrize("spec", ["exterior:1", "exterior:2"])
def test_leibniz_up_to_coboundaries(spec):
    rep = check_leibniz_cohomology(parse_coalgebra_spec(spec), random.Random(1), trials=10)
    assert rep.ok, rep.failures[:1]


@pytest.mark.parametrize("spec", PAIRED)
def test_phi_is_a_chain_map(spec):
    rep = check_phi_chain_map(parse_coalgebra_spec(spec), random.Random(2), trials=40)
    assert rep.ok, rep.failures[:1]


@pytest.mark.parametrize("spec", PAIRED)
def test_bracket_intertwining(spec):
    rep = check_bracket_transport(parse_coalgebra_spec(spec), random.Random(3), trials=40)
    assert rep.ok, rep.failures[:1]


def test_verify_single_pair():
    C = exterior_coalgebra(2)
    out = verify_theorem_1_4(C, (1, 3), (2,))
    assert out["equal"]
    assert set(out) >= {"lhs", "rhs", "u", "v"}


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (4, 2)])
def test_summand_count(n, m):
    lhs, rhs, same = summand_count(n, m)
    assert lhs == rhs == m * n * (m + n - 2)
    assert same


# --- contraction formula in the polynomial model -----------------------------------

def _hc(text, m=3):
    return HomologyClass("HC", parse_form(text, m))


def test_needs_fundamental_class():
    with pytest.raises(FundamentalClassMissing):
        corollary_1_5_bracket(_hc("x"), _hc("y"))


def test_rejects_non_volume_class():
    with pytest.raises(BadParameters):
        corollary_1_5_bracket(_hc("x"), _hc("y"), parse_form("x dx^dy^dz"))
    with pytest.raises(BadParameters):
        corollary_1_5_bracket(HomologyClass("HH", parse_form("x")), _hc("y"), volume_form(3))
    with pytest.raises(BadParameters):
        HomologyClass("HX", parse_form("x"))


def test_closed_argument_brackets_to_zero():
    vol = volume_form(3)
    closed = _hc("dx + y*z dx + x*z dy + x*y dz")
    assert not corollary_1_5_bracket(closed, _hc("x^2*y dz"), vol).normal_form()


def test_one_variable_brackets_vanish():
    # on k[x] a one-form is closed and forms of degree 0 bracket into exact forms
    vol = volume_form(1)
    rng = random.Random(5)
    for _ in range(30):
        a, b = random_form(1, rng), random_form(1, rng)
        got = corollary_1_5_bracket(HomologyClass("HC", a), HomologyClass("HC", b), vol)
        assert not got.normal_form()


def test_worked_example_matches_hkr_bracket():
    alpha, beta, _ = worked_example()
    vol = volume_form(3)
    got = corollary_1_5_bracket(HomologyClass("HC", alpha), HomologyClass("HC", beta), vol)
    assert got == HomologyClass("HC", hkr_bracket(alpha, beta))


def test_rescaled_fundamental_class():
    alpha, beta, _ = worked_example()
    vol = volume_form(3)
    one = corollary_1_5_bracket(HomologyClass("HC", alpha), HomologyClass("HC", beta), vol)
    two = corollary_1_5_bracket(HomologyClass("HC", alpha), HomologyClass("HC", beta), vol.scale(2))
    assert two.representative == one.representative.scale(Fraction(1, 2))


def test_agrees_with_hkr_bracket_modulo_exact():
    vol = volume_form(3)
    rng = random.Random(7)
    for _ in range(40):
        a, b = random_form(3, rng), random_form(3, rng)
        got = corollary_1_5_bracket(HomologyClass("HC", a), HomologyClass("HC", b), vol)
        assert got.normal_form() == class_modulo_exact(hkr_bracket(a, b))


def test_hh_target_keeps_kind():
    vol = volume_form(3)
    got = corollary_1_5_bracket(_hc("x*y dz"), HomologyClass("HH", parse_form("z^2 dx")), vol)
    assert got.kind == "HH" and isinstance(got.representative, PolyForm)
