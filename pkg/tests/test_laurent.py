from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidpoly.errors import NotDivisible, ZeroAssignment
from braidpoly.laurent import (
    LAURENT1_JSON_SCHEMA,
    LAURENT2_JSON_SCHEMA,
    LaurentPoly1,
    LaurentPoly2,
)

coeffs = st.integers(min_value=-50, max_value=50)
exps = st.integers(min_value=-12, max_value=12)

poly1 = st.dictionaries(exps, coeffs, max_size=8).map(LaurentPoly1)
poly2 = st.dictionaries(st.tuples(exps, exps), coeffs, max_size=8).map(LaurentPoly2)


def test_text_rendering_descending():
    p = LaurentPoly1({-4: 1, -12: 1, -16: -1})
    assert p.to_text() == "A^-4 + A^-12 - A^-16"


def test_text_rendering_edge_cases():
    assert LaurentPoly1().to_text() == "0"
    assert LaurentPoly1({0: 1}).to_text() == "1"
    assert LaurentPoly1({0: -3}).to_text() == "-3"
    assert LaurentPoly1({1: 1}).to_text() == "A"
    assert LaurentPoly1({1: -2, 0: 1}).to_text() == "-2A + 1"
    assert LaurentPoly1({3: 1, -3: 1}).to_text() == "A^3 + A^-3"


def test_two_variable_grouped_rendering():
    # a*z^-1 + a^-1*z^-1 - 1
    p = LaurentPoly2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})
    assert p.to_text() == "(a + a^-1) z^-1 - 1"


def test_two_variable_rendering_more():
    p = LaurentPoly2({(2, 1): 1, (1, 2): 1, (-1, 2): 1, (0, 1): -2})
    assert p.to_text() == "(a^2 - 2) z + (a + a^-1) z^2"
    assert LaurentPoly2({(0, 0): 1}).to_text() == "1"
    assert LaurentPoly2({(-1, 0): 1}).to_text() == "a^-1"
    assert LaurentPoly2({(0, 1): 1}).to_text() == "z"
    assert LaurentPoly2({(0, 2): -1}).to_text() == "-z^2"
    assert LaurentPoly2({(1, -1): -1, (-1, -1): -1}).to_text() == "-(a + a^-1) z^-1"


def test_zero_coefficients_dropped():
    assert LaurentPoly1({5: 0, 1: 2}) == LaurentPoly1({1: 2})
    assert not LaurentPoly1({3: 0})
    assert LaurentPoly2({(1, 1): 0}).is_zero


def test_mirror_swaps_exponents():
    p = LaurentPoly1({-4: 1, -12: 1, -16: -1})
    assert p.mirror() == LaurentPoly1({4: 1, 12: 1, 16: -1})
    assert p.mirror().mirror() == p


def test_exact_div_by_unit():
    p = LaurentPoly1({7: 2, 3: -1})
    u = LaurentPoly1({2: -1})
    assert p.exact_div(u) * u == p


def test_exact_div_failure():
    p = LaurentPoly1({1: 1, 0: 1})
    with pytest.raises(NotDivisible):
        p.exact_div(LaurentPoly1({1: 1, 0: -1}))
    with pytest.raises(NotDivisible):
        p.exact_div(LaurentPoly1())
    with pytest.raises(NotDivisible):
        LaurentPoly1({0: 3}).exact_div(LaurentPoly1({0: 2}))


def test_evaluate():
    p = LaurentPoly1({2: 1, -2: 1})
    assert p.evaluate(2) == Fraction(17, 4)
    with pytest.raises(ZeroAssignment):
        p.evaluate(0)
    q = LaurentPoly2({(1, -1): 1, (0, 0): 3})
    assert q.evaluate(Fraction(1, 2), 2) == Fraction(13, 4)
    with pytest.raises(ZeroAssignment):
        q.evaluate(1, 0)


def test_pow_matches_repeated_multiplication():
    p = LaurentPoly1({1: 1, -1: -1})
    assert p**0 == LaurentPoly1.one()
    assert p**3 == p * p * p
    with pytest.raises(ValueError):
        p ** (-1)


@given(poly1, poly1, poly1)
def test_ring_axioms_one_var(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert p + LaurentPoly1.zero() == p
    assert p * LaurentPoly1.one() == p
    assert p - p == LaurentPoly1.zero()


@given(poly2, poly2, poly2)
def test_ring_axioms_two_var(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * LaurentPoly2.one() == p


@given(poly1)
def test_text_round_trip_one_var(p):
    assert LaurentPoly1.parse(p.to_text()) == p


@given(poly2)
def test_text_round_trip_two_var(p):
    assert LaurentPoly2.parse(p.to_text()) == p


@given(poly1)
def test_json_valid_and_ascending(p):
    doc = p.to_json()
    jsonschema.validate(doc, LAURENT1_JSON_SCHEMA)
    exps_seen = [t["exp"] for t in doc["terms"]]
    assert exps_seen == sorted(exps_seen)
    assert LaurentPoly1({t["exp"]: t["coeff"] for t in doc["terms"]}) == p


@given(poly2)
def test_json_valid_two_var(p):
    doc = p.to_json()
    jsonschema.validate(doc, LAURENT2_JSON_SCHEMA)
    keys = [(t["a"], t["z"]) for t in doc["terms"]]
    assert keys == sorted(keys)


@given(poly1, poly1)
def test_exact_div_inverts_multiplication(p, q):
    if q.is_zero:
        return
    assert (p * q).exact_div(q) == p


@given(poly1, st.fractions(min_value=-4, max_value=4))
def test_mirror_evaluates_reciprocally(p, x):
    if x == 0:
        return
    assert p.mirror().evaluate(x) == p.evaluate(1 / x)
