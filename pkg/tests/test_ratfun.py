from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superjack.errors import DivisionByZero, PoleAtTheta
from superjack.ratfun import ONE, THETA, ZERO, RatFun, evaluate_at, field_ops, poly_gcd, to_fmpq


def test_field_ops_examples():
    assert field_ops(THETA, THETA + 1, "add") == 2 * THETA + 1
    assert field_ops(ONE, ONE, "div") == ONE
    assert field_ops(2 * THETA / (THETA + 1), (THETA + 1) / 2, "mul") == THETA


def test_evaluate():
    assert evaluate_at(2 * THETA / (THETA + 1), 1) == 1
    with pytest.raises(PoleAtTheta):
        evaluate_at(ONE / (THETA + 1), -1)
    assert evaluate_at((THETA**2 - 1) / (THETA - 1), 1) == 2


def test_poly_gcd():
    from flint import fmpq_poly

    assert poly_gcd(fmpq_poly([-1, 0, 1]), fmpq_poly([-1, 1])) == fmpq_poly([-1, 1])
    assert poly_gcd(fmpq_poly([0, 1]), fmpq_poly([1])) == fmpq_poly([1])
    assert poly_gcd(fmpq_poly([0, 2, 2]), fmpq_poly([0, 4])) == fmpq_poly([0, 1])


def test_canonical_form():
    f = (2 * THETA + 2) / (4 * THETA + 4)
    assert f == RatFun.constant(Fraction(1, 2))
    assert f.den.degree() == 0
    assert ZERO == RatFun(0, 5)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO


def test_reciprocal_substitution():
    f = (THETA + 2) / (THETA**2 + 1)
    g = f.subs_reciprocal()
    assert g == (THETA.inverse() + 2) / (THETA.inverse() ** 2 + 1)


def test_json_round_trip():
    f = (3 * THETA**2 - Fraction(1, 7)) / (THETA + 5)
    assert RatFun.from_json(f.to_json()) == f


small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def ratfuns(draw):
    num = draw(st.lists(small, min_size=1, max_size=3))
    den = draw(st.lists(small, min_size=1, max_size=3).filter(lambda c: any(c)))
    return RatFun(num, den)


@given(ratfuns(), ratfuns(), ratfuns())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


@given(ratfuns(), st.fractions(min_value=2, max_value=9, max_denominator=5))
def test_evaluation_is_a_homomorphism(a, t):
    try:
        va = a.evaluate(t)
    except PoleAtTheta:
        return
    assert (a * a + 1).evaluate(t) == va * va + 1
    assert to_fmpq(va) == to_fmpq(a.evaluate(t))
