from fractions import Fraction

from hypothesis import given, settings, strategies as st

from superjack.partitions import partitions_of
from superjack.polys import MultiPoly, z_vars
from superjack.ratfun import ONE, THETA
from superjack.symfunc import (
    SymFn,
    basis_convert,
    collect_symmetric,
    expand_in_variables,
    multiply,
    omega_theta,
    sigma_theta,
)

half = Fraction(1, 2)


def u(basis, lam):
    return SymFn.unit(basis, lam)


def test_basis_convert_examples():
    assert basis_convert(u("p", (2,)), "m") == u("m", (2,))
    assert basis_convert(u("e", (2,)), "p").terms == {(1, 1): ONE * half, (2,): -ONE * half}
    for b in "mpe":
        assert basis_convert(u("h", (1,)), b).terms == {(1,): ONE}


def test_multiply_examples():
    assert multiply(u("p", (1,)), u("p", (1,))) == u("p", (1, 1))
    mm = multiply(u("m", (1,)), u("m", (1,)))
    assert mm.basis == "m" and mm.terms == {(2,): ONE, (1, 1): 2 * ONE}
    f = u("e", (2, 1))
    assert multiply(f, SymFn.one()) == f


def test_expand_in_variables():
    V = z_vars(2)
    x1, x2 = MultiPoly.var(V, 0), MultiPoly.var(V, 1)
    assert expand_in_variables(u("m", (2, 1)), 2) == x1**2 * x2 + x1 * x2**2
    assert expand_in_variables(u("p", (2,)), 1) == MultiPoly.var(z_vars(1), 0) ** 2
    assert expand_in_variables(u("e", (3,)), 2).is_zero()


def test_omega_and_sigma():
    assert omega_theta(u("p", (1,))).terms == {(1,): THETA}
    assert omega_theta(u("p", (2,))).terms == {(2,): -THETA}
    assert omega_theta(u("p", (2, 1))).terms == {(2, 1): -THETA**2}
    assert sigma_theta(u("p", (1,))).terms == {(1,): -THETA.inverse()}
    assert sigma_theta(u("p", (1, 1))).terms == {(1, 1): THETA.inverse() ** 2}
    assert sigma_theta(SymFn.one()) == SymFn.one()


def test_text_and_json():
    f = u("m", (2,)) + u("m", (1, 1)) * (2 * THETA / (THETA + 1))
    assert f.to_str() == "m[2] + (2*θ/(θ + 1))*m[1,1]"
    assert SymFn.from_json(f.to_json()) == f


def test_collect_round_trip():
    f = u("e", (2, 1)) + u("h", (3,))
    poly = expand_in_variables(f, 3)
    assert collect_symmetric(poly) == f


weights = st.integers(0, 6)


@settings(max_examples=40, deadline=None)
@given(weights.flatmap(lambda k: st.sampled_from(partitions_of(k))), st.sampled_from("mpeh"), st.sampled_from("mpeh"))
def test_basis_round_trip(lam, a, b):
    f = u(a, lam)
    assert basis_convert(basis_convert(f, b), a) == f


@settings(max_examples=30, deadline=None)
@given(
    st.integers(0, 3).flatmap(lambda k: st.sampled_from(partitions_of(k))),
    st.integers(0, 3).flatmap(lambda k: st.sampled_from(partitions_of(k))),
)
def test_multiplication_matches_polynomials(lam, mu):
    N = sum(lam) + sum(mu)
    f, g = u("m", lam), u("e", mu)
    assert expand_in_variables(multiply(f, g), N) == expand_in_variables(f, N) * expand_in_variables(g, N)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.sampled_from(partitions_of(k))))
def test_omega_inverts_at_reciprocal_parameter(lam):
    f = u("p", lam)
    assert omega_theta(omega_theta(f), THETA.inverse()) == f
    assert sigma_theta(omega_theta(f)) == f * (-1) ** sum(lam)
