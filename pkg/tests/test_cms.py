from hypothesis import given, settings, strategies as st

from superjack.cms import (
    apply_cms,
    cms_eigenvalue,
    cms_matrix,
    dunkl_apply,
    harish_chandra_eval,
    integral_from_shifted,
    jack,
    jack_expand,
    jack_tableau,
    pieri_expand_e,
    pieri_psi_box,
    skew_jack_tableau,
)
from superjack.partitions import conjugate, n_stat, partitions_of
from superjack.polys import MultiPoly, z_vars
from superjack.ratfun import ONE, THETA
from superjack.shifted import shifted_power_sum
from superjack.symfunc import SymFn, expand_in_variables, multiply


def u(basis, lam):
    return SymFn.unit(basis, lam)


def test_cms_examples():
    assert apply_cms(u("m", (1,))) == u("m", (1,))
    assert apply_cms(u("m", (2,))).coefficient((2,)) == 4
    assert apply_cms(SymFn.one()).is_zero()


def test_eigenvalues():
    assert cms_eigenvalue((2,)) == 4
    assert cms_eigenvalue((1, 1)) == 2 - 2 * THETA
    assert cms_eigenvalue(()) == 0
    for lam in partitions_of(5):
        assert cms_eigenvalue(lam) == 2 * n_stat(conjugate(lam)) - 2 * THETA * n_stat(lam) + 5


def test_jack_examples():
    assert jack((1, 1)) == u("m", (1, 1))
    assert jack((2,)) == u("m", (2,)) + u("m", (1, 1)) * (2 * THETA / (THETA + 1))
    assert jack((1,)) == u("m", (1,))


def test_cms_matrix_is_triangular():
    for k in range(1, 6):
        M = cms_matrix(k)
        assert M.is_triangular()
        for lam in partitions_of(k):
            assert M.entry(lam, lam) == cms_eigenvalue(lam)


def test_jack_at_theta_one_is_schur():
    # theta = 1: P_(2,1) = s_(2,1) = m_(2,1) + 2 m_(1,1,1)
    assert jack((2, 1)).specialize(1) == {(2, 1): 1, (1, 1, 1): 2}


def test_tableau_examples():
    V = z_vars(2)
    x1, x2 = MultiPoly.var(V, 0), MultiPoly.var(V, 1)
    assert jack_tableau((1,), 2) == x1 + x2
    assert jack_tableau((1, 1), 2) == x1 * x2
    assert jack_tableau((2,), 1) == MultiPoly.var(z_vars(1), 0) ** 2
    assert skew_jack_tableau((2, 1), (2, 1), 3) == MultiPoly.constant(z_vars(3))
    assert skew_jack_tableau((1, 1), (1,), 1) == MultiPoly.var(z_vars(1), 0)
    assert skew_jack_tableau((2, 2), (1,), 1).is_zero()


def test_dunkl_examples():
    V = z_vars(2)
    x1, x2 = MultiPoly.var(V, 0), MultiPoly.var(V, 1)
    assert dunkl_apply(1, 2, x1) == x1 + x2.scale(THETA)
    assert dunkl_apply(1, 2, MultiPoly.constant(V)).is_zero()
    assert dunkl_apply(2, 2, x2) == x2.scale(1 + THETA)


def test_integrals_from_shifted():
    for N in (2, 3):
        for k in range(5):
            for lam in partitions_of(k):
                g = expand_in_variables(u("m", lam), N)
                assert integral_from_shifted(shifted_power_sum(1, N), g) == g.scale(k)
                lhs = integral_from_shifted(shifted_power_sum(2, N), g)
                assert lhs == expand_in_variables(apply_cms(u("m", lam)), N)
                assert integral_from_shifted(MultiPoly.constant(g.variables), g) == g


def test_harish_chandra():
    p2 = shifted_power_sum(2, 2)
    assert harish_chandra_eval(p2, (2,)) == 4
    assert harish_chandra_eval(p2, (1, 1)) == 2 - 2 * THETA
    assert harish_chandra_eval(MultiPoly.constant(p2.variables, 7 * ONE), (3, 1)) == 7


def test_pieri_examples():
    assert pieri_psi_box((), (1,)) == 1
    assert pieri_psi_box((1,), (2,)) == 1
    assert pieri_psi_box((1,), (1, 1)) == 2 / (THETA + 1)
    assert pieri_expand_e((), 1, 1) == {(1,): ONE}
    assert pieri_expand_e((1,), 1, 2) == {(2,): ONE, (1, 1): 2 / (THETA + 1)}
    assert set(pieri_expand_e((2,), 2, 4)) == {(3, 1), (2, 1, 1)}


def test_jack_expand_examples():
    assert jack_expand(jack((3, 1))) == {(3, 1): ONE}
    assert jack_expand(u("p", (1, 1))) == {(2,): ONE, (1, 1): 2 / (THETA + 1)}
    assert jack_expand(u("m", (1, 1))) == {(1, 1): ONE}


small = st.integers(0, 5).flatmap(lambda k: st.sampled_from(partitions_of(k)))


@settings(max_examples=25, deadline=None)
@given(small, small)
def test_jack_product_expansion_reassembles(lam, mu):
    f = multiply(jack(lam), jack(mu))
    coeffs = jack_expand(f)
    total = SymFn("m", {})
    for nu, c in coeffs.items():
        total = total + jack(nu) * c
    assert total == f


@settings(max_examples=25, deadline=None)
@given(small)
def test_one_box_pieri_matches_multiplication(lam):
    got = jack_expand(multiply(jack(lam), u("p", (1,))))
    assert all(pieri_psi_box(lam, nu) == c for nu, c in got.items())
