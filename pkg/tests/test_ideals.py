import json

import pytest
from hypothesis import given, settings, strategies as st

from superjack.cms import jack, pieri_psi_box
from superjack.errors import InvalidInput
from superjack.ideals import (
    Filter,
    filter_contains,
    ideal_project,
    jack_expand,
    minimal_generators,
    verify_ideal_closure,
)
from superjack.partitions import add_box_results, contains, maximal_rectangles, partitions_of
from superjack.ratfun import ONE, THETA
from superjack.symfunc import SymFn


def test_filter_membership():
    assert filter_contains(Filter(((2,),)), (3, 1))
    assert not filter_contains(Filter(((2,),)), (1, 1, 1))
    assert not filter_contains(Filter(), (4, 2))
    assert (2, 2, 1) in Filter(((2, 2),))


def test_minimal_generators():
    assert set(minimal_generators([(2,), (3, 1), (1, 1)]).generators) == {(2,), (1, 1)}
    assert minimal_generators([(2, 2)]).generators == ((2, 2),)
    assert minimal_generators([]).generators == ()


def test_filter_rejects_non_antichain():
    with pytest.raises(InvalidInput):
        Filter(((2,), (3, 1)))


def test_filter_json():
    f = Filter(((2, 2), (3,)))
    assert json.loads(json.dumps(f.to_json())) == {"generators": [[3], [2, 2]]}
    assert Filter.from_json('{"generators": [[2,2],[3]]}') == f


def test_jack_expand_reexport():
    assert jack_expand(jack((2, 1))) == {(2, 1): ONE}
    assert jack_expand(SymFn.unit("p", (1, 1))) == {(2,): ONE, (1, 1): 2 / (THETA + 1)}


def test_projection():
    lam = (2, 1)
    assert ideal_project(jack(lam), Filter(((2,),))) == jack(lam)
    assert ideal_project(jack(lam), Filter(((3,),))).is_zero()
    assert ideal_project(SymFn.unit("p", (1, 1)), Filter(((2,),))) == jack((2,))


def test_closure_examples():
    assert verify_ideal_closure(Filter(((1,),)), 4)
    assert verify_ideal_closure(Filter(((2, 2),)), 6)
    not_a_filter = lambda lam: contains((2,), lam) and lam != (2, 1)
    assert not verify_ideal_closure(not_a_filter, 3)


def test_two_generator_filters():
    gens = [lam for k in (2, 3) for lam in partitions_of(k)]
    for a in gens:
        for b in gens:
            if a < b and not contains(a, b) and not contains(b, a):
                assert verify_ideal_closure(Filter((a, b)), 6)


def test_one_box_coefficients_never_vanish():
    for k in range(7):
        for lam in partitions_of(k):
            for nu, _ in add_box_results(lam):
                assert pieri_psi_box(lam, nu)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda k: st.sampled_from(partitions_of(k))))
def test_rectangle_intersection_of_ideals(lam):
    single = Filter((lam,))
    rects = [Filter((r,)) for r in maximal_rectangles(lam)]
    for k in range(sum(lam), sum(lam) + 3):
        for mu in partitions_of(k):
            assert (mu in single) == all(mu in r for r in rects)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.sampled_from(partitions_of(k))), st.sampled_from("mpeh"))
def test_projection_is_idempotent_and_linear(lam, basis):
    omega = Filter(((2,),))
    f = SymFn.unit(basis, lam)
    g = SymFn.unit("p", (1,) * sum(lam))
    once = ideal_project(f, omega)
    assert ideal_project(once, omega) == once
    assert ideal_project(f + g * THETA, omega) == once + ideal_project(g, omega) * THETA
