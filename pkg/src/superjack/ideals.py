"""Filters of Young diagrams and the CMS-invariant ideals they index.

An ideal is never stored as a span: it is represented by its filter, the
inclusion-closed set of diagrams lam whose Jack polynomials P_lam span it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Union

from .cms import apply_cms, jack, jack_expand
from .errors import InvalidInput
from .partitions import Partition, contains, enumerate_partitions, make_partition
from .ratfun import ZERO
from .symfunc import SymFn, multiply

__all__ = [
    "Filter",
    "filter_contains",
    "minimal_generators",
    "jack_expand",
    "ideal_project",
    "verify_ideal_closure",
    "pieri_e_support",
]


@dataclass(frozen=True)
class Filter:
    """Filter generated by an antichain of diagrams."""

    generators: tuple[Partition, ...] = ()

    def __post_init__(self):
        gens = tuple(sorted({make_partition(g) for g in self.generators}, key=lambda g: (sum(g), g)))
        for a in gens:
            for b in gens:
                if a != b and contains(a, b):
                    raise InvalidInput(f"generators are not an antichain: {a} is inside {b}")
        object.__setattr__(self, "generators", gens)

    def __contains__(self, lam) -> bool:
        return filter_contains(self, lam)

    def to_json(self) -> dict:
        return {"generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, obj) -> "Filter":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(tuple(g) for g in obj.get("generators", [])))


def filter_contains(omega: Filter, lam) -> bool:
    lam = make_partition(lam)
    return any(contains(g, lam) for g in omega.generators)


def minimal_generators(S: Iterable) -> Filter:
    """Inclusion-minimal elements of S, as the filter they generate."""
    items = {make_partition(s) for s in S}
    mins = [a for a in items if not any(b != a and contains(b, a) for b in items)]
    return Filter(tuple(mins))


def ideal_project(f: SymFn, omega: Filter) -> SymFn:
    """Drop the Jack components of f outside the filter."""
    kept = {lam: c for lam, c in jack_expand(f).items() if filter_contains(omega, lam)}
    return SymFn("jack", kept, f.degree).in_basis(f.basis)


@lru_cache(maxsize=None)
def pieri_e_support(lam: Partition, r: int) -> frozenset:
    """Jack support of P_lam * e_r, by direct multiplication."""
    prod = multiply(jack(lam), SymFn.unit("e", (r,)))
    return frozenset(jack_expand(prod))


@lru_cache(maxsize=None)
def _cms_support(lam: Partition) -> frozenset:
    return frozenset(mu for mu, c in jack_expand(apply_cms(jack(lam))).items() if c != ZERO)


Membership = Union[Filter, Callable[[Partition], bool]]


def verify_ideal_closure(omega: Membership, d: int) -> bool:
    """Check that span{P_lam : lam in omega} is closed under e_r and the CMS
    operator up to degree d.

    ``omega`` may be a Filter or any membership predicate; a predicate that
    is not inclusion-closed should fail.
    """
    if d < 1:
        raise InvalidInput("degree bound must be at least 1")
    member = omega.__contains__ if isinstance(omega, Filter) else omega
    for lam in enumerate_partitions(d, member):
        if not all(member(mu) for mu in _cms_support(lam)):
            return False
        for r in range(1, d - sum(lam) + 1):
            if not all(member(nu) for nu in pieri_e_support(lam, r)):
                return False
    return True
