"""Verification sweeps behind ``superjack verify``.

Each sweep returns a :class:`SuiteResult` with the number of cases checked
and the first counterexample found (or None).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .cms import (
    apply_cms,
    cms_eigenvalue,
    jack,
    jack_tableau,
    pieri_expand_e,
)
from .deformed import (
    deformed_cms_apply,
    deformed_newton,
    is_in_deformed_algebra,
    kernel_check,
    leading_term,
    quantum_integral_apply,
    super_jack,
)
from .errors import InternalInconsistency
from .ideals import Filter, verify_ideal_closure
from .partitions import in_fat_hook, partitions_of
from .shifted import check_duality
from .symfunc import expand_in_variables

__all__ = ["SuiteResult", "SUITES", "run_suite"]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexample: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def fail(self, **info) -> "SuiteResult":
        self.counterexample = info
        return self

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


def _parts(max_weight: int):
    for k in range(max_weight + 1):
        yield from partitions_of(k)


def eigen(max_weight: int, **_) -> SuiteResult:
    res = SuiteResult("eigen")
    for lam in _parts(max_weight):
        P = jack(lam)
        res.checked += 1
        if apply_cms(P) != P * cms_eigenvalue(lam):
            return res.fail(partition=list(lam))
    return res


def kernel(max_weight: int, n: int = 1, m: int = 1, **_) -> SuiteResult:
    res = SuiteResult("kernel")
    for lam in _parts(max_weight):
        res.checked += 1
        if kernel_check(lam, n, m) == in_fat_hook(lam, n, m):
            return res.fail(partition=list(lam), n=n, m=m)
    return res


def duality(max_weight: int, **_) -> SuiteResult:
    res = SuiteResult("duality")
    lams = list(_parts(max_weight))
    for lam in lams:
        for mu in lams:
            res.checked += 1
            if check_duality(lam, mu):
                return res.fail(lam=list(lam), mu=list(mu))
    return res


def tableau(max_weight: int, **_) -> SuiteResult:
    res = SuiteResult("tableau")
    for lam in _parts(max_weight):
        P = jack(lam)
        for N in range(max(len(lam), 1), max_weight + 1):
            res.checked += 1
            if jack_tableau(lam, N) != expand_in_variables(P, N):
                return res.fail(partition=list(lam), N=N)
    return res


def pieri(max_weight: int, **_) -> SuiteResult:
    res = SuiteResult("pieri")
    for lam in _parts(max_weight - 1):
        for r in range(1, max_weight - sum(lam) + 1):
            res.checked += 1
            try:
                pieri_expand_e(lam, r, max_weight)
            except InternalInconsistency as exc:
                return res.fail(partition=list(lam), r=r, detail=str(exc))
    return res


def integrals(max_weight: int, n: int = 1, m: int = 1, max_p: int = 3, **_) -> SuiteResult:
    """Invariance and commutation on generators, eigenvectors SP_lam."""
    res = SuiteResult("integrals")
    gens = [deformed_newton(r, n, m) for r in range(1, max(max_weight, 1) + 1)]
    for r, f in enumerate(gens, start=1):
        for p in range(1, max_p + 1):
            g = quantum_integral_apply(p, f, n, m)
            res.checked += 1
            if not is_in_deformed_algebra(g, n, m):
                return res.fail(check="invariance", p=p, r=r)
            for q in range(p + 1, max_p + 1):
                res.checked += 1
                a = quantum_integral_apply(q, g, n, m)
                b = quantum_integral_apply(p, quantum_integral_apply(q, f, n, m), n, m)
                if a != b:
                    return res.fail(check="commutation", p=p, q=q, r=r)
    for lam in _parts(max_weight):
        if not in_fat_hook(lam, n, m):
            continue
        s = super_jack(lam, n, m)
        e, c = leading_term(s)
        res.checked += 1
        if deformed_cms_apply(s, n, m) != s.scale(cms_eigenvalue(lam)):
            return res.fail(check="deformed CMS eigenvalue", partition=list(lam))
        for p in range(1, max_p + 1):
            g = quantum_integral_apply(p, s, n, m)
            res.checked += 1
            if g != s.scale(g.coefficient(e) / c):
                return res.fail(check="eigenvector", p=p, partition=list(lam))
    return res


def filters(max_weight: int, **_) -> SuiteResult:
    res = SuiteResult("filters")
    for k in range(1, max_weight + 1):
        for g in partitions_of(k):
            res.checked += 1
            if not verify_ideal_closure(Filter((g,)), max_weight):
                return res.fail(generator=list(g), degree=max_weight)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "eigen": eigen,
    "kernel": kernel,
    "duality": duality,
    "tableau": tableau,
    "pieri": pieri,
    "integrals": integrals,
    "filters": filters,
}


def run_suite(name: str, max_weight: int, n: int = 1, m: int = 1) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[s](max_weight=max_weight, n=n, m=m) for s in names]
