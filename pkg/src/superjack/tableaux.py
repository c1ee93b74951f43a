"""Branching coefficients and reverse (bi)tableaux.

A reverse tableau of shape lam/mu with entries in 1..N is stored as the
chain ``lam = chain[0] >= chain[1] >= ... >= chain[N] = mu`` where
``chain[t]`` holds the cells with entry > t.  Consecutive shapes differ by
horizontal strips, and the outermost strip carries entry 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import InvalidStep, NotContained
from .partitions import (
    Partition,
    add_box_results,
    conjugate,
    contains,
    horizontal_strips_inside,
    is_vertical_strip,
    make_partition,
)
from .ratfun import ONE, THETA, RatFun

__all__ = [
    "b_function",
    "psi_horizontal",
    "psi_vertical",
    "pieri_psi_box",
    "reverse_tableaux",
    "tableau_weight",
    "chain_to_filling",
    "reverse_bitableaux",
]


def b_function(lam: Partition, cell, param: RatFun = THETA) -> RatFun:
    """(c' + param) / (c' + 1) with c' = arm + param * leg; 1 outside lam."""
    i, j = cell
    if i > len(lam) or j > lam[i - 1]:
        return ONE
    a = lam[i - 1] - j
    l = conjugate(lam)[j - 1] - i
    c = param * l + a
    return (c + param) / (c + 1)


def _rows_cols(big: Partition, small: Partition):
    rows, cols = set(), set()
    for i, row in enumerate(big, start=1):
        lo = small[i - 1] if i <= len(small) else 0
        for j in range(lo + 1, row + 1):
            rows.add(i)
            cols.add(j)
    return rows, cols


@lru_cache(maxsize=None)
def psi_horizontal(lam: Partition, mu: Partition, param: RatFun = THETA) -> RatFun:
    """Branching coefficient psi_{lam/mu} for a horizontal strip lam/mu.

    Product of b_mu(s)/b_lam(s) over cells s of mu lying in a row that meets
    the strip but in no column that meets it.
    """
    rows, cols = _rows_cols(lam, mu)
    out = ONE
    for i in rows:
        if i > len(mu):
            continue
        for j in range(1, mu[i - 1] + 1):
            if j not in cols:
                out = out * b_function(mu, (i, j), param) / b_function(lam, (i, j), param)
    return out


@lru_cache(maxsize=None)
def psi_vertical(nu: Partition, lam: Partition, param: RatFun = THETA) -> RatFun:
    """Vertical-strip Pieri coefficient of P_nu in P_lam * e_r.

    Product of b_nu(s)/b_lam(s) over cells of lam in a column meeting the
    strip nu/lam but in no row meeting it.
    """
    if not is_vertical_strip(nu, lam):
        raise InvalidStep(f"{nu}/{lam} is not a vertical strip")
    rows, cols = _rows_cols(nu, lam)
    out = ONE
    for j in cols:
        lc = conjugate(lam)
        if j > len(lc):
            continue
        for i in range(1, lc[j - 1] + 1):
            if i not in rows:
                out = out * b_function(nu, (i, j), param) / b_function(lam, (i, j), param)
    return out


@lru_cache(maxsize=None)
def pieri_psi_box(lam: Partition, nu: Partition) -> RatFun:
    """Coefficient of P_nu in P_lam * p_1, nu = lam plus one box in row j."""
    lam, nu = make_partition(lam), make_partition(nu)
    rows = [r for n2, r in add_box_results(lam) if n2 == nu]
    if not rows:
        raise InvalidStep(f"{nu} is not {lam} plus one box")
    j = rows[0]
    lj = lam[j - 1] if j <= len(lam) else 0
    out = ONE
    for i in range(1, j):
        d = lam[i - 1] - lj
        t = THETA
        out = out * ((j - i - 1) * t + d) * ((j - i + 1) * t + d - 1)
        out = out / (((j - i) * t + d - 1) * ((j - i) * t + d))
    return out


# ---------------------------------------------------------------------------
# reverse tableaux as chains of horizontal strips

def reverse_tableaux(lam: Partition, mu: Partition, N: int) -> Iterator[tuple[Partition, ...]]:
    """Chains lam = k_0 >= k_1 >= ... >= k_N = mu of horizontal strips.

    Cells of k_{t-1}/k_t carry entry t, so entries weakly decrease along
    rows and strictly down columns.  Chains ending above ``mu`` are skipped.
    """
    if not contains(mu, lam):
        raise NotContained(f"{mu} is not contained in {lam}")

    def rec(shape, t, acc):
        if t == N:
            if shape == mu:
                yield tuple(acc)
            return
        left = N - t - 1
        for kappa in horizontal_strips_inside(shape, mu):
            # each strip removes at most one cell per column
            if _column_excess(kappa, mu) > left:
                continue
            acc.append(kappa)
            yield from rec(kappa, t + 1, acc)
            acc.pop()

    yield from rec(lam, 0, [lam])


def _column_excess(big: Partition, small: Partition) -> int:
    bc, sc = conjugate(big), conjugate(small)
    return max((c - (sc[j] if j < len(sc) else 0) for j, c in enumerate(bc)), default=0)


def tableau_weight(chain, param: RatFun = THETA) -> RatFun:
    out = ONE
    for big, small in zip(chain, chain[1:]):
        out = out * psi_horizontal(big, small, param)
    return out


def chain_to_filling(chain) -> dict:
    """Cell -> entry for a chain produced by :func:`reverse_tableaux`."""
    filling = {}
    for t, (big, small) in enumerate(zip(chain, chain[1:]), start=1):
        for i, row in enumerate(big, start=1):
            lo = small[i - 1] if i <= len(small) else 0
            for j in range(lo + 1, row + 1):
                filling[(i, j)] = t
    return filling


def reverse_bitableaux(lam: Partition, n: int, m: int):
    """Reverse bitableaux of type (n, m) and shape lam.

    Symbols order as 1 < ... < n < 1' < ... < m'.  The marked cells form a
    partition mu (entries decrease weakly), unmarked symbols are strict down
    columns and marked ones strict along rows.  Yields
    ``(mu, unmarked_chain, marked_chain)``: the unmarked part is a chain on
    lam/mu, the marked part a chain on mu' read by conjugation.
    """
    for mu in _subpartitions(lam):
        if mu and mu[0] > m:
            continue
        marked = list(reverse_tableaux(conjugate(mu), (), m))
        if not marked:
            continue
        for u in reverse_tableaux(lam, mu, n):
            for v in marked:
                yield mu, u, v


def _subpartitions(lam: Partition):
    def rec(i, bound, acc):
        if i == len(lam):
            yield make_partition(acc)
            return
        for v in range(min(bound, lam[i]), -1, -1):
            yield from rec(i + 1, v, acc + [v])

    yield from rec(0, lam[0] if lam else 0, [])
