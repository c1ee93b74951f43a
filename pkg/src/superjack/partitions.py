"""Partitions, Young-diagram combinatorics and Frobenius-type coordinates.

A partition is a plain tuple of positive integers in weakly decreasing
order; ``()`` is the empty partition.  Cells are ``(row, col)`` pairs with
1-based indices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from .errors import CellOutOfDiagram, InvalidInput, NotInFatHook, WeightMismatch
from .ratfun import ONE, THETA, RatFun

Partition = tuple[int, ...]
Cell = tuple[int, int]

__all__ = [
    "Partition",
    "Cell",
    "make_partition",
    "parse_partition",
    "weight",
    "conjugate",
    "dominance_leq",
    "contains",
    "n_stat",
    "cells",
    "arm",
    "leg",
    "content",
    "hook_product_H",
    "in_fat_hook",
    "frobenius_nm",
    "frobenius_flat",
    "partitions_of",
    "enumerate_partitions",
    "maximal_rectangles",
    "rectangle",
    "add_box_results",
    "horizontal_strips_inside",
    "is_horizontal_strip",
    "is_vertical_strip",
    "revlex_key",
]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise InvalidInput(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvalidInput(f"parts of {p} are not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"`` (or ``""`` for the empty partition)."""
    text = text.strip().strip("[]()")
    if not text:
        return ()
    try:
        parts = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError as exc:
        raise InvalidInput(f"malformed partition {text!r}") from exc
    return make_partition(parts)


def weight(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """``mu <= lam`` in dominance order (equal weights required)."""
    if sum(mu) != sum(lam):
        raise WeightMismatch(f"|{mu}| != |{lam}|")
    s = t = 0
    for i in range(max(len(mu), len(lam))):
        s += mu[i] if i < len(mu) else 0
        t += lam[i] if i < len(lam) else 0
        if s > t:
            return False
    return True


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff the diagram of ``mu`` is a subset of the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(a <= b for a, b in zip(mu, lam))


def n_stat(lam: Partition) -> int:
    return sum(i * x for i, x in enumerate(lam))


def cells(lam: Partition) -> Iterator[Cell]:
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def arm(lam: Partition, cell: Cell) -> int:
    i, j = cell
    return lam[i - 1] - j


def leg(lam: Partition, cell: Cell) -> int:
    i, j = cell
    return conjugate(lam)[j - 1] - i


def _in_diagram(lam: Partition, cell: Cell) -> bool:
    i, j = cell
    return i >= 1 and j >= 1 and i <= len(lam) and j <= lam[i - 1]


def content(cell: Cell, kind: str = "plain", lam: Optional[Partition] = None, param: RatFun = THETA) -> RatFun:
    """Box statistics: ``plain`` is (j-1) - param*(i-1); ``primed`` is arm + param*leg."""
    i, j = cell
    if kind == "plain":
        return RatFun.constant(j - 1) - param * (i - 1)
    if kind == "primed":
        if lam is None or not _in_diagram(lam, cell):
            raise CellOutOfDiagram(f"cell {cell} is not in {lam}")
        return RatFun.constant(arm(lam, cell)) + param * leg(lam, cell)
    raise InvalidInput(f"unknown content kind {kind!r}")


@lru_cache(maxsize=None)
def _hook_product(lam: Partition, reciprocal: bool) -> RatFun:
    param = THETA.inverse() if reciprocal else THETA
    out = ONE
    lc = conjugate(lam)
    for i, j in cells(lam):
        out = out * (param * (lc[j - 1] - i) + (lam[i - 1] - j + 1))
    return out


def hook_product_H(lam: Partition, param: Optional[RatFun] = None) -> RatFun:
    """Product over boxes of (c'(box) + 1); ``param`` defaults to theta.

    Pass ``param=THETA.inverse()`` for H(lam, 1/theta).
    """
    if param is None or param == THETA:
        return _hook_product(tuple(lam), False)
    if param == THETA.inverse():
        return _hook_product(tuple(lam), True)
    out = ONE
    lc = conjugate(lam)
    for i, j in cells(lam):
        out = out * (param * (lc[j - 1] - i) + (lam[i - 1] - j + 1))
    return out


def in_fat_hook(lam: Partition, n: int, m: int) -> bool:
    if n < 0 or m < 0:
        raise InvalidInput("n and m must be non-negative")
    return len(lam) <= n or lam[n] <= m


def _hook_split(lam: Partition, n: int, m: int):
    if not in_fat_hook(lam, n, m):
        raise NotInFatHook(f"{lam} is not in the fat ({n},{m})-hook")
    a = [lam[i] if i < len(lam) else 0 for i in range(n)]
    tail = conjugate(tuple(lam[n:]))
    b = [tail[j] if j < len(tail) else 0 for j in range(m)]
    return a, b


def frobenius_nm(lam: Partition, n: int, m: int) -> tuple[list[RatFun], list[RatFun]]:
    """Modified Frobenius (n, m)-coordinates of a fat-hook partition."""
    a, b = _hook_split(lam, n, m)
    half = Fraction(1, 2)
    inv = THETA.inverse()
    p = [RatFun.constant(a[i - 1]) - THETA * (i - half) - (m - THETA * n) * half for i in range(1, n + 1)]
    q = [RatFun.constant(b[j - 1]) - inv * (j - half) + (inv * m + n) * half for j in range(1, m + 1)]
    return p, q


def frobenius_flat(lam: Partition, n: int, m: int) -> tuple[list[int], list[int]]:
    """Unshifted coordinates: first n rows, then the first m columns of the tail."""
    return _hook_split(lam, n, m)


@lru_cache(maxsize=None)
def partitions_of(k: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """Partitions of ``k`` in reverse lexicographic order (largest first)."""
    if max_part is None:
        max_part = k
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(
    max_weight: int, predicate: Optional[Callable[[Partition], bool]] = None
) -> list[Partition]:
    """All partitions of weight <= max_weight in graded reverse-lex order."""
    if max_weight < 0:
        raise InvalidInput("max_weight must be non-negative")
    out = []
    for k in range(max_weight + 1):
        for lam in partitions_of(k):
            if predicate is None or predicate(lam):
                out.append(lam)
    return out


def revlex_key(lam: Partition):
    """Sort key realising graded reverse-lex order (ascending = earlier)."""
    return (sum(lam), tuple(-x for x in lam) + (1,))


def rectangle(rows: int, cols: int) -> Partition:
    return (cols,) * rows if rows > 0 and cols > 0 else ()


def maximal_rectangles(lam: Partition) -> list[Partition]:
    if not lam:
        raise InvalidInput("the empty diagram has no maximal rectangles")
    out = []
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            out.append(rectangle(i + 1, lam[i]))
    return out


def add_box_results(lam: Partition) -> list[tuple[Partition, int]]:
    """Partitions obtained by adding one box, with the (1-based) row used."""
    out = []
    for r in range(len(lam) + 1):
        cur = lam[r] if r < len(lam) else 0
        prev = lam[r - 1] if r > 0 else None
        if prev is None or prev > cur:
            nu = list(lam) + ([0] if r == len(lam) else [])
            nu[r] += 1
            out.append((tuple(nu), r + 1))
    return out


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """``lam / mu`` is a horizontal strip (mu interlaces lam)."""
    if not contains(mu, lam):
        return False
    for i in range(len(lam)):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if (mu[i] if i < len(mu) else 0) < nxt:
            return False
    return True


def is_vertical_strip(lam: Partition, mu: Partition) -> bool:
    return contains(mu, lam) and all(
        lam[i] - (mu[i] if i < len(mu) else 0) <= 1 for i in range(len(lam))
    )


def horizontal_strips_inside(lam: Partition, floor: Partition = ()) -> list[Partition]:
    """All kappa with floor <= kappa <= lam and lam / kappa a horizontal strip."""
    ranges = []
    for i in range(len(lam)):
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        lo = max(lo, floor[i] if i < len(floor) else 0)
        if lo > lam[i]:
            return []
        ranges.append(range(lam[i], lo - 1, -1))
    out: list[Partition] = []

    def rec(i, acc):
        if i == len(ranges):
            out.append(make_partition(acc))
            return
        for v in ranges[i]:
            rec(i + 1, acc + [v])

    rec(0, [])
    return out
