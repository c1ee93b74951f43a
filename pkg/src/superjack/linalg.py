"""Dense Gaussian elimination over Q(theta)."""

from __future__ import annotations

from typing import Sequence

from .ratfun import ZERO, RatFun, as_ratfun

__all__ = ["solve", "solve_overdetermined", "SingularSystem", "Inconsistent"]


class SingularSystem(Exception):
    """Raised internally; callers translate it into a domain error."""


def solve(A: Sequence[Sequence], b: Sequence) -> list[RatFun]:
    """Solve the square system A x = b exactly."""
    n = len(A)
    rows = [[as_ratfun(v) for v in A[i]] + [as_ratfun(b[i])] for i in range(n)]
    for c in range(n):
        piv = None
        best = None
        for r in range(c, n):
            v = rows[r][c]
            if v:
                # prefer the simplest pivot to keep expressions small
                size = v.num.degree() + v.den.degree()
                if best is None or size < best:
                    piv, best = r, size
        if piv is None:
            raise SingularSystem(f"no pivot in column {c}")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = rows[c][c].inverse()
        rows[c] = [v * inv if v else ZERO for v in rows[c]]
        for r in range(n):
            if r != c:
                f = rows[r][c]
                if f:
                    pr = rows[c]
                    rows[r] = [a - f * p if p else a for a, p in zip(rows[r], pr)]
    return [rows[i][n] for i in range(n)]


class Inconsistent(Exception):
    """The right-hand side is not in the column span."""


def solve_overdetermined(A: Sequence[Sequence], b: Sequence) -> list[RatFun]:
    """Solve A x = b for a tall matrix of full column rank, exactly.

    Raises Inconsistent when b is outside the column span and
    SingularSystem when the columns are dependent.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    rows = [[as_ratfun(v) for v in A[i]] + [as_ratfun(b[i])] for i in range(nrows)]
    pivots = []
    r0 = 0
    for c in range(ncols):
        piv = next((r for r in range(r0, nrows) if rows[r][c]), None)
        if piv is None:
            raise SingularSystem(f"column {c} is dependent")
        rows[r0], rows[piv] = rows[piv], rows[r0]
        inv = rows[r0][c].inverse()
        rows[r0] = [v * inv if v else ZERO for v in rows[r0]]
        for r in range(nrows):
            if r != r0:
                f = rows[r][c]
                if f:
                    pr = rows[r0]
                    rows[r] = [a - f * p if p else a for a, p in zip(rows[r], pr)]
        pivots.append(r0)
        r0 += 1
    if any(rows[r][ncols] for r in range(r0, nrows)):
        raise Inconsistent("right-hand side is not in the span")
    return [rows[p][ncols] for p in pivots]
