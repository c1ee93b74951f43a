"""Shifted symmetric polynomials and shifted Jack polynomials.

A polynomial in z_1..z_N is shifted-symmetric when it is symmetric in the
variables z_i + theta (1 - i).  Shifted Jack polynomials P*_lam are built
three ways: the branching recursion over horizontal strips, a sum over
reverse tableaux, and the interpolation system that defines them (value
H(lam) at lam, zero at every other partition of weight <= |lam|).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import InvalidInput, NonGenericTheta, NotContained, TooFewVariables
from .linalg import SingularSystem, solve
from .partitions import (
    Partition,
    conjugate,
    contains,
    enumerate_partitions,
    hook_product_H,
    horizontal_strips_inside,
    make_partition,
)
from .polys import MultiPoly, z_vars
from .ratfun import ONE, THETA, ZERO, RatFun, as_ratfun
from .tableaux import psi_horizontal, reverse_tableaux, tableau_weight

__all__ = [
    "shifted_power_sum",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_sum",
    "bernoulli_value",
    "is_shift_symmetric",
    "shifted_jack",
    "shifted_jack_value",
    "eval_at_partition",
    "skew_shifted_jack_tableau",
    "check_duality",
    "conjugate_eval",
    "plain_content",
]

THETA_INV = THETA.inverse()


def _zvars(N: int):
    return z_vars(N, "z")


def plain_content(cell, param: RatFun = THETA) -> RatFun:
    i, j = cell
    return param * (1 - i) + (j - 1)


def _shift(i: int, param: RatFun) -> RatFun:
    """theta (1 - i) for the 1-based index i."""
    return param * (1 - i)


def shifted_power_sum(r: int, N: int, param: RatFun = THETA, variables=None) -> MultiPoly:
    if r < 1:
        raise InvalidInput("r must be positive")
    V = _zvars(N) if variables is None else tuple(variables)
    out = MultiPoly.zero(V)
    for i in range(1, N + 1):
        s = _shift(i, param)
        zi = MultiPoly.var(V, i - 1) + s
        out = out + zi**r - s**r
    return out


# ---------------------------------------------------------------------------
# Bernoulli polynomials, with B_1 = -1/2

@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, k) * bernoulli_number(k) for k in range(n)) / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_poly(k: int) -> tuple[Fraction, ...]:
    """Coefficients of B_k(x), lowest power first."""
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        coeffs[k - j] += comb(k, j) * bernoulli_number(j)
    return tuple(coeffs)


def _bern_at(k: int, x):
    out = ZERO
    for c in reversed(bernoulli_poly(k)):
        out = out * x + c
    return out


def bernoulli_sum(k: int, N: int, param: RatFun = THETA, variables=None) -> MultiPoly:
    if k < 1:
        raise InvalidInput("k must be positive")
    V = _zvars(N) if variables is None else tuple(variables)
    out = MultiPoly.zero(V)
    coeffs = bernoulli_poly(k)
    for i in range(1, N + 1):
        s = _shift(i, param)
        zi = MultiPoly.var(V, i - 1) + s
        acc = MultiPoly.zero(V)
        for c in reversed(coeffs):
            acc = acc * zi + c
        out = out + acc - _bern_at(k, s)
    return out


def bernoulli_value(k: int, lam: Sequence[int], param: RatFun = THETA) -> RatFun:
    """The Bernoulli sum b_k evaluated at a partition (trailing zeros drop out)."""
    out = ZERO
    for i, part in enumerate(lam, start=1):
        s = _shift(i, param)
        out = out + _bern_at(k, s + part) - _bern_at(k, s)
    return out


def is_shift_symmetric(f: MultiPoly, param: RatFun = THETA) -> bool:
    """Symmetric in z_i + param (1 - i)?"""
    V = f.variables
    images = [MultiPoly.var(V, i) - _shift(i + 1, param) for i in range(f.nvars)]
    return f.substitute(images, V).is_symmetric()


# ---------------------------------------------------------------------------
# shifted Jack polynomials

def _check_len(lam: Partition, N: int):
    if len(lam) > N:
        raise TooFewVariables(f"{lam} has more than {N} parts")


def shifted_jack(lam, N: int, method: str = "branching", param: RatFun = THETA) -> MultiPoly:
    lam = make_partition(lam)
    _check_len(lam, N)
    if method == "branching":
        return _branching(lam, N, param)
    if method == "tableau":
        return skew_shifted_jack_tableau(lam, (), N, param)
    if method == "vanishing":
        return _vanishing(lam, N, param)
    raise InvalidInput(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _branching_from(lam: Partition, start: int, N: int, param: RatFun) -> MultiPoly:
    """P*_lam(z_start, ..., z_N) in the full ring z_1..z_N (start is 1-based)."""
    V = _zvars(N)
    if not lam:
        return MultiPoly.constant(V, ONE)
    if len(lam) > N - start + 1:
        return MultiPoly.zero(V)
    z = MultiPoly.var(V, start - 1)
    out = MultiPoly.zero(V)
    for mu in horizontal_strips_inside(lam):
        rest = _branching_from(mu, start + 1, N, param)
        if not rest:
            continue
        factor = MultiPoly.constant(V, psi_horizontal(lam, mu, param))
        for i, row in enumerate(lam, start=1):
            lo = mu[i - 1] if i <= len(mu) else 0
            for j in range(lo + 1, row + 1):
                factor = factor * (z - plain_content((i, j), param))
        out = out + factor * rest
    return out


def _branching(lam: Partition, N: int, param: RatFun) -> MultiPoly:
    return _branching_from(lam, 1, N, param)


def skew_shifted_jack_tableau(lam, mu, N: int, param: RatFun = THETA) -> MultiPoly:
    """Sum over reverse tableaux T of lam/mu of psi_T prod (z_T(s) - c(s))."""
    lam, mu = make_partition(lam), make_partition(mu)
    if not contains(mu, lam):
        raise NotContained(f"{mu} is not contained in {lam}")
    V = _zvars(N)
    zs = [MultiPoly.var(V, i) for i in range(N)]
    out = MultiPoly.zero(V)
    for chain in reverse_tableaux(lam, mu, N):
        term = MultiPoly.constant(V, tableau_weight(chain, param))
        for t, (big, small) in enumerate(zip(chain, chain[1:])):
            for i, row in enumerate(big, start=1):
                lo = small[i - 1] if i <= len(small) else 0
                for j in range(lo + 1, row + 1):
                    term = term * (zs[t] - plain_content((i, j), param))
        out = out + term
    return out


def _pstar_value(r: int, point: Sequence[int], param: RatFun) -> RatFun:
    out = ZERO
    for i, x in enumerate(point, start=1):
        if x:
            s = _shift(i, param)
            out = out + (s + x) ** r - s**r
    return out


def _vanishing(lam: Partition, N: int, param: RatFun) -> MultiPoly:
    d = sum(lam)
    nodes = enumerate_partitions(d, lambda mu: len(mu) <= N)
    basis = enumerate_partitions(d, lambda nu: not nu or nu[0] <= N)
    if len(nodes) != len(basis):
        raise AssertionError("interpolation system is not square")
    A = []
    for mu in nodes:
        vals = {}
        row = []
        for nu in basis:
            v = ONE
            for r in nu:
                if r not in vals:
                    vals[r] = _pstar_value(r, mu, param)
                v = v * vals[r]
            row.append(v)
        A.append(row)
    H = hook_product_H(lam, param)
    rhs = [H if mu == lam else ZERO for mu in nodes]
    try:
        coeffs = solve(A, rhs)
    except SingularSystem as exc:
        raise NonGenericTheta(f"interpolation system for {lam} is singular") from exc
    V = _zvars(N)
    pstar = {r: shifted_power_sum(r, N, param) for r in range(1, N + 1)}
    out = MultiPoly.zero(V)
    for nu, c in zip(basis, coeffs):
        if not c:
            continue
        term = MultiPoly.constant(V, c)
        for r in nu:
            term = term * pstar[r]
        out = out + term
    return out


def shifted_jack_value(lam, point: Sequence, param: RatFun = THETA) -> RatFun:
    """P*_lam at a point, by the branching recursion on values."""
    lam = make_partition(lam)
    point = tuple(as_ratfun(x) for x in point)
    _check_len(lam, len(point))
    return _value(lam, point, param)


@lru_cache(maxsize=200000)
def _value(lam: Partition, point: tuple, param: RatFun) -> RatFun:
    if not lam:
        return ONE
    if len(lam) > len(point):
        return ZERO
    if not any(point):
        return ZERO
    z, rest = point[0], point[1:]
    out = ZERO
    for mu in horizontal_strips_inside(lam):
        if len(mu) > len(rest):
            continue
        factor = ONE
        for i, row in enumerate(lam, start=1):
            lo = mu[i - 1] if i <= len(mu) else 0
            for j in range(lo + 1, row + 1):
                factor = factor * (z - plain_content((i, j), param))
                if not factor:
                    break
            if not factor:
                break
        if not factor:
            continue
        v = _value(mu, rest, param)
        if v:
            out = out + psi_horizontal(lam, mu, param) * factor * v
    return out


def eval_at_partition(f: MultiPoly, mu) -> RatFun:
    mu = make_partition(mu)
    if len(mu) > f.nvars:
        raise TooFewVariables(f"{mu} has more than {f.nvars} parts")
    return f.evaluate(list(mu) + [0] * (f.nvars - len(mu)))


def conjugate_eval(f: MultiPoly, lam) -> RatFun:
    """f at the conjugate partition (evaluation form of omega*)."""
    return eval_at_partition(f, conjugate(make_partition(lam)))


def check_duality(lam, mu) -> RatFun:
    """P*_lam(mu'; theta) - H(lam)/H(lam', 1/theta) P*_lam'(mu; 1/theta)."""
    lam, mu = make_partition(lam), make_partition(mu)
    lc, mc = conjugate(lam), conjugate(mu)
    n1 = max(len(lam), len(mc), 1)
    n2 = max(len(lc), len(mu), 1)
    lhs = shifted_jack_value(lam, list(mc) + [0] * (n1 - len(mc)), THETA)
    rhs = shifted_jack_value(lc, list(mu) + [0] * (n2 - len(mu)), THETA_INV)
    return lhs - hook_product_H(lam) / hook_product_H(lc, THETA_INV) * rhs
