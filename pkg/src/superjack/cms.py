"""CMS operator, Jack polynomials, Cherednik-Dunkl operators and Pieri rules.

The operator acting on symmetric polynomials in N variables is

    L = sum_i (x_i d_i)^2
        + theta * [ sum_{i<j} (x_i + x_j)/(x_i - x_j) (x_i d_i - x_j d_j)
                    - (N - 1) sum_i x_i d_i ]

On monomial symmetric functions it is triangular in dominance order, with
diagonal c_{lam,lam} = 2 n(lam') - 2 theta n(lam) + |lam|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import (
    InternalInconsistency,
    InvalidInput,
    InvariantViolation,
    NonGenericTheta,
    NotContained,
    PoleAtTheta,
)
from .partitions import (
    Partition,
    conjugate,
    contains,
    dominance_leq,
    make_partition,
    n_stat,
    partitions_of,
    revlex_key,
)
from .polys import MultiPoly, z_vars
from .ratfun import ONE, THETA, ZERO, RatFun, as_ratfun
from .symfunc import SymFn, basis_convert, collect_symmetric, expand_in_variables, multiply
from .tableaux import psi_vertical, reverse_tableaux, tableau_weight

__all__ = [
    "TriangularOperatorMatrix",
    "cms_operator",
    "cms_parts",
    "apply_cms",
    "cms_eigenvalue",
    "cms_matrix",
    "jack",
    "jack_at",
    "jack_tableau",
    "skew_jack_tableau",
    "jack_expand",
    "jack_basis_convert",
    "dunkl_apply",
    "integral_from_shifted",
    "harish_chandra_eval",
    "pieri_psi_box",
    "pieri_expand_e",
    "vertical_strips",
]

from .tableaux import pieri_psi_box  # noqa: E402  (re-export)


# ---------------------------------------------------------------------------
# the differential operator on concrete polynomials

def cms_parts(f: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Split L f = A f + theta * B f (A, B have no theta dependence)."""
    N = f.nvars
    a = MultiPoly.zero(f.variables)
    euler = [f.euler(i) for i in range(N)]
    for i in range(N):
        a = a + euler[i].euler(i)
    b = MultiPoly.zero(f.variables)
    for i in range(N):
        for j in range(i + 1, N):
            g = euler[i] - euler[j]
            if not g:
                continue
            q = g.exact_divide_linear(i, j)
            b = b + (q * (MultiPoly.var(f.variables, i) + MultiPoly.var(f.variables, j)))
    total_euler = MultiPoly.zero(f.variables)
    for e in euler:
        total_euler = total_euler + e
    b = b - total_euler.scale(N - 1)
    return a, b


def cms_operator(f: MultiPoly, theta=THETA) -> MultiPoly:
    """Apply L to a symmetric polynomial (InvariantViolation otherwise)."""
    a, b = cms_parts(f)
    return a + b.scale(as_ratfun(theta))


@lru_cache(maxsize=None)
def _cms_on_monomial(lam: Partition, N: int) -> tuple[dict, dict]:
    f = expand_in_variables(SymFn.unit("m", lam), N)
    f = f.map_coeffs(lambda c: 1)  # integer arithmetic
    a, b = cms_parts(f)
    ca = collect_symmetric(a, check=False).terms
    cb = collect_symmetric(b, check=False).terms
    return ca, cb


def apply_cms(f: SymFn, theta=THETA) -> SymFn:
    """L applied in the stable range: each m_lam is expanded in |lam| variables
    (or ``f.degree`` variables when that is larger) and collected back."""
    theta = as_ratfun(theta)
    g = basis_convert(f, "m")
    out: dict = {}
    for lam, c in g.terms.items():
        N = max(sum(lam), g.degree or 0) if g.degree is not None else sum(lam)
        ca, cb = _cms_on_monomial(lam, max(N, 1))
        for mu, v in ca.items():
            out[mu] = out.get(mu, ZERO) + c * v
        for mu, v in cb.items():
            out[mu] = out.get(mu, ZERO) + c * theta * v
    return SymFn("m", {k: v for k, v in out.items() if v}, g.degree)


def cms_eigenvalue(lam: Iterable[int], theta=THETA) -> RatFun:
    lam = make_partition(lam)
    return as_ratfun(theta) * (-2 * n_stat(lam)) + (2 * n_stat(conjugate(lam)) + sum(lam))


# ---------------------------------------------------------------------------
# closed form of the triangular matrix

@lru_cache(maxsize=None)
def _raising(mu: Partition) -> tuple:
    """theta-coefficients c_{nu,mu}/theta for nu > mu, as ((nu, int), ...).

    L m_nu contains theta * 2 (mu_i - mu_j + 2t) m_mu for every pair of
    positions i < j of mu and 1 <= t <= mu_j with nu = sort(mu_i + t, mu_j - t).
    """
    out: dict = {}
    L = len(mu)
    for i in range(L):
        for j in range(i + 1, L):
            for t in range(1, mu[j] + 1):
                nu = list(mu)
                nu[i] += t
                nu[j] -= t
                nu = make_partition(sorted(nu, reverse=True))
                out[nu] = out.get(nu, 0) + 2 * (mu[i] - mu[j] + 2 * t)
    return tuple((k, v) for k, v in out.items() if v)


@dataclass
class TriangularOperatorMatrix:
    """Matrix of L on m-basis elements of one weight: entries[(row, col)]."""

    weight: int
    order: list
    entries: dict = field(default_factory=dict)

    def entry(self, row: Partition, col: Partition) -> RatFun:
        return self.entries.get((row, col), ZERO)

    def is_triangular(self) -> bool:
        return all(dominance_leq(c, r) for (r, c) in self.entries)


@lru_cache(maxsize=None)
def cms_matrix(k: int) -> TriangularOperatorMatrix:
    order = list(partitions_of(k))
    mat = TriangularOperatorMatrix(k, order)
    for mu in order:
        mat.entries[(mu, mu)] = cms_eigenvalue(mu)
        for nu, v in _raising(mu):
            mat.entries[(nu, mu)] = THETA * v
    mat.entries = {k2: v for k2, v in mat.entries.items() if v}
    return mat


# ---------------------------------------------------------------------------
# Jack polynomials

@lru_cache(maxsize=None)
def _jack_terms(lam: Partition) -> dict:
    k = sum(lam)
    below = [mu for mu in partitions_of(k) if dominance_leq(mu, lam)]
    c_ll = cms_eigenvalue(lam)
    u = {lam: ONE}
    for mu in below[1:]:
        acc = ZERO
        for nu, v in _raising(mu):
            if nu in u:
                acc = acc + u[nu] * v
        if acc:
            u[mu] = acc * THETA / (c_ll - cms_eigenvalue(mu))
    return u


def jack(lam: Iterable[int]) -> SymFn:
    """P_lam in the m-basis, monic in m_lam."""
    lam = make_partition(lam)
    return SymFn._raw("m", dict(_jack_terms(lam)), None)


def jack_at(lam: Iterable[int], t) -> dict:
    """m-coefficients of P_lam at a numeric theta (NonGenericTheta if singular)."""
    lam = make_partition(lam)
    c_ll = cms_eigenvalue(lam)
    for mu in partitions_of(sum(lam)):
        if mu != lam and dominance_leq(mu, lam):
            if (c_ll - cms_eigenvalue(mu)).evaluate(t) == 0:
                raise NonGenericTheta(f"eigenvalues of {lam} and {mu} collide at theta={t}")
    try:
        return jack(lam).specialize(t)
    except PoleAtTheta as exc:
        raise NonGenericTheta(str(exc)) from exc


def jack_expand(f: SymFn, d: int | None = None) -> dict:
    """Coefficients of ``f`` in the Jack basis (leading-term elimination)."""
    g = dict(basis_convert(f, "m").terms)
    if d is not None and any(sum(l) > d for l in g):
        raise InvalidInput(f"input has terms above degree {d}")
    out: dict = {}
    while g:
        lam = max(g, key=lambda l: (sum(l), l))
        c = g[lam]
        out[lam] = c
        for mu, v in _jack_terms(lam).items():
            s = g.get(mu, ZERO) - c * v
            if s:
                g[mu] = s
            else:
                g.pop(mu, None)
    return out


def jack_basis_convert(f: SymFn, target: str) -> SymFn:
    if f.basis == target:
        return f
    if target == "jack":
        return SymFn._raw("jack", jack_expand(f), f.degree)
    acc: dict = {}
    for lam, c in f.terms.items():
        for mu, v in _jack_terms(lam).items():
            s = acc.get(mu, ZERO) + c * v
            if s:
                acc[mu] = s
            else:
                acc.pop(mu, None)
    return basis_convert(SymFn._raw("m", acc, f.degree), target)


def _chains_to_poly(chains, N: int, variables, param) -> MultiPoly:
    out: dict = {}
    for chain in chains:
        e = tuple(sum(chain[t]) - sum(chain[t + 1]) for t in range(N))
        w = tableau_weight(chain, param)
        s = out.get(e, ZERO) + w
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return MultiPoly._raw(tuple(variables), out)


def skew_jack_tableau(lam, mu, N: int, variables=None, param: RatFun = THETA) -> MultiPoly:
    """P_{lam/mu}(x_1..x_N) as a sum over reverse tableaux of shape lam/mu."""
    lam, mu = make_partition(lam), make_partition(mu)
    if not contains(mu, lam):
        raise NotContained(f"{mu} is not contained in {lam}")
    variables = z_vars(N) if variables is None else variables
    return _chains_to_poly(reverse_tableaux(lam, mu, N), N, variables, param)


def jack_tableau(lam, N: int, variables=None, param: RatFun = THETA) -> MultiPoly:
    if N < 1:
        raise InvalidInput("N must be at least 1")
    return skew_jack_tableau(lam, (), N, variables, param)


# ---------------------------------------------------------------------------
# Cherednik-Dunkl operators

def dunkl_apply(i: int, N: int, f: MultiPoly, theta=THETA) -> MultiPoly:
    """D_i f = x_i d_i f + theta sum_{j != i} x_max(i,j) (f - s_ij f)/(x_i - x_j).

    ``i`` is 1-based; D_i vanishes for i > N.
    """
    if i < 1:
        raise InvalidInput("Dunkl index is 1-based")
    if f.nvars != N:
        raise InvalidInput(f"expected a polynomial in {N} variables")
    if i > N:
        return MultiPoly.zero(f.variables)
    k = i - 1
    out = f.euler(k)
    exch = MultiPoly.zero(f.variables)
    for j in range(N):
        if j == k:
            continue
        q = f.divided_difference(k, j)
        if q:
            exch = exch + q * MultiPoly.var(f.variables, max(k, j))
    return out + exch.scale(as_ratfun(theta))


def integral_from_shifted(f: MultiPoly, g: MultiPoly, theta=THETA) -> MultiPoly:
    """Substitute z_i -> D_i into ``f`` and apply to the symmetric ``g``."""
    N = f.nvars
    if g.nvars != N:
        raise InvalidInput("f and g must live in the same number of variables")
    cache: dict = {(0,) * N: g}

    def power(e):
        got = cache.get(e)
        if got is None:
            k = next(idx for idx, x in enumerate(e) if x)
            prev = list(e)
            prev[k] -= 1
            got = dunkl_apply(k + 1, N, power(tuple(prev)), theta)
            cache[e] = got
        return got

    out = MultiPoly.zero(g.variables)
    for e in sorted(f.terms, key=sum):
        out = out + power(e).scale(f.terms[e])
    if not out.is_symmetric():
        raise InvariantViolation("result is not symmetric; f is not shifted-symmetric")
    return out


def harish_chandra_eval(f: MultiPoly, lam) -> RatFun:
    lam = make_partition(lam)
    if len(lam) > f.nvars:
        from .errors import TooFewVariables

        raise TooFewVariables(f"{lam} has more than {f.nvars} parts")
    return f.evaluate(list(lam) + [0] * (f.nvars - len(lam)))


# ---------------------------------------------------------------------------
# Pieri rule for e_r

def vertical_strips(lam: Partition, r: int) -> list[Partition]:
    """All nu with nu/lam a vertical strip of size r."""
    lam = make_partition(lam)
    rows = len(lam) + r
    padded = list(lam) + [0] * r
    out = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(make_partition(acc))
            return
        for add in (1, 0):
            if add > left:
                continue
            v = padded[i] + add
            if i > 0 and v > acc[-1]:
                continue
            rec(i + 1, left - add, acc + [v])

    rec(0, r, [])
    return sorted(out, key=revlex_key)


def pieri_expand_e(lam, r: int, d: int) -> dict:
    """Jack coefficients of P_lam * e_r, by the b-ratio formula and by direct
    multiplication; raises InternalInconsistency if they differ."""
    lam = make_partition(lam)
    if r < 1:
        raise InvalidInput("r must be positive")
    if sum(lam) + r > d:
        raise InvalidInput(f"|lam| + r exceeds degree bound {d}")
    formula = {nu: psi_vertical(nu, lam) for nu in vertical_strips(lam, r)}
    formula = {k: v for k, v in formula.items() if v}
    direct = jack_expand(multiply(jack(lam), SymFn.unit("e", (r,))))
    if formula != direct:
        raise InternalInconsistency(f"Pieri mismatch for {lam}, r={r}: {formula} vs {direct}")
    return formula
