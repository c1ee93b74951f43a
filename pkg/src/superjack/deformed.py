"""The deformed algebra Lambda_{n,m,theta} and its super-Jack polynomials.

Polynomials live in x1..xn, y1..ym.  The homomorphism ``phi`` sends the
power sum p_r to the deformed Newton sum  sum x_i^r - (1/theta) sum y_j^r.
Super-Jack polynomials SP_lam = phi(P_lam) are built three ways and their
shifted analogues by a bitableau formula.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cms import jack, skew_jack_tableau
from .errors import InvalidInput, NotInAlgebra, NotInFatHook
from .linalg import Inconsistent, SingularSystem, solve_overdetermined
from .partitions import (
    Partition,
    conjugate,
    frobenius_flat,
    frobenius_nm,
    hook_product_H,
    in_fat_hook,
    make_partition,
    partitions_of,
)
from .polys import MultiPoly, xy_vars
from .ratfun import ONE, THETA, ZERO, RatFun, as_ratfun
from .shifted import _bern_at, plain_content
from .symfunc import SymFn, basis_convert, z_lambda
from .tableaux import reverse_bitableaux, tableau_weight

__all__ = [
    "deformed_newton",
    "is_in_deformed_algebra",
    "phi",
    "super_jack",
    "kernel_check",
    "deformed_cms_apply",
    "quantum_integral_apply",
    "rho_vector",
    "phi_natural_bernoulli",
    "b_natural_value",
    "shifted_super_jack",
    "super_jack_expand",
    "leading_term",
    "generating_series",
    "R_polynomial",
    "flat_point",
    "natural_point",
]

THETA_INV = THETA.inverse()


def _vars(n: int, m: int):
    if n < 0 or m < 0:
        raise InvalidInput("n and m must be non-negative")
    return xy_vars(n, m)


@lru_cache(maxsize=None)
def deformed_newton(r: int, n: int, m: int) -> MultiPoly:
    """sum x_i^r - (1/theta) sum y_j^r."""
    if r < 0:
        raise InvalidInput("r must be non-negative")
    V = _vars(n, m)
    if r == 0:
        return MultiPoly.constant(V, as_ratfun(n) - THETA_INV * m)
    terms = {}
    for k in range(n + m):
        e = [0] * (n + m)
        e[k] = r
        terms[tuple(e)] = ONE if k < n else -THETA_INV
    return MultiPoly(V, terms)


def is_in_deformed_algebra(p: MultiPoly, n: int, m: int) -> bool:
    """Bisymmetric and (d/dx_1 + theta d/dy_1) p vanishes on x_1 = y_1."""
    if p.nvars != n + m:
        raise InvalidInput(f"expected {n + m} variables")
    if not p.is_symmetric(range(n)) or not p.is_symmetric(range(n, n + m)):
        return False
    if n == 0 or m == 0:
        return True
    g = p.derivative(0) + p.derivative(n).scale(THETA)
    return not g.set_equal(n, 0)


def phi(f: SymFn, n: int, m: int) -> MultiPoly:
    """Image of a symmetric function under p_r -> deformed_newton(r)."""
    V = _vars(n, m)
    g = basis_convert(f, "p")
    out = MultiPoly.zero(V)
    for lam, c in g.terms.items():
        out = out + _phi_power_product(lam, n, m).scale(c)
    return out


@lru_cache(maxsize=None)
def _phi_power_product(lam: Partition, n: int, m: int) -> MultiPoly:
    if not lam:
        return MultiPoly.constant(_vars(n, m), ONE)
    return _phi_power_product(lam[1:], n, m) * deformed_newton(lam[0], n, m)


# ---------------------------------------------------------------------------
# super-Jack polynomials

def _conj_prefactor(mu: Partition) -> RatFun:
    """(-1)^|mu| H(mu) / (theta^|mu| H(mu', 1/theta))."""
    k = sum(mu)
    sign = -1 if k % 2 else 1
    return hook_product_H(mu) / (THETA**k * hook_product_H(conjugate(mu), THETA_INV)) * sign


def super_jack(lam, n: int, m: int, method: str = "skew_expansion") -> MultiPoly:
    lam = make_partition(lam)
    _vars(n, m)
    if method == "via_phi":
        return phi(jack(lam), n, m)
    if method == "skew_expansion":
        return _super_jack_skew(lam, n, m)
    if method == "bitableau":
        return _super_jack_bitableau(lam, n, m)
    raise InvalidInput(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _super_jack_skew(lam: Partition, n: int, m: int) -> MultiPoly:
    V = _vars(n, m)
    xs, ys = V[:n], V[n:]
    acc: dict = {}
    for mu in _subdiagrams(lam):
        mc = conjugate(mu)
        if len(mc) > m:
            continue
        px = skew_jack_tableau(lam, mu, n, xs)
        if not px:
            continue
        py = skew_jack_tableau(mc, (), m, ys, THETA_INV)
        if not py:
            continue
        pre = _conj_prefactor(mu)
        for ex, cx in px.terms.items():
            for ey, cy in py.terms.items():
                e = ex + ey
                s = acc.get(e, ZERO) + pre * cx * cy
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
    return MultiPoly._raw(V, acc)


def _subdiagrams(lam: Partition):
    def rec(i, bound, acc):
        if i == len(lam):
            yield make_partition(acc)
            return
        for v in range(min(bound, lam[i]), -1, -1):
            yield from rec(i + 1, v, acc + [v])

    yield from rec(0, lam[0] if lam else 0, [])


def _chain_exponents(chain, k: int) -> tuple:
    return tuple(sum(chain[t]) - sum(chain[t + 1]) for t in range(k))


def _bitableau_weight(mu, u_chain, v_chain) -> RatFun:
    return _conj_prefactor(mu) * tableau_weight(u_chain) * tableau_weight(v_chain, THETA_INV)


@lru_cache(maxsize=None)
def _super_jack_bitableau(lam: Partition, n: int, m: int) -> MultiPoly:
    V = _vars(n, m)
    acc: dict = {}
    for mu, u, v in reverse_bitableaux(lam, n, m):
        e = _chain_exponents(u, n) + _chain_exponents(v, m)
        s = acc.get(e, ZERO) + _bitableau_weight(mu, u, v)
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
    return MultiPoly._raw(V, acc)


def kernel_check(lam, n: int, m: int) -> bool:
    """True iff phi(P_lam) vanishes."""
    return super_jack(lam, n, m, "via_phi").is_zero()


def leading_term(p: MultiPoly):
    """Lexicographically largest monomial (x1 > ... > xn > y1 > ...)."""
    if not p.terms:
        return None
    e = max(p.terms)
    return e, p.terms[e]


# ---------------------------------------------------------------------------
# deformed CMS operator and the quantum integrals L_p

def _require_algebra(p: MultiPoly, n: int, m: int):
    if not is_in_deformed_algebra(p, n, m):
        raise NotInAlgebra("polynomial is not in the deformed algebra")


def deformed_cms_apply(p: MultiPoly, n: int, m: int) -> MultiPoly:
    """Deformed CMS operator; every fraction is removed by exact division."""
    _require_algebra(p, n, m)
    V = p.variables
    E = [p.euler(k) for k in range(n + m)]
    var = [MultiPoly.var(V, k) for k in range(n + m)]
    out = MultiPoly.zero(V)
    for i in range(n):
        out = out + E[i].euler(i)
    for j in range(n, n + m):
        out = out - E[j].euler(j).scale(THETA)
    for i in range(n):
        for j in range(i + 1, n):
            g = E[i] - E[j]
            if g:
                out = out + (g.exact_divide_linear(i, j) * (var[i] + var[j])).scale(THETA)
    for i in range(n, n + m):
        for j in range(i + 1, n + m):
            g = E[i] - E[j]
            if g:
                out = out - g.exact_divide_linear(i, j) * (var[i] + var[j])
    for i in range(n):
        for j in range(n, n + m):
            g = E[i] + E[j].scale(THETA)
            if g:
                out = out - g.exact_divide_linear(i, j) * (var[i] + var[j])
    total = MultiPoly.zero(V)
    for e in E:
        total = total + e
    return out - total.scale(THETA * (n - 1) - m)


def quantum_integral_apply(p: int, f: MultiPoly, n: int, m: int) -> MultiPoly:
    """L_p f through the recursion on d_i^(q) f (q = 1..p)."""
    if p < 1:
        raise InvalidInput("p must be positive")
    _require_algebra(f, n, m)
    V = f.variables
    N = n + m
    par = [0] * n + [1] * m
    w = [ONE if par[k] == 0 else -THETA for k in range(N)]  # (-theta)^p(i)
    wj = [-THETA if par[k] == 0 else ONE for k in range(N)]  # (-theta)^(1-p(j))
    var = [MultiPoly.var(V, k) for k in range(N)]
    g = [f.euler(k).scale(w[k]) for k in range(N)]
    half = Fraction(1, 2)
    for _ in range(2, p + 1):
        new = []
        for i in range(N):
            h = g[i].euler(i).scale(w[i])
            corr = MultiPoly.zero(V)
            for j in range(N):
                if j == i:
                    continue
                diff = g[i] - g[j]
                if diff:
                    q = diff.exact_divide_linear(i, j)
                    corr = corr + (q * (var[i] + var[j])).scale(wj[j])
            new.append(h - corr.scale(half))
        g = new
    out = MultiPoly.zero(V)
    for k in range(N):
        out = out + (g[k] if par[k] == 0 else g[k].scale(THETA_INV * -1))
    return out


# ---------------------------------------------------------------------------
# shifted side: Bernoulli sums, rho, shifted super-Jack polynomials

def rho_vector(n: int, m: int) -> list[RatFun]:
    half = Fraction(1, 2)
    out = [THETA * (i - half) + (THETA * -n + m) * half for i in range(1, n + 1)]
    out += [THETA_INV * (j - half) - (THETA_INV * m + n) * half for j in range(1, m + 1)]
    return out


def b_natural_value(k: int, lam, param: RatFun = THETA) -> RatFun:
    """Shifted Bernoulli sum sum_i [B_k(z_i + 1/2 + theta(1/2 - i)) - B_k(...)] at lam."""
    half = Fraction(1, 2)
    out = ZERO
    for i, part in enumerate(make_partition(lam), start=1):
        s = param * (half - i) + half
        out = out + _bern_at(k, s + part) - _bern_at(k, s)
    return out


def _bern_poly_of(k: int, lin: MultiPoly) -> MultiPoly:
    from .shifted import bernoulli_poly

    acc = MultiPoly.zero(lin.variables)
    for c in reversed(bernoulli_poly(k)):
        acc = acc * lin + c
    return acc


def phi_natural_bernoulli(k: int, n: int, m: int) -> MultiPoly:
    """Image of the shifted Bernoulli sum b_k in modified Frobenius coordinates."""
    if k < 1:
        raise InvalidInput("k must be positive")
    V = _vars(n, m)
    half = Fraction(1, 2)
    out = MultiPoly.zero(V)
    for i in range(1, n + 1):
        lin = MultiPoly.var(V, i - 1) + (half + (THETA * -n + m) * half)
        out = out + _bern_poly_of(k, lin) - _bern_at(k, THETA * (half - i) + half)
    scale = (-THETA) ** (k - 1)
    for j in range(1, m + 1):
        lin = MultiPoly.var(V, n + j - 1) + (half - (THETA_INV * m - n) * half)
        part = _bern_poly_of(k, lin) - _bern_at(k, THETA_INV * (half - j) + half + n)
        out = out + part.scale(scale)
    return out


def _check_hook(lam, n, m):
    if not in_fat_hook(lam, n, m):
        raise NotInFatHook(f"{lam} is not in the fat ({n},{m})-hook")


@lru_cache(maxsize=None)
def _shifted_super_jack_flat(lam: Partition, n: int, m: int) -> MultiPoly:
    V = _vars(n, m)
    var = [MultiPoly.var(V, k) for k in range(n + m)]
    out = MultiPoly.zero(V)
    for mu, u, v in reverse_bitableaux(lam, n, m):
        term = MultiPoly.constant(V, _bitableau_weight(mu, u, v))
        for t, (big, small) in enumerate(zip(u, u[1:])):
            for i, row in enumerate(big, start=1):
                lo = small[i - 1] if i <= len(small) else 0
                for j in range(lo + 1, row + 1):
                    term = term * (var[t] - plain_content((i, j)))
        # marked chain lives on mu'; cell (a, b) of mu' is cell (b, a) of mu
        for t, (big, small) in enumerate(zip(v, v[1:])):
            for a, row in enumerate(big, start=1):
                lo = small[a - 1] if a <= len(small) else 0
                for b in range(lo + 1, row + 1):
                    term = term * (var[n + t].scale(-THETA) - plain_content((b, a)))
        out = out + term
    return out


def shifted_super_jack(lam, n: int, m: int, convention: str = "flat") -> MultiPoly:
    lam = make_partition(lam)
    _check_hook(lam, n, m)
    flat = _shifted_super_jack_flat(lam, n, m)
    if convention == "flat":
        return flat
    if convention == "natural":
        V = flat.variables
        rho = rho_vector(n, m)
        images = [MultiPoly.var(V, k) + rho[k] for k in range(n + m)]
        return flat.substitute(images, V)
    raise InvalidInput(f"unknown convention {convention!r}")


def flat_point(lam, n: int, m: int) -> list:
    a, b = frobenius_flat(make_partition(lam), n, m)
    return list(a) + list(b)


def natural_point(lam, n: int, m: int) -> list:
    p, q = frobenius_nm(make_partition(lam), n, m)
    return list(p) + list(q)


# ---------------------------------------------------------------------------
# expansion in the super-Jack basis

def super_jack_expand(p: MultiPoly, n: int, m: int, d: int | None = None) -> dict:
    """Coefficients c_lam with p = sum c_lam SP_lam over fat-hook lam."""
    deg = p.degree() if d is None else d
    if p.degree() > deg:
        raise InvalidInput(f"polynomial has degree above {deg}")
    out: dict = {}
    for k in range(max(deg, 0) + 1):
        part = p.homogeneous_part(k)
        if not part:
            continue
        lams = [lam for lam in partitions_of(k) if in_fat_hook(lam, n, m)]
        basis = [super_jack(lam, n, m) for lam in lams]
        monos = sorted(set().union(part.terms, *(b.terms for b in basis)))
        A = [[b.terms.get(e, ZERO) for b in basis] for e in monos]
        rhs = [part.terms.get(e, ZERO) for e in monos]
        try:
            coeffs = solve_overdetermined(A, rhs) if lams else None
        except (Inconsistent, SingularSystem) as exc:
            raise NotInAlgebra(f"degree-{k} part is not in the span of super-Jack polynomials") from exc
        if coeffs is None:
            raise NotInAlgebra(f"no super-Jack polynomials of degree {k}")
        for lam, c in zip(lams, coeffs):
            if c:
                out[lam] = c
    return out


def R_polynomial(n: int, m: int) -> MultiPoly:
    """prod_{i,j} (x_i - y_j)^2."""
    V = _vars(n, m)
    out = MultiPoly.constant(V, ONE)
    for i in range(n):
        for j in range(m):
            f = MultiPoly.var(V, i) - MultiPoly.var(V, n + j)
            out = out * f * f
    return out


# ---------------------------------------------------------------------------
# generating-function oracle

def _rising(k: int) -> RatFun:
    out = ONE
    for s in range(k):
        out = out * (THETA + s)
    return out


def generating_series(n: int, m: int, d: int) -> tuple[list, list]:
    """t-coefficients, up to t^d, of phi(prod (1 - z t)^(-theta)) and of
    prod (1 - x t)^(-theta) prod (1 - y t).  The two lists must agree."""
    V = _vars(n, m)
    lhs = []
    for k in range(d + 1):
        f = SymFn("p", {lam: THETA ** len(lam) * Fraction(1, z_lambda(lam)) for lam in partitions_of(k)})
        lhs.append(phi(f, n, m))
    # right side as a truncated power series in t
    series = [MultiPoly.constant(V, ONE)] + [MultiPoly.zero(V) for _ in range(d)]
    fact = 1
    for i in range(n):
        factor = []
        fact = 1
        for k in range(d + 1):
            if k:
                fact *= k
            factor.append(MultiPoly.monomial(V, _unit_exp(n + m, i, k), _rising(k) / fact))
        series = _series_mul(series, factor, d)
    for j in range(m):
        factor = [MultiPoly.constant(V, ONE), -MultiPoly.var(V, n + j)] + [MultiPoly.zero(V)] * (d - 1)
        series = _series_mul(series, factor[: d + 1], d)
    return lhs, series


def _unit_exp(N: int, k: int, power: int) -> tuple:
    e = [0] * N
    e[k] = power
    return tuple(e)


def _series_mul(a: list, b: list, d: int) -> list:
    out = [MultiPoly.zero(a[0].variables) for _ in range(d + 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if i + j > d:
                break
            if y:
                out[i + j] = out[i + j] + x * y
    return out
