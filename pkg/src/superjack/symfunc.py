"""The ring of symmetric functions, truncated by degree.

Elements carry a basis tag (``m``, ``p``, ``e``, ``h`` or ``jack``) and a
sparse map from partitions to coefficients in Q(theta).  All conversions
route through the power-sum basis, where products are concatenation and the
automorphisms omega_theta and sigma_theta are diagonal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .errors import InvalidInput, UnsupportedHere
from .partitions import Partition, make_partition, partitions_of, revlex_key
from .polys import MultiPoly, z_vars
from .ratfun import ONE, THETA, ZERO, RatFun, as_ratfun

__all__ = [
    "BASES",
    "SymFn",
    "basis_convert",
    "multiply",
    "expand_in_variables",
    "collect_symmetric",
    "omega_theta",
    "sigma_theta",
    "z_lambda",
    "distinct_permutations",
]

BASES = ("m", "p", "e", "h", "jack")


class SymFn:
    """A symmetric function known exactly through ``degree``."""

    __slots__ = ("basis", "terms", "degree")

    def __init__(self, basis: str, terms: Mapping | None = None, degree: int | None = None):
        if basis not in BASES:
            raise InvalidInput(f"unknown basis {basis!r}")
        clean: dict = {}
        for lam, c in (terms or {}).items():
            lam = make_partition(lam)
            c = as_ratfun(c)
            if c:
                clean[lam] = clean.get(lam, ZERO) + c
                if not clean[lam]:
                    del clean[lam]
        top = max((sum(l) for l in clean), default=0)
        if degree is not None and top > degree:
            raise InvalidInput(f"term of weight {top} exceeds truncation degree {degree}")
        self.basis = basis
        self.terms = clean
        # None: an exact polynomial, not a truncation
        self.degree = None if degree is None else int(degree)

    @classmethod
    def _raw(cls, basis, terms, degree):
        obj = object.__new__(cls)
        obj.basis, obj.terms, obj.degree = basis, terms, degree
        return obj

    @classmethod
    def unit(cls, basis: str, lam: Iterable[int], degree: int | None = None, coeff=ONE) -> "SymFn":
        return cls(basis, {make_partition(lam): coeff}, degree)

    @classmethod
    def one(cls, degree: int | None = None, basis: str = "p") -> "SymFn":
        return cls(basis, {(): ONE}, degree)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> RatFun:
        return self.terms.get(tuple(lam), ZERO)

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=revlex_key)

    def in_basis(self, basis: str) -> "SymFn":
        return basis_convert(self, basis)

    def with_degree(self, degree: int) -> "SymFn":
        return SymFn._raw(self.basis, {l: c for l, c in self.terms.items() if sum(l) <= degree}, degree)

    # -- linear structure -------------------------------------------------
    def _aligned(self, other: "SymFn"):
        if other.basis != self.basis:
            other = basis_convert(other, self.basis)
        return other, _min_degree(self.degree, other.degree)

    def __add__(self, other):
        if not isinstance(other, SymFn):
            other = SymFn(self.basis, {(): as_ratfun(other)}, self.degree)
        other, deg = self._aligned(other)
        out = {l: c for l, c in self.terms.items() if _fits(l, deg)}
        for l, c in other.terms.items():
            if not _fits(l, deg):
                continue
            s = out.get(l, ZERO) + c
            if s:
                out[l] = s
            else:
                out.pop(l, None)
        return SymFn._raw(self.basis, out, deg)

    __radd__ = __add__

    def __neg__(self):
        return SymFn._raw(self.basis, {l: -c for l, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFn":
        c = as_ratfun(c)
        if not c:
            return SymFn._raw(self.basis, {}, self.degree)
        return SymFn._raw(self.basis, {l: v * c for l, v in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, SymFn):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFn):
            if not self.terms:
                return not other
            return NotImplemented
        if other.basis != self.basis:
            other = basis_convert(other, self.basis)
        return self.terms == other.terms

    __hash__ = None

    def map_coeffs(self, fn) -> "SymFn":
        out = {}
        for l, c in self.terms.items():
            d = fn(c)
            if d:
                out[l] = d
        return SymFn._raw(self.basis, out, self.degree)

    def specialize(self, t) -> dict:
        """Coefficients evaluated at theta = t (PoleAtTheta on a pole)."""
        return {l: c.evaluate(t) for l, c in self.terms.items()}

    # -- output -----------------------------------------------------------
    def to_str(self, symbol: str = "θ") -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam in sorted(self.terms, key=revlex_key):
            c = self.terms[lam]
            label = f"{self.basis}[{','.join(map(str, lam))}]"
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append("-" + label)
            else:
                s = c.to_str(symbol)
                if not c.is_constant() or "/" in s:
                    s = f"({s})"
                parts.append(f"{s}*{label}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"SymFn({self.basis!r}, {self.to_str('t')}, degree={self.degree})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(l), "coeff": self.terms[l].to_json()}
                for l in sorted(self.terms, key=revlex_key)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SymFn":
        try:
            terms = {tuple(t["partition"]): RatFun.from_json(t["coeff"]) for t in obj["terms"]}
            return cls(obj["basis"], terms, obj["degree"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed SymFn JSON: {obj!r}") from exc


def _fits(lam, deg) -> bool:
    return deg is None or sum(lam) <= deg


def _min_degree(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# ---------------------------------------------------------------------------
# change-of-basis matrices (rational, cached per weight)

def _multiplicities(lam: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in lam:
        out[x] = out.get(x, 0) + 1
    return out


def z_lambda(lam: Partition) -> int:
    z = 1
    for part, k in _multiplicities(lam).items():
        z *= part**k * factorial(k)
    return z


@lru_cache(maxsize=None)
def _pr_times_m(r: int, mu: Partition) -> tuple:
    """p_r * m_mu in the m-basis, as ((nu, int), ...)."""
    out: dict = {}
    values = set(mu) | {0}
    for v in values:
        nu = list(mu)
        if v == 0:
            nu.append(r)
        else:
            nu[nu.index(v)] = v + r
        nu = tuple(sorted(nu, reverse=True))
        out[nu] = out.get(nu, 0) + _multiplicities(nu)[v + r]
    return tuple(out.items())


@lru_cache(maxsize=None)
def _p_in_m(lam: Partition) -> dict:
    """p_lam expanded in monomials (integer coefficients)."""
    if not lam:
        return {(): 1}
    prev = _p_in_m(lam[1:])
    out: dict = {}
    for mu, c in prev.items():
        for nu, k in _pr_times_m(lam[0], mu):
            out[nu] = out.get(nu, 0) + c * k
    return {k: v for k, v in out.items() if v}


def _sign(lam: Partition) -> int:
    return -1 if (sum(lam) - len(lam)) % 2 else 1


@lru_cache(maxsize=None)
def _single_in_p(kind: str, n: int) -> dict:
    """e_n or h_n in the power-sum basis."""
    return {
        lam: Fraction(_sign(lam) if kind == "e" else 1, z_lambda(lam)) for lam in partitions_of(n)
    }


@lru_cache(maxsize=None)
def _product_in_p(kind: str, lam: Partition) -> dict:
    out = {(): Fraction(1)}
    for part in lam:
        single = _single_in_p(kind, part)
        nxt: dict = {}
        for a, c in out.items():
            for b, d in single.items():
                nu = tuple(sorted(a + b, reverse=True))
                nxt[nu] = nxt.get(nu, 0) + c * d
        out = nxt
    return {k: v for k, v in out.items() if v}


def _invert(rows: dict, order: tuple) -> dict:
    """Invert a square rational matrix given as rows[label] = {label: value}."""
    n = len(order)
    index = {lab: i for i, lab in enumerate(order)}
    aug = []
    for i, lab in enumerate(order):
        row = [Fraction(0)] * (2 * n)
        for col, v in rows[lab].items():
            row[index[col]] = Fraction(v)
        row[n + i] = Fraction(1)
        aug.append(row)
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return {
        order[i]: {order[j]: aug[i][n + j] for j in range(n) if aug[i][n + j] != 0} for i in range(n)
    }


@lru_cache(maxsize=None)
def _to_p_rows(basis: str, k: int) -> dict:
    """Rows: basis element of weight k -> {p-partition: Fraction}."""
    order = partitions_of(k)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in order}
    if basis in ("e", "h"):
        return {lam: _product_in_p(basis, lam) for lam in order}
    if basis == "m":
        return _invert({lam: _p_in_m(lam) for lam in order}, order)
    raise UnsupportedHere(f"no rational change of basis for {basis!r}")


@lru_cache(maxsize=None)
def _from_p_rows(basis: str, k: int) -> dict:
    """Rows: p_lam of weight k -> {target partition: Fraction}."""
    order = partitions_of(k)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in order}
    if basis == "m":
        return {lam: {mu: Fraction(c) for mu, c in _p_in_m(lam).items()} for lam in order}
    return _invert(_to_p_rows(basis, k), order)


def _apply_rows(terms: dict, rows_for) -> dict:
    out: dict = {}
    for lam, c in terms.items():
        for mu, v in rows_for(sum(lam))[lam].items():
            s = out.get(mu, ZERO) + c * v
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
    return out


def basis_convert(f: SymFn, target: str) -> SymFn:
    """Re-express ``f`` in ``target``; the Jack basis is delegated to cms."""
    if target not in BASES:
        raise InvalidInput(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if "jack" in (f.basis, target):
        from . import cms

        return cms.jack_basis_convert(f, target)
    terms = f.terms
    if f.basis != "p":
        terms = _apply_rows(terms, lambda k: _to_p_rows(f.basis, k))
    if target != "p":
        terms = _apply_rows(terms, lambda k: _from_p_rows(target, k))
    return SymFn._raw(target, terms, f.degree)


def multiply(f: SymFn, g: SymFn) -> SymFn:
    """Product, truncated to the smaller degree, in the basis of ``f``."""
    deg = _min_degree(f.degree, g.degree)
    basis = f.basis
    if basis == "jack":
        basis = "m"
    a, b = basis_convert(f, "p"), basis_convert(g, "p")
    out: dict = {}
    for l1, c1 in a.terms.items():
        w = sum(l1)
        for l2, c2 in b.terms.items():
            if deg is not None and w + sum(l2) > deg:
                continue
            nu = tuple(sorted(l1 + l2, reverse=True))
            s = out.get(nu, ZERO) + c1 * c2
            if s:
                out[nu] = s
            else:
                out.pop(nu, None)
    prod = SymFn._raw("p", out, deg)
    return basis_convert(prod, f.basis)


# ---------------------------------------------------------------------------
# concrete variables

def distinct_permutations(seq) -> Iterator[tuple]:
    """Distinct permutations of ``seq`` (multiset aware)."""
    items = sorted(seq, reverse=True)
    n = len(items)
    if n == 0:
        yield ()
        return
    counts: dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = list(counts)
    cur: list = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    yield from rec()


@lru_cache(maxsize=None)
def _monomial_exponents(lam: Partition, N: int) -> tuple:
    if len(lam) > N:
        return ()
    return tuple(distinct_permutations(lam + (0,) * (N - len(lam))))


def expand_in_variables(f: SymFn, N: int, variables=None) -> MultiPoly:
    """Image of ``f`` in N concrete variables (x1..xN by default)."""
    if N < 0:
        raise InvalidInput("N must be non-negative")
    variables = tuple(variables) if variables is not None else z_vars(N)
    if len(variables) != N:
        raise InvalidInput("need exactly N variable names")
    g = basis_convert(f, "m")
    out: dict = {}
    for lam, c in g.terms.items():
        for e in _monomial_exponents(lam, N):
            out[e] = c
    return MultiPoly._raw(variables, out)


def collect_symmetric(poly: MultiPoly, degree: int | None = None, check: bool = True) -> SymFn:
    """Read a symmetric polynomial back into the m-basis."""
    if check and not poly.is_symmetric():
        from .errors import InvariantViolation

        raise InvariantViolation("polynomial is not symmetric")
    terms = {}
    for e, c in poly.terms.items():
        if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            terms[make_partition(e)] = as_ratfun(c)
    return SymFn("m", terms, degree)


# ---------------------------------------------------------------------------
# automorphisms diagonal in the power sums

def _diagonal(f: SymFn, factor) -> SymFn:
    g = basis_convert(f, "p")
    out = {}
    for lam, c in g.terms.items():
        w = ONE
        for r in lam:
            w = w * factor(r)
        out[lam] = c * w
    return basis_convert(SymFn._raw("p", out, f.degree), f.basis)


def omega_theta(f: SymFn, param: RatFun = THETA) -> SymFn:
    """p_r -> (-1)^(r-1) * param * p_r, extended multiplicatively."""
    return _diagonal(f, lambda r: param if r % 2 else -param)


def sigma_theta(f: SymFn, param: RatFun = THETA) -> SymFn:
    """p_r -> -p_r / param, extended multiplicatively."""
    inv = -as_ratfun(param).inverse()
    return _diagonal(f, lambda r: inv)
