"""Sparse multivariate polynomials with coefficients in Q(theta).

Terms live in a dict ``exponent tuple -> coefficient``.  Coefficients are
normally :class:`RatFun`, but plain ints and Fractions work too, which the
integer kernels use to stay fast.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Mapping, Sequence

from .errors import InvalidInput, InvariantViolation
from .ratfun import ONE, ZERO, RatFun, as_ratfun

__all__ = ["MultiPoly", "z_vars", "xy_vars"]


def z_vars(N: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, N + 1))


def xy_vars(n: int, m: int) -> tuple[str, ...]:
    return z_vars(n, "x") + z_vars(m, "y")


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        self.variables = tuple(variables)
        k = len(self.variables)
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != k:
                    raise InvalidInput(f"exponent {e} does not match {k} variables")
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables, terms):
        obj = object.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, c=ONE) -> "MultiPoly":
        variables = tuple(variables)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, variables, name_or_index, c=ONE) -> "MultiPoly":
        variables = tuple(variables)
        k = name_or_index if isinstance(name_or_index, int) else variables.index(name_or_index)
        e = [0] * len(variables)
        e[k] = 1
        return cls._raw(variables, {tuple(e): c})

    @classmethod
    def monomial(cls, variables, exponent, c=ONE) -> "MultiPoly":
        return cls(variables, {tuple(exponent): c})

    # -- basic protocol ---------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if self.variables != other.variables:
                if not self.terms and not other.terms:
                    return True
                return False
            if len(self.terms) != len(other.terms):
                return False
            for e, c in self.terms.items():
                d = other.terms.get(e)
                if d is None or not (c == d):
                    return False
            return True
        if not self.terms:
            return not other
        if len(self.terms) == 1:
            e, c = next(iter(self.terms.items()))
            return not any(e) and c == other
        return False

    __hash__ = None

    def coefficient(self, exponent) -> object:
        return self.terms.get(tuple(exponent), ZERO)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise InvalidInput(f"variable mismatch: {self.variables} vs {other.variables}")

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.variables, as_ratfun(other))
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            d = out.get(e)
            if d is None:
                out[e] = c
            else:
                s = d + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.variables, as_ratfun(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        if not c:
            return MultiPoly._raw(self.variables, {})
        out = {}
        for e, d in self.terms.items():
            p = d * c
            if p:
                out[e] = p
        return MultiPoly._raw(self.variables, out)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        acc: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                d = acc.get(e)
                acc[e] = p if d is None else d + p
        return MultiPoly._raw(self.variables, {e: c for e, c in acc.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInput("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus and substitutions ---------------------------------------
    def map_coeffs(self, fn: Callable) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            d = fn(c)
            if d:
                out[e] = d
        return MultiPoly._raw(self.variables, out)

    def euler(self, k: int) -> "MultiPoly":
        """x_k d/dx_k."""
        return MultiPoly._raw(self.variables, {e: c * e[k] for e, c in self.terms.items() if e[k]})

    def derivative(self, k: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * e[k]
        return MultiPoly._raw(self.variables, out)

    def swap(self, i: int, j: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            out[tuple(f)] = c
        return MultiPoly._raw(self.variables, out)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Variable k of the result carries exponent of variable perm[k]."""
        return MultiPoly._raw(
            self.variables, {tuple(e[p] for p in perm): c for e, c in self.terms.items()}
        )

    def restrict_zero(self, k: int) -> "MultiPoly":
        """Set variable k to zero and drop it from the variable list."""
        vars_ = self.variables[:k] + self.variables[k + 1 :]
        return MultiPoly._raw(vars_, {e[:k] + e[k + 1 :]: c for e, c in self.terms.items() if e[k] == 0})

    def set_equal(self, a: int, b: int) -> "MultiPoly":
        """Substitute x_a -> x_b (variable a stays in the list with exponent 0)."""
        acc: dict = {}
        for e, c in self.terms.items():
            f = list(e)
            f[b] += f[a]
            f[a] = 0
            f = tuple(f)
            d = acc.get(f)
            acc[f] = c if d is None else d + c
        return MultiPoly._raw(self.variables, {e: c for e, c in acc.items() if c})

    def divided_difference(self, i: int, j: int) -> "MultiPoly":
        """(f - s_ij f) / (x_i - x_j), computed termwise (always exact)."""
        acc: dict = {}
        for e, c in self.terms.items():
            a, b = e[i], e[j]
            if a == b:
                continue
            # x_i^a x_j^b - x_i^b x_j^a = sign * (x_i x_j)^lo (x_i^D - x_j^D)
            lo, D = (b, a - b) if a > b else (a, b - a)
            cc = c if a > b else -c
            base = list(e)
            for k in range(D):
                base[i] = lo + k
                base[j] = lo + D - 1 - k
                f = tuple(base)
                d = acc.get(f)
                acc[f] = cc if d is None else d + cc
        return MultiPoly._raw(self.variables, {e: c for e, c in acc.items() if c})

    def exact_divide_linear(self, a: int, b: int) -> "MultiPoly":
        """Divide by (x_a - x_b); raise InvariantViolation if not divisible."""
        if self.set_equal(a, b):
            raise InvariantViolation(
                f"polynomial is not divisible by {self.variables[a]} - {self.variables[b]}"
            )
        acc: dict = {}
        for e, c in self.terms.items():
            p = e[a]
            if p == 0:
                continue
            # (x_a^p - x_b^p) / (x_a - x_b) times the rest
            base = list(e)
            q = e[b]
            for k in range(p):
                base[a] = k
                base[b] = q + p - 1 - k
                f = tuple(base)
                d = acc.get(f)
                acc[f] = c if d is None else d + c
        return MultiPoly._raw(self.variables, {e: c for e, c in acc.items() if c})

    def evaluate(self, point: Sequence) -> RatFun:
        if len(point) != self.nvars:
            raise InvalidInput(f"expected {self.nvars} coordinates, got {len(point)}")
        pts = [as_ratfun(v) for v in point]
        powers: list[dict] = [{0: ONE} for _ in pts]
        total = ZERO
        for e, c in self.terms.items():
            t = as_ratfun(c)
            for k, x in enumerate(e):
                if x:
                    pw = powers[k].get(x)
                    if pw is None:
                        pw = pts[k] ** x
                        powers[k][x] = pw
                    t = t * pw
            total = total + t
        return total

    def substitute(self, images: Sequence["MultiPoly"], variables: Sequence[str] | None = None) -> "MultiPoly":
        """Compose: variable k is replaced by ``images[k]`` (all in one ring)."""
        if len(images) != self.nvars:
            raise InvalidInput("one image per variable is required")
        target = tuple(variables) if variables is not None else images[0].variables if images else ()
        cache: list[dict] = [{0: MultiPoly.constant(target, ONE)} for _ in images]

        def power(k, x):
            got = cache[k].get(x)
            if got is None:
                got = power(k, x - 1) * images[k]
                cache[k][x] = got
            return got

        total = MultiPoly.zero(target)
        for e, c in self.terms.items():
            t = MultiPoly.constant(target, c)
            for k, x in enumerate(e):
                if x:
                    t = t * power(k, x)
            total = total + t
        return total

    def rename(self, variables: Sequence[str]) -> "MultiPoly":
        if len(variables) != self.nvars:
            raise InvalidInput("renaming must keep the number of variables")
        return MultiPoly._raw(tuple(variables), dict(self.terms))

    def embed(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express in a larger variable list (by name)."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(variables)
            for k, x in zip(idx, e):
                f[k] = x
            out[tuple(f)] = c
        return MultiPoly._raw(variables, out)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: c for e, c in self.terms.items() if sum(e) == d})

    def top_part(self) -> "MultiPoly":
        return self.homogeneous_part(self.degree())

    def is_symmetric(self, indices: Iterable[int] | None = None) -> bool:
        idx = list(range(self.nvars)) if indices is None else list(indices)
        return all(self.swap(idx[k], idx[k + 1]) == self for k in range(len(idx) - 1))

    # -- output -----------------------------------------------------------
    def sorted_terms(self) -> list:
        """Terms by decreasing total degree, then decreasing lex exponent."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def to_str(self, symbol: str = "θ") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x
            )
            c = as_ratfun(c)
            if not mono:
                body = c.to_str(symbol)
                body = f"({body})" if _needs_paren(c) else body
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                s = c.to_str(symbol)
                body = f"({s})*{mono}" if _needs_paren(c) else f"{s}*{mono}"
            if parts:
                body = f" - {body[1:]}" if body.startswith("-") else f" + {body}"
            parts.append(body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.variables}, {self.to_str('t')})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [
                {"exponents": list(e), "coeff": as_ratfun(c).to_json()} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MultiPoly":
        try:
            variables = obj["variables"]
            terms = {tuple(t["exponents"]): RatFun.from_json(t["coeff"]) for t in obj["terms"]}
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed MultiPoly JSON: {obj!r}") from exc
        return cls(variables, terms)


def _needs_paren(c: RatFun) -> bool:
    s = c.to_str()
    return any(ch in s for ch in "+/") or (s.count("-") > (1 if s.startswith("-") else 0))


def sum_polys(polys: Iterable[MultiPoly], variables) -> MultiPoly:
    """Sum many polynomials with one accumulator (cheaper than repeated +)."""
    acc: dict = defaultdict(lambda: None)
    acc = {}
    for p in polys:
        for e, c in p.terms.items():
            d = acc.get(e)
            acc[e] = c if d is None else d + c
    return MultiPoly._raw(tuple(variables), {e: c for e, c in acc.items() if c})
