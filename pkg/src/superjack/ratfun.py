"""Exact arithmetic in Q and in the field Q(theta).

Polynomials in theta are ``flint.fmpq_poly`` objects (dense, rational
coefficients, lowest power first).  :class:`RatFun` keeps every element in
a canonical reduced form: ``gcd(num, den) == 1``, ``den`` monic, and zero is
``0/1``.  Equality is therefore structural.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from flint import fmpq, fmpq_poly

from .errors import DivisionByZero, InvalidInput, PoleAtTheta

__all__ = [
    "ThetaPoly",
    "RatFun",
    "THETA",
    "ONE",
    "ZERO",
    "as_ratfun",
    "field_ops",
    "evaluate_at",
    "poly_gcd",
    "to_fmpq",
]

ThetaPoly = fmpq_poly

_PZERO = fmpq_poly([])
_PONE = fmpq_poly([1])


def to_fmpq(value) -> fmpq:
    """Coerce an int, Fraction, fmpq or ``"p/q"`` string to ``fmpq``."""
    if isinstance(value, fmpq):
        return value
    if isinstance(value, int):
        return fmpq(value)
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Rational):
        return fmpq(int(value.numerator), int(value.denominator))
    raise InvalidInput(f"not a rational number: {value!r}")


def _fraction(q: fmpq) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def _as_poly(value) -> fmpq_poly:
    if isinstance(value, fmpq_poly):
        return value
    if isinstance(value, (list, tuple)):
        return fmpq_poly([to_fmpq(c) for c in value])
    return fmpq_poly([to_fmpq(value)])


def _canonical(num: fmpq_poly, den: fmpq_poly):
    if num.is_zero():
        return _PZERO, _PONE
    if den.degree() == 0:
        c = den[0]
        if c == 1:
            return num, _PONE
        return num / c, _PONE
    g = num.gcd(den)
    if g.degree() > 0:
        num = num // g
        den = den // g
    lc = den[den.degree()]
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def _reverse(p: fmpq_poly) -> fmpq_poly:
    return fmpq_poly(p.coeffs()[::-1])


class RatFun:
    """An element of Q(theta) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        n = _as_poly(num)
        d = _as_poly(den)
        if d.is_zero():
            raise DivisionByZero("zero denominator")
        self.num, self.den = _canonical(n, d)

    @classmethod
    def _raw(cls, num: fmpq_poly, den: fmpq_poly) -> "RatFun":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def _make(cls, num: fmpq_poly, den: fmpq_poly) -> "RatFun":
        n, d = _canonical(num, den)
        return cls._raw(n, d)

    @classmethod
    def constant(cls, value) -> "RatFun":
        return cls._raw(fmpq_poly([to_fmpq(value)]) if value else _PZERO, _PONE)

    # -- predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def is_constant(self) -> bool:
        return self.den.degree() == 0 and self.num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise InvalidInput(f"{self} depends on theta")
        return _fraction(self.num[0]) if not self.num.is_zero() else Fraction(0)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RatFun):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if self.den == other.den:
            if self.den.degree() == 0:
                return RatFun._raw(self.num + other.num, _PONE)
            return RatFun._make(self.num + other.num, self.den)
        return RatFun._make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, RatFun):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFun):
            if isinstance(other, (int, Fraction, fmpq)):
                if not other:
                    return ZERO
                return RatFun._raw(self.num * to_fmpq(other), self.den)
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if self.den.degree() == 0 and other.den.degree() == 0:
            return RatFun._raw(self.num * other.num, _PONE)
        return RatFun._make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RatFun):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if not other:
            raise DivisionByZero(f"division of {self} by zero")
        return RatFun._make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self:
                raise DivisionByZero("zero to a negative power")
            return RatFun._raw(self.den ** (-k), _PONE) / RatFun._raw(self.num ** (-k), _PONE)
        return RatFun._raw(self.num**k, self.den**k)

    def inverse(self) -> "RatFun":
        return ONE / self

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num.coeffs()), tuple(self.den.coeffs())))

    # -- theta manipulations ---------------------------------------------
    def evaluate(self, t) -> Fraction:
        t = to_fmpq(t)
        d = self.den(t)
        if d == 0:
            raise PoleAtTheta(f"{self} has a pole at theta={_fraction(t)}")
        return _fraction(self.num(t) / d)

    def subs_reciprocal(self) -> "RatFun":
        """Return f(1/theta)."""
        if self.is_constant():
            return self
        dn = max(self.num.degree(), 0)
        dd = self.den.degree()
        num = _reverse(self.num)
        den = _reverse(self.den)
        shift = fmpq_poly([0] * abs(dd - dn) + [1])
        if dd >= dn:
            num = num * shift
        else:
            den = den * shift
        return RatFun._make(num, den)

    # -- formatting -------------------------------------------------------
    def to_str(self, symbol: str = "θ") -> str:
        n = _poly_str(self.num, symbol)
        if self.den.degree() == 0:
            return n
        d = _poly_str(self.den, symbol)
        if _n_terms(self.num) > 1:
            n = f"({n})"
        if _n_terms(self.den) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFun({self.to_str('t')!r})"

    def to_json(self) -> dict:
        return {"num": _coeff_strings(self.num), "den": _coeff_strings(self.den)}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFun":
        try:
            return cls([Fraction(c) for c in obj["num"]], [Fraction(c) for c in obj["den"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed RatFun JSON: {obj!r}") from exc


def _coeff_strings(p: fmpq_poly) -> list[str]:
    cs = p.coeffs()
    return [str(c) for c in cs] if cs else ["0"]


def _n_terms(p: fmpq_poly) -> int:
    return sum(1 for c in p.coeffs() if c != 0)


def _poly_str(p: fmpq_poly, symbol: str) -> str:
    cs = p.coeffs()
    if not cs:
        return "0"
    parts = []
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = str(a)
        else:
            mono = symbol if k == 1 else f"{symbol}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _coerce(value):
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (int, Fraction, fmpq)):
        return RatFun.constant(value)
    if isinstance(value, fmpq_poly):
        return RatFun._raw(value, _PONE)
    return NotImplemented


def as_ratfun(value) -> RatFun:
    out = _coerce(value)
    if out is NotImplemented:
        raise InvalidInput(f"cannot interpret {value!r} as an element of Q(theta)")
    return out


ZERO = RatFun._raw(_PZERO, _PONE)
ONE = RatFun._raw(_PONE, _PONE)
THETA = RatFun._raw(fmpq_poly([0, 1]), _PONE)


def field_ops(a: RatFun, b: RatFun, op: str) -> RatFun:
    a, b = as_ratfun(a), as_ratfun(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InvalidInput(f"unknown field operation {op!r}")


def evaluate_at(f: RatFun, t) -> Fraction:
    return as_ratfun(f).evaluate(t)


def poly_gcd(a: fmpq_poly, b: fmpq_poly) -> fmpq_poly:
    """Monic gcd of two polynomials in theta."""
    a, b = _as_poly(a), _as_poly(b)
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd(0, 0) is undefined")
    return a.gcd(b)
