"""Exact Laurent polynomials in ``q`` over the rationals, and q-integers.

Every scalar in the package is a :class:`LaurentPoly`.  Values are immutable
and canonical (no stored zero coefficients), so ``==`` is coefficient-wise
equality and instances are hashable.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a nonzero remainder."""


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # c is already canonical
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def const(cls, value: Scalar) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        return NotImplemented

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, Fraction]]:
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return sorted(self._c.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return min(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def eval_at_one(self) -> Fraction:
        return sum(self._c.values(), Fraction(0))

    def bar(self) -> "LaurentPoly":
        """The image under q -> q^-1."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def subs_power(self, d: int) -> "LaurentPoly":
        """The image under q -> q^d (d != 0)."""
        if d == 0:
            raise ValueError("q -> q^0 is not an injective substitution")
        return LaurentPoly._raw({d * e: v for e, v in self._c.items()})

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise InexactDivisionError(f"{self} is not a unit")
            (e, v), = self._c.items()
            return LaurentPoly._raw({e * n: Fraction(1) / v ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises on a nonzero remainder."""
        other = LaurentPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return ZERO
        if other.is_monomial():
            (e, v), = other._c.items()
            return LaurentPoly._raw({k - e: c / v for k, c in self._c.items()})
        # shift both to honest polynomials and do long division over Q
        num = self._c
        den = other._c
        nv, dv = min(num), min(den)
        rem = {e - nv: v for e, v in num.items()}
        d = {e - dv: v for e, v in den.items()}
        ddeg = max(d)
        lead = d[ddeg]
        quot: dict[int, Fraction] = {}
        while rem and max(rem) >= ddeg:
            top = max(rem)
            f = rem[top] / lead
            shift = top - ddeg
            quot[shift] = f
            for e, v in d.items():
                k = e + shift
                s = rem.get(k, 0) - f * v
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        if rem:
            raise InexactDivisionError(f"({self}) / ({other}) leaves a remainder")
        return LaurentPoly._raw({e + nv - dv: v for e, v in quot.items()})

    def __truediv__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self.divmod_exact(other)

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.divmod_exact(self)
        except InexactDivisionError:
            return False
        return True

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self.terms():
            if e == 0:
                term = str(v)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if v == 1:
                    term = mono
                elif v == -1:
                    term = "-" + mono
                else:
                    term = f"{v}*{mono}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(" - " + term[1:])
            else:
                parts.append(" + " + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)

_TERM = re.compile(r"^(?:(?P<coef>\d+(?:/\d+)?)\*)?(?P<q>q(?:\^(?P<exp>-?\d+))?)$|^(?P<const>\d+(?:/\d+)?)$")


def parse_laurent(text: str) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)`` on canonical renderings."""
    s = text.strip()
    if s == "0":
        return ZERO
    # split into signed terms: the canonical form separates terms with ' + ' / ' - '
    tokens = re.split(r"\s+([+-])\s+", s)
    signs = ["+"] + tokens[1::2]
    bodies = tokens[0::2]
    coeffs: dict[int, Fraction] = {}
    for sign, body in zip(signs, bodies):
        neg = sign == "-"
        if body.startswith("-"):
            neg = not neg
            body = body[1:]
        m = _TERM.match(body)
        if not m:
            raise ValueError(f"cannot parse Laurent term {body!r} in {text!r}")
        if m.group("const") is not None:
            e, v = 0, Fraction(m.group("const"))
        else:
            e = int(m.group("exp")) if m.group("exp") is not None else 1
            v = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        coeffs[e] = coeffs.get(e, 0) + (-v if neg else v)
    return LaurentPoly(coeffs)


def qpow(exp: int) -> LaurentPoly:
    return LaurentPoly.monomial(exp)


@lru_cache(maxsize=None)
def qint(m: int, d: int = 1) -> LaurentPoly:
    """The q-integer [m] in the variable q^d, by exact division."""
    if m < 0 or d < 1:
        raise ValueError(f"qint needs m >= 0 and d >= 1, got m={m}, d={d}")
    if m == 0:
        return ZERO
    num = qpow(d * m) - qpow(-d * m)
    den = qpow(d) - qpow(-d)
    return num / den


def qint_signed(m: int, d: int = 1) -> LaurentPoly:
    """[m]_{q^d} for any integer m, using [-m] = -[m]."""
    return qint(m, d) if m >= 0 else -qint(-m, d)


@lru_cache(maxsize=None)
def qfactorial(m: int, d: int = 1) -> LaurentPoly:
    if m < 0:
        raise ValueError("qfactorial of a negative integer")
    out = ONE
    for k in range(1, m + 1):
        out = out * qint(k, d)
    return out


@lru_cache(maxsize=None)
def qbinom(m: int, r: int, d: int = 1) -> LaurentPoly:
    """Gaussian binomial [m choose r] in q^d; the division must be exact."""
    if m < 0 or r < 0 or r > m:
        raise ValueError(f"qbinom needs 0 <= r <= m, got m={m}, r={r}")
    return qfactorial(m, d) / (qfactorial(r, d) * qfactorial(m - r, d))


def eval_at_one(p: LaurentPoly) -> Fraction:
    return p.eval_at_one()


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd up to units q^k; normalised to valuation 0 and leading coefficient 1."""
    def to_poly(p):
        v = p.valuation()
        return {e - v: c for e, c in p._c.items()}

    if not a:
        a, b = b, a
    if not a:
        return ZERO
    if not b:
        x = to_poly(a)
        lead = x[max(x)]
        return LaurentPoly({e: c / lead for e, c in x.items()})
    x, y = to_poly(a), to_poly(b)
    while y:
        # remainder of x by y
        r = dict(x)
        ydeg = max(y)
        ylead = y[ydeg]
        while r and max(r) >= ydeg:
            top = max(r)
            f = r[top] / ylead
            s = top - ydeg
            for e, v in y.items():
                k = e + s
                val = r.get(k, 0) - f * v
                if val:
                    r[k] = val
                else:
                    r.pop(k, None)
        x, y = y, r
    lead = x[max(x)]
    g = {e: c / lead for e, c in x.items()}
    v = min(g)
    return LaurentPoly({e - v: c for e, c in g.items()})


def reduce_fraction(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Cancel the common factor of num/den; the denominator keeps a unit leading coefficient."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return ZERO, ONE
    g = poly_gcd(num, den)
    num, den = num / g, den / g
    # move the unit q^k * c of the denominator into the numerator when possible
    if den.is_monomial():
        return num / den, ONE
    lead = den.terms()[0][1]
    v = den.valuation()
    unit = LaurentPoly.monomial(v, lead)
    return num / unit, den / unit


def lsum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ZERO
    for x in items:
        out = out + x
    return out
