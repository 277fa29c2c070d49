"""Exact arithmetic in Q(q), the field of rational functions in one variable.

Two types live here. :class:`IntPoly` is an integer polynomial stored as an
ascending tuple of coefficients with no trailing zeros (the zero polynomial is
the empty tuple). :class:`Scalar` is a fraction ``num/den`` of two IntPolys
kept in a canonical form:

* the fraction is reduced (gcd over Q of num and den is a constant),
* the integer contents of num and den are coprime,
* the leading coefficient of den is positive.

With that form, equality is structural and scalars are hashable.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["IntPoly", "Scalar", "PoleError", "q", "as_scalar"]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self._c = _trim(int(x) for x in coeffs)
        self._hash = None

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> IntPoly:
        if not terms:
            return cls()
        if any(e < 0 for e in terms):
            raise ValueError("negative exponent in polynomial term map")
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(c)

    @classmethod
    def const(cls, n: int) -> IntPoly:
        return cls((n,))

    @property
    def coeffs(self) -> dict[int, int]:
        """Sparse view: exponent -> nonzero coefficient."""
        return {e: v for e, v in enumerate(self._c) if v}

    @property
    def dense(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1  # -1 for zero

    @property
    def lead(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def content(self) -> int:
        return math.gcd(*self._c) if self._c else 0

    def primitive(self) -> IntPoly:
        """Divide by the content, normalising the leading coefficient to be positive."""
        if not self._c:
            return self
        g = self.content()
        if self._c[-1] < 0:
            g = -g
        return IntPoly(x // g for x in self._c)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == _trim((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPoly", self._c))
        return self._hash

    def __repr__(self):
        return f"IntPoly({list(self._c)!r})"

    def __neg__(self):
        return IntPoly(-x for x in self._c)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self._c, other._c
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    def scale(self, k: int) -> IntPoly:
        return IntPoly(k * x for x in self._c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def _divmod_int(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        # Integer long division; raises if a quotient coefficient is not integral.
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        d = other._c
        lead = d[-1]
        dq = len(r) - len(d)
        if dq < 0:
            return IntPoly(), self
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = r[k + len(d) - 1]
            if c == 0:
                continue
            t, rem = divmod(c, lead)
            if rem:
                raise ArithmeticError("inexact integer polynomial division")
            quo[k] = t
            for i, y in enumerate(d):
                r[k + i] -= t * y
        return IntPoly(quo), IntPoly(r)

    def exact_div(self, other: IntPoly) -> IntPoly:
        quo, rem = self._divmod_int(other)
        if not rem.is_zero():
            raise ArithmeticError("polynomial does not divide exactly")
        return quo

    def pseudo_rem(self, other: IntPoly) -> IntPoly:
        """Remainder of lead(other)^k * self by other, with k = deg self - deg other + 1."""
        r = list(self._c)
        d = other._c
        n = len(d)
        lead = d[-1]
        while len(r) >= n:
            c = r[-1]
            shift = len(r) - n
            r = [lead * x for x in r]
            for i, y in enumerate(d):
                r[shift + i] -= c * y
            r = list(_trim(r))
        return IntPoly(r)

    def divides(self, other: IntPoly) -> bool:
        """True when self divides other in Q[q]."""
        if self.is_zero():
            return other.is_zero()
        return other.pseudo_rem(self).is_zero()

    def to_text(self, latex: bool = False) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in range(len(self._c) - 1, -1, -1):
            c = self._c[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else (f"q^{{{e}}}" if latex else f"q^{e}")
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.to_text()


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[q] (equivalently, the gcd over Q up to a constant)."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        if b.degree == 0:
            return IntPoly.const(1)
        a, b = b, a.pseudo_rem(b).primitive()
    return a.primitive()


_ONE = IntPoly.const(1)
_ZERO = IntPoly()
ScalarLike = Union["Scalar", int, Fraction, IntPoly]


class Scalar:
    """An element of Q(q) in canonical reduced form. Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: IntPoly | int = _ZERO, den: IntPoly | int = _ONE, *, _canonical=False):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if isinstance(den, int):
            den = IntPoly.const(den)
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> Scalar:
        return cls(num, den, _canonical=True)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> Scalar:
        x = Fraction(x)
        return cls._raw(IntPoly.const(x.numerator), IntPoly.const(x.denominator))

    @classmethod
    def from_json(cls, text: str | Mapping) -> Scalar:
        obj = json.loads(text) if isinstance(text, str) else text
        num = IntPoly.from_terms({int(k): int(v) for k, v in obj["num"].items()})
        den = IntPoly.from_terms({int(k): int(v) for k, v in obj["den"].items()})
        return cls(num, den)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_localized(self) -> bool:
        """Denominator only has the irreducible factors q, q - 1 and q + 1."""
        d = self.den
        for atom in (IntPoly((0, 1)), IntPoly((-1, 1)), IntPoly((1, 1))):
            while d.degree > 0:
                quo, rem = d._divmod_int(atom)
                if not rem.is_zero():
                    break
                d = quo
        return d.is_constant()

    def as_polynomial(self) -> IntPoly:
        """The numerator when the denominator is 1; raises otherwise."""
        if self.den != _ONE:
            raise ValueError(f"not an integer polynomial: {self}")
        return self.num

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den == _ONE and other.den == _ONE:
            return Scalar._raw(self.num * other.num, _ONE)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation and rendering -----------------------------------------

    def eval_at(self, n: int | Fraction) -> Fraction:
        d = self.den(n)
        if d == 0:
            raise PoleError(f"denominator of {self} vanishes at q = {n}")
        return Fraction(self.num(n)) / Fraction(d)

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            if self.den == _ONE:
                return self.num.to_text()
            return f"({self.num.to_text()}) / ({self.den.to_text()})"
        if fmt == "latex":
            if self.den == _ONE:
                return self.num.to_text(latex=True)
            return f"\\frac{{{self.num.to_text(latex=True)}}}{{{self.den.to_text(latex=True)}}}"
        if fmt == "json":
            return json.dumps(self.to_json(), separators=(",", ":"))
        raise ValueError(f"unknown format {fmt!r}; expected text, latex or json")

    def to_json(self) -> dict:
        return {
            "num": {str(e): c for e, c in self.num.coeffs.items()},
            "den": {str(e): c for e, c in self.den.coeffs.items()},
        }

    def __str__(self):
        return self.render("text")

    def __repr__(self):
        return f"Scalar({self.render('text')!r})"


def _canonicalize(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    if den.is_zero():
        raise ZeroDivisionError("scalar with zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    c = math.gcd(num.content(), den.content())
    if den.lead < 0:
        c = -c
    if c != 1:
        num = IntPoly(x // c for x in num.dense)
        den = IntPoly(x // c for x in den.dense)
    return num, den


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar._raw(IntPoly.const(x), _ONE)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    if isinstance(x, IntPoly):
        return Scalar._raw(x, _ONE)
    return NotImplemented


def as_scalar(x: ScalarLike) -> Scalar:
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {type(x).__name__} as a Scalar")
    return s


ZERO = Scalar()
ONE = Scalar(1)
q = Scalar._raw(IntPoly((0, 1)), _ONE)
"""The Lefschetz motif, the class of the affine line."""
