from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Mapping, Union

from sympy import QQ, Poly, Rational, Symbol

from .errors import ParseError


Q_SYMBOL = Symbol("q")

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class LaurentPoly:
    """
    A Laurent polynomial in q with exact rational coefficients.

    ``terms`` is sorted by exponent and never stores a zero coefficient, so
    dataclass equality is equality of polynomials.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, Scalar]) -> LaurentPoly:
        return cls(tuple((e, Fraction(c)) for e, c in sorted(coeffs.items()) if c != 0))

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> LaurentPoly:
        if coeff == 0:
            return ZERO_POLY
        return cls(((exponent, Fraction(coeff)),))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def valuation(self) -> int:
        """Lowest exponent; 0 for the zero polynomial."""
        return self.terms[0][0] if self.terms else 0

    def degree(self) -> int:
        """Highest exponent; 0 for the zero polynomial."""
        return self.terms[-1][0] if self.terms else 0

    def leading_coefficient(self) -> Fraction:
        return self.terms[-1][1] if self.terms else Fraction(0)

    def shift(self, n: int) -> LaurentPoly:
        if n == 0:
            return self
        return LaurentPoly(tuple((e + n, c) for e, c in self.terms))

    def scale(self, c: Scalar) -> LaurentPoly:
        if c == 0:
            return ZERO_POLY
        if c == 1:
            return self
        return LaurentPoly(tuple((e, v * c) for e, v in self.terms))

    def evaluate(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self.terms), Fraction(0))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: LaurentPoly | Scalar) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO_POLY
        if len(other.terms) == 1:
            (e2, c2), = other.terms
            return LaurentPoly(tuple((e + e2, c * c2) for e, c in self.terms))
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    __rmul__ = __mul__

    def to_poly(self) -> Poly:
        """The sympy polynomial q^(-valuation) * self over QQ."""
        val = self.valuation()
        dense = [Fraction(0)] * (self.degree() - val + 1)
        for e, c in self.terms:
            dense[e - val] = c
        return Poly.from_list(
            [Rational(c.numerator, c.denominator) for c in reversed(dense)],
            Q_SYMBOL,
            domain=QQ,
        )

    @classmethod
    def from_poly(cls, poly: Poly) -> LaurentPoly:
        coeffs = poly.all_coeffs()
        top = len(coeffs) - 1
        out: dict[int, Fraction] = {}
        for i, c in enumerate(coeffs):
            out[top - i] = Fraction(int(c.p), int(c.q))
        return cls.from_dict(out)


ZERO_POLY = LaurentPoly()
ONE_POLY = LaurentPoly(((0, Fraction(1)),))


def _primitive_factor(poly: LaurentPoly) -> Fraction:
    """The rational factor making ``poly`` integral, primitive and with positive leading term."""
    den_lcm = 1
    for _, c in poly.terms:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    num_gcd = 0
    for _, c in poly.terms:
        num_gcd = math.gcd(num_gcd, (c * den_lcm).numerator)
    factor = Fraction(den_lcm, num_gcd)
    if poly.leading_coefficient() < 0:
        factor = -factor
    return factor


def _canonical(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return ZERO
    if den.is_monomial():
        (e, c), = den.terms
        return RatFunc(num.shift(-e).scale(1 / c), ONE_POLY)

    vn, vd = num.valuation(), den.valuation()
    p = num.shift(-vn).to_poly()
    d = den.shift(-vd).to_poly()
    g = p.gcd(d)
    if g.degree() > 0:
        p = p.exquo(g)
        d = d.exquo(g)
    num2 = LaurentPoly.from_poly(p).shift(vn - vd)
    den2 = LaurentPoly.from_poly(d)
    if den2.is_monomial():
        # d(0) != 0 survives the gcd, so a single remaining term is a constant
        return RatFunc(num2.scale(1 / den2.terms[0][1]), ONE_POLY)
    factor = _primitive_factor(den2)
    return RatFunc(num2.scale(factor), den2.scale(factor))


@dataclass(frozen=True)
class RatFunc:
    """
    An element of Q(q) in canonical form.

    The denominator has lowest exponent 0, coprime integer coefficients and a
    positive leading coefficient, and shares no factor with the numerator.
    Use ``RatFunc.of`` (or the arithmetic operators) to build values; the raw
    constructor trusts its arguments.
    """

    num: LaurentPoly
    den: LaurentPoly = ONE_POLY

    @classmethod
    def of(cls, num: LaurentPoly, den: LaurentPoly = ONE_POLY) -> RatFunc:
        return _canonical(num, den)

    @classmethod
    def scalar(cls, c: Scalar) -> RatFunc:
        if c == 0:
            return ZERO
        return cls(LaurentPoly.monomial(0, c))

    @classmethod
    def laurent(cls, coeffs: Mapping[int, Scalar]) -> RatFunc:
        return cls(LaurentPoly.from_dict(coeffs))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE_POLY

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def evaluate(self, x: Scalar) -> Fraction:
        return self.num.evaluate(x) / self.den.evaluate(x)

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return _canonical(self.den, self.num)

    def __add__(self, other: RatFunc | Scalar) -> RatFunc:
        other = as_ratfunc(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return RatFunc(self.num + other.num)
        if self.den == other.den:
            return _canonical(self.num + other.num, self.den)
        return _canonical(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: RatFunc | Scalar) -> RatFunc:
        return self + (-as_ratfunc(other))

    def __rsub__(self, other: RatFunc | Scalar) -> RatFunc:
        return as_ratfunc(other) + (-self)

    def __mul__(self, other: RatFunc | Scalar) -> RatFunc:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return RatFunc(self.num.scale(other), self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return RatFunc(self.num * other.num)
        return _canonical(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFunc | Scalar) -> RatFunc:
        return self * as_ratfunc(other).inverse()

    def __rtruediv__(self, other: RatFunc | Scalar) -> RatFunc:
        return as_ratfunc(other) * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc('{format_ratfunc(self)}')"


ZERO = RatFunc(ZERO_POLY)
ONE = RatFunc(ONE_POLY)


def as_ratfunc(value: RatFunc | LaurentPoly | Scalar) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, LaurentPoly):
        return RatFunc(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc.scalar(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to RatFunc")


def add(a: RatFunc, b: RatFunc) -> RatFunc:
    return a + b


def mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return a * b


def q_pow(n: int) -> RatFunc:
    return RatFunc(LaurentPoly.monomial(n))


def is_zero(a: RatFunc) -> bool:
    return a.is_zero()


def canonicalize(a: RatFunc) -> RatFunc:
    return _canonical(a.num, a.den)


# -- textual form -----------------------------------------------------------


def _format_term(c: int, e: int, *, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        power = "q" if e == 1 else f"q^{e}"
        body = power if mag == 1 else f"{mag}*{power}"
    return sign + body


def _format_sum(poly: LaurentPoly) -> str:
    parts = []
    for i, (e, c) in enumerate(reversed(poly.terms)):
        parts.append(_format_term(int(c), e, first=i == 0))
    return "".join(parts)


def format_ratfunc(a: RatFunc) -> str:
    """
    Render ``a`` in the coefficient grammar, e.g. ``q^-3``, ``-q+1``,
    ``(q^2+1)/q`` or ``1/2``. Coefficients are always integers.
    """
    if a.is_zero():
        return "0"
    num, den = a.num, a.den
    if den == ONE_POLY and num.is_monomial() and num.terms[0][1].denominator == 1:
        return _format_sum(num)

    den_lcm = 1
    for _, c in num.terms:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    n = num.scale(den_lcm)
    d = den.scale(den_lcm)
    v = num.valuation()
    if v < 0:
        n = n.shift(-v)
        d = d.shift(-v)
    if d == ONE_POLY:
        return _format_sum(n)

    top = _format_sum(n)
    if not n.is_monomial():
        top = f"({top})"
    bottom = _format_sum(d)
    if not d.is_monomial() or (d.terms[0][0] != 0 and d.terms[0][1] != 1):
        bottom = f"({bottom})"
    return f"{top}/{bottom}"


class _CoeffParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, column=self.pos + 1)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer")
        return int(self.text[start : self.pos])

    def qpower(self) -> int:
        self.expect("q")
        if self.peek() != "^":
            return 1
        self.pos += 1
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        if not self.peek().isdigit():
            raise self.error("expected integer exponent")
        return sign * self.integer()

    def term(self) -> LaurentPoly:
        ch = self.peek()
        if ch == "q":
            return LaurentPoly.monomial(self.qpower())
        if ch.isdigit():
            c = self.integer()
            if self.peek() == "*":
                self.pos += 1
                return LaurentPoly.monomial(self.qpower(), c)
            return LaurentPoly.monomial(0, c)
        raise self.error("expected term")

    def signed_term(self) -> LaurentPoly:
        ch = self.peek()
        if ch in ("+", "-") and ch:
            self.pos += 1
            t = self.term()
            return -t if ch == "-" else t
        return self.term()

    def sum(self) -> LaurentPoly:
        total = self.signed_term()
        while self.peek() in ("+", "-") and self.peek():
            total = total + self.signed_term()
        return total

    def group(self) -> LaurentPoly:
        if self.peek() == "(":
            self.pos += 1
            inner = self.sum()
            self.expect(")")
            return inner
        return self.sum()

    def denominator(self) -> LaurentPoly:
        if self.peek() == "(":
            return self.group()
        return self.signed_term()

    def parse(self) -> RatFunc:
        num = self.group()
        den = ONE_POLY
        if self.peek() == "/":
            self.pos += 1
            den = self.denominator()
            if den.is_zero():
                raise self.error("zero denominator")
        if self.peek():
            raise self.error(f"unexpected '{self.peek()}'")
        return RatFunc.of(num, den)


def parse_ratfunc(text: str) -> RatFunc:
    """Parse the coefficient grammar; raises ``ParseError`` with the 1-based column."""
    return _CoeffParser(text).parse()
