"""Exact arithmetic in Q(w), w a primitive cube root of unity.

Elements are a + b*w with rational a, b, reduced with w^2 = -1 - w.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union["CyclotomicNumber", int, Fraction]


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {text!r}") from None


class CyclotomicNumber:
    __slots__ = ("rational_part", "omega_part")

    def __init__(self, rational_part: Fraction | int = 0, omega_part: Fraction | int = 0) -> None:
        if not isinstance(rational_part, Rational) or not isinstance(omega_part, Rational):
            raise TypeError("CyclotomicNumber parts must be exact rationals")
        self.rational_part = Fraction(rational_part)
        self.omega_part = Fraction(omega_part)

    @classmethod
    def coerce(cls, x: Number) -> CyclotomicNumber:
        if isinstance(x, CyclotomicNumber):
            return x
        if isinstance(x, Rational):
            return cls(x, 0)
        return NotImplemented

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.rational_part!s}, {self.omega_part!s})"

    def __str__(self) -> str:
        a, b = self.rational_part, self.omega_part
        if b == 0:
            return str(a)
        w = "w" if b == 1 else "-w" if b == -1 else f"{b}*w"
        if a == 0:
            return w
        return f"{a}{'' if w.startswith('-') else '+'}{w}"

    def __eq__(self, other: object) -> bool:
        o = CyclotomicNumber.coerce(other) if isinstance(other, (CyclotomicNumber, Rational)) else None
        if o is None:
            return NotImplemented
        return self.rational_part == o.rational_part and self.omega_part == o.omega_part

    def __hash__(self) -> int:
        return hash((self.rational_part, self.omega_part))

    def __bool__(self) -> bool:
        return bool(self.rational_part) or bool(self.omega_part)

    def __add__(self, other: Number) -> CyclotomicNumber:
        o = CyclotomicNumber.coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicNumber(self.rational_part + o.rational_part, self.omega_part + o.omega_part)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(-self.rational_part, -self.omega_part)

    def __sub__(self, other: Number) -> CyclotomicNumber:
        o = CyclotomicNumber.coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other: Number) -> CyclotomicNumber:
        return CyclotomicNumber.coerce(other) - self

    def __mul__(self, other: Number) -> CyclotomicNumber:
        o = CyclotomicNumber.coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.rational_part, self.omega_part
        c, d = o.rational_part, o.omega_part
        if not d:
            return CyclotomicNumber(a * c, b * c)
        if not b:
            return CyclotomicNumber(a * c, a * d)
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w
        return CyclotomicNumber(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self) -> CyclotomicNumber:
        """Image under w -> w^2 (complex conjugation)."""
        return CyclotomicNumber(self.rational_part - self.omega_part, -self.omega_part)

    def norm(self) -> Fraction:
        a, b = self.rational_part, self.omega_part
        return a * a - a * b + b * b

    def inverse(self) -> CyclotomicNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return CyclotomicNumber(c.rational_part / n, c.omega_part / n)

    def __truediv__(self, other: Number) -> CyclotomicNumber:
        o = CyclotomicNumber.coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other: Number) -> CyclotomicNumber:
        return CyclotomicNumber.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> CyclotomicNumber:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** -e
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def to_complex(self) -> complex:
        w = complex(-0.5, 3**0.5 / 2)
        return float(self.rational_part) + float(self.omega_part) * w

    def to_json(self) -> dict[str, str]:
        return {"rational": format_rational(self.rational_part), "omega": format_rational(self.omega_part)}

    @classmethod
    def from_json(cls, d: dict[str, str]) -> CyclotomicNumber:
        return cls(parse_rational(d["rational"]), parse_rational(d["omega"]))


ZERO = CyclotomicNumber(0, 0)
ONE = CyclotomicNumber(1, 0)
OMEGA = CyclotomicNumber(0, 1)
OMEGA2 = OMEGA * OMEGA
CUBE_ROOTS = (ONE, OMEGA, OMEGA2)
