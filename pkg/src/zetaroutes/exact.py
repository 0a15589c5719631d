"""Exact scalars: arbitrary-precision rationals and pi-monomials q*pi^k.

``BigRational`` is ``fractions.Fraction``: it already stores values in lowest
terms with a positive denominator, which makes structural equality the same
thing as exact mathematical equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

BigRational = Fraction

# 40 digits, enough to round correctly to any double-precision target.
PI_LITERAL = "3.141592653589793238462643383279502884197"

MIN_PI_DIGITS = 16


class MixedPiPowers(ValueError):
    """Adding pi-monomials of different pi powers; an identity check is ill-formed."""


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as an exact rational; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    if k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial requires a nonnegative argument")
    return Fraction(math.factorial(n))


def pi_to_float(pi_digits: int = 32) -> float:
    """pi correct to `pi_digits` significant digits, as a double."""
    if pi_digits < MIN_PI_DIGITS:
        raise ValueError(f"pi_digits must be >= {MIN_PI_DIGITS}")
    with localcontext() as ctx:
        ctx.prec = min(pi_digits, len(PI_LITERAL) - 1)
        rounded = +Decimal(PI_LITERAL)
    return float(rounded)


def format_rational(q: Fraction) -> str:
    """Render as "p/q", omitting the denominator when it is 1."""
    return str(q)


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class PiValue:
    """An exact value coeff * pi**pi_exp with rational coeff and pi_exp >= 0.

    Zero is canonical: a zero coefficient forces pi_exp == 0, so dataclass
    equality is exact value equality.
    """

    coeff: Fraction
    pi_exp: int = 0

    def __post_init__(self) -> None:
        coeff = self.coeff if isinstance(self.coeff, Fraction) else Fraction(self.coeff)
        exp = int(self.pi_exp)
        if exp < 0:
            raise ValueError("pi exponent must be nonnegative")
        if coeff == 0:
            exp = 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "pi_exp", exp)

    def __mul__(self, other: "PiValue") -> "PiValue":
        return PiValue(self.coeff * other.coeff, self.pi_exp + other.pi_exp)

    def __add__(self, other: "PiValue") -> "PiValue":
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.pi_exp != other.pi_exp:
            raise MixedPiPowers(
                f"cannot add pi^{self.pi_exp} term to pi^{other.pi_exp} term"
            )
        return PiValue(self.coeff + other.coeff, self.pi_exp)

    def __neg__(self) -> "PiValue":
        return PiValue(-self.coeff, self.pi_exp)

    def __sub__(self, other: "PiValue") -> "PiValue":
        return self + (-other)

    def scale(self, q: Fraction) -> "PiValue":
        return PiValue(self.coeff * q, self.pi_exp)

    def to_float(self, pi_digits: int = 32) -> float:
        """coeff * pi**pi_exp in double precision (relative error a few ulp)."""
        if self.coeff == 0:
            return 0.0
        return float(self.coeff) * pi_to_float(pi_digits) ** self.pi_exp

    def to_json(self) -> dict:
        return {"coeff": format_rational(self.coeff), "pi_exp": self.pi_exp}

    @classmethod
    def from_json(cls, obj: dict) -> "PiValue":
        return cls(parse_rational(obj["coeff"]), int(obj["pi_exp"]))

    def __str__(self) -> str:
        if self.pi_exp == 0:
            return format_rational(self.coeff)
        power = "pi" if self.pi_exp == 1 else f"pi^{self.pi_exp}"
        return f"{format_rational(self.coeff)}*{power}"
