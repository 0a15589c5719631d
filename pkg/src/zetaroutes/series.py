"""Truncated Laurent series over exact rationals.

A series carries its own trust horizon: ``order`` is the largest exponent
whose coefficient is guaranteed correct. Arithmetic tightens the horizon,
never extends it, so a coefficient can be read only where it was actually
computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import BigRational

DEFAULT_ORDER = 40


class ZeroSeries(ZeroDivisionError):
    """Inversion of a series with no nonzero stored coefficient."""


class OutOfTrustedRange(IndexError):
    """Coefficient requested outside [valuation, order]."""


@dataclass(frozen=True)
class LaurentSeries:
    """Coefficients of z^valuation .. z^order, trusted through z^order.

    Invariant: len(coeffs) == order - valuation + 1. Construction strips
    leading zeros (raising the valuation); the all-zero series collapses to a
    single zero coefficient at the order.
    """

    valuation: int
    coeffs: tuple[BigRational, ...]
    order: int

    def __post_init__(self) -> None:
        coeffs = tuple(
            c if isinstance(c, Fraction) else Fraction(c) for c in self.coeffs
        )
        val = self.valuation
        if len(coeffs) != self.order - val + 1:
            raise ValueError("coefficient count must match order - valuation + 1")
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs = coeffs[1:]
            val += 1
        if len(coeffs) == 1 and coeffs[0] == 0:
            val = self.order
        object.__setattr__(self, "valuation", val)
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(
        cls, valuation: int, coeffs, order: int | None = None
    ) -> "LaurentSeries":
        """Series from explicit coefficients; an order beyond the last given
        coefficient pads with exact zeros (the input is a polynomial)."""
        coeffs = tuple(coeffs)
        if order is None:
            order = valuation + len(coeffs) - 1
        pad = order - (valuation + len(coeffs) - 1)
        if pad < 0:
            raise ValueError("order cannot truncate the given coefficients")
        return cls(valuation, coeffs + (Fraction(0),) * pad, order)

    @classmethod
    def monomial(cls, coeff, power: int, order: int | None = None) -> "LaurentSeries":
        """c * z^power, trusted through `order` (default: exactly the monomial)."""
        if order is None:
            order = power
        if order < power:
            raise ValueError("monomial order must be >= its power")
        coeffs = (Fraction(coeff),) + (Fraction(0),) * (order - power)
        return cls(power, coeffs, order)

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        return cls.monomial(value, 0, order)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        return cls(order, (Fraction(0),), order)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coeff(self, m: int) -> BigRational:
        """Coefficient of z^m; error outside the trusted window."""
        if m < self.valuation or m > self.order:
            raise OutOfTrustedRange(
                f"z^{m} outside trusted range [{self.valuation}, {self.order}]"
            )
        return self.coeffs[m - self.valuation]

    def coeff_or_zero(self, m: int) -> BigRational:
        """Like coeff(), but exponents below the valuation are known zeros."""
        if m < self.valuation:
            return Fraction(0)
        return self.coeff(m)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.valuation, tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        order = min(self.order, other.order)
        val = min(self.valuation, other.valuation)
        coeffs = [Fraction(0)] * (order - val + 1)
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                m = src.valuation + i
                if val <= m <= order:
                    coeffs[m - val] += c
        return LaurentSeries(val, tuple(coeffs), order)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        val = self.valuation + other.valuation
        order = min(
            self.order + other.valuation, other.order + self.valuation
        )
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(order)
        size = order - val + 1
        coeffs = [Fraction(0)] * size
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= size:
                    break
                if b != 0:
                    coeffs[k] += a * b
        return LaurentSeries(val, tuple(coeffs), order)

    def scale(self, q) -> "LaurentSeries":
        q = Fraction(q)
        return LaurentSeries(
            self.valuation, tuple(q * c for c in self.coeffs), self.order
        )

    def shifted(self, k: int) -> "LaurentSeries":
        """Multiply by z^k (exact; shifts the trust window with it)."""
        return LaurentSeries(self.valuation + k, self.coeffs, self.order + k)

    def invert(self) -> "LaurentSeries":
        """Series b with self*b == 1 through the deliverable order.

        Uses long division on the relative coefficients; the inverse has
        valuation -v and carries order - 2v trusted exponents' worth.
        """
        if self.is_zero():
            raise ZeroSeries("cannot invert the zero series")
        a = self.coeffs
        lead = a[0]
        size = len(a)
        b = [Fraction(0)] * size
        b[0] = 1 / lead
        for k in range(1, size):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += a[i] * b[k - i]
            b[k] = -acc / lead
        val = -self.valuation
        return LaurentSeries(val, tuple(b), val + size - 1)

    def differentiate(self) -> "LaurentSeries":
        """Termwise d/dz; the trust horizon drops by one."""
        coeffs = tuple(
            (self.valuation + i) * c for i, c in enumerate(self.coeffs)
        )
        return LaurentSeries(self.valuation - 1, coeffs, self.order - 1)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            m = self.valuation + i
            if m == 0:
                terms.append(f"{c}")
            elif m == 1:
                terms.append(f"{c} z")
            else:
                terms.append(f"{c} z^{m}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (trusted to {self.order})"


def exp_series(a, order: int) -> LaurentSeries:
    """exp(a*z) truncated: sum_{n<=order} a^n z^n / n!."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    a = Fraction(a)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * a / n)
    return LaurentSeries(0, tuple(coeffs), order)
