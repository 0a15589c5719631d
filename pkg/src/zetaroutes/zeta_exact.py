"""Exact classical zeta values by every route, and the functional equation.

Classical points are the nonpositive integers (rational values) and the
positive even integers (rational multiples of pi^{2n}). Every value is
computed by several independent routes that must agree exactly:

* ClosedForm:      zeta(-n) = (-1)^n B_{n+1}/(n+1);  zeta(2n) from B_{2n}
* ResidueSeries:   coefficient extraction from x/(e^x - 1) combined with the
                   limit of sin(pi x)Gamma(x) at -n
* GeneratingFunction: read zeta(-m) off 1/(e^{-z} - 1) + 1/z
* AbelSummation:   Abel sums of the alternating series (module abel)
* FunctionalEquation: transport zeta(1-2n) to zeta(2n) across the identity
                   2 cos(pi s/2) Gamma(s) zeta(s) = (2pi)^s zeta(1-s)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import abel
from .bernoulli import bernoulli_via_series
from .exact import PiValue, factorial
from .series import LaurentSeries, exp_series


class Route(str, Enum):
    CLOSED_FORM = "closed"
    RESIDUE_SERIES = "residue"
    GENERATING_FUNCTION = "genfun"
    ABEL_SUMMATION = "abel"
    FUNCTIONAL_EQUATION = "funceq"


class ArgumentNotEvenPositive(ValueError):
    """The exact functional-equation check only runs at even s >= 2."""


class PoleArgument(ValueError):
    """zeta has a pole at 1; no route represents that point."""


@dataclass(frozen=True)
class ClassicalValue:
    argument: int
    value: PiValue
    route: Route

    def __post_init__(self) -> None:
        if self.argument == 1:
            raise PoleArgument("zeta(1) is a pole")
        if self.argument <= 0 and self.value.pi_exp != 0:
            raise ValueError("values at nonpositive integers are rational")
        if self.argument >= 2:
            if self.argument % 2:
                raise ValueError("positive classical arguments must be even")
            if self.value.pi_exp != self.argument and self.value.coeff != 0:
                raise ValueError("zeta(2n) must carry pi^{2n}")


# -- nonpositive integers ----------------------------------------------------


def zeta_nonpositive(n: int) -> ClassicalValue:
    """zeta(-n) = (-1)^n B_{n+1}/(n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    b = bernoulli_via_series(n + 1)[n + 1]
    sign = -1 if n % 2 else 1
    return ClassicalValue(-n, PiValue(sign * b / (n + 1)), Route.CLOSED_FORM)


def sin_gamma_limit_exact(n: int) -> PiValue:
    """lim_{x -> -n} sin(pi x) Gamma(x) = pi/n!, resolved by peeling the
    Gamma recurrence n times."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PiValue(1 / factorial(n), 1)


def zeta_neg_via_residue(n: int) -> ClassicalValue:
    """zeta(-n) from the loop integral around the origin.

    The loop picks up 2*pi*i * (-1)^{n-1} * [x^{n+1}] x/(e^x - 1) and equals
    -2i * (pi/n!) * zeta(-n); both sides sit at the same power of pi, so the
    quotient is exact. The overall orientation sign is pinned by agreement
    with the Abel route, which has no contour to orient.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    gen = exp_series(1, n + 2) - LaurentSeries.constant(1, n + 2)
    c = gen.shifted(-1).invert().coeff_or_zero(n + 1)
    branch = -1 if (n - 1) % 2 else 1  # (-1)^{n-1}
    # Loop integral = 2 pi i * branch * c; it equals -2i * (pi/n!) * zeta(-n).
    # Both sides carry one power of pi and one of i, so the quotient of the
    # rational parts is zeta(-n) itself.
    sg = sin_gamma_limit_exact(n)
    assert sg.pi_exp == 1
    value = 2 * branch * c / (-2 * sg.coeff)
    return ClassicalValue(-n, PiValue(value), Route.RESIDUE_SERIES)


def zeta_neg_via_G(order: int) -> list[ClassicalValue]:
    """zeta(-m) for m = 0..order-1 from 1/(e^{-z} - 1) + 1/z.

    Discarding the pole term leaves sum_m zeta(-m) z^m / m!.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    work = order + 2
    em1 = exp_series(-1, work) - LaurentSeries.constant(1, work)
    gen = em1.shifted(-1).invert().shifted(-1)  # 1/(e^{-z} - 1), valuation -1
    gen = gen + LaurentSeries.monomial(1, -1, gen.order)
    return [
        ClassicalValue(
            -m,
            PiValue(factorial(m) * gen.coeff_or_zero(m)),
            Route.GENERATING_FUNCTION,
        )
        for m in range(order)
    ]


def zeta_neg_via_abel_route(m: int) -> ClassicalValue:
    """zeta(-m) through the Abel sums of the alternating series."""
    return ClassicalValue(-m, PiValue(abel.zeta_neg_via_abel(m)), Route.ABEL_SUMMATION)


# -- generating-function identities -------------------------------------------


def finite_G_check(n: int, max_m: int) -> bool:
    """Check (1 - e^{nz})/(e^{-z} - 1) = sum_m S_m(n) z^m / m! through max_m,
    with the power sums S_m(n) by brute force."""
    if n < 1:
        raise ValueError("n must be positive")
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    work = max_m + 2
    num = LaurentSeries.constant(1, work) - exp_series(n, work)
    den = exp_series(-1, work) - LaurentSeries.constant(1, work)
    gen = num * den.invert()
    for m in range(max_m + 1):
        brute = sum(Fraction(k) ** m for k in range(1, n + 1))
        if gen.coeff_or_zero(m) * factorial(m) != brute:
            return False
    return True


def odd_genfun_check(order: int) -> bool:
    """Check the odd generating function against the zeta values it encodes.

    (e^{-z} + 1)/(e^{-z} - 1) + 2/z must equal
    2 sum_m zeta(-2m-1) z^{2m+1}/(2m+1)! with every even coefficient zero.
    """
    if order < 3:
        raise ValueError("order must be >= 3")
    work = order + 2
    num = exp_series(-1, work) + LaurentSeries.constant(1, work)
    den = exp_series(-1, work) - LaurentSeries.constant(1, work)
    gen = num * den.invert() + LaurentSeries.monomial(2, -1, work - 2)
    for m in range(0, order + 1):
        c = gen.coeff_or_zero(m)
        if m % 2 == 0:
            if c != 0:
                return False
        else:
            expected = 2 * zeta_nonpositive(m).value.coeff / factorial(m)
            if c != expected:
                return False
    return True


# -- positive even integers ---------------------------------------------------


def zeta_even_positive(n: int) -> ClassicalValue:
    """zeta(2n) = (-1)^{n-1} (2 pi)^{2n} B_{2n} / (2 (2n)!)."""
    if n < 1:
        raise ValueError("n must be positive")
    b = bernoulli_via_series(2 * n)[2 * n]
    sign = 1 if (n - 1) % 2 == 0 else -1
    coeff = sign * Fraction(2) ** (2 * n) * b / (2 * factorial(2 * n))
    return ClassicalValue(2 * n, PiValue(coeff, 2 * n), Route.CLOSED_FORM)


def zeta_even_via_funceq(n: int) -> ClassicalValue:
    """zeta(2n) transported from zeta(1-2n) across the functional equation."""
    if n < 1:
        raise ValueError("n must be positive")
    z_neg = zeta_nonpositive(2 * n - 1).value.coeff
    sign = 1 if n % 2 == 0 else -1  # cos(pi n) = (-1)^n
    coeff = Fraction(2) ** (2 * n) * z_neg / (2 * sign * factorial(2 * n - 1))
    return ClassicalValue(2 * n, PiValue(coeff, 2 * n), Route.FUNCTIONAL_EQUATION)


def simple_funceq_check(m: int) -> bool:
    """Check 2 zeta(-2m-1)/(2m+1)! = (-1)^{m+1} zeta(2m+2) / (2^{2m} pi^{2m+2}).

    zeta(2m+2) carries pi^{2m+2} exactly, so the powers of pi cancel and the
    identity is between rationals.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    lhs = 2 * zeta_nonpositive(2 * m + 1).value.coeff / factorial(2 * m + 1)
    even = zeta_even_positive(m + 1).value
    assert even.pi_exp == 2 * m + 2
    sign = -1 if m % 2 == 0 else 1  # (-1)^{m+1}
    rhs = sign * even.coeff / Fraction(2) ** (2 * m)
    return lhs == rhs


def funceq_exact_check(s: int) -> bool:
    """Check 2 cos(pi s/2) Gamma(s) zeta(s) = (2 pi)^s zeta(1-s) at even s >= 2.

    cos(pi n) = (-1)^n and Gamma(2n) = (2n-1)! keep everything exact; both
    sides are pi-monomials with exponent s.
    """
    if s < 2 or s % 2:
        raise ArgumentNotEvenPositive(f"s = {s}: check requires even s >= 2")
    n = s // 2
    cos_sign = 1 if n % 2 == 0 else -1
    lhs = zeta_even_positive(n).value.scale(2 * cos_sign * factorial(s - 1))
    rhs = PiValue(Fraction(2) ** s * zeta_nonpositive(s - 1).value.coeff, s)
    return lhs == rhs


# -- route dispatch (CLI-facing) ----------------------------------------------

NEGATIVE_ROUTES = (
    Route.CLOSED_FORM,
    Route.RESIDUE_SERIES,
    Route.GENERATING_FUNCTION,
    Route.ABEL_SUMMATION,
)
POSITIVE_ROUTES = (Route.CLOSED_FORM, Route.FUNCTIONAL_EQUATION)


def zeta_classical(argument: int, route: Route) -> ClassicalValue:
    """One classical value by one named route."""
    if argument == 1:
        raise PoleArgument("zeta(1) is a pole")
    if argument <= 0:
        m = -argument
        if route is Route.CLOSED_FORM:
            return zeta_nonpositive(m)
        if route is Route.RESIDUE_SERIES:
            return zeta_neg_via_residue(m)
        if route is Route.GENERATING_FUNCTION:
            return zeta_neg_via_G(m + 1)[m]
        if route is Route.ABEL_SUMMATION:
            return zeta_neg_via_abel_route(m)
        raise ValueError(f"route {route.value} does not apply at argument {argument}")
    if argument % 2:
        raise ValueError("positive classical arguments must be even")
    n = argument // 2
    if route is Route.CLOSED_FORM:
        return zeta_even_positive(n)
    if route is Route.FUNCTIONAL_EQUATION:
        return zeta_even_via_funceq(n)
    raise ValueError(f"route {route.value} does not apply at argument {argument}")


def routes_for_argument(argument: int) -> tuple[Route, ...]:
    return NEGATIVE_ROUTES if argument <= 0 else POSITIVE_ROUTES
