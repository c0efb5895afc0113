"""Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator, so equality is structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """Product n(n-2)(n-4)... down to 1 or 2, with 0!! = (-1)!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial is only defined for n >= -1, got {n}")
    result = 1
    for m in range(n, 1, -2):
        result *= m
    return result


def binomial(n: int, j: int) -> int:
    """C(n, j) by the multiplicative formula.

    Returns 0 when ``j > n`` (or ``j < 0``). Each partial product
    C(n, i) is an integer, so the floor division is exact.
    """
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if j < 0 or j > n:
        return 0
    j = min(j, n - j)
    c = 1
    for i in range(1, j + 1):
        c = c * (n - j + i) // i
    return c


@dataclass(frozen=True, order=True)
class PiRational:
    """The real number ``coeff / pi`` for an exact rational ``coeff``."""

    coeff: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.coeff, Fraction):
            object.__setattr__(self, "coeff", Fraction(self.coeff))

    def __add__(self, other: PiRational) -> PiRational:
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.coeff + other.coeff)

    def __sub__(self, other: PiRational) -> PiRational:
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.coeff - other.coeff)

    def __mul__(self, scale: RationalLike) -> PiRational:
        if isinstance(scale, PiRational) or not isinstance(scale, (int, Fraction)):
            return NotImplemented
        return PiRational(self.coeff * scale)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.coeff) / math.pi

    @property
    def numerator(self) -> int:
        return self.coeff.numerator

    @property
    def denominator(self) -> int:
        return self.coeff.denominator

    def __str__(self) -> str:
        return f"{self.coeff} * 1/pi"
