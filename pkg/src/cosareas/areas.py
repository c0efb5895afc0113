"""Exact limiting areas A_n = lim_k int_0^pi |cos^n x - cos^n kx| dx.

Three independent routes are provided: binomial closed forms split by the
residue of n mod 4, a two-step recursion, and double-factorial sums. All
return a :class:`PiRational`, so agreement between them is exact equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from cosareas.exact_arith import PiRational, binomial, double_factorial, factorial


class AreaMethod(enum.Enum):
    CLOSED_FORM = "closed-form"
    RECURSION = "recursion"
    DOUBLE_FACTORIAL = "double-factorial"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"A_n is only defined for n >= 1, got {n}")


def area_closed_form(n: int) -> PiRational:
    """A_n from the binomial sums.

    Odd n sums C(n, j)/(n-2j)^2 over j <= (n-1)/2. Even n keeps only the
    harmonics n-2j that are 2 mod 4, which selects even j when n = 2 (mod 4)
    and odd j when n = 0 (mod 4).
    """
    _check_n(n)
    match n % 4:
        case 1 | 3:
            total = sum(
                (Fraction(binomial(n, j), (n - 2 * j) ** 2) for j in range((n - 1) // 2 + 1)),
                Fraction(0),
            )
            return PiRational(Fraction(8, 2 ** (n - 1)) * total)
        case 2:
            half = n // 2
            total = sum(
                (Fraction(binomial(n, 2 * j), (half - 2 * j) ** 2) for j in range((n - 2) // 4 + 1)),
                Fraction(0),
            )
            return PiRational(Fraction(16, 2**n) * total)
        case 0:
            half = n // 2
            total = sum(
                (
                    Fraction(binomial(n, 2 * j + 1), (half - (2 * j + 1)) ** 2)
                    for j in range((n - 4) // 4 + 1)
                ),
                Fraction(0),
            )
            return PiRational(Fraction(16, 2**n) * total)
    raise AssertionError("unreachable")  # pragma: no cover


_BASE_CASES = {1: PiRational(Fraction(8)), 2: PiRational(Fraction(4))}


def area_recursion(n: int) -> PiRational:
    """A_n = ((n-1)/n) A_{n-2} + c/(n^2 pi), c = 8 for odd n and 16 for even n."""
    _check_n(n)
    m = 2 - n % 2
    value = _BASE_CASES[m]
    increment = 8 if n % 2 else 16
    for m in range(m + 2, n + 1, 2):
        value = value * Fraction(m - 1, m) + PiRational(Fraction(increment, m * m))
    return value


def _double_factorial_sum(n: int) -> Fraction:
    if n % 2:
        return sum(
            (
                Fraction(double_factorial(2 * j - 1), double_factorial(2 * j) * (2 * j + 1))
                for j in range((n - 1) // 2 + 1)
            ),
            Fraction(0),
        )
    return sum(
        (
            Fraction(double_factorial(2 * j), double_factorial(2 * j + 1) * (2 * j + 2))
            for j in range((n - 2) // 2 + 1)
        ),
        Fraction(0),
    )


def area_double_factorial(n: int) -> PiRational:
    _check_n(n)
    scale = 8 if n % 2 else 16
    prefactor = Fraction(factorial(n), double_factorial(n) ** 2)
    return PiRational(scale * prefactor * _double_factorial_sum(n))


def oeis_numerator(n: int) -> int:
    """n! times the double-factorial sum; the integer numerators of A_n.

    Odd n gives 1, 7, 149, 6483, ...; even n gives 1, 16, 544, 32768, ...
    Raises ArithmeticError if the product is not an integer.
    """
    _check_n(n)
    value = factorial(n) * _double_factorial_sum(n)
    if value.denominator != 1:
        raise ArithmeticError(f"numerator for n={n} is not integral: {value}")
    return value.numerator


_METHODS = {
    AreaMethod.CLOSED_FORM: area_closed_form,
    AreaMethod.RECURSION: area_recursion,
    AreaMethod.DOUBLE_FACTORIAL: area_double_factorial,
}


def area(n: int, method: AreaMethod = AreaMethod.CLOSED_FORM) -> PiRational:
    return _METHODS[AreaMethod(method)](n)


@dataclass(frozen=True)
class AreaRow:
    n: int
    value: PiRational
    numerator: int


@dataclass(frozen=True)
class AreaTable:
    method: AreaMethod
    rows: tuple[AreaRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> AreaRow:
        return self.rows[i]

    def row(self, n: int) -> AreaRow:
        return self.rows[n - 1]


def area_table(max_n: int, method: AreaMethod = AreaMethod.CLOSED_FORM) -> AreaTable:
    _check_n(max_n)
    fn = _METHODS[AreaMethod(method)]
    rows = tuple(AreaRow(n, fn(n), oeis_numerator(n)) for n in range(1, max_n + 1))
    return AreaTable(AreaMethod(method), rows)
