"""Numeric checks of the trigonometric lemmas behind the area formulas.

* Three Lagrange-type sine sums and their cot/tan closed forms.
* The cotangent combination that tends to 4/x.
* The signed sums of integrals of cos qx - cos qkx whose k -> infinity
  limits C_q are 4/(q^2 pi), 8/(q^2 pi), 16/(q^2 pi) or 0 by parity.

Every sine or cotangent of a rational multiple of pi goes through the exact
reduction in :mod:`cosareas._trig`.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import numpy as np

from cosareas._trig import cot_pi, sin_pi_array, tan_pi
from cosareas.exact_arith import PiRational


class LagrangeVariant(enum.Enum):
    """Which finite sine sum ``lagrange_sum_direct`` evaluates.

    FULL_EVEN_N:      sum_{l=1}^{N/2}     sin(q l 2pi / N), N even
    HALF_ODD_N:       sum_{l=1}^{(N-1)/2} sin(q l 2pi / N), N odd
    HALF_STEP_EVEN_N: sum_{l=1}^{N/2}     sin(q l pi / N),  N and q even
    """

    FULL_EVEN_N = "full-even-n"
    HALF_ODD_N = "half-odd-n"
    HALF_STEP_EVEN_N = "half-step-even-n"


def _check_lagrange(N: int, q: int, variant: LagrangeVariant) -> LagrangeVariant:
    variant = LagrangeVariant(variant)
    if N < 1 or q < 1:
        raise ValueError(f"N and q must be positive, got N={N}, q={q}")
    if variant is LagrangeVariant.FULL_EVEN_N and N % 2:
        raise ValueError(f"{variant.value} needs even N, got {N}")
    if variant is LagrangeVariant.HALF_ODD_N and N % 2 == 0:
        raise ValueError(f"{variant.value} needs odd N, got {N}")
    if variant is LagrangeVariant.HALF_STEP_EVEN_N and (N % 2 or q % 2):
        raise ValueError(f"{variant.value} needs even N and even q, got N={N}, q={q}")
    return variant


def lagrange_sum_direct(N: int, q: int, variant: LagrangeVariant) -> float:
    variant = _check_lagrange(N, q, variant)
    if variant is LagrangeVariant.HALF_STEP_EVEN_N:
        ell = np.arange(1, N // 2 + 1, dtype=np.int64)
        terms = sin_pi_array(q * ell, N)
    else:
        top = N // 2 if variant is LagrangeVariant.FULL_EVEN_N else (N - 1) // 2
        ell = np.arange(1, top + 1, dtype=np.int64)
        terms = sin_pi_array(2 * q * ell, N)
    return math.fsum(terms.tolist())


def lagrange_closed_form(N: int, q: int, variant: LagrangeVariant) -> float:
    variant = _check_lagrange(N, q, variant)
    match variant:
        case LagrangeVariant.FULL_EVEN_N:
            return cot_pi(q, N) if q % 2 else 0.0
        case LagrangeVariant.HALF_ODD_N:
            return 0.5 * cot_pi(q, 2 * N) if q % 2 else -0.5 * tan_pi(q, 2 * N)
        case LagrangeVariant.HALF_STEP_EVEN_N:
            return cot_pi(q, 2 * N) if q % 4 == 2 else 0.0
    raise AssertionError("unreachable")  # pragma: no cover


def cot_limit_expression(x: float, k: int) -> float:
    """(1/k - 1) cot(x/(k-1)) + (1/k + 1) cot(x/(k+1)), which tends to 4/x."""
    if x == 0:
        raise ValueError("x must be nonzero")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    out = 0.0
    for weight, theta in ((1 / k - 1, x / (k - 1)), (1 / k + 1, x / (k + 1))):
        s = math.sin(theta)
        if abs(s) < 1e-300 or abs(s) <= 4 * math.ulp(abs(theta)):
            raise ZeroDivisionError(f"cot pole at theta={theta}")
        out += weight * math.cos(theta) / s
    return out


class ParityCase(enum.Enum):
    """(k parity, q parity) of a C_q sum."""

    ODD_ODD = ("odd", "odd")
    ODD_K_EVEN_Q = ("odd", "even")
    EVEN_K_ODD_Q = ("even", "odd")
    EVEN_EVEN = ("even", "even")

    @property
    def k_parity(self) -> str:
        return self.value[0]

    @property
    def q_parity(self) -> str:
        return self.value[1]

    @classmethod
    def of(cls, k: int, q: int) -> ParityCase:
        return cls(("odd" if k % 2 else "even", "odd" if q % 2 else "even"))


def _check_case(q: int, k: int | None, case: ParityCase) -> ParityCase:
    case = ParityCase(case)
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if ("odd" if q % 2 else "even") != case.q_parity:
        raise ValueError(f"q={q} does not match {case.name}")
    if k is not None:
        if k < 3:
            raise ValueError(f"k must be >= 3, got {k}")
        if ("odd" if k % 2 else "even") != case.k_parity:
            raise ValueError(f"k={k} does not match {case.name}")
    return case


def _F(q: int, k: int, num: np.ndarray, den: int) -> np.ndarray:
    """sin(qx)/q - sin(qkx)/(qk) at x = num/den * pi."""
    return sin_pi_array(q * num, den) / q - sin_pi_array((q * k) * num, den) / (q * k)


def cq_partial(q: int, k: int, case: ParityCase) -> float:
    """The finite-k C_q sum, integrated exactly with F = sin(qx)/q - sin(qkx)/(qk).

    ODD_ODD:  sum_{l=1}^{(k-1)/2} int_{2l pi/(k+1)}^{2l pi/(k-1)} (cos qkx - cos qx)
    others:   sum_l  int_{lo}^{mid} f - int_{mid}^{hi} f,   f = cos qx - cos qkx,
              lo = (l-1) s pi/(k-1), mid = l s pi/(k+1), hi = l s pi/(k-1)
              with s = 2 for EVEN_K_ODD_Q and s = 1 otherwise; l runs to
              (k-1)/2 for odd k and k/2 for even k.
    """
    case = _check_case(q, k, case)
    top = (k - 1) // 2 if k % 2 else k // 2
    ell = np.arange(1, top + 1, dtype=np.int64)
    if case is ParityCase.ODD_ODD:
        terms = _F(q, k, 2 * ell, k + 1) - _F(q, k, 2 * ell, k - 1)
    else:
        s = 2 if case is ParityCase.EVEN_K_ODD_Q else 1
        lo = _F(q, k, s * (ell - 1), k - 1)
        mid = _F(q, k, s * ell, k + 1)
        hi = _F(q, k, s * ell, k - 1)
        terms = 2 * mid - lo - hi
    return math.fsum(terms.tolist())


def cq_limit(q: int, case: ParityCase) -> PiRational:
    case = _check_case(q, None, case)
    match case:
        case ParityCase.ODD_ODD:
            return PiRational(Fraction(4, q * q))
        case ParityCase.EVEN_K_ODD_Q:
            return PiRational(Fraction(8, q * q))
        case ParityCase.ODD_K_EVEN_Q | ParityCase.EVEN_EVEN:
            return PiRational(Fraction(16, q * q) if q % 4 == 2 else Fraction(0))
    raise AssertionError("unreachable")  # pragma: no cover
