"""Finite-k areas  int_0^pi |cos^n x - cos^n kx| dx.

The main route is exact: every crossing of cos^n x and cos^n kx is a
rational multiple of pi (l*pi/(k+1) or l*pi/(k-1)), so [0, pi] splits into
panels on which the integrand keeps one sign. Each panel then contributes
``sign * (F(right) - F(left))`` with the closed-form antiderivative from the
power-reduction formula. Breakpoints stay exact integers over a common
denominator until the sines are evaluated.

:func:`finite_area_oracle` is an independent adaptive Gauss-Legendre check
that never looks at the breakpoints.
"""

from __future__ import annotations

import enum
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

import numpy as np

from cosareas._trig import cos_pi_array, int_array, sin_pi, sin_pi_array
from cosareas.areas import area_closed_form
from cosareas.exact_arith import binomial


@dataclass(frozen=True, order=True)
class Breakpoint:
    """The abscissa ``frac * pi`` for an exact rational ``frac``."""

    frac: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.frac, Fraction):
            object.__setattr__(self, "frac", Fraction(self.frac))

    @classmethod
    def of(cls, a: int, b: int) -> Breakpoint:
        return cls(Fraction(a, b))

    @property
    def a(self) -> int:
        return self.frac.numerator

    @property
    def b(self) -> int:
        return self.frac.denominator

    def __float__(self) -> float:
        return float(self.frac) * math.pi

    def __str__(self) -> str:
        if self.a == 0:
            return "0"
        return f"{self.a}pi/{self.b}" if self.b != 1 else f"{self.a}pi"


@dataclass(frozen=True, eq=False)
class Partition:
    """Sorted, deduplicated breakpoints ``numerators[i] / denominator * pi``.

    The first point is 0 and the last is pi (numerator == denominator).
    Iterating yields :class:`Breakpoint` objects.
    """

    denominator: int
    numerators: tuple[int, ...]

    def __post_init__(self) -> None:
        nums = self.numerators
        if not nums or nums[0] != 0 or nums[-1] != self.denominator:
            raise ValueError("partition must start at 0 and end at pi")
        if any(x >= y for x, y in zip(nums, nums[1:])):
            raise ValueError("partition must be strictly increasing")

    def __len__(self) -> int:
        return len(self.numerators)

    def __iter__(self) -> Iterator[Breakpoint]:
        d = self.denominator
        return (Breakpoint.of(p, d) for p in self.numerators)

    def __getitem__(self, i: int) -> Breakpoint:
        return Breakpoint.of(self.numerators[i], self.denominator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return list(self) == list(other)

    @property
    def panel_count(self) -> int:
        return len(self.numerators) - 1

    def interior(self) -> list[Breakpoint]:
        return list(self)[1:-1]


def _parity(n_parity: Union[str, int]) -> str:
    if isinstance(n_parity, int) and not isinstance(n_parity, bool):
        return "odd" if n_parity % 2 else "even"
    if n_parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {n_parity!r}")
    return n_parity


def breakpoints(n_parity: Union[str, int], k: int) -> Partition:
    """Crossings of cos^n x and cos^n kx on [0, pi], plus both endpoints.

    Odd n: cos x = cos kx, i.e. x = 2l*pi/(k+1) or 2l*pi/(k-1).
    Even n adds cos x = -cos kx, giving every l*pi/(k+1) and l*pi/(k-1).
    ``n_parity`` is "odd", "even", or the power n itself.
    """
    parity = _parity(n_parity)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    denom = math.lcm(k - 1, k + 1)
    mult = 2 if parity == "odd" else 1
    points = {denom}
    for m in (k - 1, k + 1):
        step = mult * (denom // m)
        points.update(range(0, denom + 1, step))
    return Partition(denom, tuple(sorted(points)))


def f_eval(n: int, k: int, x: float) -> float:
    return math.cos(x) ** n - math.cos(k * x) ** n


def _harmonics(n: int) -> list[tuple[int, float]]:
    """(frequency, weight) pairs of the power-reduction expansion of cos^n.

    The constant term for even n is dropped; it cancels in cos^n x - cos^n kx.
    """
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    return [(n - 2 * j, 2.0 * binomial(n, j) / 2.0**n) for j in range(top + 1)]


def antiderivative(n: int, k: int, x: Union[Breakpoint, Fraction, float]) -> float:
    """F with F' = cos^n x - cos^n kx and F(0) = 0.

    A :class:`Breakpoint` (or a Fraction, read as a multiple of pi) is reduced
    exactly mod 2pi per harmonic; a plain float is used as is.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if isinstance(x, Breakpoint):
        x = x.frac
    total = 0.0
    if isinstance(x, Fraction):
        a, b = x.numerator, x.denominator
        for m, w in _harmonics(n):
            total += w * (sin_pi(m * a, b) / m - sin_pi(m * k * a, b) / (m * k))
    else:
        for m, w in _harmonics(n):
            total += w * (math.sin(m * x) / m - math.sin(m * k * x) / (m * k))
    return total


def _antiderivative_array(n: int, k: int, p: np.ndarray, denom: int) -> np.ndarray:
    total = np.zeros(len(p))
    for m, w in _harmonics(n):
        total += w * (sin_pi_array(m * p, denom) / m - sin_pi_array((m * k) * p, denom) / (m * k))
    return total


def _f_array(n: int, k: int, p: np.ndarray, denom: int) -> np.ndarray:
    return cos_pi_array(p, denom) ** n - cos_pi_array(k * p, denom) ** n


class QuadMethod(enum.Enum):
    PIECEWISE = "piecewise"
    ORACLE = "oracle"


@dataclass(frozen=True)
class FiniteAreaResult:
    n: int
    k: int
    area: float
    panel_count: int
    method: QuadMethod

    def __float__(self) -> float:
        return self.area


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def panel_integrals(n: int, k: int) -> tuple[Partition, np.ndarray, np.ndarray]:
    """Per-panel ``(partition, signs, integrals)`` of f = cos^n x - cos^n kx.

    ``integrals[i]`` is the signed integral of f over panel i and
    ``signs[i]`` the sign of f inside it (sampled at the exact midpoint,
    falling back to the one-third point when f vanishes there).
    """
    _check_nk(n, k)
    part = breakpoints(n, k)
    denom = part.denominator
    p = int_array(part.numerators, 6 * n * k * denom)
    F = _antiderivative_array(n, k, p, denom)
    integrals = np.diff(F)

    left, right = p[:-1], p[1:]
    mid = _f_array(n, k, left + right, 2 * denom)
    third = _f_array(n, k, 2 * left + right, 3 * denom)
    signs = np.sign(np.where(mid == 0.0, third, mid))
    return part, signs, integrals


def finite_area_piecewise(n: int, k: int) -> FiniteAreaResult:
    part, signs, integrals = panel_integrals(n, k)
    area = math.fsum((signs * integrals).tolist())
    if area < -1e-12:
        raise ArithmeticError(f"negative area {area} for n={n}, k={k}")
    return FiniteAreaResult(n, k, max(area, 0.0), part.panel_count, QuadMethod.PIECEWISE)


class OracleBudgetError(RuntimeError):
    """Adaptive quadrature ran out of panels before meeting its tolerance."""

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def _gauss(n: int, k: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    half = 0.5 * (b - a)
    x = 0.5 * (a + b)[:, None] + half[:, None] * _GL_NODES[None, :]
    vals = np.abs(np.cos(x) ** n - np.cos(k * x) ** n)
    return half * (vals @ _GL_WEIGHTS)


def finite_area_oracle(
    n: int, k: int, tol: float = 1e-10, max_panels: int = 2_000_000
) -> FiniteAreaResult:
    """Adaptive 10-point Gauss-Legendre quadrature of |f| on [0, pi].

    Starts from 16k uniform panels so every lobe of cos^n kx is sampled,
    then bisects any panel whose one-level refinement changes its value by
    more than its share ``tol * width / pi`` of the tolerance.
    """
    _check_nk(n, k)
    if tol <= 0:
        raise ValueError("tol must be positive")
    edges = np.linspace(0.0, math.pi, 16 * k + 1)
    a, b = edges[:-1], edges[1:]
    coarse = _gauss(n, k, a, b)
    accepted: list[np.ndarray] = []
    accepted_err = 0.0
    used = len(a)
    while len(a):
        mid = 0.5 * (a + b)
        left = _gauss(n, k, a, mid)
        right = _gauss(n, k, mid, b)
        fine = left + right
        err = np.abs(fine - coarse)
        ok = err <= tol * (b - a) / math.pi
        accepted.append(fine[ok])
        accepted_err += float(err[ok].sum())
        bad = ~ok
        used += 2 * int(bad.sum())
        if used > max_panels:
            estimate = math.fsum(np.concatenate(accepted + [fine[bad]]).tolist())
            raise OracleBudgetError(
                f"oracle exceeded {max_panels} panels for n={n}, k={k}",
                estimate,
                accepted_err + float(err[bad].sum()),
            )
        a = np.concatenate([a[bad], mid[bad]])
        b = np.concatenate([mid[bad], b[bad]])
        coarse = np.concatenate([left[bad], right[bad]])
    area = math.fsum(np.concatenate(accepted).tolist())
    return FiniteAreaResult(n, k, area, used, QuadMethod.ORACLE)


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    area: float
    limit: float
    error: float
    ms: float


def _thread_count() -> int:
    raw = os.environ.get("COSAREAS_THREADS")
    if raw is None:
        return 1
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"COSAREAS_THREADS must be a positive integer, got {raw!r}") from None
    if count < 1:
        raise ValueError(f"COSAREAS_THREADS must be a positive integer, got {raw!r}")
    return count


def convergence_study(n: int, ks: Sequence[int], workers: int | None = None) -> list[ConvergenceRow]:
    """Finite-k areas against the exact limit A_n, one row per k in input order."""
    for k in ks:
        _check_nk(n, k)
    limit = float(area_closed_form(n))

    def row(k: int) -> ConvergenceRow:
        start = time.perf_counter()
        result = finite_area_piecewise(n, k)
        ms = (time.perf_counter() - start) * 1e3
        return ConvergenceRow(k, result.area, limit, abs(result.area - limit), ms)

    workers = _thread_count() if workers is None else workers
    if workers <= 1 or len(ks) <= 1:
        return [row(k) for k in ks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(row, ks))
