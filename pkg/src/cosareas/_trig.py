"""Trig functions of rational multiples of pi with exact argument reduction.

``sin_pi(a, b)`` is sin(pi * a / b). The integer ``a`` is reduced modulo
``2b`` (and folded into [0, b/2]) before anything becomes a float, so
the result keeps full double precision for huge multiples of pi.
"""

from __future__ import annotations

import math

import numpy as np


def sin_pi(a: int, b: int) -> float:
    if b <= 0:
        raise ValueError("denominator must be positive")
    r = a % (2 * b)
    sign = 1.0
    if r >= b:
        r -= b
        sign = -1.0
    r = min(r, b - r)
    return sign * math.sin(math.pi * (r / b))


def cos_pi(a: int, b: int) -> float:
    return sin_pi(2 * a + b, 2 * b)


def _tan_folded(r: int, b: int) -> float:
    """tan(pi * r / b) for -b/2 < r < b/2, via an angle of at most pi/4."""
    if 4 * abs(r) <= b:
        return math.tan(math.pi * (r / b))
    comp = math.tan(math.pi * ((b - 2 * abs(r)) / (2 * b)))
    return math.copysign(1.0, r) / comp


def tan_pi(a: int, b: int) -> float:
    if b <= 0:
        raise ValueError("denominator must be positive")
    r = a % b
    if 2 * r == b:
        raise ZeroDivisionError(f"tan pole at {a}/{b} * pi")
    if 2 * r > b:
        r -= b
    return _tan_folded(r, b)


def cot_pi(a: int, b: int) -> float:
    if b <= 0:
        raise ValueError("denominator must be positive")
    r = a % b
    if r == 0:
        raise ZeroDivisionError(f"cot pole at {a}/{b} * pi")
    # cot(pi r/b) = tan(pi (b - 2r) / (2b))
    return _tan_folded(b - 2 * r, 2 * b)


def sin_pi_array(a: np.ndarray, b: int) -> np.ndarray:
    """Vectorised :func:`sin_pi` for an integer array (int64 or object)."""
    r = np.mod(a, 2 * b)
    neg = r >= b
    r = np.where(neg, r - b, r)
    r = np.minimum(r, b - r)
    val = np.sin(np.pi * (r.astype(np.float64) / b))
    return np.where(neg, -val, val)


def cos_pi_array(a: np.ndarray, b: int) -> np.ndarray:
    return sin_pi_array(2 * a + b, 2 * b)


def int_array(values, limit: int) -> np.ndarray:
    """Integer array whose dtype is int64 when every later product stays below ``limit``."""
    dtype = np.int64 if limit < 2**62 else object
    return np.asarray(values, dtype=dtype)
