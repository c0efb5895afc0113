"""Self-check suites behind ``cosareas verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from cosareas import egf
from cosareas.areas import area_closed_form, area_double_factorial, area_recursion, oeis_numerator
from cosareas.identities import (
    LagrangeVariant,
    ParityCase,
    cot_limit_expression,
    cq_limit,
    cq_partial,
    lagrange_closed_form,
    lagrange_sum_direct,
)

# Errors below this are float noise; a sequence that has reached it
# counts as converged even if it stops shrinking.
ROUNDOFF_FLOOR = 1e-13
POLE_GUARD = 1e6


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_error: float
    detail: str = ""


def decreasing_to_floor(errors: list[float], floor: float = ROUNDOFF_FLOOR) -> bool:
    """Strictly decreasing, except that once an error is below ``floor`` the rest may just stay below it."""
    for prev, cur in zip(errors, errors[1:]):
        if prev <= floor:
            if cur > floor:
                return False
        elif not cur < prev:
            return False
    return True


def lagrange_sweep(max_N: int = 2000, max_q: int = 50, tol: float = 1e-10) -> list[CheckResult]:
    results = []
    for variant in LagrangeVariant:
        worst = 0.0
        checked = 0
        for N in range(1, max_N + 1):
            for q in range(1, max_q + 1):
                try:
                    closed = lagrange_closed_form(N, q, variant)
                except ValueError:
                    continue
                if abs(closed) > POLE_GUARD:
                    continue
                worst = max(worst, abs(lagrange_sum_direct(N, q, variant) - closed))
                checked += 1
        results.append(
            CheckResult(f"lagrange {variant.value}", worst <= tol, worst, f"{checked} (N, q) pairs")
        )
    return results


def cot_limit_checks(k: int = 10_000, tol: float = 1e-3) -> list[CheckResult]:
    results = []
    for label, x in (("1", 1.0), ("pi/2", math.pi / 2), ("pi", math.pi), ("5", 5.0)):
        err = abs(cot_limit_expression(x, k) - 4 / x)
        results.append(CheckResult(f"cot limit x={label} k={k}", err < tol, err))
    return results


def _k_with_parity(k: int, parity: str) -> int:
    return k + 1 if (k % 2 == 1) != (parity == "odd") else k


def cq_checks(max_q: int = 9, ks: tuple[int, ...] = (1000, 10_000), tol: float = 1e-2) -> list[CheckResult]:
    results = []
    for case in ParityCase:
        for q in range(1, max_q + 1):
            if ("odd" if q % 2 else "even") != case.q_parity:
                continue
            limit = float(cq_limit(q, case))
            kk = [_k_with_parity(k, case.k_parity) for k in ks]
            errors = [abs(cq_partial(q, k, case) - limit) for k in kk]
            ok = errors[0] < tol and decreasing_to_floor(errors)
            c_fit = max(e * k for e, k in zip(errors, kk))
            results.append(
                CheckResult(
                    f"C_q {case.name} q={q}",
                    ok,
                    max(errors),
                    "errors " + ", ".join(f"k={k}: {e:.3e}" for k, e in zip(kk, errors)) + f"; C={c_fit:.4g}",
                )
            )
    return results


def bundled_bfile(seq_id: str) -> egf.OeisBFile:
    text = resources.files("cosareas.fixtures").joinpath(f"b{seq_id[1:]}.txt").read_text()
    return egf.parse_bfile(text, seq_id)


PUBLISHED_NUMERATORS = {1: 1, 3: 7, 5: 149, 7: 6483, 2: 1, 4: 16, 6: 544, 8: 32768}


def egf_checks(max_n: int = 100) -> list[CheckResult]:
    results = []
    for seq_id, (terms_fn, parity) in egf.SEQUENCES.items():
        b = bundled_bfile(seq_id)
        computed = terms_fn(max_n)
        diffs = egf.diff_bfile(b, computed, parity)
        results.append(
            CheckResult(f"{seq_id} vs b-file ({parity} n)", not diffs, float(len(diffs)), f"{len(diffs)} mismatches")
        )
    bad = [n for n, v in PUBLISHED_NUMERATORS.items() if oeis_numerator(n) != v]
    results.append(CheckResult("area numerators n=1..8", not bad, float(len(bad))))
    a, b = egf.a296726_terms(61), egf.a372324_terms(61)
    bad = [n for n in range(1, 62) if oeis_numerator(n) != (a[n] if n % 2 else b[n])]
    results.append(CheckResult("numerators vs EGF terms n<=61", not bad, float(len(bad))))
    return results


def cross_method_checks(max_n: int = 201) -> list[CheckResult]:
    bad = [
        n
        for n in range(1, max_n + 1)
        if not area_closed_form(n) == area_recursion(n) == area_double_factorial(n)
    ]
    return [CheckResult(f"three-method equality n<={max_n}", not bad, float(len(bad)), f"failing n: {bad[:5]}" if bad else "")]


def identities_checks() -> list[CheckResult]:
    return lagrange_sweep() + cot_limit_checks()


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "identities": identities_checks,
    "cq": cq_checks,
    "egf": egf_checks,
    "cross-method": cross_method_checks,
}
