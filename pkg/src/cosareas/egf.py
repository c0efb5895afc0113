"""Exact Taylor coefficients for the arcsine generating functions.

Series are kept as ordinary coefficients (Fractions); the exponential view
``egf_term(n) = n! * c_n`` is computed on demand. The integer sequences
A296726 (arcsin x / (1-x)) and A372324 (arcsin^2 x / (2(1-x))) come out
of :func:`divide_by_one_minus_x` followed by the n! scaling.

Also here: a reader for OEIS b-files and a comparison against computed terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Optional, Sequence

from cosareas.exact_arith import double_factorial, factorial


@dataclass(frozen=True)
class EgfSeries:
    """Coefficients c_0..c_N of a power series truncated at degree N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def egf_term(self, n: int) -> Fraction:
        return factorial(n) * self.coeffs[n]

    def egf_terms(self) -> list[Fraction]:
        return [self.egf_term(n) for n in range(len(self.coeffs))]

    def integer_egf_terms(self) -> list[int]:
        """n! c_n for every n, raising ArithmeticError if any is not an integer."""
        out = []
        for n, t in enumerate(self.egf_terms()):
            if t.denominator != 1:
                raise ArithmeticError(f"egf term {n} is not an integer: {t}")
            out.append(t.numerator)
        return out


def _check_degree(N: int) -> None:
    if N < 0:
        raise ValueError(f"degree must be >= 0, got {N}")


def arcsin_series(N: int) -> EgfSeries:
    """arcsin x: c_{2j+1} = ((2j-1)!!)^2 / (2j+1)!."""
    _check_degree(N)
    coeffs = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1, 2):
        coeffs[n] = Fraction(double_factorial(n - 2) ** 2, factorial(n))
    return EgfSeries(tuple(coeffs))


def arcsin_over_sqrt_series(N: int) -> EgfSeries:
    """arcsin x / sqrt(1 - x^2): c_{2j+1} = ((2j)!!)^2 / (2j+1)!."""
    _check_degree(N)
    coeffs = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1, 2):
        coeffs[n] = Fraction(double_factorial(n - 1) ** 2, factorial(n))
    return EgfSeries(tuple(coeffs))


def arcsin_squared_half_series(N: int) -> EgfSeries:
    """arcsin^2 x / 2, the term-by-term integral of arcsin x / sqrt(1 - x^2)."""
    _check_degree(N)
    derivative = arcsin_over_sqrt_series(max(N - 1, 0))
    coeffs = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        coeffs[n] = derivative[n - 1] / n
    return EgfSeries(tuple(coeffs))


def divide_by_one_minus_x(s: EgfSeries) -> EgfSeries:
    """Multiply by 1/(1-x) = 1 + x + x^2 + ...; coefficient n becomes the prefix sum."""
    return EgfSeries(tuple(accumulate(s.coeffs)))


def a296726_terms(N: int) -> list[int]:
    """EGF terms of arcsin x / (1-x): 0, 1, 2, 7, 28, 149, ..."""
    return divide_by_one_minus_x(arcsin_series(N)).integer_egf_terms()


def a372324_terms(N: int) -> list[int]:
    """EGF terms of arcsin^2 x / (2(1-x)): 0, 0, 1, 3, 16, 80, 544, ..."""
    return divide_by_one_minus_x(arcsin_squared_half_series(N)).integer_egf_terms()


SEQUENCES = {
    "A296726": (a296726_terms, "odd"),
    "A372324": (a372324_terms, "even"),
}
"""Sequence id -> (term generator, parity at which the area numerators appear)."""


@dataclass(frozen=True)
class OeisBFile:
    seq_id: str
    entries: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


class BFileParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno


def parse_bfile(text: str, seq_id: str = "") -> OeisBFile:
    """Parse OEIS b-file text: ``index value`` per line, '#' comments, blank lines ok.

    Indices must be strictly increasing. A ``# A123456`` style comment
    sets the sequence id when ``seq_id`` is not given.
    """
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not seq_id:
                words = line[1:].split()
                if words and len(words[0]) == 7 and words[0][0] == "A" and words[0][1:].isdigit():
                    seq_id = words[0]
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(lineno, raw, "expected 'index value'")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(lineno, raw, "non-integer field") from None
        if entries and index <= entries[-1][0]:
            raise BFileParseError(lineno, raw, "indices must be strictly increasing")
        entries.append((index, value))
    return OeisBFile(seq_id, tuple(entries))


@dataclass(frozen=True)
class Mismatch:
    index: int
    expected: int
    got: Optional[int]


def diff_bfile(
    b: OeisBFile, computed: Sequence[int], parity: Optional[str] = None
) -> list[Mismatch]:
    """Entries of ``b`` that disagree with ``computed[index]``.

    ``parity`` ("odd"/"even") restricts the comparison to those indices.
    b-file entries past the end of ``computed`` are not compared.
    """
    if parity not in (None, "odd", "even"):
        raise ValueError(f"parity must be 'odd', 'even' or None, got {parity!r}")
    out = []
    for index, expected in b.entries:
        if parity is not None and (index % 2 == 1) != (parity == "odd"):
            continue
        if not 0 <= index < len(computed):
            continue
        got = computed[index]
        if got != expected:
            out.append(Mismatch(index, expected, got))
    return out
