"""Regenerate the checked-in b-file fixtures with sympy's series expansion.

Deliberately independent of cosareas.egf so the fixtures can check it.

    python scripts/make_bfile_fixtures.py [max_n]
"""

import sys
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parent.parent / "src" / "cosareas" / "fixtures"

SERIES = {
    "A296726": ("arcsin(x)/(1-x)", lambda x: sp.asin(x) / (1 - x)),
    "A372324": ("arcsin(x)^2/(2(1-x))", lambda x: sp.asin(x) ** 2 / (2 * (1 - x))),
}


def main(max_n: int = 100) -> None:
    x = sp.symbols("x")
    for seq_id, (label, build) in SERIES.items():
        poly = sp.series(build(x), x, 0, max_n + 1).removeO()
        lines = [f"# {seq_id}", f"# n! [x^n] {label}, n = 0..{max_n}, via sympy.series"]
        for n in range(max_n + 1):
            term = sp.factorial(n) * poly.coeff(x, n)
            assert term.is_integer, (seq_id, n, term)
            lines.append(f"{n} {term}")
        path = OUT / f"b{seq_id[1:]}.txt"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 100)
