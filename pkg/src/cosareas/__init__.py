"""Limiting areas between cos^n x and cos^n kx, exact and numeric."""

from cosareas.areas import (
    AreaMethod,
    AreaRow,
    AreaTable,
    area,
    area_closed_form,
    area_double_factorial,
    area_recursion,
    area_table,
    oeis_numerator,
)
from cosareas.exact_arith import PiRational, binomial, double_factorial, factorial
from cosareas.piecewise_quad import (
    Breakpoint,
    ConvergenceRow,
    FiniteAreaResult,
    Partition,
    breakpoints,
    convergence_study,
    finite_area_oracle,
    finite_area_piecewise,
)

__all__ = [
    "AreaMethod",
    "AreaRow",
    "AreaTable",
    "Breakpoint",
    "ConvergenceRow",
    "FiniteAreaResult",
    "Partition",
    "PiRational",
    "area",
    "area_closed_form",
    "area_double_factorial",
    "area_recursion",
    "area_table",
    "binomial",
    "breakpoints",
    "convergence_study",
    "double_factorial",
    "factorial",
    "finite_area_oracle",
    "finite_area_piecewise",
    "oeis_numerator",
]

__version__ = "0.1.0"
