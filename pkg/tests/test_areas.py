from fractions import Fraction

import pytest

from cosareas.areas import (
    AreaMethod,
    area,
    area_closed_form,
    area_double_factorial,
    area_recursion,
    area_table,
    oeis_numerator,
)
from cosareas.exact_arith import PiRational, binomial, double_factorial

# A_7 is 8 * 6483 / 105^2 = 17288/3675; see test_acceptance for the printed 17228.
PUBLISHED_VALUES = {
    1: Fraction(8),
    2: Fraction(4),
    3: Fraction(56, 9),
    4: Fraction(4),
    5: Fraction(1192, 225),
    6: Fraction(34, 9),
    7: Fraction(8 * 6483, 105**2),
    8: Fraction(32, 9),
}


@pytest.mark.parametrize("n", sorted(PUBLISHED_VALUES))
@pytest.mark.parametrize("fn", [area_closed_form, area_recursion, area_double_factorial])
def test_first_eight_values(fn, n):
    assert fn(n) == PiRational(PUBLISHED_VALUES[n])


def test_a7_reassembles_from_its_numerator():
    assert PUBLISHED_VALUES[7] == Fraction(17288, 3675)


@pytest.mark.parametrize("fn", [area_closed_form, area_recursion, area_double_factorial, oeis_numerator])
@pytest.mark.parametrize("n", [0, -1])
def test_nonpositive_n_rejected(fn, n):
    with pytest.raises(ValueError):
        fn(n)


def test_non_int_rejected():
    with pytest.raises(TypeError):
        area_closed_form(3.0)


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 7), (5, 149), (7, 6483), (2, 1), (4, 16), (6, 544), (8, 32768)])
def test_numerators(n, expected):
    assert oeis_numerator(n) == expected


def test_three_methods_agree_up_to_201():
    for n in range(1, 202):
        assert area_closed_form(n) == area_recursion(n) == area_double_factorial(n), n


def test_closed_form_covers_all_residues_mod_4():
    # n = 9, 10, 11, 12 hit each branch once more beyond the published list.
    for n in (9, 10, 11, 12):
        assert area_closed_form(n) == area_recursion(n)


@pytest.mark.parametrize("n", range(1, 62))
def test_numerator_reassembly(n):
    # A_n = 8 * numerator / ((n!!)^2 pi) for odd n, 16 * ... for even n.
    scale = 8 if n % 2 else 16
    assert area_closed_form(n).coeff * double_factorial(n) ** 2 / scale == oeis_numerator(n)


def test_recursion_proof_identity():
    for n in range(2, 101):
        for j in range(1, n):
            assert binomial(n, j) * (n - j) * j == binomial(n - 2, j - 1) * (n - 1) * n


def test_positive_and_bounded():
    for n in range(1, 202):
        c = area_closed_form(n).coeff
        assert 0 < c <= 8


def test_recursion_step():
    for n in range(3, 60):
        extra = Fraction(8 if n % 2 else 16, n * n)
        assert area_recursion(n).coeff == Fraction(n - 1, n) * area_recursion(n - 2).coeff + extra


def test_area_dispatch():
    for method in AreaMethod:
        assert area(6, method) == PiRational(Fraction(34, 9))
    assert area(6, "recursion") == PiRational(Fraction(34, 9))


def test_area_table_closed_form():
    table = area_table(4, AreaMethod.CLOSED_FORM)
    assert [row.value for row in table.rows] == [PiRational(c) for c in (8, 4, Fraction(56, 9), 4)]
    assert [row.n for row in table.rows] == [1, 2, 3, 4]


def test_area_table_single_row():
    table = area_table(1, AreaMethod.RECURSION)
    assert len(table) == 1
    assert table[0].value == PiRational(8)


def test_area_table_numerators():
    table = area_table(8, AreaMethod.DOUBLE_FACTORIAL)
    assert table.row(8).numerator == 32768
    assert [r.numerator for r in table.rows] == [1, 1, 7, 16, 149, 544, 6483, 32768]
