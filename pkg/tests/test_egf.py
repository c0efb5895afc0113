from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosareas import egf
from cosareas.areas import oeis_numerator
from cosareas.exact_arith import double_factorial, factorial
from cosareas.verify import bundled_bfile


def test_arcsin_low_order():
    s = egf.arcsin_series(5)
    assert s.coeffs == (0, 1, 0, Fraction(1, 6), 0, Fraction(3, 40))


def test_arcsin_constant_only():
    s = egf.arcsin_series(0)
    assert s.coeffs == (Fraction(0),)
    assert s.degree == 0


def test_arcsin_egf_numerators():
    s = egf.arcsin_series(9)
    assert [s.egf_term(n) for n in (1, 3, 5, 7, 9)] == [1, 1, 9, 225, 11025]
    assert all(s[n] == 0 for n in range(0, 10, 2))


def test_arcsin_over_sqrt():
    s = egf.arcsin_over_sqrt_series(7)
    assert s[0] == 0
    assert s[5] == Fraction(64, 120) == Fraction(8, 15)
    assert s[7] == Fraction(2304, 5040)
    assert [s.egf_term(n) for n in (1, 3, 5, 7)] == [1, 4, 64, 2304]


def test_arcsin_squared_half():
    s = egf.arcsin_squared_half_series(10)
    assert s[1] == 0
    assert s[2] == Fraction(1, 2)
    assert s[4] == Fraction(1, 6)
    for j in range(5):
        assert s[2 * j + 2] == Fraction(double_factorial(2 * j) ** 2, factorial(2 * j + 2))
    assert all(s[n] == 0 for n in range(1, 11, 2))


def test_arcsin_squared_half_degree_zero():
    assert egf.arcsin_squared_half_series(0).coeffs == (Fraction(0),)


def test_divide_by_one_minus_x_examples():
    zero = egf.EgfSeries((0, 0, 0))
    assert egf.divide_by_one_minus_x(zero) == zero
    assert egf.divide_by_one_minus_x(egf.EgfSeries((1, 0, 0, 0))).coeffs == (1, 1, 1, 1)
    assert egf.divide_by_one_minus_x(egf.arcsin_series(3)).egf_term(3) == 7


series = st.lists(st.fractions(max_denominator=1000), min_size=1, max_size=30).map(
    lambda cs: egf.EgfSeries(tuple(cs))
)


@given(series)
def test_divide_then_difference_recovers_input(s):
    out = egf.divide_by_one_minus_x(s).coeffs
    recovered = (out[0],) + tuple(b - a for a, b in zip(out, out[1:]))
    assert recovered == s.coeffs


@given(series, series, st.integers(-5, 5))
def test_divide_is_linear(s, t, c):
    n = min(len(s), len(t))
    s, t = egf.EgfSeries(s.coeffs[:n]), egf.EgfSeries(t.coeffs[:n])
    combined = egf.EgfSeries(tuple(a + c * b for a, b in zip(s.coeffs, t.coeffs)))
    lhs = egf.divide_by_one_minus_x(combined).coeffs
    rhs = tuple(
        a + c * b
        for a, b in zip(egf.divide_by_one_minus_x(s).coeffs, egf.divide_by_one_minus_x(t).coeffs)
    )
    assert lhs == rhs


def test_a296726_odd_terms():
    terms = egf.a296726_terms(7)
    assert [terms[n] for n in (1, 3, 5, 7)] == [1, 7, 149, 6483]


def test_a372324_even_terms():
    terms = egf.a372324_terms(8)
    assert terms[0] == 0
    assert [terms[n] for n in (2, 4, 6, 8)] == [1, 16, 544, 32768]


def test_two_forms_of_odd_sum_agree():
    for n in range(1, 62, 2):
        squared = sum(
            (Fraction(double_factorial(2 * j - 1) ** 2, factorial(2 * j + 1)) for j in range((n - 1) // 2 + 1)),
            Fraction(0),
        )
        ratio = sum(
            (
                Fraction(double_factorial(2 * j - 1), double_factorial(2 * j) * (2 * j + 1))
                for j in range((n - 1) // 2 + 1)
            ),
            Fraction(0),
        )
        assert factorial(n) * squared == factorial(n) * ratio


def test_numerators_match_egf_terms():
    odd, even = egf.a296726_terms(61), egf.a372324_terms(61)
    for n in range(1, 62):
        assert oeis_numerator(n) == (odd[n] if n % 2 else even[n])


def test_non_integral_terms_rejected():
    with pytest.raises(ArithmeticError):
        egf.EgfSeries((0, Fraction(1, 2))).integer_egf_terms()


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        egf.arcsin_series(-1)


# b-files


def test_parse_small():
    b = egf.parse_bfile("0 0\n1 1\n2 1\n3 7")
    assert b.entries == ((0, 0), (1, 1), (2, 1), (3, 7))
    assert len(b) == 4


def test_parse_empty():
    assert len(egf.parse_bfile("")) == 0


def test_parse_comments_blank_lines_and_id():
    text = "# A296726 arcsin(x)/(1-x)\n\n0 0\n# middle comment\n1 1\n  2   2  \n"
    b = egf.parse_bfile(text)
    assert b.seq_id == "A296726"
    assert b.as_dict() == {0: 0, 1: 1, 2: 2}


def test_parse_big_values_exact():
    big = 10**80 + 1
    assert egf.parse_bfile(f"5 {big}\n").entries == ((5, big),)


@pytest.mark.parametrize(
    "text, lineno",
    [("0 0\n1\n", 2), ("0 0\n1 x\n", 2), ("# c\n0 0 0\n", 2), ("3 1\n2 1\n", 2), ("1.5 2\n", 1)],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(egf.BFileParseError) as info:
        egf.parse_bfile(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_diff_injected_mismatch():
    b = egf.parse_bfile("0 0\n1 1\n2 2\n3 8\n")
    diffs = egf.diff_bfile(b, egf.a296726_terms(5))
    assert diffs == [egf.Mismatch(3, 8, 7)]


def test_diff_parity_filter():
    b = egf.parse_bfile("0 0\n1 1\n2 999\n3 7\n")
    computed = egf.a296726_terms(3)
    assert egf.diff_bfile(b, computed, "odd") == []
    assert [d.index for d in egf.diff_bfile(b, computed, "even")] == [2]
    with pytest.raises(ValueError):
        egf.diff_bfile(b, computed, "both")


def test_diff_ignores_entries_past_computed_range():
    b = egf.parse_bfile("0 0\n1 1\n50 123\n")
    assert egf.diff_bfile(b, [0, 1]) == []


@pytest.mark.parametrize("seq_id", sorted(egf.SEQUENCES))
def test_bundled_fixtures_match_everywhere(seq_id):
    # Fixtures were produced by sympy series expansion, not by this module.
    terms_fn, _ = egf.SEQUENCES[seq_id]
    b = bundled_bfile(seq_id)
    assert b.seq_id == seq_id
    assert len(b) == 101
    assert egf.diff_bfile(b, terms_fn(100)) == []
