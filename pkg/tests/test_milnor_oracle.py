"""Local Milnor numbers against the independent Macaulay-matrix oracle."""

from fractions import Fraction

import pytest

from atinf.poly import parse_poly
from atinf.singular import local_milnor
from macaulay_oracle import milnor_number_brute, truncated_quotient_dim


def as_dict(text, vars):
    return {e: c for e, c in parse_poly(text, vars).terms.items()}


def test_oracle_on_monomial_boxes():
    for a in range(2, 6):
        for b in range(2, 6):
            f = {(a, 0): Fraction(1), (0, b): Fraction(1)}
            assert milnor_number_brute(f, 2, bound=8) == (a - 1) * (b - 1)


def test_oracle_rejects_unstable_bounds():
    f = {(5, 0): Fraction(1), (0, 5): Fraction(1)}
    with pytest.raises(ValueError):
        milnor_number_brute(f, 2, bound=4)


def test_power_sum_grid_matches_oracle():
    for a in range(2, 6):
        for b in range(2, 6):
            f = parse_poly(f"x^{a} + y^{b}", ("x", "y"))
            expected = milnor_number_brute(as_dict(f"x^{a} + y^{b}", ("x", "y")), 2, 8)
            assert local_milnor(f, (0, 0)) == expected == (a - 1) * (b - 1)


def test_corner_point_matches_oracle():
    f_text = "x^2*y + y^3"
    oracle = milnor_number_brute(as_dict(f_text, ("x", "y")), 2, bound=8)
    assert oracle == 4
    assert local_milnor(parse_poly(f_text, ("x", "y")), (0, 0)) == 4


def test_three_variable_ordinary_double_point():
    f_text = "x^2 + y^2 + z^2"
    oracle = milnor_number_brute(as_dict(f_text, ("x", "y", "z")), 3, bound=6)
    assert oracle == 1
    assert local_milnor(parse_poly(f_text, ("x", "y", "z")), (0, 0, 0)) == 1


def test_truncation_is_monotone_stable():
    f = as_dict("x^2*y + y^3", ("x", "y"))
    gens = [
        {(1, 1): Fraction(2)},
        {(2, 0): Fraction(1), (0, 2): Fraction(3)},
    ]
    dims = [truncated_quotient_dim(gens, 2, b) for b in range(3, 9)]
    assert dims[-1] == dims[-2] == 4
