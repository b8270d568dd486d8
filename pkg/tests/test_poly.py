import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from atinf.poly import (
    NEG_INF,
    LinearChange,
    ParseError,
    Poly,
    PolyError,
    SingularMatrixError,
    fresh_var,
    parse_poly,
)
from conftest import P, random_poly


# -- parsing -------------------------------------------------------------------


def test_parse_basic():
    p = parse_poly("x + x^2*y", ["x", "y"])
    assert p.terms == {(1, 0): 1, (2, 1): 1}
    assert p.degree == 3


def test_parse_zero():
    p = parse_poly("0", ["x"])
    assert p.is_zero()
    assert p.degree == NEG_INF


def test_parse_expansion_identity():
    assert parse_poly("(x+y)^2 - x^2 - 2*x*y", ["x", "y"]) == P("y^2")


def test_parse_rationals_and_signs():
    p = parse_poly("-1/2*x + 3 - y", ["x", "y"])
    assert p.terms == {(1, 0): Fraction(-1, 2), (0, 0): 3, (0, 1): -1}


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x^2y", ["x", "y"])
    assert "position 4" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_poly("x + w", ["x", "y"])
    assert "unknown variable 'w'" in str(err.value)
    with pytest.raises(ParseError):
        parse_poly("x + ", ["x"])
    with pytest.raises(ParseError):
        parse_poly("(x", ["x"])


def test_parse_rejects_zero_denominator():
    with pytest.raises(ParseError):
        parse_poly("1/0", ["x"])


def test_print_parse_roundtrip():
    rng = random.Random(7)
    for _ in range(60):
        p = random_poly(rng, ("x", "y", "z"), 4, terms=5)
        assert parse_poly(str(p), p.vars) == p


# -- arithmetic and structure ----------------------------------------------------


def test_derivative():
    assert P("x^2*y").derivative("x") == P("2*x*y")
    assert P("x^2*y").derivative("y") == P("x^2")
    assert P("5").derivative("x").is_zero()
    with pytest.raises(PolyError):
        P("x").derivative("q")


def test_graded_part():
    f = P("x + x^2*y")
    assert f.graded_part(3) == P("x^2*y")
    assert f.graded_part(1) == P("x")
    assert P("x^2*y").graded_part(2).is_zero()


def test_homogenize_dehomogenize():
    f = P("x + x^2*y")
    h = f.homogenize("z", 3)
    assert h == parse_poly("x*z^2 + x^2*y", ["x", "y", "z"])
    assert h.dehomogenize("y", 1) == parse_poly("x*z^2 + x^2", ["x", "z"])
    with pytest.raises(PolyError):
        f.homogenize("z", 2)


def test_dehomogenize_roundtrip():
    rng = random.Random(3)
    for _ in range(40):
        p = random_poly(rng, ("x", "y"), 4)
        if p.is_zero():
            continue
        h = p.homogenize("w", int(p.degree))
        assert h.dehomogenize("w", 1) == p


def test_apply_change_identity_and_swap():
    f = P("x^2")
    assert f.apply_change(LinearChange.identity(2)) == f
    swap = LinearChange([[0, 1], [1, 0]])
    assert P("x").apply_change(swap) == P("y")


def test_apply_change_preserves_degree_and_inverts():
    rng = random.Random(11)
    for _ in range(30):
        p = random_poly(rng, ("x", "y", "z"), 3, terms=4)
        while True:
            rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
            try:
                c = LinearChange(rows)
                break
            except SingularMatrixError:
                continue
        q = p.apply_change(c)
        assert q.degree == p.degree
        assert q.apply_change(c.inverse_change()) == p


def test_singular_matrix_rejected():
    with pytest.raises(SingularMatrixError):
        LinearChange([[1, 1], [2, 2]])


def test_fresh_var():
    assert fresh_var(("x", "y"), "z") == "z"
    assert fresh_var(("z", "z0"), "z") == "z1"


# -- hypothesis property suites ---------------------------------------------------

coeffs = st.integers(min_value=-4, max_value=4)
exps2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys2 = st.dictionaries(exps2, coeffs, max_size=5).map(
    lambda d: Poly(("x", "y"), d)
)


@given(polys2, polys2, polys2)
@settings(max_examples=120, deadline=None)
def test_ring_distributivity(p, q, r):
    assert (p + q) * r == p * r + q * r


@given(polys2, polys2)
@settings(max_examples=120, deadline=None)
def test_multiplication_degree_additivity(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


@given(polys2, st.integers(0, 6))
@settings(max_examples=120, deadline=None)
def test_euler_relation_on_graded_parts(p, k):
    part = p.graded_part(k)
    total = Poly.zero(p.vars)
    for v in p.vars:
        total = total + Poly.variable(p.vars, v) * part.derivative(v)
    assert total == part.scale(k)
