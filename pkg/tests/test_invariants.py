import random

import pytest

from atinf.groebner import GLOBAL, LOCAL, GroebnerError, block_order, standard_basis
from atinf.invariants import is_zero_dim, krull_dim, proj_dim, quotient_dim, staircase
from atinf.poly import parse_poly
from conftest import P, random_poly

V3 = ("x", "y", "z")


def test_quotient_dim_examples():
    assert quotient_dim(standard_basis([P("x^2"), P("y^3")])) == 6
    assert quotient_dim(standard_basis([P("3*x^2"), P("2*y")], LOCAL)) == 2
    assert quotient_dim(standard_basis([P("x")])) is None
    assert quotient_dim(standard_basis([P("1")])) == 0


def test_quotient_dim_requires_standard_basis():
    from atinf.groebner import IdealBasis

    raw = IdealBasis(("x", "y"), (P("x^2"),), GLOBAL, False)
    with pytest.raises(GroebnerError):
        quotient_dim(raw)


def test_krull_dim_examples():
    assert krull_dim(standard_basis([P("x^2"), P("x*y")])) == 1
    assert krull_dim(standard_basis([P("x"), P("y")])) == 0
    assert krull_dim(standard_basis([P("1")])) == -1


def test_is_zero_dim_examples():
    assert is_zero_dim(standard_basis([P("x^2"), P("y")]))
    assert not is_zero_dim(standard_basis([P("x^2*y")]))
    assert is_zero_dim(standard_basis([P("1")]))


def test_proj_dim_examples():
    assert proj_dim([P("2*x*y"), P("x^2")]) == 0
    assert proj_dim([P("x"), P("y")]) == -1
    fd = parse_poly("z^4 + z^2*x^2 + z^2*y^2", V3)
    assert proj_dim([fd.derivative(v) for v in V3]) == 1
    with pytest.raises(GroebnerError):
        proj_dim([P("x + x^2")])


def test_staircase_matches_quotient_dim():
    b = standard_basis([P("x^2"), P("y^3")])
    mons = staircase(b)
    assert len(mons) == quotient_dim(b) == 6
    assert (0, 0) in mons and (1, 2) in mons


def test_local_quotient_grid():
    # staircase of the Jacobian of x^a + y^b is the (a-1) x (b-1) box
    for a in range(2, 7):
        for b in range(2, 7):
            f = parse_poly(f"x^{a} + y^{b}", ("x", "y"))
            basis = standard_basis(
                [f.derivative("x"), f.derivative("y")], LOCAL
            )
            assert quotient_dim(basis) == (a - 1) * (b - 1)


def test_quotient_dim_order_invariant_for_zero_dim():
    rng = random.Random(13)
    checked = 0
    while checked < 40:
        gens = [
            P(f"x^{rng.randint(1, 3)}") + random_poly(rng, ("x", "y"), 2, terms=2),
            P(f"y^{rng.randint(1, 3)}") + random_poly(rng, ("x", "y"), 2, terms=2),
        ]
        b1 = standard_basis(gens, GLOBAL)
        if not is_zero_dim(b1):
            continue
        b2 = standard_basis(gens, block_order([0]))
        assert quotient_dim(b1) == quotient_dim(b2)
        checked += 1


def test_principal_ideal_hypersurface_dimension():
    rng = random.Random(29)
    checked = 0
    while checked < 40:
        nv = rng.choice([2, 3])
        vars = V3[:nv]
        p = random_poly(rng, vars, 3, terms=4)
        if p.is_zero() or p.is_constant():
            continue
        assert krull_dim(standard_basis([p])) == nv - 1
        checked += 1


def test_monomial_ideal_dimension_self_consistency():
    # combinatorial answer must not depend on going through the engine
    rng = random.Random(31)
    for _ in range(40):
        nv = rng.choice([2, 3])
        vars = V3[:nv]
        gens = []
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, 2) for _ in range(nv))
            if any(e):
                gens.append(
                    parse_poly("*".join(f"{v}^{k}" for v, k in zip(vars, e) if k), vars)
                )
        if not gens:
            continue
        direct = standard_basis(gens, GLOBAL)
        assert krull_dim(direct) == krull_dim(standard_basis(list(direct.gens), GLOBAL))
