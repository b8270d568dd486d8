"""Seeded random draws used wherever the theory asks for a generic choice.

Genericity is never certified analytically; every consumer verifies the
drawn object (chart placement, Bertini condition, fibre smoothness) and
redraws on failure, so identical seeds give identical runs.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .poly import LinearChange, Poly, SingularMatrixError


def rng_for(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}/{label}")


def sample_rational(rng: random.Random, height: int = 1000) -> Fraction:
    """Nonzero rational with numerator and denominator bounded by height."""
    while True:
        num = rng.randint(-height, height)
        if num != 0:
            return Fraction(num, rng.randint(1, height))


def sample_int_matrix(rng: random.Random, n: int, bound: int = 5) -> LinearChange:
    """Invertible integer matrix with entries in [-bound, bound]."""
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        try:
            return LinearChange(rows)
        except SingularMatrixError:
            continue


def sample_linear_form(rng: random.Random, vars: Sequence[str], bound: int = 5) -> Poly:
    """Nonzero homogeneous linear form with small integer coefficients."""
    n = len(vars)
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(n)]
        if any(coeffs):
            return Poly(
                vars,
                {
                    tuple(1 if j == i else 0 for j in range(n)): c
                    for i, c in enumerate(coeffs)
                    if c
                },
            )
