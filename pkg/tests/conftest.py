import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from atinf.poly import parse_poly


def P(text, vars=("x", "y")):
    return parse_poly(text, vars)


def random_poly(rng: random.Random, vars, max_degree, terms=4, force_degree=None):
    """Sparse random polynomial with small integer coefficients."""
    from fractions import Fraction

    from atinf.poly import Poly

    n = len(vars)

    def random_monomial(deg):
        cuts = sorted(rng.randint(0, deg) for _ in range(n - 1))
        parts = []
        prev = 0
        for c in cuts + [deg]:
            parts.append(c - prev)
            prev = c
        rng.shuffle(parts)
        return tuple(parts)

    out = {}
    if force_degree is not None:
        out[random_monomial(force_degree)] = Fraction(rng.choice([1, -1, 2, -2, 3]))
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        c = rng.randint(-3, 3)
        if c:
            e = random_monomial(deg)
            out[e] = out.get(e, Fraction(0)) + c
    return Poly(vars, out)
