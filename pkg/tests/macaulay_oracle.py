"""Brute-force Milnor number oracle based on truncated Macaulay matrices.

Deliberately independent of the package under test: polynomials are plain
dicts mapping exponent tuples to Fractions, and the only machinery is exact
Gaussian elimination.  Given the Jacobian generators of a function germ, the
oracle spans all monomial multiples m*g of total degree <= bound and counts
the monomials of degree <= bound outside the row space.  When every
generator is homogeneous the ideal is graded, so each graded piece is hit
exactly and the count stabilizes to dim Q[x]/J once the bound clears the top
of the staircase.  The oracle refuses to answer if the count has not
stabilized between bound-1 and bound.
"""

from fractions import Fraction
from itertools import product

Term = dict  # exponent tuple -> Fraction


def partial(f: Term, i: int) -> Term:
    out = {}
    for exps, c in f.items():
        if exps[i] == 0:
            continue
        e = list(exps)
        e[i] -= 1
        out[tuple(e)] = out.get(tuple(e), Fraction(0)) + c * exps[i]
    return {e: c for e, c in out.items() if c != 0}


def jacobian(f: Term, nvars: int) -> list[Term]:
    gens = [partial(f, i) for i in range(nvars)]
    return [g for g in gens if g]


def monomials_up_to(nvars: int, bound: int) -> list[tuple]:
    mons = [e for e in product(range(bound + 1), repeat=nvars) if sum(e) <= bound]
    mons.sort()
    return mons


def _rank(rows: list[dict]) -> int:
    # exact sparse Gaussian elimination over Q
    pivots: dict[tuple, dict] = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = max(row)
            if col not in pivots:
                pivots[col] = row
                rank += 1
                break
            piv = pivots[col]
            factor = row[col] / piv[col]
            for c, v in piv.items():
                nv = row.get(c, Fraction(0)) - factor * v
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
    return rank


def truncated_quotient_dim(gens: list[Term], nvars: int, bound: int) -> int:
    """Dimension of (monomials of degree <= bound) modulo degree-bounded multiples."""
    rows = []
    for g in gens:
        gdeg = max(sum(e) for e in g)
        for m in monomials_up_to(nvars, bound - gdeg):
            rows.append({tuple(a + b for a, b in zip(e, m)): c for e, c in g.items()})
    total = len(monomials_up_to(nvars, bound))
    return total - _rank(rows)


def milnor_number_brute(f: Term, nvars: int, bound: int = 8) -> int:
    """Milnor number of f at the origin, by linear algebra up to the bound.

    Requires each Jacobian generator to be homogeneous so the truncation is
    exact, and requires the count to have stabilized at the bound.
    """
    gens = jacobian(f, nvars)
    if not gens:
        raise ValueError("zero Jacobian")
    for g in gens:
        degs = {sum(e) for e in g}
        if len(degs) != 1:
            raise ValueError("oracle requires homogeneous Jacobian generators")
    prev = truncated_quotient_dim(gens, nvars, bound - 1)
    curr = truncated_quotient_dim(gens, nvars, bound)
    if prev != curr:
        raise ValueError(f"count not stabilized at bound {bound}: {prev} != {curr}")
    return curr
