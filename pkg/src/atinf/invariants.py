"""Numerical invariants of ideals read off the leading-term staircase.

All of these consume a standard basis: the staircase (monomials outside the
leading-term ideal) carries the vector-space dimension of the quotient, and
the combinatorics of the leading terms carries the Krull dimension.

Conventions:
  * quotient_dim returns None for an infinite-dimensional quotient;
  * krull_dim returns -1 for the empty variety (1 in the ideal);
  * proj_dim is the affine cone dimension minus one, and returns -1 both for
    the empty projective set and for the cone {0}.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .groebner import GLOBAL, GroebnerError, IdealBasis, standard_basis
from .poly import Poly


def _minimal_leading_exponents(basis: IdealBasis) -> list[tuple]:
    lms = basis.leading_exponents()
    out = []
    for i, m in enumerate(lms):
        if any(
            all(a <= b for a, b in zip(other, m)) and (other != m or j < i)
            for j, other in enumerate(lms)
            if j != i
        ):
            continue
        out.append(m)
    return out


def quotient_dim(basis: IdealBasis) -> int | None:
    """Number of standard monomials, or None when the quotient is infinite.

    For a local order this counts the multiplicity of the origin alone; for a
    global order it is the total vector-space dimension of the quotient ring.
    """
    if not basis.is_standard:
        raise GroebnerError("quotient_dim needs a standard basis")
    lms = _minimal_leading_exponents(basis)
    n = len(basis.vars)
    if not lms:
        return None  # zero ideal
    # finite iff some pure power of every variable is a leading term
    for i in range(n):
        if not any(all(e == 0 for k, e in enumerate(m) if k != i) for m in lms):
            return None

    def in_lt(e: tuple) -> bool:
        return any(all(a <= b for a, b in zip(m, e)) for m in lms)

    origin = (0,) * n
    if in_lt(origin):
        return 0
    count = 0
    seen = {origin}
    queue = [origin]
    while queue:
        e = queue.pop()
        count += 1
        for i in range(n):
            e2 = e[:i] + (e[i] + 1,) + e[i + 1 :]
            if e2 not in seen and not in_lt(e2):
                seen.add(e2)
                queue.append(e2)
    return count


def staircase(basis: IdealBasis) -> list[tuple]:
    """The standard monomials (exponents outside the leading-term ideal),
    sorted; raises if infinite."""
    if not basis.is_standard:
        raise GroebnerError("staircase needs a standard basis")
    if quotient_dim(basis) is None:
        raise GroebnerError("staircase is infinite")
    lms = _minimal_leading_exponents(basis)
    n = len(basis.vars)

    def in_lt(e: tuple) -> bool:
        return any(all(a <= b for a, b in zip(m, e)) for m in lms)

    origin = (0,) * n
    if in_lt(origin):
        return []
    out = []
    seen = {origin}
    queue = [origin]
    while queue:
        e = queue.pop()
        out.append(e)
        for i in range(n):
            e2 = e[:i] + (e[i] + 1,) + e[i + 1 :]
            if e2 not in seen and not in_lt(e2):
                seen.add(e2)
                queue.append(e2)
    out.sort()
    return out


def krull_dim(basis: IdealBasis) -> int:
    """Dimension of the affine variety; -1 iff 1 is in the ideal.

    Computed as the largest variable subset S such that no leading term has
    its support inside S (a maximal independent set modulo the leading-term
    ideal).
    """
    if not basis.is_standard:
        raise GroebnerError("krull_dim needs a standard basis")
    if not basis.order.is_global:
        raise GroebnerError("krull_dim needs a global order")
    lms = _minimal_leading_exponents(basis)
    n = len(basis.vars)
    if not lms:
        return n
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if all(not sup <= s for sup in supports):
                return size
    return -1


def is_zero_dim(basis: IdealBasis) -> bool:
    """True iff the variety is a finite set (the empty set counts as finite).

    Standard criterion: a pure power of every variable appears among the
    leading terms.
    """
    if not basis.is_standard:
        raise GroebnerError("is_zero_dim needs a standard basis")
    if not basis.order.is_global:
        raise GroebnerError("is_zero_dim needs a global order")
    lms = _minimal_leading_exponents(basis)
    if not lms:
        return len(basis.vars) == 0
    for i in range(len(basis.vars)):
        if not any(all(e == 0 for k, e in enumerate(m) if k != i) for m in lms):
            return False
    return True


def proj_dim(gens: Sequence[Poly]) -> int:
    """Projective dimension of the common zero set of homogeneous generators.

    Returns (dimension of the affine cone) - 1, clamped to -1 when the cone
    is {0} or empty.
    """
    gens = [g for g in gens if g is not None and not g.is_zero()]
    if not gens:
        # zero ideal: the cone is the whole space
        raise GroebnerError("empty generator list")
    for g in gens:
        if not g.is_homogeneous():
            raise GroebnerError(f"non-homogeneous generator: {g}")
    kd = krull_dim(standard_basis(gens, GLOBAL))
    return kd - 1 if kd > 0 else -1
