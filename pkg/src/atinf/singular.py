"""Singular loci, Milnor numbers, and the aggregate sums over singularities
at infinity of a polynomial map.

For f of degree d in n variables with top form f_d and subtop form f_{d-1}:

  * the affine singular locus is the zero set of the Jacobian ideal of f;
  * the singular locus of {f_d = 0} in projective (n-1)-space collects the
    points at infinity where the closures of the fibres are tangent to the
    hyperplane at infinity; it is the same for every fibre;
  * the closed generic fibre {F - t*z^d = 0} (F the homogenization of f,
    z the hyperplane at infinity) is singular at infinity exactly along
    that locus intersected with {f_{d-1} = 0}.

Milnor numbers are never computed by solving for points: every sum is the
vector-space dimension of a quotient algebra, which aggregates conjugate
non-rational points automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import (
    GLOBAL,
    LOCAL,
    IdealBasis,
    bases_equal,
    saturate,
    saturate_by_ideal,
    standard_basis,
)
from .invariants import is_zero_dim, krull_dim, proj_dim, quotient_dim, staircase
from .poly import LinearChange, Poly, PolyError, fresh_var
from .sampling import rng_for, sample_int_matrix, sample_rational


class AnalysisError(ValueError):
    """Base for failures that make an invariant uncomputable."""


class GateViolation(AnalysisError):
    """A hypothesis required by a formula does not hold for this input."""


class ChartNormalizationFailed(GateViolation):
    pass


class NonIsolatedSingularities(AnalysisError):
    pass


class AtypicalValueInstability(AnalysisError):
    pass


CHART_TRIES = 20
T_ROUNDS = 3


def jacobian_ideal(f: Poly) -> IdealBasis:
    """Ideal generated by all first partials of f (no basis computed yet)."""
    gens = tuple(g for g in (f.derivative(v) for v in f.vars) if not g.is_zero())
    return IdealBasis(f.vars, gens, GLOBAL, False)


@dataclass(frozen=True)
class SingularityProfile:
    """Dimensions of the singular loci together with the chart that holds
    every singularity at infinity away from the last coordinate hyperplane."""

    n: int
    d: int
    dim_sing_affine: int  # -1 means smooth
    dim_sigma_inf: int  # -1 means general-at-infinity
    dim_sigma_cap_fd1: int
    general_at_infinity: bool
    chart_change: LinearChange | None


@dataclass(frozen=True)
class MilnorPairSums:
    """Total Milnor numbers of the closed generic fibre and of its slice by
    the hyperplane at infinity, summed over all singular points."""

    sum_mu_fiber: int
    sum_mu_boundary: int
    t_used: tuple[Fraction, ...]


def _dim_affine(gens: Sequence[Poly], vars) -> int:
    gens = [g for g in gens if g and not g.is_zero()]
    if not gens:
        return len(vars)
    return krull_dim(standard_basis(gens, GLOBAL))


def _proj_dim_of(gens: Sequence[Poly], vars, n: int) -> int:
    gens = [g for g in gens if g and not g.is_zero()]
    if not gens:
        return n - 2  # zero ideal cuts nothing: all of projective space
    return proj_dim(gens)


def find_chart(
    cone_gens: Sequence[Poly], vars: Sequence[str], seed: int, tries: int = CHART_TRIES
) -> LinearChange | None:
    """Linear change placing the given homogeneous cone off the hyperplane
    {last variable = 0}; verified exactly, None if every draw fails.

    The identity is tried first, then seeded random integer matrices with
    entries in [-5, 5].
    """
    vars = tuple(vars)
    n = len(vars)
    last = Poly.variable(vars, vars[-1])
    rng = rng_for(seed, "chart")
    # smallest entries first: they keep every downstream coefficient small
    candidates = [LinearChange.identity(n)]
    for bound, count in ((1, tries // 3), (2, tries // 3), (5, tries - 2 * (tries // 3))):
        for _ in range(count):
            candidates.append(sample_int_matrix(rng, n, bound))
    for change in candidates:
        moved = [g.apply_change(change) for g in cone_gens if not g.is_zero()]
        if _proj_dim_of(moved + [last], vars, n) == -1:
            return change
    return None


def singularity_profile(f: Poly, seed: int = 0) -> SingularityProfile:
    """Dimensions of the affine singular locus, of the singular locus at
    infinity, and of the latter cut by the subtop form; plus a verified chart
    when the locus at infinity is finite."""
    if f.degree < 1:
        raise PolyError("degree must be at least 1")
    n = len(f.vars)
    d = int(f.degree)
    f_d = f.graded_part(d)
    f_d1 = f.graded_part(d - 1)
    jac_aff = [f.derivative(v) for v in f.vars]
    jac_inf = [f_d.derivative(v) for v in f.vars]
    dim_sing = _dim_affine(jac_aff, f.vars)
    dim_sigma = _proj_dim_of(jac_inf, f.vars, n)
    dim_cap = _proj_dim_of(jac_inf + [f_d1], f.vars, n)
    chart = None
    if dim_sigma <= 0:
        chart = find_chart(jac_inf, f.vars, seed)
    return SingularityProfile(
        n=n,
        d=d,
        dim_sing_affine=dim_sing,
        dim_sigma_inf=dim_sigma,
        dim_sigma_cap_fd1=dim_cap,
        general_at_infinity=(dim_sigma == -1),
        chart_change=chart,
    )


# -- polar loci ---------------------------------------------------------------


def _change_sending_linear_to_last(l: Poly) -> LinearChange:
    """Invertible change c with (l o c) = last variable (constant part of l
    is ignored)."""
    vars = l.vars
    n = len(vars)
    lin = l.graded_part(1)
    if lin.is_zero():
        raise PolyError("l must have a nonzero linear part")
    coeffs = [Fraction(0)] * n
    for e, c in lin.terms.items():
        coeffs[e.index(1)] = c
    # build an invertible matrix whose last row is the coefficient vector,
    # then use its inverse: l(A^%-1 x) = x_n
    rows: list[list[Fraction]] = []
    basis_rows = [
        [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)
    ]

    def rank_of(mat):
        m = [row[:] for row in mat]
        r = 0
        for col in range(n):
            piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            for i in range(len(m)):
                if i != r and m[i][col] != 0:
                    fct = m[i][col] / m[r][col]
                    m[i] = [a - fct * b for a, b in zip(m[i], m[r])]
            r += 1
        return r

    for cand in basis_rows:
        if len(rows) == n - 1:
            break
        if rank_of(rows + [cand, coeffs]) == len(rows) + 2:
            rows.append(cand)
    rows.append(coeffs)
    return LinearChange(rows).inverse_change()


def polar_locus(f: Poly, l: Poly) -> IdealBasis:
    """Closure of the critical locus of the pair (l, f) away from the
    singular locus of f, as an ideal in the original coordinates.

    After moving l to the last coordinate this is the saturation of the first
    n-1 partials by the full Jacobian ideal.
    """
    if l.degree != 1:
        raise PolyError("l must be linear")
    change = _change_sending_linear_to_last(l)
    g = f.apply_change(change)
    partials = [g.derivative(v) for v in g.vars[:-1]]
    partials = [p for p in partials if not p.is_zero()]
    if not partials:
        # f depends on l only: the critical locus of the pair is everything,
        # away from Sing f this is still everything
        raise PolyError("polar locus undefined: f depends only on l")
    jac = [g.derivative(v) for v in g.vars]
    jac = [p for p in jac if not p.is_zero()]
    if not jac:
        sat = standard_basis(partials, GLOBAL)
    else:
        sat = saturate_by_ideal(partials, jac)
    back = change.inverse_change()
    gens = tuple(p.apply_change(back) for p in sat.gens)
    out = standard_basis(gens, GLOBAL) if gens else IdealBasis(f.vars, (), GLOBAL, True)
    return out


def bertini_check(f: Poly, l: Poly) -> bool:
    """True iff the polar locus of (l, f) is at most a curve (or empty).

    Reducedness is not verified; this only certifies the dimension bound.
    """
    try:
        basis = polar_locus(f, l)
    except PolyError:
        return False
    if not basis.gens:
        return False
    return krull_dim(basis) <= 1


# -- local and aggregated Milnor numbers --------------------------------------


def local_milnor(f: Poly, point: Sequence) -> int | None:
    """Milnor number of the function germ of f at the point (of its Jacobian
    ideal under the local order); None when the singularity is not isolated.
    """
    if len(point) != len(f.vars):
        raise PolyError("point has wrong length")
    shifts = {
        v: Poly.variable(f.vars, v) + Poly.const(f.vars, c)
        for v, c in zip(f.vars, point)
        if Fraction(c) != 0
    }
    g = f.substitute(shifts) if shifts else f
    gens = [g.derivative(v) for v in g.vars]
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        return None  # constant germ: critical everywhere
    return quotient_dim(standard_basis(gens, LOCAL))


def _int_echelon(vectors: list[list[int]], n: int) -> list[list[int]]:
    """Row-echelon basis over the integers, rows gcd-normalized as they reduce."""
    from math import gcd

    basis: list[list[int]] = []
    pivots: list[int] = []
    for vec in vectors:
        row = vec[:]
        for bi, col in enumerate(pivots):
            if row[col] != 0:
                b = basis[bi]
                p, f = b[col], row[col]
                row = [a * p - f * c for a, c in zip(row, b)]
                g = 0
                for a in row:
                    g = gcd(g, a)
                    if g == 1:
                        break
                if g > 1:
                    row = [a // g for a in row]
        piv = next((c for c in range(n) if row[c] != 0), None)
        if piv is None:
            continue
        basis.append(row)
        pivots.append(piv)
    return basis


def _clear_denominators(matrix: list[list[Fraction]]) -> tuple[list[list[int]], int]:
    from math import lcm

    den = 1
    for row in matrix:
        for v in row:
            den = lcm(den, v.denominator)
    return [[int(v * den) for v in row] for row in matrix], den


def _stable_rank(matrix: list[list[Fraction]]) -> int:
    """Rank of every high power of M (dimension of its invertible part).

    Iterates the image subspace instead of powering the matrix, so entries
    stay small; rank is invariant under scaling, so everything runs on
    integers after clearing denominators.
    """
    n = len(matrix)
    if n == 0:
        return 0
    rows, _ = _clear_denominators(matrix)

    def apply(vec: list[int]) -> list[int]:
        return [
            sum(row[j] * vec[j] for j in range(n) if vec[j] != 0)
            for row in rows
        ]

    image = _int_echelon([list(col) for col in zip(*rows)], n)
    while True:
        nxt = _int_echelon([apply(v) for v in image], n)
        if len(nxt) == len(image):
            return len(nxt)
        image = nxt


def _multiplication_matrix(g: Poly, basis: IdealBasis) -> list[list[Fraction]]:
    """Matrix of multiplication by g on the staircase basis of the quotient.

    The normal forms are chained along the staircase (every standard monomial
    is a one-variable step away from a smaller one), so each reduction starts
    from an already reduced input.
    """
    from .groebner import normal_form

    mons = staircase(basis)
    index = {e: i for i, e in enumerate(mons)}
    n = len(basis.vars)
    table: dict[tuple, Poly] = {}
    order = sorted(mons, key=sum)
    for e in order:
        if sum(e) == 0:
            table[e] = normal_form(g, basis)
            continue
        i = next(k for k in range(n) if e[k])
        prev = table[e[:i] + (e[i] - 1,) + e[i + 1 :]]
        step = tuple(1 if k == i else 0 for k in range(n))
        table[e] = normal_form(prev.mul_term(step, 1), basis)
    cols = []
    for e in mons:
        col = [Fraction(0)] * len(mons)
        for e2, c in table[e].terms.items():
            col[index[e2]] = c
        cols.append(col)
    return [list(row) for row in zip(*cols)]


def milnor_sum_on_fiber(g: Poly, fast: bool = True) -> int:
    """Sum of the Milnor numbers at the singular points of {g = 0}.

    The double-saturation recipe: the saturation of the Jacobian ideal by g
    collects exactly the critical components off the fibre; saturating the
    Jacobian ideal by that collection keeps the components at fibre singular
    points, whose quotient dimension aggregates the local Milnor numbers.

    With fast=True and a finite critical locus the number is extracted from
    the quotient algebra directly: multiplication by g is invertible on the
    local factors off the fibre and nilpotent on those on it, so the sum is
    the algebra dimension minus the stable rank of that multiplication.
    Both routes compute the same number.
    """
    if g.degree < 1:
        raise PolyError("degree must be at least 1")
    gens = [g.derivative(v) for v in g.vars]
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        raise NonIsolatedSingularities("non-isolated fiber singularities")
    jac = standard_basis(gens, GLOBAL)
    if jac.contains_one():
        return 0
    if fast and is_zero_dim(jac):
        return quotient_dim(jac) - _stable_rank(_multiplication_matrix(g, jac))
    off = saturate(jac.gens, g)
    if off.contains_one():
        on = jac
    else:
        on = saturate_by_ideal(jac.gens, off.gens)
    if not is_zero_dim(on):
        raise NonIsolatedSingularities("non-isolated fiber singularities")
    if on.contains_one():
        return 0
    return quotient_dim(on)


# -- sums at infinity ----------------------------------------------------------


def _critical_value_checker(f: Poly):
    """Callable deciding whether the affine fibre over t is smooth.

    With a finite critical locus the critical values are the eigenvalues of
    multiplication by f on the quotient algebra, so each test is an integer
    rank computation against a matrix built once.  Otherwise each test falls
    back to an ideal-triviality check.
    """
    gens = [f.derivative(v) for v in f.vars]
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        return lambda t: False  # every fibre of a constant is critical
    jac = standard_basis(gens, GLOBAL)
    if jac.contains_one():
        return lambda t: True
    if is_zero_dim(jac):
        rows, den = _clear_denominators(_multiplication_matrix(f, jac))
        n = len(rows)

        def check(t: Fraction) -> bool:
            p, q = t.numerator, t.denominator
            shifted = [
                [q * rows[i][j] - (p * den if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
            return len(_int_echelon(shifted, n)) == n

        return check

    def check(t: Fraction) -> bool:
        sys_gens = gens + [f - Poly.const(f.vars, t)]
        return krull_dim(standard_basis(sys_gens, GLOBAL)) == -1

    return check


def _fiber_sum_in_chart(
    f: Poly, chart: LinearChange, seed: int, t_samples: int
) -> tuple[int, tuple[Fraction, ...]]:
    """Milnor sum over the singular points of the closed generic fibre, in
    the chart where the last coordinate is nonzero.

    Samples random rational t, discards values whose affine fibre is not
    smooth, and requires all retained samples to agree.
    """
    d = int(f.degree)
    fc = f.apply_change(chart)
    z = fresh_var(f.vars, "z_")
    F = fc.homogenize(z, d)
    A = F.dehomogenize(f.vars[-1], 1)
    zd = Poly.variable(A.vars, z) ** d
    smooth = _critical_value_checker(f)
    rng = rng_for(seed, "t")
    for _ in range(T_ROUNDS):
        sums: list[int] = []
        used: list[Fraction] = []
        guard = 0
        while len(sums) < t_samples and guard < 40:
            guard += 1
            t = sample_rational(rng)
            if not smooth(t):
                continue
            G = A - zd.scale(t)
            sums.append(milnor_sum_on_fiber(G))
            used.append(t)
        if len(sums) == t_samples and len(set(sums)) == 1:
            return sums[0], tuple(used)
    raise AtypicalValueInstability("atypical-value instability")


def infinity_milnor_pairs(
    f: Poly,
    seed: int = 0,
    t_samples: int = 2,
    assume_concentrated: bool = False,
    profile: SingularityProfile | None = None,
) -> MilnorPairSums:
    """Milnor sums of the closed generic fibre and of its boundary slice,
    over the singularities at infinity.

    Requires the locus at infinity to be finite and, unless the caller
    asserts that the reduced homology of the generic fibre is concentrated
    in top dimension, a finite affine singular locus as well.
    """
    if t_samples < 2:
        raise ValueError("t_samples must be at least 2")
    if profile is None:
        profile = singularity_profile(f, seed)
    if profile.dim_sigma_inf > 0:
        raise GateViolation(
            f"singular locus at infinity has dimension {profile.dim_sigma_inf}"
        )
    if profile.dim_sing_affine > 0 and not assume_concentrated:
        raise GateViolation(
            f"affine singular locus has dimension {profile.dim_sing_affine}; "
            "pass the concentration override if the generic fibre is known "
            "to have top-concentrated homology"
        )
    if profile.chart_change is None:
        raise ChartNormalizationFailed("chart normalization failed")
    chart = profile.chart_change
    d = profile.d
    f_d = f.graded_part(d)
    g_boundary = f_d.apply_change(chart).dehomogenize(f.vars[-1], 1)
    if g_boundary.is_constant():
        # verified chart keeps the top form off a pure power, so a constant
        # means the locus at infinity is empty in this chart
        sum_boundary = 0
    else:
        sum_boundary = milnor_sum_on_fiber(g_boundary)
    sum_fiber, t_used = _fiber_sum_in_chart(f, chart, seed, t_samples)
    return MilnorPairSums(sum_fiber, sum_boundary, t_used)


def fiber_milnor_sum(
    f: Poly,
    seed: int = 0,
    t_samples: int = 2,
    assume_concentrated: bool = False,
    profile: SingularityProfile | None = None,
) -> tuple[int, tuple[Fraction, ...]]:
    """Milnor sum over the singular points of the closed generic fibre when
    only the slice of the infinity locus by the subtop form is finite.

    This is the fibre half of infinity_milnor_pairs with a weaker gate: the
    chart only needs to hold the singular points of the closed fibre, which
    live on the intersection with {f_{d-1} = 0}.
    """
    if t_samples < 2:
        raise ValueError("t_samples must be at least 2")
    if profile is None:
        profile = singularity_profile(f, seed)
    if profile.dim_sigma_cap_fd1 > 0:
        raise GateViolation(
            "closed fibres have non-isolated singularities at infinity"
        )
    if profile.dim_sing_affine > 0 and not assume_concentrated:
        raise GateViolation(
            f"affine singular locus has dimension {profile.dim_sing_affine}"
        )
    d = profile.d
    f_d = f.graded_part(d)
    cone = [f_d.derivative(v) for v in f.vars] + [f.graded_part(d - 1)]
    cone = [p for p in cone if not p.is_zero()]
    chart = find_chart(cone, f.vars, seed)
    if chart is None:
        raise ChartNormalizationFailed("chart normalization failed")
    return _fiber_sum_in_chart(f, chart, seed, t_samples)
