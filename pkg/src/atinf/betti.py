"""Top Betti defect formulas, the Euler-characteristic evaluator for
stratified projective hypersurfaces, the theorem-range verdicts, and the
small-defect classification table.

For f of degree d in n variables the top Betti number of the generic fibre
is at most (d-1)^n; the defect is the gap.  Two exact expressions are
implemented:

  eqF  defect = sum over the singularities at infinity of the Milnor numbers
       of the closed generic fibre plus those of its hyperplane slice
       (valid when that locus is finite);

  eqB  defect = Milnor sum of the closed generic fibre plus
       (-1)^n * (chi of a smooth degree-d hypersurface - chi of the top-form
       zero set) (valid when the fibre singularities at infinity are finite,
       with the chi of the possibly non-reduced top form supplied by the
       caller, typically through euler_sum on declared strata).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Poly
from .singular import GateViolation, MilnorPairSums, SingularityProfile


def chi_smooth(m: int, d: int) -> int:
    """Euler characteristic of a smooth degree-d hypersurface in projective
    m-space."""
    n = m + 1
    value = Fraction(n) - Fraction(1, d) * (1 + (-1) ** (n - 1) * (d - 1) ** n)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class DefectClass:
    """One candidate configuration of boundary singularities at infinity.

    boundary lists the pairs <A_i|A_j> with multiplicity; the label is the
    Arnol'd-type name.  Milnor data alone cannot tell A_k from other germs
    of the same Milnor number, so candidates carry a mu-consistent qualifier.
    """

    boundary: tuple[str, ...]
    arnold: str
    qualifier: str = "mu-consistent"


DEFECT_TABLE: dict[int, tuple[DefectClass, ...]] = {
    0: (DefectClass(("<A0|A0>",), "A_0"),),
    1: (DefectClass(("<A0|A1>",), "A_1"),),
    2: (
        DefectClass(("<A0|A2>",), "A_2"),
        DefectClass(("<A0|A1>", "<A0|A1>"), "2A_1"),
        DefectClass(("<A1|A1>",), "B_2"),
    ),
    3: (
        DefectClass(("<A0|A3>",), "A_3"),
        DefectClass(("<A0|A2>", "<A0|A1>"), "A_2+A_1"),
        DefectClass(("<A0|A1>", "<A0|A1>", "<A0|A1>"), "3A_1"),
        DefectClass(("<A1|A2>",), "C_3"),
        DefectClass(("<A1|A1>", "<A0|A1>"), "B_2+A_1"),
        DefectClass(("<A2|A1>",), "B_3"),
    ),
}


def classify_defect(delta: int) -> tuple[DefectClass, ...]:
    """Candidate boundary-type multisets for a defect of at most 3."""
    if delta not in DEFECT_TABLE:
        raise ValueError(f"no classification row for defect {delta}")
    return DEFECT_TABLE[delta]


@dataclass(frozen=True)
class BettiReport:
    n: int
    d: int
    delta: int | None
    b_top: int | None
    method: str  # eqF | eqB | general-at-infinity | none
    mu_fiber_sum: int | None = None
    mu_boundary_sum: int | None = None
    t_used: tuple[Fraction, ...] = ()
    chi_fd: int | None = None
    delta_chi_inf: int | None = None
    range_verdicts: tuple[Verdict, ...] = ()
    classification_candidates: tuple[DefectClass, ...] = ()

    def with_verdicts(self, verdicts: tuple[Verdict, ...]) -> "BettiReport":
        from dataclasses import replace

        return replace(self, range_verdicts=verdicts)


def delta_eqF(
    f: Poly, pairs: MilnorPairSums, profile: SingularityProfile | None = None
) -> BettiReport:
    """Defect as the total Milnor number at infinity of the closed generic
    fibre together with its boundary slice."""
    n = len(f.vars)
    d = int(f.degree)
    delta = pairs.sum_mu_fiber + pairs.sum_mu_boundary
    method = "eqF"
    if delta == 0:
        method = "general-at-infinity"
        if profile is not None and not profile.general_at_infinity:
            raise GateViolation(
                "zero defect computed but the locus at infinity is not empty"
            )
    candidates = DEFECT_TABLE.get(delta, ())
    return BettiReport(
        n=n,
        d=d,
        delta=delta,
        b_top=(d - 1) ** n - delta,
        method=method,
        mu_fiber_sum=pairs.sum_mu_fiber,
        mu_boundary_sum=pairs.sum_mu_boundary,
        t_used=pairs.t_used,
        classification_candidates=candidates,
    )


def delta_eqB(f: Poly, mu_sum_X0bar: int, chi_fd: int) -> BettiReport:
    """Defect from the fibre Milnor sum and the Euler-characteristic drop of
    the top-form zero set (chi_fd is the Euler characteristic of that set,
    reduced structure)."""
    n = len(f.vars)
    d = int(f.degree)
    dchi = chi_smooth(n - 1, d) - chi_fd
    delta = mu_sum_X0bar + (-1) ** n * dchi
    candidates = DEFECT_TABLE.get(delta, ())
    return BettiReport(
        n=n,
        d=d,
        delta=delta,
        b_top=(d - 1) ** n - delta,
        method="eqB",
        mu_fiber_sum=mu_sum_X0bar,
        chi_fd=chi_fd,
        delta_chi_inf=dchi,
        classification_candidates=candidates,
    )


# -- Euler characteristics of stratified hypersurfaces ------------------------


@dataclass(frozen=True)
class CurveStratum:
    """One irreducible curve in the singular locus: genus, transversal Milnor
    number, and the counts of axis points and special points on it."""

    genus: int
    mu_transversal: int
    nu: int
    gamma: int


@dataclass(frozen=True)
class PointStratum:
    """Point contribution: an isolated singular point with its Milnor number
    (kind "mu"), a special point on a curve whose local Milnor fibre is a
    sphere (kind "dinf"), or a declared local chi value (kind "chi")."""

    kind: str  # "mu" | "dinf" | "chi"
    value: int = 0


@dataclass(frozen=True)
class StratificationData:
    n: int
    d: int
    curves: tuple[CurveStratum, ...] = ()
    points: tuple[PointStratum, ...] = ()

    def validate(self) -> None:
        if self.n < 2 or self.d < 1:
            raise ValueError("need n >= 2 and d >= 1")
        for c in self.curves:
            if c.genus < 0 or c.mu_transversal < 1 or c.nu < 0 or c.gamma < 0:
                raise ValueError(f"invalid curve stratum {c}")
        for p in self.points:
            if p.kind not in ("mu", "dinf", "chi"):
                raise ValueError(f"unknown point stratum kind {p.kind!r}")
            if p.kind == "mu" and p.value < 1:
                raise ValueError("isolated points need a positive Milnor number")
        on_curves = sum(1 for p in self.points if p.kind in ("dinf", "chi"))
        declared = sum(c.gamma for c in self.curves)
        if on_curves != declared:
            raise ValueError(
                f"curves declare {declared} special points but "
                f"{on_curves} point strata are attached to curves"
            )


def euler_sum(data: StratificationData) -> int:
    """Euler characteristic of a degree-d hypersurface in projective
    (n-1)-space whose singular locus is the declared union of curves and
    isolated points.

    Each curve contributes (nu + gamma + 2g - 2) times its transversal
    Milnor number with sign (-1)^(n-1); a special point on a curve whose
    Milnor fibre is a sphere contributes (-1)^(n-1); an isolated point with
    Milnor number mu contributes (-1)^(n-1) * mu; declared local chi values
    are added as given.
    """
    data.validate()
    n, d = data.n, data.d
    sign = (-1) ** (n - 1)
    total = chi_smooth(n - 1, d)
    for c in data.curves:
        total += sign * (c.nu + c.gamma + 2 * c.genus - 2) * c.mu_transversal
    for p in data.points:
        if p.kind == "mu":
            total += sign * p.value
        elif p.kind == "dinf":
            total += sign
        else:
            total += p.value
    return total


def delta_chi_from_strata(data: StratificationData) -> int:
    """The Euler-characteristic drop from the smooth reference hypersurface
    to the declared one (the ingredient of the eqB formula when the top form
    is reduced of the same degree)."""
    return chi_smooth(data.n - 1, data.d) - euler_sum(data)


# -- theorem-range verdicts ----------------------------------------------------


def range_check(
    report: BettiReport,
    profile: SingularityProfile,
    line_at_infinity_declared: bool = False,
) -> tuple[Verdict, ...]:
    """Named consistency checks of the computed defect against the proved
    ranges; vacuous cases pass."""
    if report.delta is None:
        raise ValueError("defect was not computed")
    delta, d, n = report.delta, report.d, report.n
    dim_sing = profile.dim_sing_affine
    dim_inf = profile.dim_sigma_inf
    verdicts = [
        Verdict("DELTA_NONNEG", delta >= 0, f"delta = {delta}"),
        Verdict(
            "GAI_IFF_ZERO",
            (delta == 0) == profile.general_at_infinity,
            f"delta = {delta}, general_at_infinity = {profile.general_at_infinity}",
        ),
    ]
    if 0 < delta <= d - 1:
        ok = dim_sing <= 0 and dim_inf <= 0
        detail = f"0 < {delta} <= d-1 so both singular loci must be finite; dims = ({dim_sing}, {dim_inf})"
    else:
        ok, detail = True, "vacuous: delta outside (0, d-1]"
    verdicts.append(Verdict("RANGE_B", ok, detail))
    if d <= delta < 2 * d - 2:
        ok = dim_inf <= 0
        detail = (
            f"d <= {delta} < 2d-2 so the locus at infinity must be finite; "
            f"dim = {dim_inf}; affine singular locus has dim {dim_sing} "
            "(line alternative reported, not decided)"
        )
    else:
        ok, detail = True, "vacuous: delta outside [d, 2d-2)"
    verdicts.append(Verdict("RANGE_C_PARTIAL", ok, detail))
    if line_at_infinity_declared:
        bound = 2 * (n - 1) * (d - 2) + 1
        verdicts.append(
            Verdict(
                "LINE_INF_BOUND",
                delta >= bound,
                f"declared line at infinity with Morse transversal type: delta = {delta} >= {bound}",
            )
        )
    return tuple(verdicts)
