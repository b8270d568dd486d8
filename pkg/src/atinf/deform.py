"""Degree-preserving deformations and the empirical checks attached to them:
dimension drops of the singular loci and semi-continuity of the defect.

Three kinds of deformation of f (degree d):

  linear   f + eps*l        isolates the affine singularities and leaves the
                            locus at infinity untouched;
  power    f + eps*l^d      cuts the dimension of whichever singular locus
                            is positive-dimensional by one;
  general  f + eps*h        with h a degree-d form with empty singular locus
                            at infinity, lands on a polynomial that is
                            general at infinity.

"Small enough eps" is replaced by agreement across at least two sampled
values; non-generic draws are reported as retryable, never silently
accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import GLOBAL, bases_equal, standard_basis
from .invariants import proj_dim
from .pipeline import analyze
from .poly import Poly, PolyError
from .sampling import rng_for, sample_linear_form, sample_rational
from .singular import bertini_check, jacobian_ideal, singularity_profile


class DeformationError(ValueError):
    pass


@dataclass(frozen=True)
class DeformationSpec:
    kind: str  # "linear" | "power" | "general"
    l_or_h: Poly
    epsilons: tuple[Fraction, ...]

    def __post_init__(self):
        if self.kind not in ("linear", "power", "general"):
            raise DeformationError(f"unknown deformation kind {self.kind!r}")
        if not self.epsilons or any(e == 0 for e in self.epsilons):
            raise DeformationError("epsilons must be nonzero")
        if self.kind in ("linear", "power"):
            p = self.l_or_h
            if p.degree != 1 or not p.is_homogeneous():
                raise DeformationError("linear/power deformations need a linear form")


def generic_certificate(f: Poly, l: Poly) -> bool:
    """Verifiable part of 'l is general with respect to f and its top form':
    both polar loci are at most curves and {l = 0} slices one dimension off
    every positive-dimensional singular locus."""
    d = int(f.degree)
    f_d = f.graded_part(d)
    if not (bertini_check(f, l) and bertini_check(f_d, l)):
        return False
    from .groebner import standard_basis as _sb
    from .invariants import krull_dim as _kd

    jac_aff = [p for p in (f.derivative(v) for v in f.vars) if not p.is_zero()]
    dim_sing = _kd(_sb(jac_aff, GLOBAL)) if jac_aff else len(f.vars)
    if dim_sing >= 1:
        if _kd(_sb(jac_aff + [l], GLOBAL)) != dim_sing - 1:
            return False
    jac_inf = [p for p in (f_d.derivative(v) for v in f.vars) if not p.is_zero()]
    if jac_inf:
        sigma = proj_dim(jac_inf)
        if sigma >= 1 and proj_dim(jac_inf + [l.graded_part(1)]) != sigma - 1:
            return False
    return True


def make_spec(
    kind: str,
    f: Poly,
    with_poly: Poly | None = None,
    seed: int = 0,
    samples: int = 2,
) -> DeformationSpec:
    """Build a deformation, sampling the linear form or taking the standard
    degree-d form when none is given; a supplied general form is verified to
    have an empty singular locus at infinity."""
    rng = rng_for(seed, f"deform/{kind}")
    eps = tuple(sample_rational(rng, height=20) for _ in range(samples))
    if kind in ("linear", "power"):
        if with_poly is not None:
            l = with_poly
        else:
            l = sample_linear_form(rng, f.vars)
            for _ in range(20):
                if generic_certificate(f, l):
                    break
                l = sample_linear_form(rng, f.vars)
        return DeformationSpec(kind, l, eps)
    d = int(f.degree)
    if with_poly is not None:
        h = with_poly
    else:
        h = Poly(
            f.vars,
            {
                tuple(d if j == i else 0 for j in range(len(f.vars))): 1
                for i in range(len(f.vars))
            },
        )
    if h.degree != d or not h.is_homogeneous():
        raise DeformationError("general deformation needs a degree-d form")
    jac = [h.derivative(v) for v in h.vars]
    if proj_dim(jac) != -1:
        raise DeformationError(
            "general deformation form has singularities at infinity"
        )
    return DeformationSpec("general", h, eps)


def deform(f: Poly, spec: DeformationSpec, eps: Fraction) -> Poly:
    """f + eps*l, f + eps*l^d, or f + eps*h; the degree must not drop."""
    if eps == 0:
        raise DeformationError("eps must be nonzero")
    d = int(f.degree)
    if spec.kind == "linear":
        g = f + spec.l_or_h.scale(eps)
    elif spec.kind == "power":
        g = f + (spec.l_or_h ** d).scale(eps)
    else:
        g = f + spec.l_or_h.scale(eps)
    if g.degree != d:
        raise DeformationError("deformation dropped the degree")
    return g


@dataclass(frozen=True)
class DeformVerdict:
    name: str
    status: str  # "pass" | "fail" | "retry" | "incomparable"
    detail: str


def dimension_drop_check(f: Poly, spec: DeformationSpec, seed: int = 0) -> DeformVerdict:
    """Check the dimension behaviour of the singular loci under a linear or
    power deformation, for every sampled eps.

    linear: the affine singular locus must become finite and the locus at
    infinity must not move (equality of reduced Jacobian bases of the top
    form).  power: a positive-dimensional locus must drop by exactly one,
    a finite one must stay finite.  A failed genericity certificate for the
    linear form yields a retry verdict, not a failure.
    """
    if spec.kind not in ("linear", "power"):
        raise DeformationError("dimension drop applies to linear/power kinds")
    d = int(f.degree)
    f_d = f.graded_part(d)
    if not generic_certificate(f, spec.l_or_h):
        return DeformVerdict(
            "dimension-drop", "retry", "retry with new seed: non-generic l detected"
        )
    base = singularity_profile(f, seed)
    details = []
    for eps in spec.epsilons:
        g = deform(f, spec, eps)
        prof = singularity_profile(g, seed)
        if spec.kind == "linear":
            ok = prof.dim_sing_affine <= 0
            jac_f = standard_basis(
                [p for p in (f_d.derivative(v) for v in f.vars) if not p.is_zero()],
                GLOBAL,
            )
            g_d = g.graded_part(d)
            jac_g = standard_basis(
                [p for p in (g_d.derivative(v) for v in g.vars) if not p.is_zero()],
                GLOBAL,
            )
            same_inf = bases_equal(jac_f, jac_g)
            ok = ok and same_inf
            details.append(
                f"eps={eps}: dim Sing = {prof.dim_sing_affine}, locus at infinity "
                f"{'unchanged' if same_inf else 'changed'}"
            )
        else:
            ok = True
            for name, before, after in (
                ("affine", base.dim_sing_affine, prof.dim_sing_affine),
                ("infinity", base.dim_sigma_inf, prof.dim_sigma_inf),
            ):
                if before >= 1:
                    ok = ok and after == before - 1
                else:
                    ok = ok and after <= 0
            details.append(
                f"eps={eps}: dims ({base.dim_sing_affine},{base.dim_sigma_inf}) -> "
                f"({prof.dim_sing_affine},{prof.dim_sigma_inf})"
            )
        if not ok:
            return DeformVerdict("dimension-drop", "fail", "; ".join(details))
    return DeformVerdict("dimension-drop", "pass", "; ".join(details))


def semicontinuity_check(
    f: Poly,
    spec: DeformationSpec,
    seed: int = 0,
    assume_concentrated: bool = False,
    chi_fd: int | None = None,
) -> DeformVerdict:
    """Assert that the defect does not grow under the deformation, for every
    sampled eps; incomparable when either defect is out of the gates."""
    base = analyze(
        f, seed, assume_concentrated=assume_concentrated, chi_fd=chi_fd
    )
    if base.report.delta is None:
        return DeformVerdict(
            "semi-continuity", "incomparable", f"base defect uncomputable: {base.failure}"
        )
    details = [f"delta(f) = {base.report.delta}"]
    for eps in spec.epsilons:
        g = deform(f, spec, eps)
        res = analyze(g, seed)
        if res.report.delta is None:
            return DeformVerdict(
                "semi-continuity",
                "incomparable",
                f"eps={eps}: deformed defect uncomputable: {res.failure}",
            )
        details.append(f"delta(f_eps={eps}) = {res.report.delta}")
        if res.report.delta > base.report.delta:
            return DeformVerdict("semi-continuity", "fail", "; ".join(details))
    return DeformVerdict("semi-continuity", "pass", "; ".join(details))
