"""Orchestration: profile a polynomial, pick the applicable defect formula,
and assemble the full report.

Route selection: the Milnor-pair formula (eqF) whenever the locus at
infinity is finite; otherwise the Euler-drop formula (eqB) when the fibre
singularities at infinity are finite and the caller supplied the Euler
characteristic of the top-form zero set.  When neither gate opens the
defect stays uncomputed and the report says so.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiReport, Verdict, delta_eqB, delta_eqF, range_check
from .poly import Poly
from .singular import (
    AnalysisError,
    GateViolation,
    SingularityProfile,
    fiber_milnor_sum,
    infinity_milnor_pairs,
    singularity_profile,
)


@dataclass(frozen=True)
class AnalysisResult:
    profile: SingularityProfile
    report: BettiReport
    failure: str | None = None  # why the defect is missing, when it is

    @property
    def all_verdicts_pass(self) -> bool:
        return all(v.passed for v in self.report.range_verdicts)


def analyze(
    f: Poly,
    seed: int = 0,
    t_samples: int = 2,
    assume_concentrated: bool = False,
    chi_fd: int | None = None,
    line_at_infinity: bool = False,
) -> AnalysisResult:
    profile = singularity_profile(f, seed)
    report = None
    failure = None
    if profile.dim_sigma_inf <= 0:
        try:
            pairs = infinity_milnor_pairs(
                f,
                seed,
                t_samples,
                assume_concentrated=assume_concentrated,
                profile=profile,
            )
            report = delta_eqF(f, pairs, profile)
        except AnalysisError as exc:
            failure = str(exc)
    elif chi_fd is not None:
        try:
            mu_sum, t_used = fiber_milnor_sum(
                f,
                seed,
                t_samples,
                assume_concentrated=assume_concentrated,
                profile=profile,
            )
            report = delta_eqB(f, mu_sum, chi_fd)
            from dataclasses import replace

            report = replace(report, t_used=t_used)
        except AnalysisError as exc:
            failure = str(exc)
    else:
        failure = (
            "the locus at infinity is a curve; supply the Euler characteristic "
            "of the top-form zero set to use the Euler-drop formula"
        )
    if report is None:
        empty = BettiReport(
            n=len(f.vars), d=int(f.degree), delta=None, b_top=None, method="none"
        )
        return AnalysisResult(profile=profile, report=empty, failure=failure)
    verdicts = range_check(report, profile, line_at_infinity)
    return AnalysisResult(profile=profile, report=report.with_verdicts(verdicts))
