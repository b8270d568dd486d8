"""Command-line front end: analyze single polynomials, run deformation
checks, evaluate stratified Euler characteristics, print the small-defect
table, and replay a fixture corpus.

Reports are JSON on stdout, byte-identical for identical requests (seeds
included).  Exit codes: 0 all verdicts pass, 1 a verdict or fixture failed,
2 the defect was not computable under the formula gates, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .betti import StratificationData, CurveStratum, PointStratum, euler_sum, classify_defect
from .deform import DeformationError, dimension_drop_check, make_spec, semicontinuity_check
from .groebner import GroebnerError
from .pipeline import AnalysisResult, analyze
from .poly import ParseError, Poly, PolyError, parse_poly
from .singular import AnalysisError

SCHEMA_VERSION = "1"
MAX_VARS = 8
MAX_DEGREE = 12

EXIT_OK = 0
EXIT_VERDICT_FAILED = 1
EXIT_UNCOMPUTABLE = 2
EXIT_INPUT_ERROR = 3


class InputError(ValueError):
    pass


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _frac(x: Fraction) -> str:
    return str(x)


def _parse_request_poly(text: str, vars: list[str], unsafe: bool) -> Poly:
    if not vars:
        raise InputError("empty variable list")
    if len(vars) > MAX_VARS and not unsafe:
        raise InputError(f"more than {MAX_VARS} variables; pass --unsafe to override")
    try:
        f = parse_poly(text, vars)
    except (ParseError, PolyError) as exc:
        raise InputError(str(exc)) from exc
    if f.degree != float("-inf") and f.degree > MAX_DEGREE and not unsafe:
        raise InputError(f"degree above {MAX_DEGREE}; pass --unsafe to override")
    if f.degree == float("-inf") or f.degree < 1:
        raise InputError("polynomial must be nonconstant")
    return f


def _profile_payload(res: AnalysisResult) -> dict:
    prof = res.profile
    chart = None
    if prof.chart_change is not None:
        chart = [[_frac(v) for v in row] for row in prof.chart_change.matrix]
    return {
        "dim_sing": prof.dim_sing_affine,
        "dim_sigma_inf": prof.dim_sigma_inf,
        "dim_sigma_cap_fd1": prof.dim_sigma_cap_fd1,
        "general_at_infinity": prof.general_at_infinity,
        "chart_matrix": chart,
    }


def _report_payload(res: AnalysisResult) -> dict:
    rep = res.report
    out = {
        "n": rep.n,
        "d": rep.d,
        "delta": rep.delta,
        "b_top": rep.b_top,
        "method": rep.method,
        "mu_fiber_sum": rep.mu_fiber_sum,
        "mu_boundary_sum": rep.mu_boundary_sum,
        "chi_fd": rep.chi_fd,
        "delta_chi_inf": rep.delta_chi_inf,
        "t_used": [_frac(t) for t in rep.t_used],
        "range_verdicts": [
            {"name": v.name, "passed": v.passed, "detail": v.detail}
            for v in rep.range_verdicts
        ],
        "classification_candidates": [
            {
                "boundary": list(c.boundary),
                "arnold": c.arnold,
                "qualifier": c.qualifier,
            }
            for c in rep.classification_candidates
        ],
    }
    if res.failure is not None:
        out["failure"] = res.failure
    return out


def _run_analyze(args) -> int:
    f = _parse_request_poly(args.poly, args.vars, args.unsafe)
    chi_fd = args.chi_fd
    if args.strata is not None:
        chi_fd = euler_sum(_load_strata(args.strata))
    res = analyze(
        f,
        seed=args.seed,
        t_samples=args.t_samples,
        assume_concentrated=args.assume_concentrated,
        chi_fd=chi_fd,
        line_at_infinity=args.assume_line_at_infinity,
    )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "mode": "analyze",
        "request": {
            "poly": args.poly,
            "vars": list(args.vars),
            "seed": args.seed,
            "t_samples": args.t_samples,
            "assume_concentrated": args.assume_concentrated,
        },
        "profile": _profile_payload(res),
        "report": _report_payload(res),
    }
    _emit(payload, args.pretty)
    if res.report.delta is None:
        return EXIT_UNCOMPUTABLE
    return EXIT_OK if res.all_verdicts_pass else EXIT_VERDICT_FAILED


def _run_deform(args) -> int:
    f = _parse_request_poly(args.poly, args.vars, args.unsafe)
    with_poly = None
    if getattr(args, "with_poly", None):
        with_poly = _parse_request_poly(args.with_poly, args.vars, True)
    try:
        spec = make_spec(args.kind, f, with_poly=with_poly, seed=args.seed)
    except DeformationError as exc:
        raise InputError(str(exc)) from exc
    verdicts = []
    if args.kind in ("linear", "power"):
        verdicts.append(dimension_drop_check(f, spec, seed=args.seed))
    verdicts.append(
        semicontinuity_check(
            f,
            spec,
            seed=args.seed,
            assume_concentrated=args.assume_concentrated,
            chi_fd=args.chi_fd,
        )
    )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "mode": "deform",
        "request": {
            "poly": args.poly,
            "vars": list(args.vars),
            "kind": args.kind,
            "seed": args.seed,
        },
        "deformation": {
            "kind": spec.kind,
            "with": str(spec.l_or_h),
            "epsilons": [_frac(e) for e in spec.epsilons],
        },
        "verdicts": [
            {"name": v.name, "status": v.status, "detail": v.detail} for v in verdicts
        ],
    }
    _emit(payload, args.pretty)
    statuses = {v.status for v in verdicts}
    if "fail" in statuses:
        return EXIT_VERDICT_FAILED
    if "retry" in statuses or "incomparable" in statuses:
        return EXIT_UNCOMPUTABLE
    return EXIT_OK


def _load_strata(path: str) -> StratificationData:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read strata file: {exc}") from exc
    try:
        curves = tuple(
            CurveStratum(
                genus=int(c["g"]),
                mu_transversal=int(c["mu_t"]),
                nu=int(c["nu"]),
                gamma=int(c["gamma"]),
            )
            for c in raw.get("curves", [])
        )
        points = tuple(
            PointStratum(kind=p["kind"], value=int(p.get("value", 0)))
            for p in raw.get("points", [])
        )
        data = StratificationData(
            n=int(raw["n"]), d=int(raw["d"]), curves=curves, points=points
        )
        data.validate()
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad strata file: {exc}") from exc
    return data


def _run_euler(args) -> int:
    data = _load_strata(args.strata)
    value = euler_sum(data)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "mode": "euler",
        "n": data.n,
        "d": data.d,
        "chi": value,
    }
    _emit(payload, args.pretty)
    return EXIT_OK


def _run_table(args) -> int:
    if not 0 <= args.delta <= 3:
        raise InputError("the classification table covers defects 0 to 3")
    rows = classify_defect(args.delta)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "mode": "table",
        "delta": args.delta,
        "rows": [
            {"boundary": list(c.boundary), "arnold": c.arnold, "qualifier": c.qualifier}
            for c in rows
        ],
    }
    _emit(payload, args.pretty)
    return EXIT_OK


# -- corpus runner -------------------------------------------------------------

_COMPARED_FIELDS = (
    "delta",
    "b_top",
    "method",
    "mu_fiber_sum",
    "mu_boundary_sum",
    "dim_sing",
    "dim_sigma_inf",
    "dim_sigma_cap_fd1",
    "chi_fd",
    "delta_chi_inf",
)


def run_fixture(raw: dict) -> tuple[bool, dict]:
    """Run one corpus fixture and compare against its expected fields."""
    f = _parse_request_poly(raw["poly"], list(raw["vars"]), bool(raw.get("unsafe", False)))
    chi_fd = raw.get("chi_fd")
    res = analyze(
        f,
        seed=int(raw.get("seed", 0)),
        t_samples=int(raw.get("t_samples", 2)),
        assume_concentrated=bool(raw.get("assume_concentrated", False)),
        chi_fd=chi_fd,
        line_at_infinity=bool(raw.get("line_at_infinity", False)),
    )
    got = _report_payload(res)
    got.update(
        {
            "dim_sing": res.profile.dim_sing_affine,
            "dim_sigma_inf": res.profile.dim_sigma_inf,
            "dim_sigma_cap_fd1": res.profile.dim_sigma_cap_fd1,
        }
    )
    diffs = {}
    for key, expected in raw.get("expected", {}).items():
        if key not in _COMPARED_FIELDS:
            raise InputError(f"unknown expected field {key!r}")
        if got.get(key) != expected:
            diffs[key] = {"expected": expected, "got": got.get(key)}
    if not res.all_verdicts_pass:
        diffs["range_verdicts"] = {
            "expected": "all pass",
            "got": [v.name for v in res.report.range_verdicts if not v.passed],
        }
    return (not diffs), diffs


def corpus_run(path: str) -> tuple[int, dict]:
    """Run every fixture file in the directory; exact comparison per field."""
    root = Path(path)
    if not root.is_dir():
        raise InputError(f"not a directory: {path}")
    files = sorted(root.glob("*.json"))
    results = []
    n_pass = 0
    for fp in files:
        try:
            raw = json.loads(fp.read_text())
            ok, diffs = run_fixture(raw)
        except (InputError, json.JSONDecodeError, KeyError, AnalysisError, GroebnerError) as exc:
            ok, diffs = False, {"error": str(exc)}
        results.append({"fixture": fp.name, "passed": ok, "diffs": diffs})
        if ok:
            n_pass += 1
    payload = {
        "schema_version": SCHEMA_VERSION,
        "mode": "corpus",
        "total": len(files),
        "passed": n_pass,
        "results": results,
    }
    if not files:
        payload["warning"] = "empty corpus"
    code = EXIT_OK if n_pass == len(files) else EXIT_VERDICT_FAILED
    return code, payload


def _run_corpus(args) -> int:
    code, payload = corpus_run(args.path)
    _emit(payload, args.pretty)
    width = max((len(r["fixture"]) for r in payload["results"]), default=10)
    for r in payload["results"]:
        mark = "ok" if r["passed"] else "FAIL"
        line = f"{r['fixture']:<{width}}  {mark}"
        if r["diffs"]:
            line += f"  {json.dumps(r['diffs'], sort_keys=True)}"
        print(line, file=sys.stderr)
    print(
        f"{payload['passed']}/{payload['total']} fixtures passed", file=sys.stderr
    )
    return code


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    p.add_argument("--unsafe", action="store_true", help="lift the size guardrails")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atinf",
        description="Exact top Betti defects of complex polynomials via "
        "their singularities at infinity.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    pa = sub.add_parser("analyze", help="profile a polynomial and compute its defect")
    pa.add_argument("--poly", required=True)
    pa.add_argument("--vars", required=True, type=lambda s: s.split(","))
    pa.add_argument("--t-samples", type=int, default=2, dest="t_samples")
    pa.add_argument(
        "--assume-concentrated",
        action="store_true",
        help="assert that the generic fibre has top-concentrated homology",
    )
    pa.add_argument("--chi-fd", type=int, default=None, dest="chi_fd",
                    help="Euler characteristic of the top-form zero set (reduced)")
    pa.add_argument("--strata", default=None,
                    help="strata JSON file used to compute chi of the top-form zero set")
    pa.add_argument(
        "--assume-line-at-infinity",
        action="store_true",
        help="declare a reduced line at infinity with Morse transversal type",
    )
    _add_common(pa)
    pa.set_defaults(func=_run_analyze)

    pd = sub.add_parser("deform", help="deformation verdicts")
    pd.add_argument("--poly", required=True)
    pd.add_argument("--vars", required=True, type=lambda s: s.split(","))
    pd.add_argument("--kind", required=True, choices=["linear", "power", "general"])
    pd.add_argument("--with", dest="with_poly", default=None,
                    help="the linear form or degree-d form to deform with")
    pd.add_argument("--assume-concentrated", action="store_true")
    pd.add_argument("--chi-fd", type=int, default=None, dest="chi_fd")
    _add_common(pd)
    pd.set_defaults(func=_run_deform)

    pe = sub.add_parser("euler", help="Euler characteristic from declared strata")
    pe.add_argument("--strata", required=True)
    _add_common(pe)
    pe.set_defaults(func=_run_euler)

    pt = sub.add_parser("table", help="small-defect classification row")
    pt.add_argument("--delta", required=True, type=int)
    _add_common(pt)
    pt.set_defaults(func=_run_table)

    pc = sub.add_parser("corpus", help="run a fixture directory")
    pc.add_argument("path")
    _add_common(pc)
    pc.set_defaults(func=_run_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (AnalysisError, DeformationError, GroebnerError, PolyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNCOMPUTABLE


if __name__ == "__main__":
    sys.exit(main())
