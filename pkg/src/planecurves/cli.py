"""Command-line front end: .curve spec files in, text/JSON reports out.

Exit codes: 0 ok, 1 theorem-guaranteed bound failure or internal error,
2 parse error, 3 non-stabilization, 4 profile/tau mismatch, 5 multiplicity
>= 4 in an arrangement.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .geometry import (
    Component,
    GeometryError,
    MultiplicityError,
    SingularityProfile,
    analyze_arrangement,
    bezout_audit,
    genus_from_counts,
    validate_profile,
)
from .hodge import ed_poly_str, hodge_deligne_U, mixed_hodge_numbers, theorem2_report
from .koszul import spectral_table
from .linalg import LinalgError
from .milnor import RATIONAL, NonStabilizationError, RankMode, hilbert_series
from .polynomials import (
    Curve,
    CurveError,
    CurveFactor,
    CurveSpec,
    ParseError,
    build_curve,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_NONSTABLE = 3
EXIT_PROFILE = 4
EXIT_MULTIPLICITY = 5


class SpecFileError(ValueError):
    pass


class ProfileMismatch(RuntimeError):
    def __init__(self, report):
        super().__init__("declared profile disagrees with computed invariants")
        self.report = report


def load_spec(path: Path) -> dict:
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    if not isinstance(data, dict) or "factors" not in data:
        raise SpecFileError(f"{path}: spec must be an object with a 'factors' list")
    return data


def build_from_spec(data: dict) -> Curve:
    factors = []
    for entry in data["factors"]:
        if isinstance(entry, str):
            factors.append(CurveFactor(text=entry))
        else:
            factors.append(CurveFactor(text=entry["poly"], genus=entry.get("genus")))
    profile = data.get("profile") or {}
    spec = CurveSpec(
        factors=tuple(factors),
        declared_n=profile.get("n"),
        declared_t=profile.get("t"),
    )
    return build_curve(spec)


def _component_from_entry(entry: dict, factor: Optional[CurveFactor], degree: int) -> Component:
    nodes = entry.get("nodes", 0)
    triples = entry.get("triples", 0)
    genus = entry.get("genus")
    if genus is None and factor is not None:
        genus = factor.genus
    if genus is None:
        genus = 0 if degree == 1 and nodes == 0 and triples == 0 else genus_from_counts(
            degree, nodes, triples
        )
    return Component(degree=degree, genus=genus, nodes=nodes, triples=triples)


def resolve_profile(curve: Curve, data: dict) -> SingularityProfile:
    """Compute the census for arrangements, or assemble the declared one.

    An all-linear curve is always analyzed exactly; a declared profile is
    then cross-checked against the analysis (n and t must agree).
    """
    declared = data.get("profile")
    all_linear = all(d == 1 for d in curve.factor_degrees)
    if all_linear:
        computed = analyze_arrangement(list(curve.factor_polys))
        if declared is not None:
            for key, got in (("n", computed.n), ("t", computed.t)):
                want = declared.get(key)
                if want is not None and want != got:
                    raise GeometryError(
                        f"declared {key}={want} but the arrangement has {key}={got}"
                    )
        return computed
    if declared is None:
        raise SpecFileError(
            "a profile with declared singularity counts is required unless all "
            "factors are linear"
        )
    n = declared.get("n", 0)
    t = declared.get("t", 0)
    s = declared.get("s", 0)
    entries = declared.get("components")
    components = []
    if entries is not None:
        aligned = len(entries) == len(curve.factor_polys)
        for j, entry in enumerate(entries):
            factor = curve.spec.factors[j] if aligned else None
            degree = entry.get("degree")
            if degree is None:
                if not aligned:
                    raise SpecFileError(
                        "profile components need explicit degrees when they do "
                        "not align one-to-one with the factors"
                    )
                degree = curve.factor_degrees[j]
            components.append(_component_from_entry(entry, factor, degree))
    else:
        for j, factor in enumerate(curve.spec.factors):
            components.append(_component_from_entry({}, factor, curve.factor_degrees[j]))
    interior = sum(c.triples for c in components)
    t_prime = declared.get("t_prime", t - interior - s)
    return SingularityProfile(
        components=tuple(components), n=n, t=t, s=s, t_prime=t_prime
    )


def resolve_mode(data: dict, args) -> RankMode:
    primes: tuple[int, ...] = ()
    kind = "rational"
    options = data.get("options") or {}
    if options.get("field") == "modp":
        kind = "modular"
        primes = tuple(options.get("primes", ()))
    if getattr(args, "modp", None):
        kind = "modular"
        primes = tuple(int(p) for p in args.modp.split(","))
    if kind == "modular" and not primes:
        raise SpecFileError("modular mode needs primes (options.primes or --modp)")
    return RankMode(kind, primes) if kind == "modular" else RATIONAL


def hilbert_payload(curve: Curve, data: dict, args) -> dict:
    options = data.get("options") or {}
    k_max = getattr(args, "k_max", None)
    if k_max is None:
        k_max = options.get("k_max")
    mode = resolve_mode(data, args)
    h = hilbert_series(curve.f, k_max=k_max, mode=mode)
    payload = {"name": data.get("name"), "N": curve.N, "r": curve.r}
    payload.update(h.to_json())
    payload["series"] = h.series_str()
    return payload


def report_payload(curve: Curve, data: dict, args) -> dict:
    mode = resolve_mode(data, args)
    h = hilbert_series(curve.f, k_max=(data.get("options") or {}).get("k_max"), mode=mode)
    profile = resolve_profile(curve, data)
    validation = validate_profile(curve.f, profile, mode)
    if not validation.ok:
        raise ProfileMismatch(validation)
    hodge = mixed_hodge_numbers(profile)
    table = spectral_table(curve.f, mode)
    thm2 = theorem2_report(curve.f, profile, mode)
    ed = hodge.ed_polynomial
    g = (profile.N - 1) * (profile.N - 2) // 2
    audits = [
        {
            "name": "ED polynomial u-coefficient == gr1",
            "lhs": ed.get((1, 0), 0),
            "rhs": hodge.gr1,
        },
        {
            "name": "ED polynomial v-coefficient + constant == gr2",
            "lhs": ed.get((0, 1), 0) + ed.get((0, 0), 0),
            "rhs": hodge.gr2,
        },
        {
            "name": "b2 == gr1 + gr2",
            "lhs": hodge.b2,
            "rhs": hodge.gr1 + hodge.gr2,
        },
        {
            "name": "sum g_j - t == g - tau + r - 1",
            "lhs": profile.sum_genus - profile.t,
            "rhs": g - h.stable_value + profile.r - 1,
        },
    ]
    if profile.points:
        lhs, rhs = bezout_audit(profile)
        audits.append({"name": "Bezout pair count", "lhs": lhs, "rhs": rhs})
    for a in audits:
        a["passed"] = a["lhs"] == a["rhs"]
    return {
        "name": data.get("name"),
        "curve": {
            "N": curve.N,
            "r": curve.r,
            "factors": [fac.text for fac in curve.spec.factors],
            "f": str(curve.f),
        },
        "hilbert": {**h.to_json(), "series": h.series_str()},
        "profile": profile.to_json(),
        "hodge": hodge.to_json(),
        "spectral_table": {"entries": table.to_json(), "e2_21": table.e2_21},
        "theorem2": thm2.to_json(),
        "validation": validation.to_json(),
        "audits": audits,
    }


def _render_hilbert_text(payload: dict) -> str:
    lines = [
        f"curve: {payload.get('name') or '(unnamed)'}  N={payload['N']} r={payload['r']}",
        f"HP(M(f))(t) = {payload['series']}",
        "dims: " + ",".join(str(d) for d in payload["dims"]),
        f"tau={payload['tau']} ct={_fmt(payload['ct'])} st={payload['st']} mdr={_fmt(payload['mdr'])}",
    ]
    return "\n".join(lines)


def _fmt(v) -> str:
    return "inf" if v is None else str(v)


def _render_report_text(payload: dict) -> str:
    h = payload["hilbert"]
    hodge = payload["hodge"]
    a = payload["theorem2"]["part_a"]
    b = payload["theorem2"]["part_b"]
    lines = [
        f"curve: {payload.get('name') or '(unnamed)'}  N={payload['curve']['N']} r={payload['curve']['r']}",
        f"HP(M(f))(t) = {h['series']}",
        f"tau={h['tau']} ct={_fmt(h['ct'])} st={h['st']} mdr={_fmt(h['mdr'])}",
        f"profile: n={payload['profile']['n']} t={payload['profile']['t']} "
        f"s={payload['profile']['s']} t'={payload['profile']['t_prime']}",
        f"hodge: gr1={hodge['gr1']} gr2={hodge['gr2']} h21={hodge['h21']} "
        f"h12={hodge['h12']} h22={hodge['h22']} b2={hodge['b2']}",
        f"P(U) = {ed_poly_str({(e['p'], e['q']): e['coeff'] for e in hodge['ed_polynomial']})}",
        f"theorem2 A: {a['lower']} <= {a['value']} <= {a['upper']} ({a['verdict']})",
        f"theorem2 B: {b['lower']} <= {b['value']} <= {b['upper']} ({b['verdict']})",
        f"F^2 = P^2: {payload['theorem2']['f2_equals_p2']}",
        f"E2^(2,1) dim: {payload['spectral_table']['e2_21']}",
        "validation: " + ("ok" if payload["validation"]["ok"] else "MISMATCH"),
        "audits: " + ("ok" if all(x["passed"] for x in payload["audits"]) else "FAILED"),
    ]
    return "\n".join(lines)


def _emit(payload: dict, args, render_text) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(render_text(payload))


def cmd_hilbert(args) -> int:
    data = load_spec(Path(args.spec))
    curve = build_from_spec(data)
    payload = hilbert_payload(curve, data, args)
    _emit(payload, args, _render_hilbert_text)
    return EXIT_OK


def cmd_report(args) -> int:
    data = load_spec(Path(args.spec))
    curve = build_from_spec(data)
    payload = report_payload(curve, data, args)
    _emit(payload, args, _render_report_text)
    if not payload["theorem2"]["bounds_ok"]:
        print("theorem-guaranteed bound violated", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def report_json_bytes(spec_path: Path) -> bytes:
    """Deterministic JSON report for a spec file (corpus comparisons)."""
    ns = argparse.Namespace(format="json", modp=None, k_max=None, quiet=True)
    data = load_spec(spec_path)
    curve = build_from_spec(data)
    payload = report_payload(curve, data, ns)
    return (json.dumps(payload, indent=2) + "\n").encode()


def cmd_verify_corpus(args) -> int:
    root = Path(args.dir)
    specs = sorted(root.glob("*.curve"))
    if not specs:
        print(f"warning: no .curve files in {root}", file=sys.stderr)
        print("0 fixtures, 0 failures")
        return EXIT_OK
    failures = 0
    skipped = 0
    checked = 0
    for spec_path in specs:
        expected_path = spec_path.with_suffix(".expected.json")
        if not expected_path.exists():
            print(f"SKIP {spec_path.name} (no expected fixture)")
            skipped += 1
            continue
        got = report_json_bytes(spec_path)
        want = expected_path.read_bytes()
        checked += 1
        if got == want:
            print(f"PASS {spec_path.name}")
        else:
            print(f"FAIL {spec_path.name} (report drifted from frozen fixture)")
            failures += 1
    print(f"{checked} fixtures, {failures} failures, {skipped} skipped")
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planecurves",
        description="Exact invariants of plane curves with ordinary double and triple points",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--modp", help="comma-separated primes for modular mode")
        p.add_argument("--quiet", action="store_true")

    p_h = sub.add_parser("hilbert", help="Hilbert series, tau, ct, st, mdr")
    p_h.add_argument("spec")
    p_h.add_argument("--k-max", type=int, dest="k_max")
    common(p_h)
    p_h.set_defaults(func=cmd_hilbert)

    p_r = sub.add_parser("report", help="full invariant report")
    p_r.add_argument("spec")
    common(p_r)
    p_r.set_defaults(func=cmd_report)

    p_v = sub.add_parser("verify-corpus", help="re-run and diff frozen fixtures")
    p_v.add_argument("dir")
    common(p_v)
    p_v.set_defaults(func=cmd_verify_corpus)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    quiet = getattr(args, "quiet", False)

    def diag(msg: str) -> None:
        if not quiet:
            print(msg, file=sys.stderr)

    try:
        return args.func(args)
    except (SpecFileError, ParseError, CurveError) as exc:
        diag(f"error: {exc}")
        return EXIT_PARSE
    except NonStabilizationError as exc:
        diag(f"error: {exc}")
        return EXIT_NONSTABLE
    except ProfileMismatch as exc:
        diag(f"error: {exc}")
        for check in exc.report.checks:
            if not check.passed:
                diag(f"  {check.name}: {check.lhs} != {check.rhs}")
        return EXIT_PROFILE
    except MultiplicityError as exc:
        diag(f"error: {exc}")
        return EXIT_MULTIPLICITY
    except (GeometryError,) as exc:
        diag(f"error: {exc}")
        return EXIT_PROFILE
    except LinalgError as exc:
        diag(f"internal error: {exc}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
