"""Command-line front end: ``cplxgeom <subcommand> [--json] [--seed N] ...``.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or invalid input,
3 malformed JSON input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import audits
from .audits import AuditReport

SEED_ENV = "CPLXGEOM_SEED"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_JSON = 0, 1, 2, 3


class InputError(Exception):
    """Bad user input; reported with exit code 2."""


class JSONInputError(Exception):
    """Unparseable JSON file; reported with exit code 3."""


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise JSONInputError(f"{path}: malformed JSON at line {err.lineno} column {err.colno}: {err.msg}") from None


def _require(data, key, what="input"):
    if not isinstance(data, dict):
        raise InputError(f"{what} must be a JSON object")
    if key not in data:
        raise InputError(f"{what} is missing the field {key!r}")
    return data[key]


# ----------------------------------------------------------------- commands

def cmd_classify(args) -> AuditReport:
    from .clock import classify, describe, even_subalgebra, hour
    from .clock_oracle import trace_form_type

    if args.k < 0 or args.l < 0:
        raise InputError("k and l must be nonnegative")
    if args.k + args.l > 12:
        raise InputError("k + l is capped at 12")
    rep = AuditReport("classify")
    got = classify(args.k, args.l)
    rep.data = {"k": args.k, "l": args.l, "algebra": str(got), "hour": hour(args.k, args.l),
                "summary": describe(args.k, args.l)}
    if args.k + args.l >= 1:
        rep.data["even_part"] = str(even_subalgebra(args.k, args.l))
    oracle = trace_form_type(args.k, args.l)
    rep.add("trace-form oracle agrees", oracle == got, f"oracle gives {oracle}")
    return rep


def cmd_rep(args) -> AuditReport:
    from .spinor_rep import build_gamma, intertwiners, intertwiner_audit

    try:
        g = build_gamma(args.k, args.l, preset=args.preset)
    except ValueError as err:
        raise InputError(str(err)) from None
    rep = AuditReport("rep")
    tw = intertwiners(g)
    rep.data = {"k": args.k, "l": args.l, "preset": args.preset, "spinor_dim": g.size,
                "iota": "i" if g.iota != 1 else "1", "exact_normalization": tw.normalized}
    rep.add("Clifford relations", g.relations_hold())
    if args.audit:
        for name, ok in intertwiner_audit(g, tw.B, tw.C).checks:
            rep.add(name, ok)
    return rep


def _dirac_ns(args) -> tuple:
    if args.k is not None or args.l is not None:
        if args.k is None or args.l is None:
            raise InputError("--k and --l go together")
        if args.l != 1 or args.k < 1 or (args.k + 1) % 2 or not 2 <= args.k + 1 <= 8:
            raise InputError("the Dirac suite runs in signatures (2n-1, 1) with 1 <= n <= 4")
        return ((args.k + 1) // 2,)
    for n in args.n:
        if n not in (1, 2, 3, 4):
            raise InputError("--n takes half-dimensions in 1..4")
    return tuple(args.n)


def _waves_report(args, n: int) -> AuditReport:
    from .dirac import (
        WaveFunction,
        conjugate_equation_check,
        conjugate_wave,
        current_field,
        divergence_exact,
        divergence_numeric,
        lorentzian_rep,
        wave_from_dict,
    )
    from .spinor_rep import intertwiners

    data = load_json(args.waves)
    entries = data.get("waves") if isinstance(data, dict) else data
    if not isinstance(entries, list) or not entries:
        raise InputError("waves file must hold a nonempty list of plane waves")
    g = lorentzian_rep(n)
    try:
        psi = WaveFunction(tuple(wave_from_dict(g, entry) for entry in entries))
    except (ValueError, KeyError, TypeError) as err:
        raise InputError(f"{args.waves}: {err}") from None
    tw = intertwiners(g)
    rep = AuditReport("dirac-audit")
    j = current_field(psi, g, tw)
    rep.add("Im j = 0", all(c.is_real() for c in j))
    jc = current_field(conjugate_wave(psi, tw), g, tw)
    rep.add("j(psi_c) = j(psi)", all(a.terms == b.terms for a, b in zip(j, jc)))
    rep.add("div j = 0 exactly", divergence_exact(psi, g, tw).is_zero())
    rep.add("psi_c solves the charge -e equation", conjugate_equation_check(psi, g, tw))
    worst = divergence_numeric(psi, g, tw, seed=args.seed)
    rep.add("numeric divergence <= 1e-08 relative", worst <= 1e-8, f"worst {worst:.3e}")
    return rep


def cmd_dirac(args) -> AuditReport:
    ns = _dirac_ns(args)
    if args.waves is not None:
        if len(ns) != 1:
            raise InputError("--waves needs a single signature (use --k/--l or one --n)")
        return _waves_report(args, ns[0])
    if args.samples < 1:
        raise InputError("--samples must be positive")
    return audits.dirac_suite(args.seed, samples=args.samples, ns=ns,
                              numeric_samples=min(args.numeric_samples, args.samples))


def cmd_fourier(args) -> AuditReport:
    if args.N < 1:
        raise InputError("--N must be at least 1")
    return audits.fourier_suite(args.seed, N=args.N)


def _cr_data(data):
    from .optical import CR_COORDS, CRData
    from .xcalc import poly_from_json

    return CRData(poly_from_json(CR_COORDS, _require(data, "L")))


def cmd_cr(args) -> AuditReport:
    if args.file is None:
        return audits.cr_suite(args.seed)
    from .optical import CR_COORDS, canonical_section, cr_frame, cr_function_check, frame_change, levi_form_nonzero
    from .xcalc import poly_from_json

    data = load_json(args.file)
    rep = AuditReport("cr-audit")
    try:
        cr = _cr_data(data)
        frame = cr_frame(cr)
        for name, ok in frame.invariants().items():
            rep.add(f"frame: {name}", ok)
        rep.data = {"levi_form_nonzero": levi_form_nonzero(frame)}
        fns = {}
        for key in ("z", "w"):
            if key in data:
                fns[key] = poly_from_json(CR_COORDS, data[key])
                resid = cr_function_check(cr, fns[key])
                rep.add(f"{key} is a CR function", resid.is_zero(), f"residual {resid}")
        if "z" in fns and "w" in fns and all(not cr_function_check(cr, f) for f in fns.values()):
            f = poly_from_json(("s", "t"), data.get("f", 1))
            sec = canonical_section(cr, fns["z"], fns["w"], f)
            for name, ok in sec.checks.items():
                rep.add(f"section: {name}", ok)
        if "frame_change" in data:
            fc = data["frame_change"]
            parts = [poly_from_json(CR_COORDS, fc.get(key, default)) for key, default in
                     (("a", 1), ("b", 1), ("c", 0))]
            for name, ok in frame_change(frame, *parts).checks.items():
                rep.add(f"frame change: {name}", ok)
    except (ValueError, KeyError, TypeError) as err:
        raise InputError(f"{args.file}: {err}") from None
    return rep


def cmd_rt(args) -> AuditReport:
    if args.file is None:
        return audits.cr_suite(args.seed)
    from .optical import (
        RT_COORDS,
        chart_checks,
        integrability_check,
        null_2form,
        null_plane_from_chart,
        plane_relations,
        rt_metric,
        signature_sweep,
    )
    from .xcalc import PolyForm, form_from_json, poly_from_json

    data = load_json(args.file)
    rep = AuditReport("rt-audit")
    try:
        cr = _cr_data(data)
        P = poly_from_json(RT_COORDS, data.get("P", 1))
        xi_raw = data.get("xi")
        if xi_raw is None:
            xi = PolyForm.d_coord(RT_COORDS, "r")
        elif isinstance(xi_raw, dict) and "terms" not in xi_raw:
            xi = PolyForm.one_form(RT_COORDS, {c: poly_from_json(RT_COORDS, v) for c, v in xi_raw.items()})
        else:
            xi = form_from_json({"degree": 1, **xi_raw}, RT_COORDS)
        chart = rt_metric(cr, P, xi)
        points = int(data.get("points", 10))
    except (ValueError, KeyError, TypeError) as err:
        raise InputError(f"{args.file}: {err}") from None
    for name, ok in chart_checks(chart).items():
        rep.add(name, ok)
    plane = null_plane_from_chart(chart, cr)
    rep.add("span {d/dr, Z} totally null", True)
    for name, ok in plane_relations(plane, chart.lam).items():
        rep.add(name, ok)
    rep.add("[Gamma(N), Gamma(N)] in Gamma(N)", integrability_check(plane))
    sig = signature_sweep(chart, points, seed=args.seed)
    rep.add(f"signature (3,1) at {points} random points", all(s == (3, 1) for s in sig), str(sig))
    duality = null_2form(plane)
    rep.add("F ^ conj F = 0", duality.F_wedge_Fbar_zero)
    rep.add("star F = +-i F at the sample point", duality.sign is not None)
    rep.data = {"duality_sign": duality.sign}
    return rep


def cmd_conjecture(args) -> AuditReport:
    from .optical import FLAT3, conjecture_verify
    from .xcalc import PolyVField, poly_from_json

    data = load_json(args.file)
    try:
        coords = tuple(data.get("coords", FLAT3)) if isinstance(data, dict) else FLAT3
        if coords != FLAT3:
            raise InputError(f"coordinates must be {list(FLAT3)}")
        F_raw = _require(data, "F")
        if not isinstance(F_raw, list) or len(F_raw) != 3:
            raise InputError("F must be a list of three polynomials")
        F = PolyVField(FLAT3, [poly_from_json(FLAT3, c) for c in F_raw])
        z = poly_from_json(FLAT3, _require(data, "z"))
        w = poly_from_json(FLAT3, _require(data, "w"))
    except (ValueError, KeyError, TypeError) as err:
        raise InputError(f"{args.file}: {err}") from None
    r = conjecture_verify(F, z, w)
    rep = AuditReport("conjecture-verify")
    rep.add("div F = 0", r.div_free)
    rep.add("F x conj F != 0", r.nondegenerate)
    rep.add("F = grad z x grad w", r.matches, "residual " + ", ".join(str(c.el.as_expr()) for c in r.residual))
    rep.data = {"verified": r.verified}
    return rep


def cmd_full(args) -> AuditReport:
    return audits.full_audit(args.seed)


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine-readable report")
    common.add_argument("--seed", type=int, default=None, help=f"PRNG seed (default 0, or ${SEED_ENV})")

    p = argparse.ArgumentParser(prog="cplxgeom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("classify", parents=[common], help="matrix-algebra type of Cl(k,l)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("rep", parents=[common], help="Dirac representation and intertwiners")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--preset", choices=["paper8"], default=None)
    s.add_argument("--audit", action="store_true", help="check the B/C identities")
    s.set_defaults(func=cmd_rep)

    s = sub.add_parser("dirac-audit", parents=[common], help="current reality and conservation sweep")
    s.add_argument("--n", type=int, nargs="+", default=[2, 4], help="half-dimensions (default 2 4)")
    s.add_argument("--k", type=int, default=None, help="signature (k, 1) with k odd, instead of --n")
    s.add_argument("--l", type=int, default=None)
    s.add_argument("--waves", default=None, help="JSON list of plane waves {p, amplitude_seed, m, e, A}")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--numeric-samples", type=int, default=10)
    s.set_defaults(func=cmd_dirac)

    s = sub.add_parser("fourier-j", parents=[common], help="complex structure on Fourier polynomials")
    s.add_argument("--N", "--n", dest="N", type=int, default=64, help="highest frequency (default 64)")
    s.add_argument("--audit", action="store_true", help="accepted for symmetry; the audit always runs")
    s.set_defaults(func=cmd_fourier)

    s = sub.add_parser("cr-audit", parents=[common], help="CR frame, CR functions, canonical sections")
    s.add_argument("--file", default=None, help="JSON CR data (default: built-in suite)")
    s.set_defaults(func=cmd_cr)

    s = sub.add_parser("rt-audit", parents=[common], help="optical metric chart checks")
    s.add_argument("--file", default=None, help="JSON chart data (default: built-in suite)")
    s.set_defaults(func=cmd_rt)

    s = sub.add_parser("conjecture-verify", parents=[common], help="check a candidate (F, z, w)")
    s.add_argument("--file", required=True)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("full-audit", parents=[common], help="every acceptance suite")
    s.set_defaults(func=cmd_full)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        if args.seed is None:
            args.seed = _default_seed()
        report = args.func(args)
    except InputError as exc:
        print(f"cplxgeom {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    except JSONInputError as exc:
        print(f"cplxgeom {args.command}: error: {exc}", file=err)
        return EXIT_JSON
    except ValueError as exc:
        print(f"cplxgeom {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    if args.json:
        print(report.to_json(), file=out)
    else:
        summary = getattr(report, "data", {}).get("summary")
        if summary:
            print(summary, file=out)
        print(report.to_text(), file=out)
    return report.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
