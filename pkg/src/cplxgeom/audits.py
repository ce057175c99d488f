"""Check suites shared by the command line and the acceptance tests.

Each suite returns an ``AuditReport``; randomized suites take a seed and are
deterministic for a fixed seed.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import exact as ex
from .clifford_core import Signature, duality_complex_structure, eta_square_sign, volume_element
from .clock import brauer_wall_add, classify, even_subalgebra, hour, same_type
from .clock_oracle import recursion_type, trace_form_type
from .spinor_rep import (
    build_gamma,
    cc_sign_formula,
    charge_conjugate,
    chirality,
    check_clifford_relations,
    intertwiners,
    majorana_basis,
    majorana_complex_structure,
    majorana_weyl_match,
    preset8_C,
    preset8_gammas,
    intertwiner_audit,
    weyl_split,
)

SCHEMA = 1
STATUSES = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class Check:
    id: str
    status: str
    witness: Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing check needs a witness")

    def as_dict(self) -> dict:
        d = {"id": self.id, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class AuditReport:
    suite: str
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, check_id: str, ok: bool, witness: Optional[str] = None) -> bool:
        ok = bool(ok)
        if ok:
            self.checks.append(Check(check_id, "pass"))
        else:
            self.checks.append(Check(check_id, "fail", witness or "check returned false"))
        return ok

    def skip(self, check_id: str, reason: str):
        self.checks.append(Check(check_id, "skipped", reason))

    def extend(self, other: "AuditReport", prefix: bool = True):
        for c in other.checks:
            cid = f"{other.suite}/{c.id}" if prefix else c.id
            self.checks.append(Check(cid, c.status, c.witness))

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "passed": self.passed,
            "exit_code": self.exit_code,
            "checks": [c.as_dict() for c in self.checks],
            "data": self.data,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():7s} {c.id}"
            if c.status != "pass" and c.witness:
                line += f"  [{c.witness}]"
            lines.append(line)
        n_fail = len(self.failures)
        lines.append(f"{self.suite}: {len(self.checks)} checks, {n_fail} failed")
        return "\n".join(lines)


def signatures(total_dims=(2, 4, 6, 8)) -> list[tuple[int, int]]:
    return [(k, m - k) for m in total_dims for k in range(m + 1)]


# ------------------------------------------------------------------- clock

ANCHORS = {(3, 1): "R(4)", (4, 2): "R(8)", (7, 1): "H(8)"}


def clock_suite(seed: int = 0) -> AuditReport:
    rep = AuditReport("clock")
    mismatches, recursion_bad, covered = [], [], 0
    for k, l in signatures(range(9)):
        got = classify(k, l)
        if trace_form_type(k, l) != got:
            mismatches.append(f"({k},{l}) table {got} vs trace form {trace_form_type(k, l)}")
        r = recursion_type(k, l)
        if r is not None:
            covered += 1
            if r != got:
                recursion_bad.append(f"({k},{l}) table {got} vs recursion {r}")
    rep.add("table = trace-form oracle on all 45 signatures", not mismatches, "; ".join(mismatches) or None)
    rep.add(f"table = recursion oracle where defined ({covered}/45)", not recursion_bad,
            "; ".join(recursion_bad) or None)
    for (k, l), want in ANCHORS.items():
        got = str(classify(k, l))
        rep.add(f"Cl({k},{l}) = {want}", got == want, f"got {got}")
    dims = [(k, l) for k, l in signatures(range(9)) if classify(k, l).real_dim != 2 ** (k + l)]
    rep.add("real dimension 2^(k+l)", not dims, f"wrong at {dims}")
    evens = [(k, l) for k, l in signatures(range(1, 9)) if even_subalgebra(k, l) != trace_form_type(k, l, True)]
    rep.add("even part = trace-form oracle", not evens, f"wrong at {evens}")
    sigs = signatures(range(9))
    bad_type = [(a, b) for a in sigs for b in sigs
                if same_type(*a, *b) and classify(*a).base != classify(*b).base]
    rep.add("same_type implies same base algebra", not bad_type, f"wrong at {bad_type[:3]}")
    bad_eq = [(a, b) for a in sigs for b in sigs if same_type(*a, *b) != (hour(*a) == hour(*b))]
    rep.add("same_type is equality of hours (an equivalence)", not bad_eq, f"wrong at {bad_eq[:3]}")
    bad_add = [(a, b) for a in sigs for b in sigs if sum(a) + sum(b) <= 8
               and brauer_wall_add(hour(*a), hour(*b)) != hour(a[0] + b[0], a[1] + b[1])]
    rep.add("hours add under graded tensor product", not bad_add, f"wrong at {bad_add[:3]}")
    return rep


# ------------------------------------------------------------------- hodge

HODGE_MIDDLE = ((0, 2), (3, 1), (1, 3), (0, 6))
HODGE_ODD = ((0, 1), (2, 3))


def hodge_suite(seed: int = 0) -> AuditReport:
    rep = AuditReport("hodge")
    for k, l in HODGE_MIDDLE + HODGE_ODD:
        sig = Signature(k, l)
        ds = duality_complex_structure(sig)
        if ds is None:
            rep.add(f"star^2 = -id on Cl({k},{l})", False, "eta^2 != -1")
            continue
        n = len(ds.basis)
        want_grades = (sig.dim // 2,) if sig.dim % 2 == 0 else (sig.dim // 2, sig.dim // 2 + 1)
        ok = ex.meq(ds.J * ds.J, -ex.eye(n)) and ds.grades == want_grades
        rep.add(f"star^2 = -id on grades {ds.grades} of Cl({k},{l})", ok, f"grades {ds.grades}")
    bad = []
    for k, l in signatures(range(9)):
        sig = Signature(k, l)
        eta = volume_element(sig)
        direct = (eta * eta).coefficient(())
        if direct != ex.gq(eta_square_sign(sig)):
            bad.append((k, l))
    rep.add("eta^2 sign formula = direct product (k+l <= 8)", not bad, f"wrong at {bad}")
    return rep


# ----------------------------------------------------------------- spinors

def preset8_suite(seed: int = 0) -> AuditReport:
    rep = AuditReport("preset8")
    gammas = preset8_gammas()
    rep.add("Cl(7,1) relations", check_clifford_relations(gammas, 7, 1))
    C = preset8_C()
    bad = [mu for mu, g in enumerate(gammas, 1) if not ex.meq(C * g, ex.mconj(g) * C)]
    rep.add("C gamma_mu = conj(gamma_mu) C", not bad, f"fails for mu in {bad}")
    d = (1 - 7) * (1 - 7 + 2) // 8
    rep.add("(l-k)(l-k+2)/8 = 3", d == 3, f"got {d}")
    rep.add("conj(C) C = -id", ex.meq(ex.mconj(C) * C, -ex.eye(16)))
    g = build_gamma(7, 1, preset="paper8")
    tw = intertwiners(g)
    report = intertwiner_audit(g, tw.B, tw.C)
    for name, ok in report.checks:
        rep.add(f"solved pair: {name}", ok)
    return rep


def intertwiner_suite(seed: int = 0) -> AuditReport:
    rep = AuditReport("intertwiners")
    for k, l in signatures():
        g = build_gamma(k, l)
        tw = intertwiners(g)
        if not tw.normalized:
            rep.add(f"({k},{l}) exact normalization", False, "C could only be normalized in floating point")
            continue
        failed = [name for name, ok in intertwiner_audit(g, tw.B, tw.C).checks if not ok]
        rep.add(f"({k},{l}) all identities", not failed, f"failed: {failed}")
    return rep


def chirality_suite(seed: int = 0) -> AuditReport:
    rep = AuditReport("chirality")
    flip = {"+": "-", "-": "+"}
    for k, l in signatures():
        g = build_gamma(k, l)
        tw = intertwiners(g)
        eta2 = eta_square_sign(Signature(k, l))
        plus, minus = weyl_split(g)
        wrong = []
        for sign, basis in (("+", plus), ("-", minus)):
            for phi in basis:
                got = chirality(g, charge_conjugate(phi, tw.C))
                want = sign if eta2 == 1 else flip[sign]
                if got != want:
                    wrong.append(f"{sign}->{got}")
        rep.add(f"({k},{l}) eta^2={eta2:+d}: conjugation {'keeps' if eta2 == 1 else 'flips'} chirality",
                not wrong, ", ".join(wrong))
    return rep


def majorana_suite(seed: int = 0) -> AuditReport:
    rep = AuditReport("majorana")
    for k, l in signatures():
        g = build_gamma(k, l)
        tw = intertwiners(g)
        exists = majorana_basis(g, tw.C) is not None
        want = cc_sign_formula(k, l) == 1
        rep.add(f"({k},{l}) Majorana spinors exist = {want}", exists == want, f"exists={exists}")
    for p in (0, 1):
        g = build_gamma(3 + p, 1 + p)
        ms = majorana_complex_structure(g)
        n = ms.J.shape[0]
        rep.add(f"({3 + p},{1 + p}) J^2 = -id on real spinors", ex.meq(ms.J * ms.J, -ex.eye(n)))
        rep.add(f"({3 + p},{1 + p}) W+- of J = Weyl spaces", majorana_weyl_match(g, ms))
    return rep


# ------------------------------------------------------------------- dirac

def dirac_suite(seed: int = 0, samples: int = 100, ns=(2, 4), numeric_samples: int = 10,
                numeric_tol: float = 1e-8) -> AuditReport:
    from .dirac import (
        conjugate_equation_check,
        conjugate_wave,
        current_field,
        divergence_exact,
        divergence_numeric,
        lorentzian_rep,
        random_wavefunction,
    )

    rep = AuditReport("dirac")
    rng = random.Random(seed)
    for n in ns:
        g = lorentzian_rep(n)
        tw = intertwiners(g)
        dim = 2 * n
        A_const = tuple(Fraction(j + 1, 3) for j in range(dim))
        counts = {"real": 0, "conjugate": 0, "divergence": 0, "equation A=0": 0, "equation A!=0": 0}
        worst = 0.0
        witness: dict = {}
        for i in range(samples):
            with_A = i % 2 == 1
            e = Fraction(rng.randint(1, 3), rng.randint(1, 2)) if with_A else Fraction(0)
            psi = random_wavefunction(rng, g, waves=rng.randint(2, 3), e=e, A=A_const if with_A else None)
            j = current_field(psi, g, tw)
            if all(c.is_real() for c in j):
                counts["real"] += 1
            else:
                witness.setdefault("real", f"sample {i}")
            jc = current_field(conjugate_wave(psi, tw), g, tw)
            if all(a.terms == b.terms for a, b in zip(j, jc)):
                counts["conjugate"] += 1
            else:
                witness.setdefault("conjugate", f"sample {i}")
            if divergence_exact(psi, g, tw).is_zero():
                counts["divergence"] += 1
            else:
                witness.setdefault("divergence", f"sample {i}")
            key = "equation A!=0" if with_A else "equation A=0"
            if conjugate_equation_check(psi, g, tw):
                counts[key] += 1
            else:
                witness.setdefault(key, f"sample {i}")
            if i < numeric_samples:
                worst = max(worst, divergence_numeric(psi, g, tw, seed=seed + i))
        half = {"equation A=0": (samples + 1) // 2, "equation A!=0": samples // 2}
        rep.add(f"dim {dim}: Im j = 0 ({samples} samples)", counts["real"] == samples, witness.get("real"))
        rep.add(f"dim {dim}: j(psi_c) = j(psi)", counts["conjugate"] == samples, witness.get("conjugate"))
        rep.add(f"dim {dim}: div j = 0 exactly", counts["divergence"] == samples, witness.get("divergence"))
        for key in ("equation A=0", "equation A!=0"):
            rep.add(f"dim {dim}: psi_c solves the charge -e equation, {key[9:]}", counts[key] == half[key],
                    witness.get(key))
        rep.add(f"dim {dim}: numeric divergence <= {numeric_tol:g} relative", worst <= numeric_tol,
                f"worst {worst:.3e}")
    return rep


# ------------------------------------------------------------------ fourier

def fourier_suite(seed: int = 0, N: int = 64) -> AuditReport:
    from .fourier_j import audit

    rep = AuditReport("fourier")
    for name, ok in audit(N).checks:
        rep.add(f"N={N}: {name}", ok)
    return rep


# ---------------------------------------------------------------- CR / RT

def cr_suite(seed: int = 0, charts: int = 20, points: int = 10) -> AuditReport:
    from .optical import (
        CR_COORDS,
        RT_COORDS,
        CRData,
        canonical_section,
        chart_checks,
        cr_frame,
        cr_function_check,
        integrability_check,
        levi_form_nonzero,
        null_plane_from_chart,
        random_L,
        rt_metric,
        signature_sweep,
    )
    from .xcalc import Poly, PolyForm, variables

    rep = AuditReport("cr")
    u, x, y = variables(CR_COORDS)
    z = x + y * ex.I
    heis = CRData(z * (-ex.I))
    frame = cr_frame(heis)
    rep.add("Heisenberg frame invariants", all(frame.invariants().values()), str(frame.invariants()))
    w = u - z * z.conj() * ex.I
    resid = cr_function_check(heis, w)
    rep.add("w = u - i z zbar solves Z.dw = 0", resid.is_zero(), f"residual {resid}")
    sec = canonical_section(heis, z, w, Poly(("s", "t"), 1))
    rep.add("F' = dz^dw closed", sec.checks["dF' = 0"])
    rep.add("F' = dz^dw Z-annihilated", sec.checks["Z.F' = 0"])
    rep.add("L = 0: lambda^dlambda = 0", not levi_form_nonzero(cr_frame(CRData(Poly(CR_COORDS, 0)))))
    rep.add("L = -iz: lambda^dlambda != 0", levi_form_nonzero(frame))
    rng = random.Random(seed)
    bad_exact, bad_sig = [], []
    one, dr = Poly(RT_COORDS, 1), PolyForm.d_coord(RT_COORDS, "r")
    for i in range(charts):
        data = CRData(random_L(rng))
        chart = rt_metric(data, one, dr)
        plane = null_plane_from_chart(chart, data)
        ok = all(chart_checks(chart).values()) and integrability_check(plane)
        if not ok:
            bad_exact.append(i)
        sig = signature_sweep(chart, points, seed=seed * 1000 + i)
        if any(s != (3, 1) for s in sig):
            bad_sig.append((i, sig))
    rep.add(f"{charts} random RT charts: nullity, total nullity, integrability", not bad_exact,
            f"charts {bad_exact}")
    rep.add(f"{charts} random RT charts: signature (3,1) at {points} points", not bad_sig, str(bad_sig[:2]))
    return rep


def duality_suite(seed: int = 0) -> AuditReport:
    from .optical import null_plane_from_spinor, spinor_plane_checks

    rep = AuditReport("duality")
    for k, l in ((4, 0), (3, 1), (2, 2)):
        g = build_gamma(k, l)
        tw = intertwiners(g)
        plus, minus = weyl_split(g)
        for sign, basis in (("+", plus), ("-", minus)):
            samples = [basis[0], basis[1], basis[0] + basis[1] * ex.gq(2, 1)]
            for j, phi in enumerate(samples):
                sp = null_plane_from_spinor(phi, g, tw)
                checks = spinor_plane_checks(sp, g, tw, phi)
                failed = [name for name, ok in checks.items() if not ok]
                rep.add(f"({k},{l}) {sign}chirality spinor {j}: " + ", ".join(sorted(checks)), not failed,
                        f"failed {failed}")
    return rep


def conjecture_suite(seed: int = 0) -> AuditReport:
    from .optical import FLAT3, conjecture_verify, cross_field
    from .xcalc import Poly, PolyVField

    rep = AuditReport("conjecture")
    z = Poly.parse(FLAT3, "x + I*y")
    w = Poly.var(FLAT3, "u")
    F = PolyVField(FLAT3, [ex.I, -1, 0])
    r = conjecture_verify(F, z, w)
    rep.add("F = (i,-1,0) from z = x+iy, w = u: verified", r.verified, str(r.as_dict()))
    rep.add("div F = 0", r.div_free)
    rep.add("F x conj F != 0", r.nondegenerate)
    w2 = Poly.parse(FLAT3, "u - I*(x**2 + y**2)")
    r2 = conjecture_verify(cross_field(z, w2), z, w2)
    rep.add("Heisenberg pair z, u - i z zbar: verified", r2.verified, str(r2.as_dict()))
    bad = conjecture_verify(PolyVField(FLAT3, [1, 0, 0]), z, w)
    rep.add("mismatched F = (1,0,0) is rejected", not bad.verified and not bad.matches, str(bad.as_dict()))
    return rep


# ----------------------------------------------------------------- registry

ACCEPTANCE: tuple[tuple[int, str, Callable[..., AuditReport]], ...] = (
    (1, "clock oracle equivalence", clock_suite),
    (2, "eight-matrix (7,1) preset", preset8_suite),
    (3, "intertwiner identity sweep", intertwiner_suite),
    (4, "charge-conjugation chirality rule", chirality_suite),
    (5, "Majorana criterion", majorana_suite),
    (6, "Dirac current reality and conservation", dirac_suite),
    (7, "Fourier complex structure", fourier_suite),
    (8, "Hodge duality cases", hodge_suite),
    (9, "CR and optical charts", cr_suite),
    (10, "self-duality and chirality coherence", duality_suite),
    (11, "conjecture verifier", conjecture_suite),
)


def full_audit(seed: int = 0) -> AuditReport:
    rep = AuditReport("full-audit")
    for number, _, suite in ACCEPTANCE:
        sub = suite(seed)
        sub.suite = f"{number}:{sub.suite}"
        rep.extend(sub)
    return rep
