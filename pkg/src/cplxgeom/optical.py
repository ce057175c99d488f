"""CR 3-spaces, Robinson-Trautman charts and totally null planes in dimension 4.

Chart conventions: the CR space uses coordinates (u, x, y) with z = x + i y,
and the 4-dimensional chart appends the ray parameter r.  With dz = dx + i dy,

    lambda = du + conj(L) dz + L dzbar,     Z = d/dzbar - L d/du,     mu = dz.

The Hodge star on 2-forms at a point is the Clifford one, ``star F = kappa(eta F)``
transported to forms with the metric; in coordinates

    (star F)_cd = -sgn(det g) * (1/2) sqrt|det g| eps_abcd F^ab,

which the test-suite checks against the multivector route in orthonormal frames.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence

import numpy as np
from sympy.polys.matrices import DomainMatrix

from . import exact as ex
from .clifford_core import ExteriorElement, Signature, hodge_star
from .cstruct import ComplexStructureOp, RealQuadraticSpace, is_orthogonal
from .exact import I, ONE, ZERO
from .spinor_rep import GammaRep, Intertwiner, Spinor, charge_conjugate, chirality, intertwiners
from .xcalc import (
    Poly,
    PolyForm,
    PolyVField,
    SymTensor2,
    contract,
    df,
    lie_bracket,
    membership_in_span,
    multivector_wedge,
    variables,
    wirtinger,
)

CR_COORDS = ("u", "x", "y")
RT_COORDS = ("u", "x", "y", "r")
FLAT3 = ("x", "y", "u")
SPINOR_COORDS = ("x1", "x2", "x3", "x4")

HALF = ex.gq(Fraction(1, 2))


def _require_coords(obj, coords, what):
    if obj.coords != tuple(coords):
        raise ValueError(f"{what} must live on coordinates {tuple(coords)}, got {obj.coords}")


def dz_form(coords) -> PolyForm:
    return PolyForm.d_coord(coords, "x") + PolyForm.d_coord(coords, "y") * I


def dzbar_field(coords) -> PolyVField:
    """d/dzbar = (d/dx + i d/dy) / 2."""
    return (PolyVField.partial(coords, "x") + PolyVField.partial(coords, "y") * I) * HALF


def z_poly(coords) -> Poly:
    return Poly.var(coords, "x") + Poly.var(coords, "y") * I


# ------------------------------------------------------------------ CR frames

@dataclass(frozen=True)
class CRData:
    L: Poly

    def __post_init__(self):
        _require_coords(self.L, CR_COORDS, "L")


@dataclass(frozen=True)
class CRFrame:
    """(lambda, mu, Z) with Z ⌟ lambda = 0, Z ⌟ mu = 0, Z ⌟ conj(mu) != 0, lambda ^ mu ^ conj(mu) != 0."""

    lam: PolyForm
    mu: PolyForm
    Z: PolyVField

    def __post_init__(self):
        for name, ok in self.invariants().items():
            if not ok:
                raise ValueError(f"CR frame invariant violated: {name}")

    def invariants(self) -> dict:
        lam, mu, Z = self.lam, self.mu, self.Z
        return {
            "lambda real": lam.degree == 1 and lam.is_real(),
            "Z.lambda = 0": contract(Z, lam).is_zero(),
            "Z.mu = 0": contract(Z, mu).is_zero(),
            "Z.mubar != 0": not contract(Z, mu.conj()).is_zero(),
            "lambda^mu^mubar != 0": not lam.wedge(mu).wedge(mu.conj()).is_zero(),
        }

    def canonical_2form(self) -> PolyForm:
        return self.lam.wedge(self.mu)


def cr_frame(data: CRData) -> CRFrame:
    c = CR_COORDS
    L = data.L
    dz = dz_form(c)
    lam = PolyForm.d_coord(c, "u") + dz * L.conj() + dz.conj() * L
    Z = dzbar_field(c) - PolyVField.partial(c, "u") * L
    frame = CRFrame(lam, dz, Z)
    if contract(Z, dz.conj()) != PolyForm.function(Poly(c, 1)):
        raise AssertionError("Z ⌟ conj(mu) should be 1 for the standard frame")
    return frame


def levi_form_nonzero(frame: CRFrame) -> bool:
    """lambda ^ d lambda != 0: the CR structure is not foliated by complex curves."""
    return not frame.lam.wedge(frame.lam.d()).is_zero()


def cr_function_check(data: CRData, f: Poly) -> Poly:
    """Residual Z ⌟ df = d f/dzbar - L d f/du; zero iff f is a CR function."""
    _require_coords(f, CR_COORDS, "f")
    _, dzb = wirtinger(f, ("x", "y"))
    return dzb - data.L * f.diff("u")


@dataclass(frozen=True)
class SectionReport:
    F: PolyForm
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def canonical_section(data: CRData, z_fn: Poly, w_fn: Poly, f: Poly) -> SectionReport:
    """F' = f(z_fn, w_fn) dz_fn ^ dw_fn for CR functions z_fn, w_fn.

    ``f`` is a polynomial in two formal arguments; its coordinate names are
    matched in order to (z_fn, w_fn)."""
    for name, g in (("z", z_fn), ("w", w_fn)):
        if cr_function_check(data, g):
            raise ValueError(f"{name} is not a CR function")
    if len(f.coords) != 2:
        raise ValueError("f must be a polynomial in exactly two arguments")
    dzw = df(z_fn).wedge(df(w_fn))
    if dzw.is_zero():
        raise ValueError("dz ^ dw vanishes: the CR functions are dependent")
    coeff = f.substitute(dict(zip(f.coords, (z_fn, w_fn))))
    F = dzw.scale(coeff)
    Z = cr_frame(data).Z
    checks = {
        "dF' = 0": F.d().is_zero(),
        "Z.F' = 0": contract(Z, F).is_zero(),
        "F' != 0": not F.is_zero() or coeff.is_zero(),
    }
    return SectionReport(F, checks)


@dataclass(frozen=True)
class FrameChangeReport:
    frame: CRFrame
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def frame_change(frame: CRFrame, a: Poly, b: Poly, c: Poly) -> FrameChangeReport:
    """lambda -> a lambda, mu -> b mu + c lambda.

    Z stays a section of H; it is rescaled to keep Z ⌟ conj(mu) = 1 when b is
    constant, and otherwise left as is (then only Z ⌟ conj(mu) != 0 holds)."""
    for name, g in (("a", a), ("b", b), ("c", c)):
        _require_coords(g, frame.lam.coords, name)
    if a.is_zero() or b.is_zero():
        raise ValueError("a and b must not vanish identically")
    if not a.is_real():
        raise ValueError("a must be real")
    if not a.constant_term() or not b.constant_term():
        raise ValueError("a and b need a nonzero constant term")
    lam = frame.lam.scale(a)
    mu = frame.mu.scale(b) + frame.lam.scale(c)
    Z = frame.Z
    if b.is_constant():
        Z = Z.scale(ONE / ex.conj(b.constant_term()))
    new = CRFrame(lam, mu, Z)
    old2 = frame.canonical_2form()
    checks = {
        "lambda^mu scales by a b": new.canonical_2form() == old2.scale(a * b),
        "Z in H": contract(Z, lam).is_zero() and contract(Z, mu).is_zero(),
        "Z.mubar != 0": not contract(Z, mu.conj()).is_zero(),
    }
    return FrameChangeReport(new, checks)


# ------------------------------------------------------------- RT metric

@dataclass(frozen=True)
class OpticalChart:
    coords: tuple
    metric: SymTensor2
    k: PolyVField
    lam: Optional[PolyForm] = None

    def __post_init__(self):
        if self.metric.coords != tuple(self.coords) or self.k.coords != tuple(self.coords):
            raise ValueError("chart pieces live on different coordinates")
        if not self.metric(self.k, self.k).is_zero():
            raise ValueError("the ray field k is not null")


def rt_metric(data: CRData, P: Poly, xi: PolyForm) -> OpticalChart:
    """g = P^2 mu ⊗_sym conj(mu) + lambda ⊗_sym xi on (u, x, y, r)."""
    c = RT_COORDS
    _require_coords(P, c, "P")
    _require_coords(xi, c, "xi")
    if xi.degree != 1 or not xi.is_real() or not P.is_real():
        raise ValueError("P must be a real function and xi a real 1-form")
    frame = cr_frame(data)
    lam, mu = frame.lam.embed(c), frame.mu.embed(c)
    volume = lam.wedge(mu).wedge(mu.conj()).wedge(xi).scale(P * P)
    if volume.is_zero():
        raise ValueError("degenerate: P^2 lambda ^ mu ^ conj(mu) ^ xi vanishes identically")
    g = SymTensor2.sym(mu, mu.conj()).scale(P * P) + SymTensor2.sym(lam, xi)
    if not g.is_real():
        raise AssertionError("assembled metric is not real")
    return OpticalChart(c, g, PolyVField.partial(c, "r"), lam)


def chart_checks(chart: OpticalChart) -> dict:
    g, k = chart.metric, chart.k
    gk = g.lower(k)
    out = {"g(k,k) = 0": g(k, k).is_zero()}
    if chart.lam is not None:
        out["lambda ^ g(k) = 0"] = chart.lam.wedge(gk).is_zero()
        out["g(k) != 0"] = not gk.is_zero()
    return out


def random_point(rng: random.Random, coords, spread: float = 2.0) -> dict:
    return {c: rng.uniform(-spread, spread) for c in coords}


def numeric_signature(chart: OpticalChart, point: Mapping, tol: float = 1e-9) -> Optional[tuple[int, int]]:
    """(positive, negative) eigenvalue counts, or None if an eigenvalue is within tol of 0."""
    G = chart.metric.evalf(point)
    if np.abs(G.imag).max() > tol:
        return None
    ev = np.linalg.eigvalsh(G.real)
    scale = max(1.0, float(np.abs(ev).max()))
    if np.any(np.abs(ev) <= tol * scale):
        return None
    return int((ev > 0).sum()), int((ev < 0).sum())


def signature_sweep(chart: OpticalChart, points: int = 10, seed: int = 0, tol: float = 1e-9) -> list:
    rng = random.Random(seed)
    return [numeric_signature(chart, random_point(rng, chart.coords), tol) for _ in range(points)]


def random_L(rng: random.Random, degree: int = 3, terms: int = 4, spread: int = 3) -> Poly:
    """Random polynomial L(u, x, y) with small Gaussian-rational coefficients."""
    monos = [m for m in _monomials(3, degree)]
    out = {}
    for m in rng.sample(monos, min(terms, len(monos))):
        re_ = Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        im_ = Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        out[m] = ex.gq(re_, im_)
    return Poly.from_terms(CR_COORDS, out)


def _monomials(n: int, degree: int):
    if n == 0:
        yield ()
        return
    for a in range(degree + 1):
        for rest in _monomials(n - 1, degree - a):
            yield (a,) + rest


# ------------------------------------------------------------ null planes

@dataclass(frozen=True)
class NullPlaneData:
    span: tuple
    metric: SymTensor2

    def __post_init__(self):
        if len(self.span) != 2:
            raise ValueError("a null plane is spanned by two fields")
        for X in self.span:
            if X.coords != self.metric.coords:
                raise ValueError("span and metric live on different coordinates")
        bad = null_products(self)
        if bad:
            raise ValueError(f"span is not totally null: nonzero products {bad}")

    @property
    def coords(self):
        return self.metric.coords


def null_products(N) -> list:
    """Index pairs (i, j) with g(n_i, n_j) not identically zero."""
    span, g = N.span, N.metric
    return [(i, j) for i in range(len(span)) for j in range(i, len(span)) if not g(span[i], span[j]).is_zero()]


def lift_Z(data: CRData) -> PolyVField:
    """Coordinate lift of Z to (u, x, y, r) with zero r-component."""
    return cr_frame(data).Z.embed(RT_COORDS)


def null_plane_from_chart(chart: OpticalChart, data: CRData) -> NullPlaneData:
    return NullPlaneData((chart.k, lift_Z(data)), chart.metric)


def plane_relations(N: NullPlaneData, lam: PolyForm) -> dict:
    """N ∩ conj(N) = C k and N + conj(N) = ker lambda, at the level of spans."""
    k, Zh = N.span
    Zb = Zh.conj()
    return {
        "k real": k == k.conj(),
        "k, Z, conj Z independent": bool(multivector_wedge([k, Zh, Zb])),
        "span in ker lambda": all(contract(v, lam).is_zero() for v in (k, Zh, Zb)),
    }


def integrability_check(N) -> bool:
    """[Gamma(N), Gamma(N)] ⊂ Gamma(N), tested on the spanning fields."""
    span = list(N.span)
    return all(membership_in_span(lie_bracket(X, Y), span) for X, Y in combinations(span, 2))


# ------------------------------------------------------- pointwise Hodge star

def _levi_civita(idx) -> int:
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def _antisym(F: Mapping, n: int):
    A = [[ZERO] * n for _ in range(n)]
    for (a, b), v in F.items():
        v = ex.coerce(v)
        A[a][b] = v
        A[b][a] = -v
    return A


def star_2form(F: Mapping, G: DomainMatrix) -> dict:
    """Hodge star of a constant 2-form {(a, b): F_ab} in dimension 4 for a real metric matrix G."""
    n = G.shape[0]
    if n != 4:
        raise ValueError("the pointwise 2-form star is implemented in dimension 4")
    det = ex.coerce(G.to_sparse().to_dense().det())
    if not ex.is_real(det) or not det:
        raise ValueError("metric must be real and nondegenerate at the point")
    detr = ex.re(det)
    root = ex.rational_sqrt(abs(detr))
    if root is None:
        raise ValueError("sqrt|det g| is irrational at this point; choose another sample point")
    Ginv = ex.entries(ex.inv(G))
    A = _antisym(F, n)
    up = [[sum((Ginv[a][c] * A[c][d] * Ginv[d][b] for c in range(n) for d in range(n)), ZERO)
           for b in range(n)] for a in range(n)]
    factor = ex.gq(-root if detr > 0 else root)
    out = {}
    for c, d in combinations(range(n), 2):
        s = ZERO
        for a, b in combinations(range(n), 2):
            e = _levi_civita((a, b, c, d))
            if e and up[a][b]:
                s += up[a][b] if e > 0 else -up[a][b]
        if s:
            out[(c, d)] = s * factor
    return out


def clifford_star_2form(F: Mapping, sig: Signature) -> dict:
    """Same star through the multivector route, in an orthonormal frame of signature sig."""
    s = [sig.square(mu) for mu in range(1, sig.dim + 1)]
    bivector = ExteriorElement(sig, {(a + 1, b + 1): ex.coerce(v) * (s[a] * s[b]) for (a, b), v in F.items()})
    image = hodge_star(bivector)
    return {(b[0] - 1, b[1] - 1): c * (s[b[0] - 1] * s[b[1] - 1]) for b, c in image.coeffs.items()}


def inertia(G: DomainMatrix) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a real symmetric matrix, by exact congruence."""
    A = [list(r) for r in ex.entries(G)]
    n = len(A)
    if any(not ex.is_real(z) for r in A for z in r):
        raise ValueError("matrix must be real")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j creates a nonzero diagonal entry 2 A_ij
            for t in range(n):
                A[i][t] += A[j][t]
            for t in range(n):
                A[t][i] += A[t][j]
            piv = i
        p = A[piv][piv]
        if ex.re(p) > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        row = A[piv]
        for i in active:
            f = A[i][piv] / p
            if f:
                for t in active:
                    A[i][t] -= f * row[t]
        for i in active:
            A[i][piv] = A[piv][i] = ZERO
    return pos, neg, n - pos - neg


@dataclass(frozen=True)
class DualityReport:
    F: PolyForm
    point: dict
    signature: tuple
    iota: object
    sign: Optional[int]
    F_wedge_Fbar_zero: bool

    @property
    def self_dual_up_to_sign(self) -> bool:
        return self.sign is not None


def _signature_iota(pos: int, neg: int):
    d = neg - pos
    return I if (d * (d + 1) // 2) % 2 else ONE


def _default_points(coords):
    vals = [Fraction(1, 2), Fraction(1, 3), Fraction(-2, 5), Fraction(3, 7), Fraction(2), Fraction(-1)]
    for shift in range(12):
        yield {c: vals[(i + shift) % len(vals)] + shift for i, c in enumerate(coords)}


def sample_point(metric: SymTensor2, candidates=None) -> dict:
    """First rational point where the metric is nondegenerate and sqrt|det g| is rational."""
    for pt in candidates or _default_points(metric.coords):
        G = metric.at(pt)
        det = ex.coerce(G.to_sparse().to_dense().det())
        if det and ex.is_real(det) and ex.rational_sqrt(abs(ex.re(det))) is not None:
            return pt
    raise ValueError("no usable sample point found")


def null_2form(N: NullPlaneData, point: Optional[Mapping] = None) -> DualityReport:
    """F = g(n1) ^ g(n2), with the duality sign of star F = +-iota F at a sample point."""
    g = N.metric
    n1, n2 = N.span
    F = g.lower(n1).wedge(g.lower(n2))
    if F.is_zero():
        raise ValueError("span is degenerate: F vanishes identically")
    pt = dict(point) if point is not None else sample_point(g)
    G = g.at(pt)
    pos, neg, zero = inertia(G)
    if zero:
        raise ValueError("metric is degenerate at the sample point")
    iota = _signature_iota(pos, neg)
    Fp = F.at(pt)
    star = star_2form(Fp, G)
    sign = None
    for s in (1, -1):
        lam = iota * s
        keys = set(Fp) | set(star)
        if all(star.get(k, ZERO) == lam * Fp.get(k, ZERO) for k in keys):
            sign = s
            break
    return DualityReport(F, pt, (pos, neg), iota, sign, F.wedge(F.conj()).is_zero())


# ---------------------------------------------------------- spinor null planes

def constant_metric(rep: GammaRep) -> SymTensor2:
    n = rep.k + rep.l
    return SymTensor2.constant(SPINOR_COORDS[:n], [[rep.metric(i + 1) if i == j else 0 for j in range(n)] for i in range(n)])


def _vfield(vec) -> PolyVField:
    return PolyVField(SPINOR_COORDS, [ex.coerce(c) for c in vec])


@dataclass(frozen=True)
class SpinorPlane:
    plane: NullPlaneData
    vectors: tuple
    chirality: str
    pairing: object
    real_direction: Optional[tuple] = None
    J: Optional[DomainMatrix] = None


def spinor_pairing(phi: DomainMatrix, tw: Intertwiner):
    """<B phi_c, phi>."""
    return ex.scalar((tw.B * charge_conjugate(phi, tw.C)).transpose() * phi)


def _vec(v: DomainMatrix) -> tuple:
    return tuple(ex.vector_entries(v))


def null_plane_from_spinor(phi, rep: GammaRep, tw: Optional[Intertwiner] = None) -> SpinorPlane:
    """N = {n : gamma(n) phi = 0} for a Weyl spinor phi in dimension 4."""
    if (rep.k, rep.l) not in ((4, 0), (3, 1), (2, 2)):
        raise ValueError("null planes from spinors are built for signatures (4,0), (3,1), (2,2)")
    col = phi.components if isinstance(phi, Spinor) else phi
    if ex.is_zero(col):
        raise ValueError("zero spinor")
    chi = chirality(rep, col)
    if chi == "mixed":
        raise ValueError("spinor has mixed chirality")
    tw = tw or intertwiners(rep)
    M = ex.hstack([g * col for g in rep.gammas])
    ns = ex.kernel(M)
    if len(ns) != 2:
        raise AssertionError(f"expected a 2-dimensional kernel, got {len(ns)}")
    vectors = tuple(_vec(n) for n in ns)
    plane = NullPlaneData(tuple(_vfield(v) for v in vectors), constant_metric(rep))
    both = ex.hstack(ns + [ex.mconj(n) for n in ns])
    rank = both.to_sparse().rank()
    real_dir = J = None
    if rank == 3:
        inter = ex.kernel(both)
        assert len(inter) == 1
        # a combination a n1 + b n2 = c conj(n1) + d conj(n2)
        coeffs = ex.vector_entries(inter[0])
        k = ns[0] * coeffs[0] + ns[1] * coeffs[1]
        k = ex.scale_first_nonzero(k)
        real_dir = _vec(k)
    elif rank == 4:
        J = plane_complex_structure(ns)
    return SpinorPlane(plane, vectors, chi, spinor_pairing(col, tw), real_dir, J)


def plane_complex_structure(ns: Sequence[DomainMatrix]) -> DomainMatrix:
    """Real J with J(n + conj n) = i (n - conj n) for n in N, when N ∩ conj(N) = 0."""
    P = ex.hstack(list(ns) + [ex.mconj(n) for n in ns])
    m = len(ns)
    D = ex.matrix([[(I if i < m else -I) if i == j else ZERO for j in range(2 * m)] for i in range(2 * m)])
    J = P * D * ex.inv(P)
    if any(not ex.is_real(z) for r in ex.entries(J) for z in r):
        raise AssertionError("complex structure from N is not real")
    return J


def spinor_plane_checks(sp: SpinorPlane, rep: GammaRep, tw: Optional[Intertwiner] = None,
                        phi: Optional[DomainMatrix] = None) -> dict:
    """Duality sign vs chirality, and the signature-specific statements about N."""
    rep_sig = (rep.k, rep.l)
    rpt = null_2form(sp.plane, {c: 0 for c in SPINOR_COORDS})
    want = 1 if sp.chirality == "+" else -1
    out = {"dim N = 2": len(sp.vectors) == 2, "star F = chirality sign * iota F": rpt.sign == want}
    if rep_sig == (3, 1):
        out["real null direction in N"] = sp.real_direction is not None and all(ex.is_real(c) for c in sp.real_direction)
        out["F ^ conj F = 0"] = rpt.F_wedge_Fbar_zero
    else:
        if sp.J is not None:
            G = constant_metric(rep).at({c: 0 for c in SPINOR_COORDS})
            op = ComplexStructureOp(sp.J)
            out["J orthogonal"] = is_orthogonal(op, RealQuadraticSpace(G))
            out["F ^ conj F != 0"] = not rpt.F_wedge_Fbar_zero
            if phi is not None and sp.pairing:
                out["bilinear = i g(J)"] = bilinear_matches_J(phi, rep, tw or intertwiners(rep), sp.J)
        else:
            out["real plane: N = conj N"] = sp.real_direction is None and not sp.pairing
            if phi is not None:
                phic = charge_conjugate(phi, (tw or intertwiners(rep)).C)
                out["phi proportional to a Majorana spinor"] = ex.scalar_multiple(phic, phi) is not None
    return out


def bilinear_matches_J(phi: DomainMatrix, rep: GammaRep, tw: Intertwiner, J: DomainMatrix) -> bool:
    """<B phi_c, gamma_a gamma_b phi> / <B phi_c, phi> = i g(J e_a, e_b) up to index placement."""
    pair = spinor_pairing(phi, tw)
    if not pair:
        return False
    psi = (tw.B * charge_conjugate(phi, tw.C)).transpose()
    n = rep.k + rep.l
    G = constant_metric(rep).at({c: 0 for c in SPINOR_COORDS})
    omega = ex.matrix([[ex.scalar(psi * rep.gammas[a] * rep.gammas[b] * phi) / pair if a != b else ZERO
                        for b in range(n)] for a in range(n)])
    return ex.meq(omega, G * J * I)


# -------------------------------------------------------- conjecture verifier

def gradient(f: Poly) -> list[Poly]:
    _require_coords(f, FLAT3, "function")
    return [f.diff(c) for c in FLAT3]


def cross(a: Sequence[Poly], b: Sequence[Poly]) -> list[Poly]:
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def divergence(F: PolyVField) -> Poly:
    _require_coords(F, FLAT3, "F")
    return sum((F[c].diff(c) for c in FLAT3), Poly(FLAT3, 0))


@dataclass(frozen=True)
class ConjectureReport:
    div_free: bool
    nondegenerate: bool
    matches: bool
    F_cross_Fbar: tuple
    residual: tuple

    @property
    def verified(self) -> bool:
        return self.div_free and self.nondegenerate and self.matches

    def as_dict(self) -> dict:
        return {"div F = 0": self.div_free, "F x conj F != 0": self.nondegenerate,
                "F = grad z x grad w": self.matches, "verified": self.verified}


def conjecture_verify(F: PolyVField, z: Poly, w: Poly) -> ConjectureReport:
    """Check a candidate triple against F = grad z x grad w, div F = 0, F x conj F != 0 on (x, y, u)."""
    comps = list(F.components)
    fxf = cross(comps, [c.conj() for c in comps])
    target = cross(gradient(z), gradient(w))
    resid = [a - b for a, b in zip(comps, target)]
    return ConjectureReport(
        div_free=divergence(F).is_zero(),
        nondegenerate=any(fxf),
        matches=not any(resid),
        F_cross_Fbar=tuple(fxf),
        residual=tuple(resid),
    )


def cross_field(z: Poly, w: Poly) -> PolyVField:
    return PolyVField(FLAT3, cross(gradient(z), gradient(w)))
