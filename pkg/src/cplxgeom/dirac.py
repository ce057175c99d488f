"""Plane-wave solutions of the Dirac equation in signature (2n-1, 1) and their current.

Conventions: the metric is diag(+,...,+,-) with the time-like direction last,
gamma^mu = g^{mu mu} gamma_mu, and a plane wave is a exp(i p_mu x^mu).  With a
constant potential A the equation gamma^mu (d_mu - i e A_mu) psi = m psi becomes
(i gamma^mu (p_mu - e A_mu) - m) a = 0.

Currents of finite superpositions are exponential polynomials: maps from a
frequency vector (a difference of momenta) to a Gaussian-rational coefficient,
so reality and conservation are decided coefficient by coefficient.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from sympy.polys.matrices import DomainMatrix

from . import exact as ex
from .exact import I, ONE, ZERO
from .spinor_rep import GammaRep, Intertwiner, build_gamma, intertwiners


def lorentzian_rep(n: int) -> GammaRep:
    return build_gamma(2 * n - 1, 1)


def _frac_vec(v) -> tuple:
    return tuple(Fraction(x) for x in v)


def _require_lorentzian(rep: GammaRep):
    if rep.l != 1:
        raise ValueError(f"Dirac module works in signature (2n-1, 1), got ({rep.k},{rep.l})")


def is_on_shell(p, m, e=0, A=None) -> bool:
    q = _kinetic(p, e, A)
    return q[-1] ** 2 == sum(x * x for x in q[:-1]) + Fraction(m) ** 2


def _kinetic(p, e=0, A=None) -> tuple:
    p = _frac_vec(p)
    if A is None:
        return p
    return tuple(x - Fraction(e) * a for x, a in zip(p, _frac_vec(A)))


def dirac_operator(rep: GammaRep, p, m, e=0, A=None) -> DomainMatrix:
    """i gamma^mu (p_mu - e A_mu) - m."""
    _require_lorentzian(rep)
    q = _kinetic(p, e, A)
    op = ex.eye(rep.size) * ex.gq(-Fraction(m))
    for mu, qm in enumerate(q, start=1):
        if qm:
            op = op + rep.gamma_upper(mu) * (I * ex.gq(qm))
    return op


def solve_amplitudes(rep: GammaRep, p, m, e=0, A=None) -> list[DomainMatrix]:
    """Kernel of the Dirac operator; dimension 2^(n-1) on shell, 0 off shell."""
    return ex.kernel(dirac_operator(rep, p, m, e, A))


@dataclass(frozen=True, eq=False)
class PlaneWave:
    p: tuple
    amplitude: DomainMatrix
    m: Fraction = Fraction(0)
    e: Fraction = Fraction(0)
    A: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "p", _frac_vec(self.p))
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "e", Fraction(self.e))
        A = _frac_vec(self.A) if self.A is not None else tuple(Fraction(0) for _ in self.p)
        if len(A) != len(self.p):
            raise ValueError("potential and momentum have different lengths")
        object.__setattr__(self, "A", A)
        if self.m < 0:
            raise ValueError("mass must be nonnegative")


@dataclass(frozen=True, eq=False)
class WaveFunction:
    waves: tuple

    def __post_init__(self):
        waves = tuple(self.waves)
        if not waves:
            raise ValueError("empty superposition")
        key = (waves[0].m, waves[0].e, waves[0].A)
        for w in waves[1:]:
            if (w.m, w.e, w.A) != key:
                raise ValueError("all summands must share mass, charge and potential")
        object.__setattr__(self, "waves", waves)

    @property
    def m(self):
        return self.waves[0].m

    @property
    def e(self):
        return self.waves[0].e

    @property
    def A(self):
        return self.waves[0].A

    def value(self, x) -> np.ndarray:
        out = 0
        for w in self.waves:
            phase = np.exp(1j * float(np.dot([float(v) for v in w.p], x)))
            out = out + ex.to_numpy(w.amplitude)[:, 0] * phase
        return out


@dataclass(frozen=True, eq=False)
class ExpPoly:
    """sum_q c_q exp(i q . x) with exact frequencies q and coefficients c_q."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {q: c for q, c in self.terms.items() if c})

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        out = dict(self.terms)
        for q, c in other.terms.items():
            out[q] = out.get(q, ZERO) + c
        return ExpPoly(out)

    def is_zero(self) -> bool:
        return not self.terms

    def is_real(self) -> bool:
        """Real for every x iff c_{-q} = conj(c_q)."""
        for q, c in self.terms.items():
            neg = tuple(-x for x in q)
            if self.terms.get(neg, ZERO) != ex.conj(c):
                return False
        return True

    def derivative(self, mu: int) -> "ExpPoly":
        """d/dx^mu, 1-based index."""
        return ExpPoly({q: c * I * ex.gq(q[mu - 1]) for q, c in self.terms.items()})

    def __call__(self, x) -> complex:
        total = 0j
        for q, c in self.terms.items():
            total += ex.to_complex(c) * np.exp(1j * sum(float(a) * b for a, b in zip(q, x)))
        return total


def _check_tw(tw: Intertwiner):
    if not tw.normalized:
        raise ValueError("current needs a normalized intertwiner pair")


def _dual_amplitudes(psi: WaveFunction, rep: GammaRep, tw: Intertwiner) -> list[DomainMatrix]:
    """B g_chir (a_r)_c for every summand."""
    Cinv = ex.inv(tw.C)
    M = tw.B * rep.gamma_chir * Cinv
    return [M * ex.mconj(w.amplitude) for w in psi.waves]


def current_field(psi: WaveFunction, rep: GammaRep, tw: Intertwiner) -> list[ExpPoly]:
    """j^mu = i^(n+1) <B g_chir psi_c, gamma^mu psi> as exponential polynomials."""
    _require_lorentzian(rep)
    _check_tw(tw)
    pref = ex.ipow(rep.n + 1)
    duals = _dual_amplitudes(psi, rep, tw)
    out = []
    for mu in range(1, 2 * rep.n + 1):
        gu = rep.gamma_upper(mu)
        terms: dict = {}
        images = [gu * w.amplitude for w in psi.waves]
        for r, wr in enumerate(psi.waves):
            for s, ws in enumerate(psi.waves):
                q = tuple(a - b for a, b in zip(ws.p, wr.p))
                terms[q] = terms.get(q, ZERO) + pref * ex.dot(duals[r], images[s])
        out.append(ExpPoly(terms))
    return out


def current_at_phases(psi: WaveFunction, phases: Sequence, rep: GammaRep, tw: Intertwiner) -> list:
    """Exact current when the r-th plane wave's phase factor is phases[r] (|phase| = 1)."""
    _require_lorentzian(rep)
    _check_tw(tw)
    if len(phases) != len(psi.waves):
        raise ValueError("one phase per summand")
    pref = ex.ipow(rep.n + 1)
    amp = ex.zeros(rep.size, 1)
    for w, ph in zip(psi.waves, phases):
        amp = amp + w.amplitude * ex.coerce(ph)
    dual = tw.B * rep.gamma_chir * ex.inv(tw.C) * ex.mconj(amp)
    return [pref * ex.dot(dual, rep.gamma_upper(mu) * amp) for mu in range(1, 2 * rep.n + 1)]


def current(psi: WaveFunction, x, rep: GammaRep, tw: Intertwiner) -> np.ndarray:
    """Current at a point (floating evaluation of the exact exponential polynomial)."""
    return np.array([j(x) for j in current_field(psi, rep, tw)])


def conjugate_wave(psi: WaveFunction, tw: Intertwiner) -> WaveFunction:
    """psi_c as a superposition: amplitudes C^{-1} conj(a), momenta -p."""
    Cinv = ex.inv(tw.C)
    return WaveFunction(tuple(
        PlaneWave(tuple(-x for x in w.p), Cinv * ex.mconj(w.amplitude), w.m, -w.e, w.A)
        for w in psi.waves
    ))


def divergence_exact(psi: WaveFunction, rep: GammaRep, tw: Intertwiner) -> ExpPoly:
    out = ExpPoly()
    for mu, j in enumerate(current_field(psi, rep, tw), start=1):
        out = out + j.derivative(mu)
    return out


def _numeric_current(psi: WaveFunction, rep: GammaRep, tw: Intertwiner):
    B, C = ex.to_numpy(tw.B), ex.to_numpy(tw.C)
    M = B @ ex.to_numpy(rep.gamma_chir) @ np.linalg.inv(C)
    gup = [ex.to_numpy(rep.gamma_upper(mu)) for mu in range(1, 2 * rep.n + 1)]
    pref = 1j ** (rep.n + 1)

    def j(x):
        v = psi.value(x)
        dual = M @ np.conj(v)
        return np.array([pref * dual @ (g @ v) for g in gup])

    return j


def divergence_numeric(psi: WaveFunction, rep: GammaRep, tw: Intertwiner, points: int = 20,
                       seed: int = 0, h: float = 1e-3) -> float:
    """Largest relative size of the finite-difference divergence over random points.

    Fourth-order central differences; relative to max(sum_mu |d_mu j^mu|, max_mu |j^mu|)."""
    _check_tw(tw)
    j = _numeric_current(psi, rep, tw)
    rng = np.random.default_rng(seed)
    dim = 2 * rep.n
    worst = 0.0
    for _ in range(points):
        x = rng.uniform(-2, 2, size=dim)
        parts = []
        for mu in range(dim):
            step = np.zeros(dim)
            step[mu] = h
            d = (-j(x + 2 * step)[mu] + 8 * j(x + step)[mu] - 8 * j(x - step)[mu] + j(x - 2 * step)[mu]) / (12 * h)
            parts.append(d)
        scale = max(sum(abs(d) for d in parts), float(np.max(np.abs(j(x)))), 1e-300)
        worst = max(worst, abs(sum(parts)) / scale)
    return worst


def satisfies_dirac(psi: WaveFunction, rep: GammaRep) -> bool:
    return all(
        ex.is_zero(dirac_operator(rep, w.p, w.m, w.e, w.A) * w.amplitude) for w in psi.waves
    )


def conjugate_equation_check(psi: WaveFunction, rep: GammaRep, tw: Intertwiner) -> bool:
    """psi_c solves gamma^mu (d_mu + i e A_mu) psi_c = m psi_c, summand by summand."""
    if not satisfies_dirac(psi, rep):
        raise ValueError("psi does not solve the Dirac equation")
    Cinv = ex.inv(tw.C)
    for w in psi.waves:
        b = Cinv * ex.mconj(w.amplitude)
        op = ex.eye(rep.size) * ex.gq(-w.m)
        for mu in range(1, 2 * rep.n + 1):
            # d_mu exp(-i p x) = -i p_mu, plus the +i e A_mu coupling
            coeff = I * ex.gq(-w.p[mu - 1] + w.e * w.A[mu - 1])
            if coeff:
                op = op + rep.gamma_upper(mu) * coeff
        if not ex.is_zero(op * b):
            return False
    return True


# ------------------------------------------------------------------ sampling

def rational_sphere_point(rng: random.Random, d: int, spread: int = 3) -> tuple:
    """Rational point on the unit sphere S^d in R^(d+1) (inverse stereographic)."""
    t = [Fraction(rng.randint(-spread, spread), rng.randint(1, spread)) for _ in range(d)]
    s = sum(x * x for x in t)
    return tuple(2 * x / (s + 1) for x in t) + ((s - 1) / (s + 1),)


def random_on_shell_momentum(rng: random.Random, n: int, m, e=0, A=None) -> tuple:
    """Rational p with (p - eA) on the mass shell, energy of random sign."""
    m = Fraction(m)
    dim = 2 * n
    while True:
        u = rational_sphere_point(rng, dim - 1)
        if m:
            if not u[-1]:
                continue
            spatial = tuple(m * x / u[-1] for x in u[:-1])
            energy = abs(m / u[-1])
        else:
            scale = Fraction(rng.randint(1, 4), rng.randint(1, 3))
            v = rational_sphere_point(rng, dim - 2)
            spatial = tuple(scale * x for x in v)
            energy = scale
        energy *= rng.choice((1, -1))
        q = spatial + (energy,)
        if A is None:
            return q
        return tuple(x + Fraction(e) * Fraction(a) for x, a in zip(q, A))


def random_amplitude(rng: random.Random, basis: list[DomainMatrix], spread: int = 3) -> DomainMatrix:
    while True:
        out = ex.zeros(basis[0].shape[0], 1)
        for b in basis:
            out = out + b * ex.gq(rng.randint(-spread, spread), rng.randint(-spread, spread))
        if not ex.is_zero(out):
            return out


def random_wavefunction(rng: random.Random, rep: GammaRep, waves: int = 2, m=None, e=0,
                        A=None) -> WaveFunction:
    if m is None:
        m = Fraction(rng.randint(1, 3), rng.randint(1, 2))
    out = []
    for _ in range(waves):
        p = random_on_shell_momentum(rng, rep.n, m, e, A)
        basis = solve_amplitudes(rep, p, m, e, A)
        out.append(PlaneWave(p, random_amplitude(rng, basis), m, e, A))
    return WaveFunction(tuple(out))


def wave_from_dict(rep: GammaRep, entry: dict) -> PlaneWave:
    """Build a plane wave from the JSON form {p, amplitude_seed, m, e, A}."""
    p = tuple(ex.parse_fraction(x) for x in entry["p"])
    m = ex.parse_fraction(entry.get("m", 0))
    e = ex.parse_fraction(entry.get("e", 0))
    A = entry.get("A")
    A = tuple(ex.parse_fraction(x) for x in A) if A is not None else None
    basis = solve_amplitudes(rep, p, m, e, A)
    if not basis:
        raise ValueError(f"momentum {entry['p']} is off shell")
    amp = random_amplitude(random.Random(entry.get("amplitude_seed", 0)), basis)
    return PlaneWave(p, amp, m, e, A)
