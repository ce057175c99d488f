"""Dirac representations of Cl(k, l) for even k + l, intertwiners and charge conjugation.

Matrix transcriptions (the abstract maps become these literal matrix identities):

* dual pairing <s', s> = sum_a s'_a s_a, so B : S -> S* gives  B g_mu = g_mu^T B
* C : S -> conj(S) is plain matrix multiplication:           C g_mu = conj(g_mu) C
* conj(C) C = +-id  and  conj(B) C = conj(C)^T B^T  are literal products.

Weyl spaces are the eigenspaces of g_chir = g_1 ... g_2n for the eigenvalues
+-iota, with iota = 1 when eta^2 = 1 and iota = i when eta^2 = -1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from sympy.polys.domains import CC, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.sdm import SDM

from . import exact as ex
from .clifford_core import Signature, eta_square_sign, volume_element
from .cstruct import split_pm
from .exact import I, ONE, ZERO

SX = ex.matrix([[0, 1], [1, 0]])
SY = ex.matrix([[0, -I], [I, 0]])
SZ = ex.matrix([[1, 0], [0, -1]])
ID2 = ex.eye(2)
ISY = SY * I  # [[0, 1], [-1, 0]], squares to -1

MAX_REP_DIM = 8


@dataclass(frozen=True, eq=False)
class GammaRep:
    k: int
    l: int
    gammas: tuple
    preset: Optional[str] = None
    gamma_chir: DomainMatrix = field(init=False)
    iota: object = field(init=False)

    def __post_init__(self):
        if len(self.gammas) != self.k + self.l:
            raise ValueError("need one matrix per generator")
        chir = ex.eye(self.size)
        for g in self.gammas:
            chir = chir * g
        object.__setattr__(self, "gamma_chir", chir)
        eta = volume_element(self.signature)
        eta2 = eta * eta
        # iota from eta^2 computed in the Clifford algebra itself
        object.__setattr__(self, "iota", ONE if eta2.coefficient(()) == ONE else I)

    @property
    def signature(self) -> Signature:
        return Signature(self.k, self.l)

    @property
    def n(self) -> int:
        return (self.k + self.l) // 2

    @property
    def size(self) -> int:
        return self.gammas[0].shape[0] if self.gammas else 1

    def metric(self, mu: int) -> int:
        """g_{mu mu} for a 1-based index."""
        return 1 if mu <= self.k else -1

    def gamma_upper(self, mu: int) -> DomainMatrix:
        """gamma^mu = g^{mu mu} gamma_mu (orthonormal metric)."""
        g = self.gammas[mu - 1]
        return g if self.metric(mu) > 0 else -g

    def act(self, vec) -> DomainMatrix:
        """gamma(n) = n^mu gamma_mu for a vector of components."""
        out = ex.zeros(self.size, self.size)
        for c, g in zip(vec, self.gammas):
            c = ex.coerce(c)
            if c:
                out = out + g * c
        return out

    def relations_hold(self) -> bool:
        return check_clifford_relations(self.gammas, self.k, self.l)

    def times_i(self) -> "GammaRep":
        """i*gamma_mu represents Cl(l, k); reorder so the +1 squares come first."""
        scaled = [g * I for g in self.gammas]
        return GammaRep(self.l, self.k, tuple(scaled[self.k:] + scaled[: self.k]))


def check_clifford_relations(gammas, k: int, l: int) -> bool:
    """g_mu g_nu + g_nu g_mu = 2 g_{mu nu} id, checked pair by pair."""
    if not gammas:
        return True
    d = gammas[0].shape[0]
    one = ex.eye(d)
    for a, ga in enumerate(gammas):
        for b in range(a, len(gammas)):
            gb = gammas[b]
            anti = ga * gb + gb * ga
            target = one * (2 if a < k else -2) if a == b else ex.zeros(d, d)
            if not ex.meq(anti, target):
                return False
    return True


def _tensor_generators(n: int):
    pos, neg = [], []
    for j in range(n):
        pad = [SZ] * j
        tail = [ID2] * (n - j - 1)
        pos.append(ex.kron(*(pad + [SX] + tail)))
        neg.append(ex.kron(*(pad + [ISY] + tail)))
    return pos, neg


def preset8_gammas() -> tuple:
    X, Y, Z, E = SX, SY, SZ, ID2
    return (
        ex.kron(X, E, E, E),
        ex.kron(Y, Y, E, E),
        ex.kron(Y, X, Y, E),
        ex.kron(Y, X, X, Y),
        ex.kron(Y, X, Z, Y),
        ex.kron(Y, Z, E, Y),
        ex.kron(Y, Z, Y, X),
        ex.kron(Y, Z, Y, Z) * I,
    )


def preset8_C() -> DomainMatrix:
    return ex.kron(SX, SZ, SY, SZ)


def build_gamma(k: int, l: int, preset: Optional[str] = None) -> GammaRep:
    m = k + l
    if k < 0 or l < 0:
        raise ValueError("signature counts must be nonnegative")
    if m % 2:
        raise ValueError(
            f"Cl({k},{l}) is odd-dimensional; Dirac spinor representations are built "
            "only for even k + l"
        )
    if not 2 <= m <= MAX_REP_DIM:
        raise ValueError(f"k + l must lie in 2..{MAX_REP_DIM}")
    if preset is not None:
        if preset != "paper8":
            raise ValueError(f"unknown preset {preset!r}")
        if (k, l) != (7, 1):
            raise ValueError("preset paper8 is the (7,1) representation")
        return GammaRep(7, 1, preset8_gammas(), preset="paper8")
    n = m // 2
    pos, neg = _tensor_generators(n)
    if k >= n:
        flip = k - n
        plus = pos + [g * I for g in neg[n - flip:]]
        minus = neg[: n - flip]
    else:
        flip = n - k
        plus = pos[: n - flip]
        minus = [g * I for g in pos[n - flip:]] + neg
    rep = GammaRep(k, l, tuple(plus + minus))
    assert rep.relations_hold()
    return rep


# ------------------------------------------------------------------ Weyl split

def weyl_split(rep: GammaRep) -> tuple[list[DomainMatrix], list[DomainMatrix]]:
    d = rep.size
    plus = ex.kernel(rep.gamma_chir - ex.eye(d) * rep.iota)
    minus = ex.kernel(rep.gamma_chir + ex.eye(d) * rep.iota)
    assert len(plus) == len(minus) == d // 2
    return plus, minus


def chirality(rep: GammaRep, phi: DomainMatrix) -> str:
    """'+' or '-' for a Weyl spinor, 'mixed' otherwise (including zero)."""
    if ex.is_zero(phi):
        return "mixed"
    g = rep.gamma_chir * phi
    if ex.meq(g, phi * rep.iota):
        return "+"
    if ex.meq(g, phi * (-rep.iota)):
        return "-"
    return "mixed"


@dataclass(frozen=True, eq=False)
class Spinor:
    components: DomainMatrix
    chirality: str = "mixed"

    @classmethod
    def of(cls, rep: GammaRep, components) -> "Spinor":
        col = components if isinstance(components, DomainMatrix) else ex.column(components)
        return cls(col, chirality(rep, col))


# ---------------------------------------------------------------- intertwiners

def intertwining_kernel(left: list, right: list) -> list[DomainMatrix]:
    """All X with X @ left[mu] == right[mu] @ X, as matrices (exact kernel)."""
    d = left[0].shape[0]
    rows: dict = {}
    r0 = 0
    for A, Bm in zip(left, right):
        arep, brep = A.to_sparse().rep, Bm.to_sparse().rep
        eqs: dict = {}
        # (X A)_{ij} = sum_k X_{ik} A_{kj}
        for kk, arow in arep.items():
            for j, a in arow.items():
                for i in range(d):
                    row = eqs.setdefault(i * d + j, {})
                    var = i * d + kk
                    row[var] = row.get(var, ZERO) + a
        # (B X)_{ij} = sum_k B_{ik} X_{kj}
        for i, brow in brep.items():
            for kk, b in brow.items():
                for j in range(d):
                    row = eqs.setdefault(i * d + j, {})
                    var = kk * d + j
                    row[var] = row.get(var, ZERO) - b
        for e, row in eqs.items():
            clean = {v: c for v, c in row.items() if c}
            if clean:
                rows[r0 + e] = clean
        r0 += d * d
    system = DomainMatrix.from_rep(SDM(rows, (r0, d * d), QQ_I))
    out = []
    for vec in ex.entries(system.nullspace()):
        out.append(ex.matrix([vec[i * d:(i + 1) * d] for i in range(d)]))
    return out


def _unique_solution(left, right, what: str) -> DomainMatrix:
    sols = intertwining_kernel(left, right)
    if len(sols) != 1:
        raise ValueError(
            f"{what}: intertwiner space has dimension {len(sols)}, expected 1 "
            "(representation not irreducible or corrupted)"
        )
    return ex.scale_largest_entry(sols[0])


def solve_B(rep: GammaRep) -> DomainMatrix:
    """B with B g_mu = g_mu^T B, largest entry scaled to 1."""
    return _unique_solution(list(rep.gammas), [g.transpose() for g in rep.gammas], "B")


def cc_sign_formula(k: int, l: int) -> int:
    """(-1)^((l-k)(l-k+2)/8)."""
    d = l - k
    return -1 if (d * (d + 2) // 8) % 2 else 1


def _unit_scale_for(r: Fraction):
    """A Gaussian rational z with |z|^2 = r, if a small one exists."""
    s = ex.rational_sqrt(r)
    if s is not None:
        return ex.gq(s)
    num, den = r.numerator * r.denominator, r.denominator
    # |a + b i|^2 = (a^2 + b^2)/den^2 with a^2 + b^2 = num*den
    a = 0
    while a * a <= num and a < 10**4:
        rest = ex.rational_sqrt(Fraction(num - a * a))
        if rest is not None:
            return ex.gq(Fraction(a, den), Fraction(rest) / den)
        a += 1
    return None


@dataclass(frozen=True, eq=False)
class Intertwiner:
    B: DomainMatrix
    C: DomainMatrix
    normalized: bool


def solve_C(rep: GammaRep) -> tuple[DomainMatrix, bool]:
    """C with C g_mu = conj(g_mu) C, scaled so conj(C) C = +-id.

    Returns (C, exact) where exact is False if only a floating normalization
    was possible."""
    C = _unique_solution(list(rep.gammas), [ex.mconj(g) for g in rep.gammas], "C")
    sq = ex.mconj(C) * C
    s = ex.scalar_multiple(sq, ex.eye(rep.size))
    if s is None or not ex.is_real(s) or not s:
        raise ValueError("conj(C) C is not a nonzero real multiple of the identity")
    scale = _unit_scale_for(1 / abs(ex.re(s)))
    if scale is None:
        import math

        f = 1.0 / math.sqrt(abs(float(ex.re(s))))
        return C.convert_to(CC) * CC(f), False
    return C * scale, True


def bc_ratio(B: DomainMatrix, C: DomainMatrix):
    """rho with conj(B) C = rho conj(C)^T B^T."""
    X = ex.mconj(B) * C
    Y = ex.mconj(C).transpose() * B.transpose()
    return ex.scalar_multiple(X, Y)


def normalize_pair(B: DomainMatrix, C: DomainMatrix) -> tuple[DomainMatrix, DomainMatrix]:
    """Fix the phase of B so that conj(B) C = conj(C)^T B^T.

    Replacing B by t*B multiplies the ratio rho by conj(t)/t, so t = i fixes
    rho = -1 and t = 1 + rho fixes any other unit rho."""
    rho = bc_ratio(B, C)
    if rho is None:
        raise ValueError("conj(B) C is not proportional to conj(C)^T B^T: conventions bug")
    if rho == ONE:
        return B, C
    if ex.mag2(rho) != 1:
        raise ValueError("ratio in the B/C identity is not a phase")
    if rho == -ONE:
        t = I
    else:
        t = ONE + rho
        r = ex.rational_sqrt(ex.mag2(t))
        if r is not None:
            t = t / ex.gq(r)
    B = B * t
    assert bc_ratio(B, C) == ONE
    return B, C


def intertwiners(rep: GammaRep) -> Intertwiner:
    B = solve_B(rep)
    C, exact = solve_C(rep)
    if not exact:
        return Intertwiner(B, C, False)
    B, C = normalize_pair(B, C)
    return Intertwiner(B, C, True)


@dataclass(frozen=True)
class IntertwinerReport:
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def as_dict(self) -> dict:
        return dict(self.checks)


def intertwiner_audit(rep: GammaRep, B: DomainMatrix, C: DomainMatrix) -> IntertwinerReport:
    n, d = rep.n, rep.size
    Binv, Cinv = ex.inv(B), ex.inv(C)
    g5 = rep.gamma_chir
    checks = [
        ("B gamma = gamma^T B", all(ex.meq(g.transpose(), B * g * Binv) for g in rep.gammas)),
        ("C gamma = conj(gamma) C", all(ex.meq(ex.mconj(g), C * g * Cinv) for g in rep.gammas)),
        ("B^T = (-1)^(n(n-1)/2) B", ex.meq(B.transpose(), B * ex.sign_pow(n * (n - 1) // 2))),
        ("gamma_chir^T = (-1)^n B gamma_chir B^-1", ex.meq(g5.transpose(), B * g5 * Binv * ex.sign_pow(n))),
        ("conj(gamma_chir) = C gamma_chir C^-1", ex.meq(ex.mconj(g5), C * g5 * Cinv)),
        ("conj(C) C = (-1)^((l-k)(l-k+2)/8) id", ex.meq(ex.mconj(C) * C, ex.eye(d) * cc_sign_formula(rep.k, rep.l))),
        ("conj(B) C = conj(C)^T B^T", ex.meq(ex.mconj(B) * C, ex.mconj(C).transpose() * B.transpose())),
    ]
    return IntertwinerReport(tuple(checks))


# ------------------------------------------------------------ charge conjugation

def charge_conjugate(phi, C: DomainMatrix, rep: Optional[GammaRep] = None):
    """phi_c = C^{-1} conj(phi).  A Spinor comes back as a Spinor, tagged when rep is given."""
    if isinstance(phi, Spinor):
        col = ex.inv(C) * ex.mconj(phi.components)
        return Spinor.of(rep, col) if rep is not None else Spinor(col)
    return ex.inv(C) * ex.mconj(phi)


def majorana_basis(rep: GammaRep, C: DomainMatrix) -> Optional[list[DomainMatrix]]:
    """Real basis of {phi : phi_c = phi}, or None in the quaternionic case."""
    d = rep.size
    if not ex.meq(ex.mconj(C) * C, ex.eye(d)):
        return None
    M = ex.entries(ex.inv(C))
    P = [[ex.gq(ex.re(z)) for z in r] for r in M]
    Q = [[ex.gq(ex.im(z)) for z in r] for r in M]
    # phi = a + i b;  C^{-1} conj(phi) = phi  <=>  (P a + Q b, Q a - P b) = (a, b)
    rows = []
    for i in range(d):
        rows.append([P[i][j] - (ONE if i == j else ZERO) for j in range(d)] + [Q[i][j] for j in range(d)])
    for i in range(d):
        rows.append([Q[i][j] for j in range(d)] + [-P[i][j] - (ONE if i == j else ZERO) for j in range(d)])
    sols = ex.kernel(ex.matrix(rows))
    out = []
    for s in sols:
        v = ex.vector_entries(s)
        out.append(ex.column([v[j] + I * v[d + j] for j in range(d)]))
    assert len(out) == d
    return out


@dataclass(frozen=True, eq=False)
class MajoranaStructure:
    basis: tuple
    J: DomainMatrix


def majorana_complex_structure(rep: GammaRep, C: Optional[DomainMatrix] = None) -> MajoranaStructure:
    """J = gamma(eta) on the Dirac-Majorana spinors of Cl(3+p, 1+p), in the Majorana basis."""
    p = rep.l - 1
    if rep.k - rep.l != 2 or p not in (0, 1):
        raise ValueError("Majorana complex structure is built for signatures (3+p, 1+p), p in {0, 1}")
    if C is None:
        C = intertwiners(rep).C
    basis = majorana_basis(rep, C)
    if basis is None:
        raise ValueError("no Majorana spinors for this signature")
    Mb = ex.hstack(basis)
    J = ex.inv(Mb) * rep.gamma_chir * Mb
    if not all(ex.is_real(z) for r in ex.entries(J) for z in r):
        raise AssertionError("gamma(eta) does not preserve the Majorana spinors")
    return MajoranaStructure(tuple(basis), J)


def majorana_weyl_match(rep: GammaRep, ms: MajoranaStructure) -> bool:
    """W+- of J, pushed into S through the Majorana basis, are the Weyl spaces S+-."""
    Mb = ex.hstack(list(ms.basis))
    w_plus, w_minus = split_pm(ms.J)
    for ws, sign in ((w_plus, "+"), (w_minus, "-")):
        for w in ws:
            if chirality(rep, Mb * w) != sign:
                return False
    return len(w_plus) == len(w_minus) == rep.size // 2
