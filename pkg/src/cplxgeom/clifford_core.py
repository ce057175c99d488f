"""Exact multivector arithmetic in Cl(k, l).

Blades are keyed by strictly increasing 1-based index tuples; generators
``1..k`` square to +1 and ``k+1..k+l`` to -1.  The isomorphism kappa onto the
exterior algebra is the identity on coefficient maps in this orthonormal frame
(the defining recursion is checked in the test-suite, not used here).
Hodge duality multiplies by the volume element on the LEFT:
``star(kappa(a)) = kappa(eta * a)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import ClassVar, Mapping, Optional

from sympy.polys.matrices import DomainMatrix

from . import exact as ex
from .cstruct import ComplexStructureOp
from .exact import ONE, ZERO

Blade = tuple


@dataclass(frozen=True)
class Signature:
    k: int
    l: int
    MAX_DIM: ClassVar[int] = 12

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("signature counts must be nonnegative")
        if self.k + self.l > self.MAX_DIM:
            raise ValueError(f"dimension {self.k + self.l} exceeds cap {self.MAX_DIM}")

    @property
    def dim(self) -> int:
        return self.k + self.l

    def square(self, mu: int) -> int:
        return 1 if mu <= self.k else -1

    def blades(self, grade: Optional[int] = None) -> list[Blade]:
        grades = range(self.dim + 1) if grade is None else [grade]
        return [c for p in grades for c in combinations(range(1, self.dim + 1), p)]

    def __str__(self):
        return f"Cl({self.k},{self.l})"


def _merge_sign(a: Blade, b: Blade) -> int:
    """Parity of the transpositions sorting the concatenation a+b."""
    swaps = 0
    for j in b:
        swaps += sum(1 for i in a if i > j)
    return -1 if swaps % 2 else 1


@lru_cache(maxsize=None)
def blade_product(sig: Signature, a: Blade, b: Blade) -> tuple[int, Blade]:
    sign = _merge_sign(a, b)
    sa, sb = set(a), set(b)
    for mu in sa & sb:
        sign *= sig.square(mu)
    return sign, tuple(sorted(sa ^ sb))


def _wedge_blades(a: Blade, b: Blade):
    if set(a) & set(b):
        return 0, ()
    return _merge_sign(a, b), tuple(sorted(a + b))


@dataclass(frozen=True, eq=False)
class _BladeMap:
    signature: Signature
    coeffs: Mapping[Blade, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(b): ex.coerce(c) for b, c in self.coeffs.items()}
        for b in clean:
            if list(b) != sorted(set(b)) or (b and (b[0] < 1 or b[-1] > self.signature.dim)):
                raise ValueError(f"bad blade {b} for {self.signature}")
        object.__setattr__(self, "coeffs", {b: c for b, c in clean.items() if c})

    def _new(self, coeffs):
        return type(self)(self.signature, coeffs)

    def _check(self, other):
        if not isinstance(other, _BladeMap) or type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.signature != self.signature:
            raise ValueError(f"signature mismatch: {self.signature} vs {other.signature}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            out[b] = out.get(b, ZERO) + c
        return self._new(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({b: -c for b, c in self.coeffs.items()})

    def scale(self, c):
        c = ex.coerce(c)
        return self._new({b: c * v for b, v in self.coeffs.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.signature == other.signature and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.signature, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def grade(self, p: int):
        return self._new({b: c for b, c in self.coeffs.items() if len(b) == p})

    def grades(self) -> set[int]:
        return {len(b) for b in self.coeffs}

    def is_even(self) -> bool:
        return all(len(b) % 2 == 0 for b in self.coeffs)

    def is_odd(self) -> bool:
        return all(len(b) % 2 == 1 for b in self.coeffs)

    def conjugate(self):
        return self._new({b: ex.conj(c) for b, c in self.coeffs.items()})

    def coefficient(self, blade: Blade):
        return self.coeffs.get(tuple(blade), ZERO)

    def __repr__(self):
        if not self.coeffs:
            return f"{type(self).__name__}({self.signature}, 0)"
        terms = " + ".join(
            f"({ex.format_scalar(c)})e{''.join(map(str, b)) or '_'}" for b, c in sorted(self.coeffs.items())
        )
        return f"{type(self).__name__}({self.signature}, {terms})"


class Multivector(_BladeMap):
    """Element of Cl(k, l) in the orthonormal blade basis."""

    @classmethod
    def scalar(cls, sig: Signature, c=1) -> "Multivector":
        return cls(sig, {(): c})

    @classmethod
    def generator(cls, sig: Signature, mu: int) -> "Multivector":
        return cls(sig, {(mu,): 1})

    @classmethod
    def blade(cls, sig: Signature, *indices: int) -> "Multivector":
        """Geometric product e_{i1} e_{i2} ... (indices in any order, repeats allowed)."""
        out = cls.scalar(sig)
        for mu in indices:
            out = out * cls.generator(sig, mu)
        return out

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


class ExteriorElement(_BladeMap):
    """Element of the exterior algebra over the same orthonormal frame."""

    def wedge(self, other: "ExteriorElement") -> "ExteriorElement":
        self._check(other)
        out: dict = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                s, blade = _wedge_blades(a, b)
                if s:
                    out[blade] = out.get(blade, ZERO) + (x * y if s > 0 else -(x * y))
        return self._new(out)

    def covector_contract(self, mu: int) -> "ExteriorElement":
        """Left contraction with the dual covector e^mu."""
        out: dict = {}
        for b, c in self.coeffs.items():
            if mu in b:
                j = b.index(mu)
                out[b[:j] + b[j + 1:]] = c if j % 2 == 0 else -c
        return self._new(out)

    def metric_contract(self, mu: int) -> "ExteriorElement":
        """g(e_mu) ⌟ self, with g(e_mu) = (square of e_mu) e^mu."""
        return self.covector_contract(mu).scale(self.signature.square(mu))


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    a._check(b)
    sig = a.signature
    out: dict = {}
    for ba, x in a.coeffs.items():
        for bb, y in b.coeffs.items():
            s, blade = blade_product(sig, ba, bb)
            out[blade] = out.get(blade, ZERO) + (x * y if s > 0 else -(x * y))
    return Multivector(sig, out)


def volume_element(sig: Signature) -> Multivector:
    return Multivector(sig, {tuple(range(1, sig.dim + 1)): 1})


def eta_square_sign(sig: Signature) -> int:
    """Closed-form sign of eta^2: (-1)^((l-k)(l-k+1)/2)."""
    d = sig.l - sig.k
    return -1 if (d * (d + 1) // 2) % 2 else 1


def kappa(a: Multivector) -> ExteriorElement:
    return ExteriorElement(a.signature, a.coeffs)


def kappa_inv(w: ExteriorElement) -> Multivector:
    return Multivector(w.signature, w.coeffs)


def hodge_star(w: ExteriorElement) -> ExteriorElement:
    return kappa(volume_element(w.signature) * kappa_inv(w))


@dataclass(frozen=True)
class DualityStructure:
    signature: Signature
    grades: tuple[int, ...]
    basis: tuple[Blade, ...]
    J: DomainMatrix


def star_matrix(sig: Signature, basis: list[Blade]) -> DomainMatrix:
    """Matrix of the Hodge star on span(basis); columns are images of basis blades."""
    pos = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    rows = [[ZERO] * n for _ in range(n)]
    for j, b in enumerate(basis):
        image = hodge_star(ExteriorElement(sig, {b: ONE}))
        for blade, c in image.coeffs.items():
            if blade not in pos:
                raise ValueError(f"star does not preserve the span of {basis}")
            rows[pos[blade]][j] = c
    return ex.matrix(rows)


def duality_complex_structure(sig: Signature) -> Optional[DualityStructure]:
    """Star as a complex structure on the middle degree(s), when eta^2 = -1."""
    eta = volume_element(sig)
    if eta * eta != Multivector.scalar(sig, -1):
        return None
    m = sig.dim
    n = m // 2
    grades = (n,) if m % 2 == 0 else (n, n + 1)
    basis = [b for g in grades for b in sig.blades(g)]
    J = star_matrix(sig, basis)
    ComplexStructureOp(J)
    return DualityStructure(sig, grades, tuple(basis), J)
