"""Complex structures on real scalar-product spaces.

Convention, fixed here once for the whole package: a real space with complex
structure J becomes a complex space through ``i * w = J(w)``.  With that choice
the eigenspace ``W+`` (where ``J w = +i w``) is the one isomorphic to W.
"""
from __future__ import annotations

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from . import exact as ex
from .exact import I


@dataclass(frozen=True)
class RealQuadraticSpace:
    g: DomainMatrix

    def __post_init__(self):
        n, m = self.g.shape
        if n != m or n == 0:
            raise ValueError("scalar product must be a nonempty square matrix")
        if not ex.meq(self.g, self.g.transpose()):
            raise ValueError("scalar product must be symmetric")
        if not all(ex.is_real(z) for r in ex.entries(self.g) for z in r):
            raise ValueError("scalar product must be real")
        if self.g.to_sparse().rank() < self.g.shape[0]:
            raise ValueError("scalar product is degenerate")

    @property
    def dim(self) -> int:
        return self.g.shape[0]

    @classmethod
    def diagonal(cls, *signs) -> "RealQuadraticSpace":
        n = len(signs)
        return cls(ex.matrix([[signs[i] if i == j else 0 for j in range(n)] for i in range(n)]))

    def __call__(self, v: DomainMatrix, w: DomainMatrix):
        """Complex-bilinear extension g_C(v, w) = v^T g w (no conjugation)."""
        return ex.scalar(v.transpose() * self.g * w)


@dataclass(frozen=True)
class ComplexStructureOp:
    J: DomainMatrix

    def __post_init__(self):
        n, m = self.J.shape
        if n != m:
            raise ValueError("J must be square")
        if n % 2:
            raise ValueError("a complex structure needs even dimension")
        if not ex.meq(self.J * self.J, -ex.eye(n)):
            raise ValueError("J*J != -id")

    @property
    def dim(self) -> int:
        return self.J.shape[0]


def _as_op(J) -> ComplexStructureOp:
    return J if isinstance(J, ComplexStructureOp) else ComplexStructureOp(J)


def split_pm(J) -> tuple[list[DomainMatrix], list[DomainMatrix]]:
    """Bases of W+ and W- in the complexification, first nonzero entry 1."""
    op = _as_op(J)
    n = op.dim
    w_plus = ex.kernel(op.J - ex.eye(n) * I)
    w_minus = ex.kernel(op.J + ex.eye(n) * I)
    assert len(w_plus) == len(w_minus) == n // 2
    return w_plus, w_minus


def is_orthogonal(J, space: RealQuadraticSpace) -> bool:
    op = _as_op(J)
    return ex.meq(op.J.transpose() * space.g * op.J, space.g)


def totally_null_check(basis, g) -> bool:
    space = g if isinstance(g, RealQuadraticSpace) else RealQuadraticSpace(g)
    for a in range(len(basis)):
        for b in range(a, len(basis)):
            if space(basis[a], basis[b]):
                return False
    return True


def hermitian_form(g, J, w1: DomainMatrix, w2: DomainMatrix):
    """h(w1, w2) = g(w1, w2) + i g(J w1, w2)."""
    space = g if isinstance(g, RealQuadraticSpace) else RealQuadraticSpace(g)
    op = _as_op(J)
    if not is_orthogonal(op, space):
        raise ValueError("J is not orthogonal for g")
    return space(w1, w2) + I * space(op.J * w1, w2)
