"""The complex structure J = X^{-1} d/dx on mean-zero Fourier polynomials of degree <= N.

Basis order: cos x, sin x, cos 2x, sin 2x, ..., cos Nx, sin Nx.  All basis
functions have the same L2 norm, so adjoints are transposes.
"""
from __future__ import annotations

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from . import exact as ex
from .cstruct import ComplexStructureOp, RealQuadraticSpace, is_orthogonal, split_pm
from .exact import I, ZERO


def _block_diag(blocks) -> DomainMatrix:
    n = 2 * len(blocks)
    rows = [[ZERO] * n for _ in range(n)]
    for b, blk in enumerate(blocks):
        for i in range(2):
            for j in range(2):
                rows[2 * b + i][2 * b + j] = ex.gq(blk[i][j])
    return ex.matrix(rows)


def _check(N: int):
    if N < 1:
        raise ValueError("N must be at least 1")


def derivative_matrix(N: int) -> DomainMatrix:
    """d/dx: cos kx -> -k sin kx, sin kx -> k cos kx (columns are images)."""
    _check(N)
    return _block_diag([[[0, k], [-k, 0]] for k in range(1, N + 1)])


def sqrt_matrix(N: int) -> DomainMatrix:
    """Positive square root X of -d^2/dx^2."""
    _check(N)
    return _block_diag([[[k, 0], [0, k]] for k in range(1, N + 1)])


def complex_structure(N: int) -> DomainMatrix:
    _check(N)
    return _block_diag([[[0, 1], [-1, 0]] for _ in range(N)])


def complex_structure_from_ops(N: int) -> DomainMatrix:
    """X^{-1} D computed from the two operators (not from the closed form)."""
    return ex.inv(sqrt_matrix(N)) * derivative_matrix(N)


@dataclass(frozen=True)
class FourierAudit:
    N: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def w_pm_action(N: int) -> FourierAudit:
    """X acts as -i D on W+ and +i D on W- (eigenspaces of J)."""
    D, X = derivative_matrix(N), sqrt_matrix(N)
    J = complex_structure_from_ops(N)
    w_plus, w_minus = split_pm(J)
    plus_ok = all(ex.meq(X * v, D * v * (-I)) for v in w_plus)
    minus_ok = all(ex.meq(X * v, D * v * I) for v in w_minus)
    dims_ok = len(w_plus) == len(w_minus) == N
    return FourierAudit(N, (("X=-iD on W+", plus_ok), ("X=+iD on W-", minus_ok), ("dim W+-=N", dims_ok)))


def audit(N: int) -> FourierAudit:
    D, X = derivative_matrix(N), sqrt_matrix(N)
    J = complex_structure_from_ops(N)
    one = ex.eye(2 * N)
    euclid = RealQuadraticSpace(one)
    checks = [
        ("D^T=-D", ex.meq(D.transpose(), -D)),
        ("X^2=-D^2", ex.is_zero(X * X + D * D)),
        ("[X,D]=0", ex.is_zero(X * D - D * X)),
        ("J^2=-id", ex.meq(J * J, -one)),
        ("J closed form", ex.meq(J, complex_structure(N))),
        ("J orthogonal", is_orthogonal(ComplexStructureOp(J), euclid)),
        ("[J,D]=0", ex.is_zero(J * D - D * J)),
        ("[J,X]=0", ex.is_zero(J * X - X * J)),
    ]
    return FourierAudit(N, tuple(checks) + w_pm_action(N).checks)
