"""Exact Gaussian-rational scalars and matrices.

Everything in the package computes over QQ(i): sympy's ``QQ_I`` domain supplies
the scalars and ``DomainMatrix`` (sparse format) the matrices.  This module adds
the handful of things the domain lacks (conjugation, magnitudes, deterministic
kernel scaling, a textual scalar format for JSON).
"""
from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Iterable, Sequence

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

K = QQ_I
ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)


def gq(re_part=0, im_part=0):
    """Gaussian rational from anything Fraction() accepts (ints, Fractions, "1/3")."""
    a, b = Fraction(re_part), Fraction(im_part)
    return QQ_I(QQ(a.numerator, a.denominator), QQ(b.numerator, b.denominator))


def conj(z):
    return QQ_I(z.x, -z.y)


def re(z) -> Fraction:
    return Fraction(int(z.x.numerator), int(z.x.denominator))


def im(z) -> Fraction:
    return Fraction(int(z.y.numerator), int(z.y.denominator))


def mag2(z) -> Fraction:
    return re(z) ** 2 + im(z) ** 2


def is_real(z) -> bool:
    return not z.y


def to_complex(z) -> complex:
    return complex(float(re(z)), float(im(z)))


def ipow(k: int):
    """i**k for any integer k."""
    return (ONE, I, -ONE, -I)[k % 4]


def sign_pow(k: int):
    """(-1)**k as a domain element."""
    return ONE if k % 2 == 0 else -ONE


# ---------------------------------------------------------------- text format

_TERM = _re.compile(r"\s*([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*(\*?\s*i)?\s*")


def parse_scalar(text) -> object:
    """Parse "a/b+c/d i" style scalars.  Accepts ints/floats-free strings such as
    "3", "-1/2", "2 i", "i", "1/2-3/4 i", "0+1 i"."""
    if isinstance(text, int):
        return gq(text)
    if not isinstance(text, str):
        raise ValueError(f"scalar must be a string or int, got {text!r}")
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    pos, total = 0, ZERO
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r}")
        sign, num, unit = m.groups()
        if num is None and unit is None:
            raise ValueError(f"cannot parse scalar {text!r}")
        val = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            val = -val
        total += gq(0, val) if unit else gq(val)
        pos = m.end()
    return total


def format_scalar(z) -> str:
    a, b = re(z), im(z)
    if not b:
        return str(a)
    sb = "+" if b > 0 else "-"
    return f"{a}{sb}{abs(b)} i"


# ------------------------------------------------------------------ matrices

def matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    """Sparse QQ_I matrix from nested rows of ints/Fractions/domain elements."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    elems = [[coerce(v) for v in r] for r in rows]
    return DomainMatrix(elems, (nr, nc), QQ_I).to_sparse()


def column(values: Iterable) -> DomainMatrix:
    vals = [coerce(v) for v in values]
    return DomainMatrix([[v] for v in vals], (len(vals), 1), QQ_I).to_sparse()


def coerce(v):
    if isinstance(v, type(ZERO)):
        return v
    if isinstance(v, complex):
        raise TypeError("floating complex values are not exact; use gq()")
    return gq(v)


def eye(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ_I).to_sparse()


def zeros(nr: int, nc: int) -> DomainMatrix:
    return DomainMatrix.zeros((nr, nc), QQ_I).to_sparse()


def entries(M: DomainMatrix) -> list[list]:
    return M.to_dense().rep.to_ddm().to_list()


def vector_entries(v: DomainMatrix) -> list:
    return [row[0] for row in entries(v)]


def mconj(M: DomainMatrix) -> DomainMatrix:
    rep = M.to_sparse().rep
    new = {i: {j: conj(z) for j, z in row.items()} for i, row in rep.items()}
    return DomainMatrix.from_rep(type(rep)(new, M.shape, QQ_I))


def meq(A: DomainMatrix, B: DomainMatrix) -> bool:
    return A.shape == B.shape and (A.to_sparse() - B.to_sparse()).is_zero_matrix


def is_zero(M: DomainMatrix) -> bool:
    return M.to_sparse().is_zero_matrix


def inv(M: DomainMatrix) -> DomainMatrix:
    return M.to_sparse().inv()


def kron(*ms: DomainMatrix) -> DomainMatrix:
    out = ms[0].to_sparse()
    for m in ms[1:]:
        a, b = out.rep, m.to_sparse().rep
        br, bc = m.shape
        new: dict = {}
        for i, row in a.items():
            for j, x in row.items():
                for k, brow in b.items():
                    target = new.setdefault(i * br + k, {})
                    for l, y in brow.items():
                        target[j * bc + l] = x * y
        shape = (out.shape[0] * br, out.shape[1] * bc)
        out = DomainMatrix.from_rep(type(a)(new, shape, QQ_I))
    return out


def hstack(cols: Sequence[DomainMatrix]) -> DomainMatrix:
    return DomainMatrix.hstack(*[c.to_sparse() for c in cols])


def scale_first_nonzero(v: DomainMatrix) -> DomainMatrix:
    """Scale a column so its first nonzero entry is 1."""
    for z in vector_entries(v):
        if z:
            return v * (ONE / z)
    return v


def scale_largest_entry(M: DomainMatrix) -> DomainMatrix:
    """Scale so the largest-magnitude entry (first in row-major order on ties) is 1."""
    best, best_key = None, None
    rows = entries(M)
    for r in rows:
        for z in r:
            if z:
                m = mag2(z)
                if best_key is None or m > best_key:
                    best, best_key = z, m
    if best is None:
        return M
    return M * (ONE / best)


def kernel(M: DomainMatrix) -> list[DomainMatrix]:
    """Basis of the right kernel, as columns with first nonzero entry 1.

    Deterministic: the basis is the reduced one sympy derives from the rref, so
    each vector has a 1 at its own free column and zeros at the others."""
    ns = M.to_sparse().nullspace()
    out = []
    for row in entries(ns):
        out.append(scale_first_nonzero(column(row)))
    return out


def scalar_multiple(A: DomainMatrix, B: DomainMatrix):
    """Return c with A == c*B, or None if A is not a multiple of B (B nonzero)."""
    ea, eb = entries(A), entries(B)
    c = None
    for ra, rb in zip(ea, eb):
        for x, y in zip(ra, rb):
            if y:
                c = x / y
                break
        if c is not None:
            break
    if c is None:
        return ZERO if is_zero(A) else None
    return c if meq(A, B * c) else None


def rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    from math import isqrt

    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def to_numpy(M: DomainMatrix):
    import numpy as np

    return np.array([[to_complex(z) for z in r] for r in entries(M)], dtype=complex)


def scalar(M: DomainMatrix):
    """The entry of a 1x1 matrix."""
    return M.to_dense().rep.to_ddm()[0][0]


def dot(v: DomainMatrix, w: DomainMatrix):
    """Bilinear pairing sum_a v_a w_a of two columns (no conjugation)."""
    return scalar(v.transpose() * w)


def parse_fraction(value) -> Fraction:
    """Exact rational from an int or a "p/q" string; floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"expected an exact rational, got {value!r}")
    return Fraction(value)
