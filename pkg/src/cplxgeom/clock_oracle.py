"""Two oracles for the matrix-algebra type of Cl(k, l), independent of the clock table.

``recursion_type`` uses only four hand-checked base cases and the rules
Cl(k+1, l+1) = Cl(k, l) ⊗ R(2) and Cl(k+4, l) = Cl(k, l+4).  Those rules never
leave the hours {0, 1, 2, 7}, so it returns None elsewhere.

``trace_form_type`` classifies any blade-spanned algebra from its centre and the
signature of its trace form t(a, b) = <ab>_0.  For a central simple algebra,
sum_A sign(e_A^2) is +N for R(N), -2N for H(N) and 0 for C(N), and doubles for
the split algebras 2R(N), 2H(N).  Blades are bitmasks here, with a product
written from scratch, so nothing is shared with the main Clifford module.
"""
from __future__ import annotations

from functools import lru_cache
from math import isqrt
from typing import Optional

from .clock import MatrixAlgebraType

BASE_CASES = {
    (0, 0): MatrixAlgebraType("R", 1),
    (1, 0): MatrixAlgebraType("2R", 1),
    (0, 1): MatrixAlgebraType("C", 1),
    (0, 2): MatrixAlgebraType("H", 1),
}


def recursion_type(k: int, l: int, _depth: int = 0) -> Optional[MatrixAlgebraType]:
    if k < 0 or l < 0:
        raise ValueError("signature counts must be nonnegative")
    if (k, l) in BASE_CASES:
        return BASE_CASES[(k, l)]
    if _depth > 16:
        return None
    if k >= 1 and l >= 1:
        inner = recursion_type(k - 1, l - 1, _depth + 1)
        return None if inner is None else MatrixAlgebraType(inner.base, inner.size * 2)
    if k >= 4:
        return recursion_type(k - 4, l + 4, _depth + 1)
    return None


def _product(a: int, b: int, k: int) -> int:
    """Sign of e_a e_b for bitmask blades; generators with bit index < k square to +1."""
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    sign = -1 if swaps % 2 else 1
    common = a & b
    neg_mask = common >> k
    if bin(neg_mask).count("1") % 2:
        sign = -sign
    return sign


def _square_sign(a: int, k: int) -> int:
    return _product(a, a, k)


def _commutes(a: int, b: int, k: int) -> bool:
    return _product(a, b, k) == _product(b, a, k)


@lru_cache(maxsize=None)
def trace_form_type(k: int, l: int, even: bool = False) -> MatrixAlgebraType:
    m = k + l
    blades = [a for a in range(1 << m) if not even or bin(a).count("1") % 2 == 0]
    if even:
        gens = [(1 << i) | (1 << j) for i in range(m) for j in range(i + 1, m)]
    else:
        gens = [1 << i for i in range(m)]
    centre = [a for a in blades if all(_commutes(a, g, k) for g in gens)]
    dim = len(blades)
    s = sum(_square_sign(a, k) for a in blades)
    if len(centre) == 1:
        base = "R" if s > 0 else "H"
    elif len(centre) == 2:
        z = max(centre)
        if _square_sign(z, k) < 0:
            base = "C"
        else:
            base = "2R" if s > 0 else "2H"
    else:
        raise AssertionError(f"unexpected centre of dimension {len(centre)}")
    unit = {"R": 1, "C": 2, "H": 4, "2R": 2, "2H": 8}[base]
    n2 = dim // unit
    n = isqrt(n2)
    if n * n != n2:
        raise AssertionError(f"dimension {dim} is not {base}(N) for any N")
    return MatrixAlgebraType(base, n)


def trace_signature(k: int, l: int) -> int:
    return sum(_square_sign(a, k) for a in range(1 << (k + l)))
