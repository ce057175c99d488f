"""Spinorial clock: the matrix-algebra type of Cl(k, l) and its even part.

The hour of Cl(k, l) is (l - k) mod 8.  Hours add under graded tensor product
(Brauer-Wall group Z_8), and the hour fixes the algebra up to the matrix size.
"""
from __future__ import annotations

from dataclasses import dataclass

BASES = ("R", "C", "H", "2R", "2H")
_REAL_DIM = {"R": 1, "C": 2, "H": 4, "2R": 2, "2H": 8}

# hour -> (base algebra A_h, log2 of its real dimension)
CLOCK = (
    ("R", 0),
    ("C", 1),
    ("H", 2),
    ("2H", 3),
    ("H", 2),
    ("C", 1),
    ("R", 0),
    ("2R", 1),
)


@dataclass(frozen=True)
class MatrixAlgebraType:
    base: str
    size: int

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"unknown base algebra {self.base!r}")
        if self.size < 1 or self.size & (self.size - 1):
            raise ValueError("matrix size must be a power of 2")

    @property
    def real_dim(self) -> int:
        # dim 2A(N) = 2 dim(A) N^2 is folded into the base table
        return _REAL_DIM[self.base] * self.size ** 2

    def __str__(self):
        return f"{self.base}({self.size})"


@dataclass(frozen=True)
class ClockHour:
    h: int

    def __post_init__(self):
        if not 0 <= self.h < 8:
            raise ValueError("hour must lie in 0..7")

    @property
    def base(self) -> str:
        return CLOCK[self.h][0]

    @property
    def nu(self) -> int:
        return CLOCK[self.h][1]


def hour(k: int, l: int) -> int:
    return (l - k) % 8


def _check(k: int, l: int):
    if k < 0 or l < 0:
        raise ValueError("signature counts must be nonnegative")


def classify(k: int, l: int) -> MatrixAlgebraType:
    _check(k, l)
    h = ClockHour(hour(k, l))
    twice = k + l - h.nu
    if twice < 0 or twice % 2:
        raise AssertionError(f"clock table inconsistent at ({k},{l})")
    return MatrixAlgebraType(h.base, 2 ** (twice // 2))


def even_subalgebra(k: int, l: int) -> MatrixAlgebraType:
    """Cl^0(k,l) = Cl(k,l-1) if l >= 1, else Cl^0(k,0) = Cl(0,k-1)."""
    _check(k, l)
    if k + l < 1:
        raise ValueError("even subalgebra needs k + l >= 1")
    if l >= 1:
        return classify(k, l - 1)
    return classify(0, k - 1)


def same_type(k: int, l: int, k2: int, l2: int) -> bool:
    return (k + l2 - k2 - l) % 8 == 0


def brauer_wall_add(h1: int, h2: int) -> int:
    ClockHour(h1), ClockHour(h2)
    return (h1 + h2) % 8


def describe(k: int, l: int) -> str:
    line = f"Cl({k},{l}) = {classify(k, l)}, hour {hour(k, l)}"
    if k + l >= 1:
        line += f", even part {even_subalgebra(k, l)}"
    return line
