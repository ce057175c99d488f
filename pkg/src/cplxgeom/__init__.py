"""Exact Clifford algebra, spinor, exterior-calculus and CR-geometry toolkit."""
from .clock import MatrixAlgebraType, classify, even_subalgebra
from .clifford_core import Multivector, Signature
from .spinor_rep import build_gamma, intertwiners

__all__ = [
    "MatrixAlgebraType",
    "Multivector",
    "Signature",
    "build_gamma",
    "classify",
    "even_subalgebra",
    "intertwiners",
]
__version__ = "0.1.0"
