"""Exact arithmetic kernel."""

from .linsolve import (
    InconsistentSystem,
    SingularSystem,
    bareiss_det,
    cofactor_det,
    cramer_solve,
    linsolve_fraction_free,
)
from .matrix import Matrix2, mat2_ops
from .poly import CUBIC, LAX, NotDivisible, Poly, Ring, parse
from .ratfunc import RatFunc, as_ratfunc, ratfunc_is_zero

__all__ = [
    "CUBIC",
    "LAX",
    "InconsistentSystem",
    "Matrix2",
    "NotDivisible",
    "Poly",
    "RatFunc",
    "Ring",
    "SingularSystem",
    "as_ratfunc",
    "bareiss_det",
    "cofactor_det",
    "cramer_solve",
    "linsolve_fraction_free",
    "mat2_ops",
    "parse",
    "ratfunc_is_zero",
]
