"""Exact Schur polynomials and generalized Cauchy identity checks."""
from .identities import IdentityReport, verify
from .partitions import conjugate, enum_bounded, enum_by_weight, normalize, staircase
from .poly import NotDivisible, Poly, VarContext, determinant, exact_div, parse_poly
from .symfunc import Family, gen, s_mu, schur

__all__ = [
    "Family", "IdentityReport", "NotDivisible", "Poly", "VarContext", "conjugate",
    "determinant", "enum_bounded", "enum_by_weight", "exact_div", "gen", "normalize",
    "parse_poly", "s_mu", "schur", "staircase", "verify",
]
__version__ = "0.1.0"
