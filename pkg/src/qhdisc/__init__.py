"""Exact decision procedures for quasi-homogeneity of plane curves f(x, y) = 0.

Three independent checks are provided and cross-verified:

* (A) the support of f lies on a line with nonzero weight of x;
* (B) f_0, f_n and Disc_y(f) are monomials in x;
* (C) f-hat and y*f-hat_y have no common zero in C^x times P^1.
"""

from .branches import (
    TruncatedSeries,
    branch_exponents_at_origin,
    h_limit_along,
    lift_branch,
    puiseux_branches,
    ramify,
)
from .charp import CharPExperimentConfig, Counterexample, check_conditions_mod_p, search_counterexamples
from .homog import MultiHomogPoly, condition_C, multi_homogenize
from .laurent import LaurentForm, laurent_decompose, qh_reduced_criterion
from .newton import QHType, condition_A, euler_qh_test, find_qh_type, mixed_volume, newton_polytope
from .polyring import GF, QQ, BivarPoly, UniPoly, format_poly, gcd_bivar, is_reduced, parse_poly
from .resultants import condition_B, discriminant_y, resultant_y, sylvester_matrix
from .theoremlab import TheoremReport, check_theorem, generate_qh, generate_random

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "CharPExperimentConfig",
    "Counterexample",
    "GF",
    "LaurentForm",
    "MultiHomogPoly",
    "QHType",
    "QQ",
    "TheoremReport",
    "TruncatedSeries",
    "UniPoly",
    "branch_exponents_at_origin",
    "check_conditions_mod_p",
    "check_theorem",
    "condition_A",
    "condition_B",
    "condition_C",
    "discriminant_y",
    "euler_qh_test",
    "find_qh_type",
    "format_poly",
    "gcd_bivar",
    "generate_qh",
    "generate_random",
    "h_limit_along",
    "is_reduced",
    "laurent_decompose",
    "lift_branch",
    "mixed_volume",
    "multi_homogenize",
    "newton_polytope",
    "parse_poly",
    "puiseux_branches",
    "qh_reduced_criterion",
    "ramify",
    "resultant_y",
    "search_counterexamples",
    "sylvester_matrix",
]
