"""Exact bivariate polynomial arithmetic over Q and GF(p)."""

from .bivar import BivarPoly
from .fields import GF, QQ, FieldMismatchError, PrimeField, RationalField, field_from_json, is_prime
from .gcd import gcd_bivar, is_reduced
from .parse import PolySyntaxError, format_poly, parse_poly
from .unipoly import NEG_INF, UniPoly


def poly_arithmetic(a: BivarPoly, b: BivarPoly, op: str) -> BivarPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def coefficients_in_y(f: BivarPoly):
    return f.coefficients_in_y()


def derivative(f: BivarPoly, var: str) -> BivarPoly:
    return f.derivative(var)


def eval_at(f: BivarPoly, a, b):
    return f.eval_at(a, b)


__all__ = [
    "BivarPoly",
    "UniPoly",
    "QQ",
    "GF",
    "PrimeField",
    "RationalField",
    "FieldMismatchError",
    "PolySyntaxError",
    "NEG_INF",
    "coefficients_in_y",
    "derivative",
    "eval_at",
    "field_from_json",
    "format_poly",
    "gcd_bivar",
    "is_prime",
    "is_reduced",
    "parse_poly",
    "poly_arithmetic",
]
