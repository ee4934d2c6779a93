"""Bivariate gcd in K[x][y] and the reducedness test.

The gcd splits off contents in K[x] and runs a primitive pseudo-remainder
sequence on the primitive parts.  Before doing so it tries a cheap modular
certificate: if ``lc_y(a)(r)`` is nonzero mod p and ``gcd(a(r, y), b(r, y))``
is constant mod p, the gcd over K has y-degree 0 (any common factor G would
survive the specialisation with its full y-degree).
"""

from __future__ import annotations

from math import lcm

from .. import _kernels
from .bivar import BivarPoly
from .fields import QQ
from .unipoly import UniPoly

CERT_PRIMES = (2147483629, 2147483587)
CERT_POINTS = (1, -2, 3, 5, -7)


def _int_cols(cols):
    """Scale a list of rational UniPolys to integer coefficient lists."""
    den = 1
    for u in cols:
        for c in u.coeffs:
            if type(c) is not int:
                den = lcm(den, c.denominator)
    return [[int(c * den) for c in u.coeffs] for u in cols]


def coprime_in_y_certificate(a: BivarPoly, b: BivarPoly) -> bool:
    """True if gcd(a, b) provably has y-degree 0; False means 'unknown'."""
    fc, gc = a.coefficients_in_y(), b.coefficients_in_y()
    if len(fc) < 2 or len(gc) < 2:
        return True
    if a.field is QQ:
        fi, gi = _int_cols(fc), _int_cols(gc)
        for p in CERT_PRIMES:
            for r in CERT_POINTS:
                if _kernels.gcd_degree_at_mod(fi, gi, p, r % p) == 0:
                    return True
        return False
    p = a.field.p
    fi = [u.coeffs for u in fc]
    gi = [u.coeffs for u in gc]
    for r in range(min(p, 16)):
        if _kernels.gcd_degree_at_mod(fi, gi, p, r) == 0:
            return True
    return False


def _cols_primitive(cols):
    c = UniPoly.zero(cols[0].field, cols[0].var)
    for u in cols:
        c = c.gcd(u)
        if c.degree == 0:
            break
    if c.degree == 0:
        return cols
    return [u.exact_div(c) for u in cols]


def _prem(A, B):
    lcB = B[-1]
    R = list(A)
    nb = len(B)
    while len(R) >= nb and R:
        lead = R[-1]
        shift = len(R) - nb
        R = [r * lcB for r in R]
        for t in range(nb):
            R[shift + t] = R[shift + t] - lead * B[t]
        while R and R[-1].is_zero():
            R.pop()
    return R


def _prs_gcd(A, B):
    """gcd of primitive polynomials given as y-coefficient lists."""
    if len(A) < len(B):
        A, B = B, A
    while B and len(B) > 1:
        R = _prem(A, B)
        A, B = B, (_cols_primitive(R) if R else [])
    if not B:
        return A
    return [UniPoly.one(A[0].field, A[0].var)]


def gcd_bivar(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    """gcd in K[x, y], normalised to graded-lex leading coefficient 1."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if a.field != b.field:
        from .fields import FieldMismatchError

        raise FieldMismatchError("gcd of polynomials over different fields")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    names = a.names
    ca, cb = a.content_y(), b.content_y()
    cont = ca.gcd(cb)
    pa = [u.exact_div(ca) for u in a.coefficients_in_y()]
    pb = [u.exact_div(cb) for u in b.coefficients_in_y()]
    if len(pa) == 1 or len(pb) == 1:
        prim = [UniPoly.one(a.field, names[0])]
    elif coprime_in_y_certificate(
        BivarPoly.from_y_coefficients(pa, a.field, names),
        BivarPoly.from_y_coefficients(pb, a.field, names),
    ):
        prim = [UniPoly.one(a.field, names[0])]
    else:
        prim = _cols_primitive(_prs_gcd(pa, pb))
    g = BivarPoly.from_y_coefficients([u * cont for u in prim], a.field, names)
    return g.monic()


def is_reduced(f: BivarPoly) -> bool:
    """True iff gcd(f, f_x, f_y) is a nonzero constant.

    Over Q this is squarefreeness; over GF(p) it is geometric reducedness
    (a p-th power such as ``(x + y)^p`` has vanishing partials).
    """
    if f.is_zero():
        raise ValueError("is_reduced of the zero polynomial")
    if f.is_constant():
        return True
    g = gcd_bivar(f, f.derivative("y"))
    if g.is_constant():
        return True
    g = gcd_bivar(g, f.derivative("x"))
    return g.is_constant()
