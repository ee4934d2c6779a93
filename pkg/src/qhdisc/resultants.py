"""Sylvester resultants in y, the discriminant Disc_y, and monomiality checks.

Two independent resultant algorithms are provided:

``bareiss``
    fraction-free Gaussian elimination on the Sylvester matrix with entries
    in Z[x] (or GF(p)[x]), dividing exactly by the previous pivot.
``interpolate``
    evaluate x at 0, 1, -1, 2, -2, ... , take scalar Sylvester determinants
    and interpolate.  Over Q this runs modulo word-size primes and lifts the
    coefficients by CRT once the product of primes exceeds twice a
    Hadamard-type bound on the resultant's coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .polyring import QQ, BivarPoly, UniPoly, is_prime

ALGORITHMS = ("bareiss", "interpolate", "auto")


class InexactDivisionError(ArithmeticError):
    """Res(f, f_y) was not divisible by f_n: an internal inconsistency."""


@dataclass(frozen=True)
class SylvesterMatrix:
    """Square Sylvester matrix in y with K[x] entries.

    The first ``deg_y g`` rows hold shifted coefficients of ``f`` (highest
    power first), the remaining ``deg_y f`` rows those of ``g``.
    """

    rows: tuple
    f: BivarPoly
    g: BivarPoly

    @property
    def size(self) -> int:
        return len(self.rows)


def _padded_cols(f: BivarPoly, deg: int):
    cols = f.coefficients_in_y()
    zero = UniPoly.zero(f.field, f.names[0])
    if len(cols) > deg + 1:
        raise ValueError(f"formal degree {deg} below actual degree {len(cols) - 1}")
    return cols + [zero] * (deg + 1 - len(cols))


def _formal_degrees(f, g, degrees):
    if degrees is not None:
        return degrees
    m = f.deg_y if not f.is_zero() else 0
    n = g.deg_y if not g.is_zero() else 0
    return m, n


def sylvester_matrix(f: BivarPoly, g: BivarPoly, degrees=None) -> SylvesterMatrix:
    m, n = _formal_degrees(f, g, degrees)
    fc, gc = _padded_cols(f, m), _padded_cols(g, n)
    zero = UniPoly.zero(f.field, f.names[0])
    size = m + n
    rows = []
    for r in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[r + k] = fc[m - k]
        rows.append(tuple(row))
    for r in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[r + k] = gc[n - k]
        rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), f, g)


def bareiss_det(rows, field=QQ, var="x") -> UniPoly:
    """Determinant of a square matrix over K[x] by fraction-free elimination."""
    M = [list(r) for r in rows]
    n = len(M)
    one = UniPoly.one(field, var)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return UniPoly.zero(field, var)
        pivot = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                num = rowi[j] * pivot - lead * rowk[j]
                rowi[j] = num if prev is one else num.exact_div(prev)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


@lru_cache(maxsize=1)
def _word_primes(count=64):
    out = []
    q = 2**31 - 1
    while len(out) < count:
        if is_prime(q):
            out.append(q)
        q -= 2
    return tuple(out)


def _coeff_bound(fc, gc, n, m) -> int:
    """Bound on |coefficients| of det(Sylvester) via products of row 1-norms."""
    nf = sum(sum(abs(c) for c in u) for u in fc)
    ng = sum(sum(abs(c) for c in u) for u in gc)
    return nf**n * ng**m


def _crt_lift(fi, gi, m, n, npoints):
    bound = _coeff_bound(fi, gi, n, m)
    modulus = 1
    acc = [0] * npoints
    primes = iter(_word_primes())
    while modulus <= 2 * bound:
        try:
            p = next(primes)
        except StopIteration:
            raise RuntimeError("ran out of CRT primes") from None
        res = _kernels.resultant_y_mod(
            [[c % p for c in u] for u in fi], [[c % p for c in u] for u in gi], p, npoints
        )
        if modulus == 1:
            acc = list(res)
        else:
            inv = pow(modulus, -1, p)
            for k in range(npoints):
                t = (res[k] - acc[k]) * inv % p
                acc[k] += modulus * t
        modulus *= p
    half = modulus // 2
    return [c - modulus if c > half else c for c in acc]


def _scaled_int_cols(f: BivarPoly, deg: int):
    scale, prim = f.integer_primitive()
    cols = _padded_cols(prim, deg)
    return scale, [[int(c) for c in u.coeffs] for u in cols]


def _interpolate(f, g, m, n) -> UniPoly:
    field = f.field
    var = f.names[0]
    dx_f = max(f.deg_x, 0) if not f.is_zero() else 0
    dx_g = max(g.deg_x, 0) if not g.is_zero() else 0
    npoints = n * dx_f + m * dx_g + 1
    if field is QQ:
        sf, fi = _scaled_int_cols(f, m)
        sg, gi = _scaled_int_cols(g, n)
        coeffs = _crt_lift(fi, gi, m, n, npoints)
        return UniPoly(coeffs, QQ, var) * (QQ(sf) ** n * QQ(sg) ** m)
    p = field.p
    if npoints > p:
        raise ValueError(
            f"interpolation needs {npoints} distinct points; GF({p}) is too small"
        )
    fc = [u.coeffs for u in _padded_cols(f, m)]
    gc = [u.coeffs for u in _padded_cols(g, n)]
    return UniPoly(_kernels.resultant_y_mod(fc, gc, p, npoints), field, var)


def resultant_y(f: BivarPoly, g: BivarPoly, algo: str = "auto", degrees=None) -> UniPoly:
    """Res_y(f, g) in K[x] as the Sylvester determinant.

    ``degrees=(m, n)`` forces formal y-degrees (Sylvester sizes); by default
    the actual degrees are used.  ``auto`` picks ``interpolate`` unless the
    prime field is too small for it.
    """
    if f.field != g.field:
        from .polyring import FieldMismatchError

        raise FieldMismatchError("resultant of polynomials over different fields")
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    m, n = _formal_degrees(f, g, degrees)
    if m < 1 and n < 1:
        raise ValueError("resultant_y needs a positive y-degree in at least one input")
    var = f.names[0]
    if f.is_zero() or g.is_zero():
        return UniPoly.zero(f.field, var)
    if algo == "auto":
        algo = "interpolate"
        if f.field is not QQ:
            dx = n * max(f.deg_x, 0) + m * max(g.deg_x, 0) + 1
            if dx > f.field.p:
                algo = "bareiss"
    if algo == "bareiss":
        if f.field is QQ:
            sf, F = f.integer_primitive()
            sg, G = g.integer_primitive()
            S = sylvester_matrix(F, G, (m, n))
            det = bareiss_det(S.rows, QQ, var)
            return det * (QQ(sf) ** n * QQ(sg) ** m)
        S = sylvester_matrix(f, g, (m, n))
        return bareiss_det(S.rows, f.field, var)
    return _interpolate(f, g, m, n)


def discriminant_y(f: BivarPoly, algo: str = "auto") -> UniPoly:
    """Disc_y(f) = (-1)^(n(n-1)/2) Res_y(f, f_y) / f_n, and 1 when n = 1.

    The resultant is taken with formal sizes (n, n-1), so the identity also
    holds in characteristic p when p divides n.
    """
    if f.is_zero() or f.deg_y < 1:
        raise ValueError("discriminant_y needs deg_y f >= 1")
    n = f.deg_y
    var = f.names[0]
    if n == 1:
        return UniPoly.one(f.field, var)
    fy = f.derivative("y")
    res = resultant_y(f, fy, algo, degrees=(n, n - 1))
    fn = f.coefficients_in_y()[-1]
    q, r = res.divmod(fn)
    if not r.is_zero():
        raise InexactDivisionError(f"Res_y(f, f_y) not divisible by f_n for f = {f}")
    return -q if (n * (n - 1) // 2) % 2 else q


def is_monomial(p: UniPoly) -> bool:
    """Exactly one nonzero term (nonzero constants included)."""
    return p.is_monomial()


@dataclass(frozen=True)
class BWitness:
    f0: UniPoly
    fn: UniPoly
    disc: UniPoly
    flags: tuple = ()


def condition_B(f: BivarPoly, algo: str = "auto"):
    """(holds, witness) for: f_0, f_n and Disc_y(f) are nonzero monomials.

    For ``deg_y f = 0`` the convention Disc = 1 is used, so the check reduces
    to f being a monomial.
    """
    if f.is_zero():
        raise ValueError("condition_B of the zero polynomial")
    cols = f.coefficients_in_y()
    f0, fn = cols[0], cols[-1]
    if f0.is_zero() or fn.is_zero():
        raise ValueError("condition_B requires f_0 != 0 and f_n != 0")
    flags = []
    if len(cols) == 1:
        disc = UniPoly.one(f.field, f.names[0])
    else:
        if f.derivative("y").is_zero():
            flags.append("f_y vanishes identically")
        try:
            disc = discriminant_y(f, algo)
        except InexactDivisionError:
            if f.characteristic == 0:
                raise
            flags.append("division by f_n inexact")
            disc = UniPoly.zero(f.field, f.names[0])
    holds = is_monomial(f0) and is_monomial(fn) and is_monomial(disc)
    return holds, BWitness(f0, fn, disc, tuple(flags))
