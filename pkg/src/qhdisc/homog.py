"""Multi-homogenization in P^1 x P^1 and the chart decision of condition (C)."""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import QQ, BivarPoly, UniPoly
from .polyring.bivar import format_terms
from .resultants import resultant_y

VARIABLES = ("x", "xt", "y", "yt")


class MultiHomogPoly:
    """Bihomogeneous polynomial of bidegree (m, n) in (x, xt) and (y, yt).

    The key ``(i, j)`` stands for the monomial ``x^i xt^(m-i) y^j yt^(n-j)``.
    """

    __slots__ = ("m", "n", "terms", "field")

    def __init__(self, m: int, n: int, terms: dict, field=QQ):
        if m < 0 or n < 0:
            raise ValueError("bidegree must be nonnegative")
        clean = {}
        for (i, j), c in terms.items():
            c = field(c)
            if c == 0:
                continue
            if not (0 <= i <= m and 0 <= j <= n):
                raise ValueError(f"term {(i, j)} outside bidegree {(m, n)}")
            clean[(i, j)] = c
        self.m, self.n, self.terms, self.field = m, n, clean, field

    def __eq__(self, other):
        if not isinstance(other, MultiHomogPoly):
            return NotImplemented
        return (self.m, self.n, self.terms, self.field) == (other.m, other.n, other.terms, other.field)

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    @property
    def bidegree(self):
        return (self.m, self.n)

    def _combine(self, other, sign):
        if self.bidegree != other.bidegree:
            raise ValueError("bidegree mismatch")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + sign * c
        return MultiHomogPoly(self.m, self.n, acc, self.field)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, other):
        if isinstance(other, MultiHomogPoly):
            acc = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    k = (i1 + i2, j1 + j2)
                    acc[k] = acc.get(k, 0) + c1 * c2
            return MultiHomogPoly(self.m + other.m, self.n + other.n, acc, self.field)
        c = self.field(other)
        return MultiHomogPoly(self.m, self.n, {k: c * v for k, v in self.terms.items()}, self.field)

    __rmul__ = __mul__

    def mul_var(self, var: str) -> "MultiHomogPoly":
        """Multiply by one of the four variables (bidegree goes up by one)."""
        m, n = self.m, self.n
        if var == "x":
            return MultiHomogPoly(m + 1, n, {(i + 1, j): c for (i, j), c in self.terms.items()}, self.field)
        if var == "xt":
            return MultiHomogPoly(m + 1, n, dict(self.terms), self.field)
        if var == "y":
            return MultiHomogPoly(m, n + 1, {(i, j + 1): c for (i, j), c in self.terms.items()}, self.field)
        if var == "yt":
            return MultiHomogPoly(m, n + 1, dict(self.terms), self.field)
        raise ValueError(f"unknown variable {var!r}")

    def evaluate(self, x, xt, y, yt):
        F = self.field
        acc = 0
        for (i, j), c in self.terms.items():
            acc += c * F(x) ** i * F(xt) ** (self.m - i) * F(y) ** j * F(yt) ** (self.n - j)
        return F(acc)

    def dehomogenize(self, names=("x", "y")) -> BivarPoly:
        """Set xt = yt = 1."""
        return BivarPoly(dict(self.terms), self.field, names)

    def __str__(self):
        ordered = sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0]), reverse=True)
        return format_terms(
            [((i, self.m - i, j, self.n - j), c) for (i, j), c in ordered], VARIABLES
        )

    def __repr__(self):
        return f"MultiHomogPoly[{self.m},{self.n}]({self})"


def multi_homogenize(f: BivarPoly) -> MultiHomogPoly:
    if f.is_zero():
        raise ValueError("multi-homogenization of the zero polynomial")
    return MultiHomogPoly(f.deg_x, f.deg_y, f.terms, f.field)


def homog_derivative(F: MultiHomogPoly, var: str) -> MultiHomogPoly:
    """Formal partial derivative; the bidegree drops by one in var's pair."""
    m, n = F.m, F.n
    if var in ("x", "xt") and m == 0 or var in ("y", "yt") and n == 0:
        raise ValueError(f"bidegree {F.bidegree} has degree 0 in the pair of {var!r}")
    acc = {}
    for (i, j), c in F.terms.items():
        if var == "x" and i:
            acc[(i - 1, j)] = i * c
        elif var == "xt" and m - i:
            acc[(i, j)] = (m - i) * c
        elif var == "y" and j:
            acc[(i, j - 1)] = j * c
        elif var == "yt" and n - j:
            acc[(i, j)] = (n - j) * c
    if var in ("x", "xt"):
        return MultiHomogPoly(m - 1, n, acc, F.field)
    if var in ("y", "yt"):
        return MultiHomogPoly(m, n - 1, acc, F.field)
    raise ValueError(f"unknown variable {var!r}")


def euler_x(F: MultiHomogPoly) -> MultiHomogPoly:
    """x*F_x + xt*F_xt (equals m*F)."""
    return homog_derivative(F, "x").mul_var("x") + homog_derivative(F, "xt").mul_var("xt")


def euler_y(F: MultiHomogPoly) -> MultiHomogPoly:
    """y*F_y + yt*F_yt (equals n*F)."""
    return homog_derivative(F, "y").mul_var("y") + homog_derivative(F, "yt").mul_var("yt")


@dataclass(frozen=True)
class CWitness:
    """Where f-hat and y*f-hat_y meet inside C^x times P^1.

    ``factor`` is a polynomial in x, coprime to x, whose roots are the
    abscissae of common points (the zero polynomial means "every abscissa").
    """

    kind: str
    factor: UniPoly


def _witness_factor(u: UniPoly) -> UniPoly:
    s = u.strip_var_powers()
    if u.field.characteristic == 0:
        return s.squarefree_part()
    return s.monic()


def condition_C(f: BivarPoly, algo: str = "auto"):
    """(holds, witness) for: f-hat and y*f-hat_y have no common point in
    C^x x P^1 (algebraic closure of the base field in characteristic p).

    Decided chart by chart: y = 0 (f_0), y = infinity (f_n), and the affine
    part through Res_y(f, f_y).  Needs f_0 != 0 and f_n != 0; the answer is
    exact for non-reduced f too (then Res may vanish identically, which
    means every abscissa carries a common point).
    """
    if f.is_zero():
        raise ValueError("condition_C of the zero polynomial")
    cols = f.coefficients_in_y()
    f0, fn = cols[0], cols[-1]
    if f0.is_zero() or fn.is_zero():
        raise ValueError("condition_C requires f_0 != 0 and f_n != 0")
    if len(cols) == 1:
        # y*f-hat_y vanishes identically; any root a != 0 of f gives (a, 0)
        if f0.is_monomial():
            return True, None
        return False, CWitness("y_zero_chart", _witness_factor(f0))
    if not f0.is_monomial():
        return False, CWitness("y_zero_chart", _witness_factor(f0))
    if not fn.is_monomial():
        return False, CWitness("y_inf_chart", _witness_factor(fn))
    fy = f.derivative("y")
    if fy.is_zero():
        return False, CWitness("affine", UniPoly.zero(f.field, f.names[0]))
    res = resultant_y(f, fy, algo)
    if res.is_zero():
        return False, CWitness("affine", res)
    stripped = res.strip_var_powers()
    if stripped.is_constant():
        return True, None
    return False, CWitness("affine", _witness_factor(stripped))
