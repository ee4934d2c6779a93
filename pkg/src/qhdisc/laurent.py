"""Normal form ``f = scale * x^k0 * y^l0 * g(x^-beta * y^alpha)`` of
quasi-homogeneous polynomials, and the reducedness criterion read off it."""

from __future__ import annotations

from dataclasses import dataclass

from .newton import QHType, support
from .polyring import BivarPoly, UniPoly


class TypeMismatchError(ValueError):
    """A support point is off the line of the given type."""


@dataclass(frozen=True)
class LaurentForm:
    """Decomposition of a quasi-homogeneous polynomial.

    ``g`` is monic in z with ``g(0) != 0``; ``k_prime = k0 - deg(g)*beta`` is
    the x-exponent of the second (product over ``a_i x^beta - y^alpha``)
    expression.
    """

    k0: int
    ell0: int
    k_prime: int
    g: UniPoly
    alpha: int
    beta: int
    scale: object

    @property
    def d(self) -> int:
        return max(self.g.degree, 0)

    def reconstruct(self, names=("x", "y")) -> BivarPoly:
        """Expand back into K[x, y]."""
        F = self.g.field
        terms = {}
        for m, c in self.g.terms():
            i = self.k0 - self.beta * m
            j = self.ell0 + self.alpha * m
            if i < 0:
                raise ArithmeticError("reconstruction produced a negative x-exponent")
            terms[(i, j)] = F(self.scale * c)
        return BivarPoly(terms, F, names)

    def polynomial_x_exponent(self) -> int:
        """k0 when beta <= 0, k' when beta > 0: the exponent of the product
        form whose factors are polynomials."""
        return self.k0 if self.beta <= 0 else self.k_prime


def _normalize(t: QHType) -> QHType:
    c = QHType.canonical(t.w, t.alpha, t.beta, t.unique)
    if c.alpha == 0:
        raise ValueError("laurent_decompose needs a nonzero weight of x")
    return c


def laurent_decompose(f: BivarPoly, t: QHType) -> LaurentForm:
    t = _normalize(t)
    pts = support(f)
    for i, j in pts:
        if t.alpha * i + t.beta * j != t.w:
            raise TypeMismatchError(f"support point {(i, j)} is not on the line of type {t}")
    ell0 = min(j for _, j in pts)
    k0 = next(i for i, j in pts if j == ell0)
    raw = {}
    for (i, j), c in f.items():
        m, r = divmod(j - ell0, t.alpha)
        if r or k0 - t.beta * m != i:
            raise TypeMismatchError(f"term {(i, j)} does not fit the type {t}")
        raw[m] = c
    g = UniPoly([raw.get(m, 0) for m in range(max(raw) + 1)], f.field, "z")
    scale = g.lc
    g = g.monic()
    k_prime = k0 - g.degree * t.beta
    if k_prime < 0:
        raise ArithmeticError("negative k' for a genuine polynomial")
    return LaurentForm(k0, ell0, k_prime, g, t.alpha, t.beta, scale)


def qh_reduced_criterion(L: LaurentForm) -> bool:
    """Reduced iff the polynomial-form x-exponent and l0 are at most 1 and
    g is squarefree."""
    return L.polynomial_x_exponent() <= 1 and L.ell0 <= 1 and L.g.is_squarefree()
