"""Support geometry: quasi-homogeneous types, the Euler-relation test,
condition (A), Newton polygons and mixed volumes."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polyring import BivarPoly


class AdvisoryWarning(UserWarning):
    """Result computed in positive characteristic where it is only advisory."""


@dataclass(frozen=True)
class QHType:
    """Weights with ``alpha*i + beta*j == w`` on the whole support.

    Canonical form: ``gcd(|alpha|, |beta|) == 1`` and ``alpha > 0`` or
    ``alpha == 0 < beta``.  ``unique`` is False for a single-point support,
    where every line through the point works.
    """

    w: int
    alpha: int
    beta: int
    unique: bool = True

    def __post_init__(self):
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("weights (alpha, beta) must not both vanish")

    @classmethod
    def canonical(cls, w, alpha, beta, unique=True):
        g = gcd(alpha, beta)
        w, alpha, beta = w // g, alpha // g, beta // g
        if alpha < 0 or (alpha == 0 and beta < 0):
            w, alpha, beta = -w, -alpha, -beta
        return cls(w, alpha, beta, unique)

    def as_tuple(self):
        return (self.w, self.alpha, self.beta)

    def __str__(self):
        return f"({self.w}; {self.alpha}, {self.beta})"


def support(f: BivarPoly) -> frozenset:
    if f.is_zero():
        raise ValueError("support of the zero polynomial")
    return f.support()


def find_qh_type(f: BivarPoly):
    """Canonical QHType of the line through the support, or None."""
    pts = sorted(support(f))
    p0 = pts[0]
    if len(pts) == 1:
        return QHType(p0[0], 1, 0, unique=False)
    p1 = pts[1]
    di, dj = p1[0] - p0[0], p1[1] - p0[1]
    for q in pts[2:]:
        if di * (q[1] - p0[1]) - dj * (q[0] - p0[0]) != 0:
            return None
    alpha, beta = dj, -di
    return QHType.canonical(alpha * p0[0] + beta * p0[1], alpha, beta)


def _nullspace(rows, inv):
    """Reduced row echelon nullspace basis; ``inv`` inverts field scalars."""
    A = [list(r) for r in rows]
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = inv(A[r][c])
        A[r] = [v * s for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                t = A[i][c]
                A[i] = [a - t * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(A, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def euler_qh_test(f: BivarPoly):
    """Solve ``w*f = alpha*x*f_x + beta*y*f_y`` coefficientwise.

    Returns a nonzero integer-primitive ``(w, alpha, beta)`` (canonical sign)
    or None when only the zero solution exists.  In characteristic p the
    system is solved mod p and the residues are returned with an
    :class:`AdvisoryWarning`.
    """
    pts = sorted(support(f))
    p = f.characteristic
    rows = [(1, -i, -j) for i, j in pts]
    if p:
        warnings.warn("Euler test in positive characteristic is advisory", AdvisoryWarning)
        rows = [tuple(v % p for v in r) for r in rows]
        basis = _nullspace(rows, lambda a: pow(a, -1, p))
        if not basis:
            return None
        return tuple(v % p for v in basis[0])
    basis = _nullspace([tuple(Fraction(v) for v in r) for r in rows], lambda a: 1 / a)
    if not basis:
        return None
    v = basis[0]
    den = 1
    for c in v:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = gcd(g, c)
    w, a, b = (c // g for c in ints)
    if a < 0 or (a == 0 and b < 0):
        w, a, b = -w, -a, -b
    return (w, a, b)


def condition_A(f: BivarPoly):
    """(holds, type): quasi-homogeneous with a nonzero weight of x."""
    t = find_qh_type(f)
    if t is None:
        return False, None
    if t.alpha == 0:
        return False, None
    return True, t


# -- polygons ---------------------------------------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Vertices of the convex hull, counterclockwise (Andrew's monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for q in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    for q in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    return lower[:-1] + upper[:-1]


def newton_polytope(f: BivarPoly):
    return convex_hull(support(f))


def twice_area(poly) -> int:
    if len(poly) < 3:
        return 0
    s = 0
    for k in range(len(poly)):
        x1, y1 = poly[k]
        x2, y2 = poly[(k + 1) % len(poly)]
        s += x1 * y2 - x2 * y1
    return abs(s)


def minkowski_sum(P, Q):
    return convex_hull([(a[0] + b[0], a[1] + b[1]) for a in P for b in Q])


def mixed_volume(P, Q) -> int:
    """area(P+Q) - area(P) - area(Q); the unit square pair gives 1."""
    if not P or not Q:
        raise ValueError("mixed volume of an empty polytope")
    doubled = twice_area(minkowski_sum(P, Q)) - twice_area(P) - twice_area(Q)
    if doubled % 2:
        raise ArithmeticError("mixed volume of lattice polygons must be integral")
    return doubled // 2
