"""Branches of f = 0 through the origin as truncated power series, and the
limit of ``h = y*f_y / (x*f_x)`` along them.

Only branches that are power series over the base field after a
ramification ``x -> t^N`` are handled; lifting starts from a simple root of
an edge polynomial of the Newton polygon and solves the remaining
coefficients one at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt, lcm

from .polyring import QQ, BivarPoly, UniPoly


class NonSimpleSeedError(ValueError):
    """The seed is a multiple root of its edge polynomial."""


class UnresolvedLimitError(ArithmeticError):
    """Truncation order too low to read off the leading terms."""


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{k=1..K} coeffs[k-1] * t^k`` with ``t = x^(1/ramification)``."""

    coeffs: tuple
    field: object = QQ
    ramification: int = 1
    var: str = "x"

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs, start=1):
            if c != 0:
                return k
        raise ValueError("zero series has no valuation")

    def dense(self) -> list:
        """Coefficients indexed from t^0 (always 0) to t^K."""
        return [0] + list(self.coeffs)

    def __str__(self):
        var = self.var if self.ramification == 1 else "t"
        terms = [((k,), c) for k, c in reversed(list(enumerate(self.coeffs, start=1))) if c != 0]
        from .polyring.bivar import format_terms

        body = format_terms(list(reversed(terms)), (var,))
        out = f"{body} + O({var}^{self.order + 1})"
        if self.ramification > 1:
            out += f"  [t = x^(1/{self.ramification})]"
        return out


@dataclass(frozen=True)
class PolygonEdge:
    """Compact edge of the Newton polygon at the origin.

    ``exponent`` is the leading exponent M = di/dj of the branches
    ``y ~ c x^M`` it carries and ``height`` = dj their number.
    """

    start: tuple
    end: tuple
    slope: Fraction
    exponent: Fraction
    height: int


# -- truncated series helpers ----------------------------------------------


def _red(F, c):
    return QQ.reduce(c) if F is QQ else c % F.p


def _ser_mul(a, b, K, F):
    out = [0] * (K + 1)
    for i, ai in enumerate(a[: K + 1]):
        if ai == 0:
            continue
        for j in range(min(len(b), K + 1 - i)):
            out[i + j] += ai * b[j]
    return [_red(F, c) for c in out]


def compose(f: BivarPoly, s: list, K: int) -> list:
    """Dense coefficients of ``f(x, s(x)) mod x^(K+1)`` (Horner in y)."""
    F = f.field
    cols = f.coefficients_in_y()
    acc = [0] * (K + 1)
    for u in reversed(cols):
        acc = _ser_mul(acc, s, K, F)
        for i, c in enumerate(u.coeffs[: K + 1]):
            acc[i] = _red(F, acc[i] + c)
    return acc


def _ser_derivative(s, F):
    return [_red(F, k * c) for k, c in enumerate(s)][1:] + [0]


def _valuation(series, upto):
    for k, c in enumerate(series[: upto + 1]):
        if c != 0:
            return k
    return None


# -- ramification and Newton polygon -----------------------------------------


def ramify(f: BivarPoly, N: int) -> BivarPoly:
    """``f(t^N, y)`` in the variables (t, y)."""
    if N < 1:
        raise ValueError("ramification index must be positive")
    names = ("t", f.names[1]) if f.names[0] == "x" else f.names
    tN = BivarPoly.monomial(N, 0, 1, f.field, names)
    return f.with_names(names).substitute(x=tN)


def newton_polygon_edges(f: BivarPoly) -> list:
    """Negative-slope edges of the lower boundary of supp(f) + R_{>=0}^2."""
    pts = sorted(f.support())
    hull = []
    for q in pts:
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            if (a[0] - o[0]) * (q[1] - o[1]) - (a[1] - o[1]) * (q[0] - o[0]) <= 0:
                hull.pop()
            else:
                break
        hull.append(q)
    jmin = min(j for _, j in pts)
    edges = []
    for a, b in zip(hull, hull[1:]):
        if a[1] == jmin:
            break
        di, dj = b[0] - a[0], a[1] - b[1]
        if dj <= 0:
            break
        edges.append(PolygonEdge(a, b, Fraction(-dj, di), Fraction(di, dj), dj))
    return edges


def branch_exponents_at_origin(f: BivarPoly) -> list:
    """Leading exponents of the branches y = s(x), s(0) = 0, with multiplicity."""
    if f.is_zero() or f.deg_y < 1:
        raise ValueError("need a nonzero y-dependent polynomial")
    if f.coeff(0, 0) != 0:
        raise ValueError("f(0, 0) != 0: no branch through the origin")
    out = []
    for e in newton_polygon_edges(f):
        out.extend([e.exponent] * e.height)
    return sorted(out)


def edge_polynomial(f: BivarPoly, M: int):
    """(mu, phi) with mu = min(i + M j) and phi(z) = sum over the
    minimising terms of c_ij z^j."""
    mu = min(i + M * j for i, j in f.support())
    coeffs = {}
    for (i, j), c in f.items():
        if i + M * j == mu:
            coeffs[j] = c
    return mu, UniPoly([coeffs.get(j, 0) for j in range(max(coeffs) + 1)], f.field, "z")


# -- lifting -------------------------------------------------------------------


def default_order(f: BivarPoly) -> int:
    return 2 * (max(f.deg_x, 0) + max(f.deg_y, 0)) + 4


def lift_branch(f: BivarPoly, seed, K: int | None = None) -> TruncatedSeries:
    """Power-series branch ``y = c x^M + ...`` of f through the origin.

    ``seed = (M, c)`` with M a positive integer and c a simple nonzero root
    of the edge polynomial of slope -1/M.  The returned series satisfies
    ``f(x, s) = 0 mod x^(K + 1 + mu - M)`` (mu from :func:`edge_polynomial`);
    this is re-checked before returning.
    """
    M, c = seed
    F = f.field
    if K is None:
        K = default_order(f)
    if int(M) != M or M < 1:
        raise ValueError("seed exponent must be a positive integer; ramify first")
    M = int(M)
    try:
        c = F(c)
    except TypeError as exc:
        raise ValueError(f"seed coefficient {c!r} is not in the base field {F!r}") from exc
    if c == 0:
        raise ValueError("seed coefficient must be nonzero")
    if K < M:
        raise ValueError("truncation order below the seed exponent")
    mu, phi = edge_polynomial(f, M)
    if phi(c) != 0:
        raise ValueError(f"{c} is not a root of the edge polynomial {phi}")
    dphi = phi.derivative()(c)
    if dphi == 0:
        raise NonSimpleSeedError(f"{c} is a multiple root of {phi}; ramify or perturb")

    names = f.names
    x, _ = BivarPoly.gens(F, names)
    u = BivarPoly.monomial(0, 1, 1, F, names)
    shifted = f.substitute(y=x**M * (u + c))
    f1 = BivarPoly({(i - mu, j): v for (i, j), v in shifted.items()}, F, names)

    n = K - M
    useries = [0] * (n + 1)
    for k in range(1, n + 1):
        val = compose(f1, useries, k)[k]
        useries[k] = _red(F, -F.div(val, dphi) if F is not QQ else -QQ.div(val, dphi))
    coeffs = [0] * K
    coeffs[M - 1] = c
    for k in range(1, n + 1):
        coeffs[M - 1 + k] = useries[k]
    s = TruncatedSeries(tuple(coeffs), F, 1, names[0])

    check_to = K + mu - M
    residual = compose(f, s.dense(), check_to)
    if any(v != 0 for v in residual):
        raise ArithmeticError("lifted branch fails the re-substitution check")
    return s


def chain_rule_residual(f: BivarPoly, s: TruncatedSeries) -> list:
    """Coefficients of f_x(x, s) + f_y(x, s) s'(x) below x^K."""
    K = s.order
    S = s.dense()
    F = f.field
    fx = compose(f.derivative("x"), S, K)
    fy = compose(f.derivative("y"), S, K)
    ds = _ser_derivative(S, F)
    prod = _ser_mul(fy, ds, K, F)
    return [_red(F, a + b) for a, b in zip(fx, prod)][:K]


def h_limit_along(f: BivarPoly, s: TruncatedSeries):
    """lim_{x -> 0} y f_y / (x f_x) along the branch y = s(x).

    If ``s.ramification = N > 1`` the series is in t = x^(1/N) and the limit
    is computed for f(t^N, y), then multiplied by N (t d/dt = N x d/dx).
    """
    if s.ramification > 1:
        inner = TruncatedSeries(s.coeffs, s.field, 1, "t")
        return f.field(s.ramification * h_limit_along(ramify(f, s.ramification), inner))
    F = f.field
    K = s.order
    S = s.dense()
    if any(v != 0 for v in compose(f, S, K)):
        raise ValueError("series is not a branch of f to its truncation order")
    # S is exact below x^(K+1) and S = O(x^M), so S*f_y(x, S) is exact up to
    # index K + min(M, v(f_y(x, S))); x*f_x(x, S) is exact up to K + 1.
    M = s.valuation
    fy = compose(f.derivative("y"), S, K + M)
    vfy = _valuation(fy, K)
    top = K + M if vfy is None else K + min(M, vfy)
    num = _ser_mul(S, fy, top, F)
    den = [0] + compose(f.derivative("x"), S, K)
    vd = _valuation(den, K + 1)
    if vd is None:
        raise UnresolvedLimitError("denominator x*f_x vanishes to the truncation order")
    vn = _valuation(num, min(vd, top))
    if vn is None:
        if vd <= top:
            return F(0)
        raise UnresolvedLimitError("numerator leading term not resolved; raise K")
    if vn < vd:
        raise ArithmeticError("h has a pole along this branch")
    if vn > vd:
        return F(0)
    return F.div(num[vn], den[vd])


# -- seeds and end-to-end branch reports ----------------------------------------


def _divisors(n: int):
    n = abs(n)
    if n > 10**12:
        raise ValueError("coefficient too large for rational root search")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(u: UniPoly) -> list:
    """Distinct nonzero roots of u in the base field (Q or GF(p))."""
    F = u.field
    if u.degree < 1:
        return []
    u = u.strip_var_powers()
    if u.degree < 1:
        return []
    if F is not QQ:
        return [a for a in range(1, F.p) if u(a) == 0]
    den = 1
    for c in u.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(c * den) for c in u.coeffs]
    roots = []
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                r = QQ(r)
                if r not in roots and u(r) == 0:
                    roots.append(r)
    return sorted(roots)


@dataclass
class BranchReport:
    exponent: Fraction
    seed: object
    series: TruncatedSeries | None
    limit: object = None
    expected: object = None
    note: str = ""
    residual_ok: bool = dc_field(default=True)


def puiseux_branches(f: BivarPoly, N: int | None = None, K: int | None = None) -> list:
    """Lift every branch with a simple rational seed after ramification by N
    (default: lcm of the exponent denominators) and evaluate h along it."""
    exps = branch_exponents_at_origin(f)
    if N is None:
        N = 1
        for e in exps:
            N = lcm(N, e.denominator)
    g = ramify(f, N) if N > 1 else f
    if K is None:
        K = default_order(g)
    reports = []
    for edge in newton_polygon_edges(g):
        M = edge.exponent
        orig = M / N
        if M.denominator != 1:
            reports.append(BranchReport(orig, None, None, note=f"exponent {M} not integral; ramify further"))
            continue
        _, phi = edge_polynomial(g, int(M))
        roots = rational_roots(phi)
        found = 0
        for c in roots:
            if phi.derivative()(c) == 0:
                reports.append(BranchReport(orig, c, None, note="multiple root; not lifted"))
                continue
            s = lift_branch(g, (int(M), c), max(K, int(M)))
            found += 1
            if N > 1:
                s = TruncatedSeries(s.coeffs, s.field, N, "t")
            limit = h_limit_along(f, s) if N > 1 else h_limit_along(g, s)
            res = chain_rule_residual(g, TruncatedSeries(s.coeffs, s.field, 1, g.names[0]))
            expected = f.field(-1 / Fraction(orig)) if f.field is QQ else f.field(Fraction(-orig.denominator, orig.numerator))
            reports.append(
                BranchReport(orig, c, s, limit, expected, residual_ok=all(v == 0 for v in res[: s.order - 1]))
            )
        missing = edge.height - found - sum(1 for c in roots if phi.derivative()(c) == 0)
        if missing > 0:
            reports.append(
                BranchReport(orig, None, None, note=f"{missing} branch(es) with non-rational leading coefficient")
            )
    return reports
