"""Sparse bivariate polynomials ``sum c_ij x^i y^j`` over an exact field."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .fields import QQ, GF, check_same_field
from .unipoly import NEG_INF, UniPoly


def _grlex_key(e):
    return (e[0] + e[1], e[0])


def format_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_terms(terms, names) -> str:
    """Render ``[(exponents, coeff), ...]`` (already ordered) as text."""
    if not terms:
        return "0"
    out = []
    for k, (exps, c) in enumerate(terms):
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        neg = c < 0
        mag = -c if neg else c
        if not factors:
            body = format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = format_coeff(mag) + "*" + "*".join(factors)
        if k == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class BivarPoly:
    """Immutable sparse polynomial in two variables.

    ``terms`` maps exponent pairs ``(i, j)`` to nonzero coefficients and is
    kept in descending graded-lex order (``x > y``).  ``names`` only affects
    printing; equality looks at the field and the terms.
    """

    __slots__ = ("_terms", "field", "names", "_hash")

    def __init__(self, terms=None, field=QQ, names=("x", "y"), *, _trusted=False):
        if _trusted:
            self._terms = terms
        else:
            clean = {}
            for (i, j), c in (terms or {}).items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term {(i, j)}")
                c = field(c)
                if c != 0:
                    key = (int(i), int(j))
                    clean[key] = field.reduce(clean.get(key, 0) + c)
                    if clean[key] == 0:
                        del clean[key]
            self._terms = {e: clean[e] for e in sorted(clean, key=_grlex_key, reverse=True)}
        self.field = field
        self.names = tuple(names)
        self._hash = None

    def _new(self, raw: dict):
        """Wrap a raw accumulator dict: drop zeros, reduce, sort."""
        F = self.field
        if F is QQ:
            items = {e: QQ.reduce(c) for e, c in raw.items() if c != 0}
        else:
            p = F.p
            items = {e: c % p for e, c in raw.items() if c % p != 0}
        ordered = {e: items[e] for e in sorted(items, key=_grlex_key, reverse=True)}
        return BivarPoly(ordered, F, self.names, _trusted=True)

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls, field=QQ, names=("x", "y")):
        return cls({}, field, names, _trusted=True)

    @classmethod
    def constant(cls, c, field=QQ, names=("x", "y")):
        return cls({(0, 0): c}, field, names)

    @classmethod
    def monomial(cls, i: int, j: int, c=1, field=QQ, names=("x", "y")):
        return cls({(i, j): c}, field, names)

    @classmethod
    def gens(cls, field=QQ, names=("x", "y")):
        return cls.monomial(1, 0, 1, field, names), cls.monomial(0, 1, 1, field, names)

    @classmethod
    def from_y_coefficients(cls, coeffs, field=None, names=("x", "y")):
        """Inverse of :meth:`coefficients_in_y`."""
        if field is None:
            field = coeffs[0].field if coeffs else QQ
        terms = {}
        for j, u in enumerate(coeffs):
            for i, c in enumerate(u.coeffs):
                if c != 0:
                    terms[(i, j)] = c
        return cls(terms, field, names)

    @classmethod
    def from_x_univariate(cls, u: UniPoly, names=("x", "y")):
        return cls({(i, 0): c for i, c in u.terms()}, u.field, names)

    # -- queries ----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return frozenset(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, i: int, j: int):
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or list(self._terms) == [(0, 0)]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def deg_x(self):
        return max((i for i, _ in self._terms), default=NEG_INF)

    @property
    def deg_y(self):
        return max((j for _, j in self._terms), default=NEG_INF)

    @property
    def total_degree(self):
        return max((i + j for i, j in self._terms), default=NEG_INF)

    def leading_term(self):
        """(exponent, coefficient) of the graded-lex largest term."""
        for e, c in self._terms.items():
            return e, c
        raise ValueError("zero polynomial has no leading term")

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, BivarPoly):
            check_same_field(self.field, other.field)
            return other
        if isinstance(other, UniPoly):
            check_same_field(self.field, other.field)
            return BivarPoly.from_x_univariate(other, self.names)
        return BivarPoly.constant(other, self.field, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) - c
        return self._new(acc)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (BivarPoly, UniPoly)):
            c = self.field(other)
            return self._new({e: c * v for e, v in self._terms.items()})
        other = self._coerce(other)
        acc = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return self._new(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = BivarPoly.constant(1, self.field, self.names)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, int) or isinstance(other, Fraction):
            return self == BivarPoly.constant(other, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._terms.items()), self.field))
        return self._hash

    def mul_monomial(self, a: int, b: int) -> "BivarPoly":
        """Multiply by ``x^a y^b``."""
        return BivarPoly(
            {(i + a, j + b): c for (i, j), c in self._terms.items()},
            self.field,
            self.names,
            _trusted=True,
        )

    def exact_div(self, other: "BivarPoly") -> "BivarPoly":
        """Exact division in K[x, y] via division in K[x][y]."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        n = other.deg_y
        lc = other.coefficients_in_y()[-1]
        rem = self.coefficients_in_y()
        B = other.coefficients_in_y()
        quot = [UniPoly.zero(self.field)] * max(len(rem) - n, 1)
        for k in range(len(rem) - 1 - n, -1, -1):
            top = rem[k + n]
            if top.is_zero():
                continue
            q, r = top.divmod(lc)
            if not r.is_zero():
                raise ArithmeticError("inexact bivariate division")
            quot[k] = q
            for t in range(n + 1):
                rem[k + t] = rem[k + t] - q * B[t]
        if any(not r.is_zero() for r in rem):
            raise ArithmeticError("inexact bivariate division")
        return BivarPoly.from_y_coefficients(quot, self.field, self.names)

    # -- calculus and evaluation -----------------------------------------
    def derivative(self, var: str = "x") -> "BivarPoly":
        """Formal partial derivative; ``var`` is ``"x"``/``"y"`` or a name."""
        idx = self._var_index(var)
        acc = {}
        for (i, j), c in self._terms.items():
            e = (i, j)[idx]
            if e:
                acc[(i - 1, j) if idx == 0 else (i, j - 1)] = e * c
        return self._new(acc)

    def _var_index(self, var) -> int:
        if var in ("x", self.names[0]) or var == 0:
            return 0
        if var in ("y", self.names[1]) or var == 1:
            return 1
        raise ValueError(f"unknown variable {var!r}")

    def eval_at(self, a, b):
        F = self.field
        a, b = F(a), F(b)
        acc = 0
        for (i, j), c in self._terms.items():
            acc += c * a**i * b**j
        return F(acc) if F is QQ else acc % F.p

    def substitute(self, x=None, y=None) -> "BivarPoly":
        """Compose ``f(x_sub, y_sub)`` where the substitutes are BivarPolys.

        ``None`` keeps the variable.  The result keeps the variable names of
        the substitutes (``x=t^2`` in variables ``(t, y)`` yields a poly in
        ``(t, y)``).
        """
        gx, gy = BivarPoly.gens(self.field, self.names)
        x = gx if x is None else self._coerce(x)
        y = gy if y is None else self._coerce(y)
        names = x.names if x is not gx else y.names
        result = BivarPoly.zero(self.field, names)
        xpows = {0: BivarPoly.constant(1, self.field, names)}
        ypows = {0: BivarPoly.constant(1, self.field, names)}

        def pw(cache, base, k):
            if k not in cache:
                cache[k] = pw(cache, base, k - 1) * base
            return cache[k]

        for (i, j), c in self._terms.items():
            result = result + pw(xpows, x, i) * pw(ypows, y, j) * c
        return BivarPoly(result._terms, self.field, names, _trusted=True)

    def with_names(self, names) -> "BivarPoly":
        return BivarPoly(self._terms, self.field, names, _trusted=True)

    def swap_xy(self) -> "BivarPoly":
        return self._new({(j, i): c for (i, j), c in self._terms.items()})

    # -- views ------------------------------------------------------------
    def coefficients_in_y(self) -> list:
        """``[f_0, ..., f_n]`` with ``f = sum f_k(x) y^k``."""
        if self.is_zero():
            return []
        n = self.deg_y
        cols = [[] for _ in range(n + 1)]
        for (i, j), c in self._terms.items():
            row = cols[j]
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = c
        return [UniPoly(_rstrip(r), self.field, self.names[0], _trusted=True) for r in cols]

    def coefficients_in_x(self) -> list:
        return [u.with_var(self.names[1]) for u in self.swap_xy().coefficients_in_y()]

    def content_y(self) -> UniPoly:
        """Monic gcd of the coefficients in K[x] of f viewed in K[x][y]."""
        g = UniPoly.zero(self.field, self.names[0])
        for u in self.coefficients_in_y():
            g = g.gcd(u)
            if g.is_constant() and not g.is_zero():
                return g
        return g

    def monic(self) -> "BivarPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero():
            return self
        _, c = self.leading_term()
        return self * self.field.inv(c)

    def integer_primitive(self):
        """Return ``(scale, g)`` with ``self == scale * g`` over Q.

        ``g`` has coprime integer coefficients and positive leading
        coefficient.  Only meaningful over Q.
        """
        if self.field is not QQ:
            raise ValueError("integer_primitive requires rational coefficients")
        if self.is_zero():
            return 1, self
        den = 1
        for c in self._terms.values():
            if type(c) is not int:
                den = lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        _, lead = next(iter(ints.items()))
        if lead < 0:
            g = -g
        prim = {e: v // g for e, v in ints.items()}
        return QQ.div(g, den), BivarPoly(prim, QQ, self.names, _trusted=True)

    def to_field(self, field) -> "BivarPoly":
        return BivarPoly({e: field(c) for e, c in self._terms.items()}, field, self.names)

    def reduce_mod(self, p: int) -> "BivarPoly":
        return self.to_field(GF(p))

    def height(self) -> int:
        """Max |numerator| or denominator over Q, max residue mod p."""
        h = 0
        for c in self._terms.values():
            if isinstance(c, Fraction):
                h = max(h, abs(c.numerator), c.denominator)
            else:
                h = max(h, abs(c))
        return h

    # -- printing ---------------------------------------------------------
    def __str__(self):
        return format_terms(list(self._terms.items()), self.names)

    def __repr__(self):
        return f"BivarPoly({self}, {self.field!r})"


def _rstrip(row):
    while row and row[-1] == 0:
        row.pop()
    return row
