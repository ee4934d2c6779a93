"""Dense univariate polynomials over an exact field."""

from __future__ import annotations

from .fields import QQ, check_same_field

NEG_INF = float("-inf")


def _strip(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class UniPoly:
    """Dense polynomial ``sum(coeffs[k] * var**k)``.

    The coefficient list is low-to-high with a nonzero last entry; the zero
    polynomial has an empty list and degree ``-inf``.
    """

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs=(), field=QQ, var="x", *, _trusted=False):
        if _trusted:
            self.coeffs = coeffs
        else:
            self.coeffs = _strip([field(c) for c in coeffs])
        self.field = field
        self.var = var

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls, field=QQ, var="x"):
        return cls([], field, var, _trusted=True)

    @classmethod
    def one(cls, field=QQ, var="x"):
        return cls([field.from_int(1)], field, var, _trusted=True)

    @classmethod
    def monomial(cls, c, k: int, field=QQ, var="x"):
        return cls([0] * k + [c], field, var)

    def _new(self, coeffs):
        return UniPoly(_strip(coeffs), self.field, self.var, _trusted=True)

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def trailing_degree(self) -> int:
        """Largest k with ``var**k`` dividing self (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0

    def num_terms(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)

    def is_monomial(self) -> bool:
        """Exactly one nonzero term; nonzero constants count."""
        return self.num_terms() == 1

    def strip_var_powers(self) -> "UniPoly":
        """Divide out the largest power of the variable."""
        return self._new(self.coeffs[self.trailing_degree():])

    def terms(self):
        return [(k, c) for k, c in enumerate(self.coeffs) if c != 0]

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        check_same_field(self.field, other.field)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            self._check(other)
            return other
        return UniPoly([self.field(other)], self.field, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return self._reduced(out)

    __radd__ = __add__

    def __neg__(self):
        return self._reduced([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = self.field(other)
            return self._reduced([c * a for a in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return self._reduced(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly.one(self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _reduced(self, coeffs):
        f = self.field
        if f is QQ:
            coeffs = [c if type(c) is int else QQ.reduce(c) for c in coeffs]
        else:
            coeffs = [c % f.p for c in coeffs]
        return self._new(coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self.coeffs == ([self.field(other)] if other != 0 else [])
        return NotImplemented

    def __hash__(self):
        return hash((tuple(self.coeffs), self.field))

    def __call__(self, a):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return self.field.reduce(acc) if self.field is not QQ else QQ.reduce(QQ(acc))

    def derivative(self) -> "UniPoly":
        return self._reduced([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        inv = self.field.inv(self.lc)
        return self * inv

    def divmod(self, other: "UniPoly"):
        """Euclidean division over the field."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lcb = other.lc
        b = other.coeffs
        if len(rem) - 1 < db:
            return self._new([]), self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            top = rem[k + db]
            if top == 0:
                continue
            q = F.div(top, lcb)
            quot[k] = q
            for t in range(db + 1):
                rem[k + t] -= q * b[t]
            if F is not QQ:
                for t in range(db + 1):
                    rem[k + t] %= F.p
        return self._reduced(quot), self._reduced(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division of {self} by {other}")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd (zero if both are zero)."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        """Product of the distinct irreducible factors (monic), char 0 or p > degree."""
        if self.is_constant():
            return UniPoly.one(self.field, self.var) if not self.is_zero() else self
        g = self.gcd(self.derivative())
        return self.exact_div(g).monic() if not g.is_zero() else self.monic()

    def is_squarefree(self) -> bool:
        if self.is_constant():
            return not self.is_zero()
        return self.gcd(self.derivative()).is_constant()

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, self.field, var, _trusted=True)

    def to_field(self, field) -> "UniPoly":
        """Image under Z -> GF(p) (or the identity); denominators must be units."""
        return UniPoly([field(c) for c in self.coeffs], field, self.var)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        from .bivar import format_terms

        return format_terms(
            [((k,), c) for k, c in reversed(self.terms())], (self.var,)
        )

    def __repr__(self):
        return f"UniPoly({self}, {self.field!r})"
