"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements are plain Python numbers.  Over Q a coefficient is an ``int``
when its denominator is 1 and a :class:`fractions.Fraction` otherwise; over
GF(p) it is an ``int`` residue in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class FieldMismatchError(ValueError):
    """Raised when operands live over different fields."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    characteristic = 0
    name = "Q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, value) -> int | Fraction:
        if isinstance(value, int):
            return value
        if isinstance(value, Rational):
            value = Fraction(value)
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, str):
            return self(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into Q")

    @staticmethod
    def reduce(c):
        if type(c) is int:
            return c
        return c.numerator if c.denominator == 1 else c

    @staticmethod
    def div(a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        if type(a) is int and type(b) is int:
            q, r = divmod(a, b)
            return q if r == 0 else Fraction(a, b)
        return RationalField.reduce(Fraction(a) / Fraction(b))

    def inv(self, a):
        return self.div(1, a)

    def from_int(self, n: int):
        return n

    def to_json(self) -> str:
        return "q"


class PrimeField:
    """GF(p) with residues stored as ints in ``[0, p)``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F_{p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Rational):
            value = Fraction(value)
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            return self(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def reduce(self, c):
        return c % self.p

    def div(self, a, b):
        b %= self.p
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return self.div(1, a)

    def from_int(self, n: int):
        return n % self.p

    def to_json(self) -> str:
        return f"fp:{self.p}"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(text: str):
    """Parse a field descriptor ``q`` or ``fp:<p>``."""
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("fp:"):
        return GF(int(text[3:]))
    raise ValueError(f"unknown field descriptor {text!r}")


def check_same_field(a, b):
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a!r} vs {b!r}")
