"""Exact scalar arithmetic over the rationals and over odd prime fields.

Scalars are either :class:`fractions.Fraction` (over Q) or :class:`FpElement`
(over F_p).  Both are immutable, hashable, and support the usual operators,
so the linear algebra layer never needs to know which field it is working in.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import BadParameter, FieldMismatch

# Exhaustive square-root search is used for F_p, so p must stay small.
MAX_PRIME = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FpElement:
    """A residue in [0, p) for an odd prime p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            raise FieldMismatch(f"F_{self.p} vs Q")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pow__(self, n: int):
        if n < 0:
            if self.value == 0:
                raise ZeroDivisionError(f"division by zero in F_{self.p}")
            return FpElement(pow(self.value, n, self.p), self.p)
        return FpElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        # Must agree with hash(int) because FpElement(k, p) == k for ints.
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class Field:
    """Field descriptor: the rationals, or F_p for an odd prime p < 2**16."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == "Q":
            if p is not None:
                raise BadParameter("the rational field takes no modulus")
        elif kind == "Fp":
            if p is None or not _is_prime(p):
                raise BadParameter(f"{p} is not prime")
            if p == 2:
                raise BadParameter("characteristic 2 is not supported")
            if p >= MAX_PRIME:
                raise BadParameter(f"p must be < {MAX_PRIME}")
        else:
            raise BadParameter(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @staticmethod
    def rationals() -> "Field":
        return Field("Q")

    @staticmethod
    def prime(p: int) -> "Field":
        return Field("Fp", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    def scalar(self, v):
        """Coerce an int, Fraction, string, or same-field scalar to this field."""
        if self.kind == "Q":
            if isinstance(v, FpElement):
                raise FieldMismatch("cannot coerce an F_p residue into Q")
            if isinstance(v, str):
                return Fraction(v)
            return Fraction(v)
        if isinstance(v, FpElement):
            if v.p != self.p:
                raise FieldMismatch(f"F_{v.p} residue used in F_{self.p}")
            return v
        if isinstance(v, str):
            v = Fraction(v)
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"{v} has no image in F_{self.p}")
            return FpElement(v.numerator * pow(den, -1, self.p), self.p)
        return FpElement(v, self.p)

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def elements(self):
        """All field elements; only available over F_p."""
        if self.kind == "Q":
            raise BadParameter("Q is infinite")
        return [FpElement(v, self.p) for v in range(self.p)]

    def sqrt(self, x):
        """A canonical square root of x, or None if x is not a square.

        Over Q the root with non-negative numerator is returned; over F_p the
        smaller of the two residues.  Roots are found by exact integer square
        roots (Q) or exhaustive search (F_p, fine for p < 2**16).
        """
        x = self.scalar(x)
        if self.kind == "Q":
            if x < 0:
                return None
            rn = isqrt(x.numerator)
            rd = isqrt(x.denominator)
            if rn * rn == x.numerator and rd * rd == x.denominator:
                return Fraction(rn, rd)
            return None
        for r in range(self.p // 2 + 1):
            if (r * r) % self.p == x.value:
                return FpElement(r, self.p)
        return None

    def format(self, x) -> str:
        return str(x)

    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"kind": "Q"}
        return {"kind": "Fp", "p": self.p}

    @staticmethod
    def from_json(doc: dict) -> "Field":
        kind = doc.get("kind")
        if kind == "Q":
            return Field("Q")
        if kind == "Fp":
            return Field("Fp", doc.get("p"))
        raise BadParameter(f"unknown field kind {kind!r}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Q" if self.kind == "Q" else f"F_{self.p}"
