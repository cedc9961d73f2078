"""Exact arithmetic in the quadratic field Q(s), where s**2 = -3.

This field contains the primitive sixth root of unity q = (1 + s)/2,
which satisfies q - 1/q = s and q**6 = 1, and the primitive cube root
w = q**2.  That is all the irrationality the rest of the package ever
needs.  An element is stored as a pair of Fractions (rational part,
coefficient of s), so every operation is exact; there is no floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


class QsElem:
    """Element ra + sb*s of Q(s).  Immutable by convention."""

    __slots__ = ("ra", "sb")

    def __init__(self, ra: Rational = 0, sb: Rational = 0):
        self.ra = Fraction(ra)
        self.sb = Fraction(sb)

    @classmethod
    def _raw(cls, ra: Fraction, sb: Fraction) -> "QsElem":
        # internal fast path: arguments must already be Fractions
        self = object.__new__(cls)
        self.ra = ra
        self.sb = sb
        return self

    @property
    def is_rational(self) -> bool:
        return not self.sb

    def to_fraction(self) -> Fraction:
        """Rational part of a rational element; error if s survives."""
        if self.sb:
            raise ValueError(f"{self!r} is not rational")
        return self.ra

    def conjugate(self) -> "QsElem":
        return QsElem._raw(self.ra, -self.sb)

    def norm(self) -> Fraction:
        # product with the conjugate: a*a - s*s*b*b = a*a + 3*b*b
        return self.ra * self.ra + 3 * self.sb * self.sb

    def inverse(self) -> "QsElem":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(s)")
        return QsElem._raw(self.ra / n, -self.sb / n)

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QsElem):
            return QsElem._raw(self.ra + other.ra, self.sb + other.sb)
        if isinstance(other, (int, Fraction)):
            return QsElem._raw(self.ra + other, self.sb)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QsElem):
            return QsElem._raw(self.ra - other.ra, self.sb - other.sb)
        if isinstance(other, (int, Fraction)):
            return QsElem._raw(self.ra - other, self.sb)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return QsElem._raw(other - self.ra, -self.sb)
        return NotImplemented

    def __neg__(self):
        return QsElem._raw(-self.ra, -self.sb)

    def __mul__(self, other):
        if isinstance(other, QsElem):
            a, b, c, d = self.ra, self.sb, other.ra, other.sb
            return QsElem._raw(a * c - 3 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return QsElem._raw(self.ra * other, self.sb * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QsElem):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return QsElem._raw(self.ra / other, self.sb / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int) -> "QsElem":
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison and hashing ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, QsElem):
            return self.ra == other.ra and self.sb == other.sb
        if isinstance(other, (int, Fraction)):
            return not self.sb and self.ra == other
        return NotImplemented

    def __hash__(self):
        # rational elements hash like their Fraction so mixed-key dicts work
        if not self.sb:
            return hash(self.ra)
        return hash((self.ra, self.sb))

    def __bool__(self):
        return bool(self.ra) or bool(self.sb)

    def __repr__(self):
        return f"QsElem({self.ra!r}, {self.sb!r})"

    def __str__(self):
        if not self.sb:
            return str(self.ra)
        if not self.ra:
            return f"{self.sb}*s"
        return f"{self.ra} + {self.sb}*s"


ZERO = QsElem(0, 0)
ONE = QsElem(1, 0)
S = QsElem(0, 1)
Q = QsElem(Fraction(1, 2), Fraction(1, 2))     # primitive sixth root of unity
QBAR = Q.conjugate()                           # its inverse
OMEGA = Q * Q                                  # primitive cube root of unity
OMEGA_BAR = OMEGA.conjugate()
