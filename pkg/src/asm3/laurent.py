"""Sparse Laurent polynomials in one variable x over Q(s).

Coefficients live in Q(s); rationals embed with a zero s-part.  The
representation is a dict from integer exponents to nonzero coefficients,
which suits the thin supports that show up here (arithmetic progressions
of step 6 between -3m-2 and 3m+2).  Instances are immutable: every
operation returns a fresh polynomial.

>>> p = LaurentPoly({1: 1, -1: -1})
>>> p * p == LaurentPoly({2: 1, 0: -2, -2: 1})
True
>>> (p ** 3).divide_exact(p) == p * p
True
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .errors import EvalAtZero, NonExactDivision
from .qfield import ONE, ZERO, QsElem

Scalar = Union[int, Fraction, QsElem]


def _coerce(v: Scalar) -> QsElem:
    if isinstance(v, QsElem):
        return v
    return QsElem(v)


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                q = _coerce(v)
                if q:
                    c[int(k)] = q
        self._c = c

    @classmethod
    def _clean(cls, c: dict) -> "LaurentPoly":
        # internal fast path: values are QsElem, zeros may be present
        self = object.__new__(cls)
        self._c = {k: v for k, v in c.items() if v}
        return self

    @classmethod
    def x_pow(cls, k: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({k: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    # -- inspection -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_rational(self) -> bool:
        """True when every coefficient has zero s-part."""
        return all(v.is_rational for v in self._c.values())

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._c))

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no support")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no support")
        return max(self._c)

    def coeff(self, k: int) -> QsElem:
        return self._c.get(k, ZERO)

    def terms(self) -> Iterable[Tuple[int, QsElem]]:
        for k in sorted(self._c):
            yield k, self._c[k]

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QsElem)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, ZERO) + v
        return LaurentPoly._clean(c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QsElem)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, ZERO) - v
        return LaurentPoly._clean(c)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return LaurentPoly._clean({k: -v for k, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            acc: dict = {}
            for k1, v1 in self._c.items():
                for k2, v2 in other._c.items():
                    k = k1 + k2
                    prod = v1 * v2
                    if k in acc:
                        acc[k] = acc[k] + prod
                    else:
                        acc[k] = prod
            return LaurentPoly._clean(acc)
        if isinstance(other, (int, Fraction, QsElem)):
            w = _coerce(other)
            if not w:
                return LaurentPoly()
            return LaurentPoly._clean({k: v * w for k, v in self._c.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QsElem)):
            w = _coerce(other)
            return self * w.inverse()
        if isinstance(other, LaurentPoly):
            return self.divide_exact(other)
        return NotImplemented

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QsElem)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None  # mutable-looking container; not meant for dict keys

    # -- the operations the identity checks are built from --------------

    def divide_exact(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / den.

        Raises ZeroDivisionError on a zero divisor and NonExactDivision
        when the division leaves a remainder.  Since x is a unit here,
        the division normalises both operands to ordinary polynomials
        with nonzero constant term and long-divides those.
        """
        if not isinstance(den, LaurentPoly):
            raise TypeError("divisor must be a LaurentPoly")
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly()
        nlo, nhi = self.min_exp, self.max_exp
        dlo, dhi = den.min_exp, den.max_exp
        num = [self.coeff(k) for k in range(nlo, nhi + 1)]
        div = [den.coeff(k) for k in range(dlo, dhi + 1)]
        if len(num) < len(div):
            raise NonExactDivision("divisor support is wider than dividend")
        lead_inv = div[-1].inverse()
        quot = [ZERO] * (len(num) - len(div) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = num[i + len(div) - 1] * lead_inv
            quot[i] = c
            if c:
                for j, d in enumerate(div):
                    num[i + j] = num[i + j] - c * d
        if any(num[: len(div) - 1]):
            raise NonExactDivision("nonzero remainder")
        offset = nlo - dlo
        return LaurentPoly._clean({offset + i: c for i, c in enumerate(quot)})

    def substitute_scale(self, c: Scalar) -> "LaurentPoly":
        """p(x) -> p(c*x) for an invertible scalar c."""
        w = _coerce(c)
        if not w:
            raise ZeroDivisionError("scale factor must be invertible")
        if not self._c:
            return LaurentPoly()
        exps = sorted(self._c)
        pw = w ** exps[0]
        out = {}
        prev = exps[0]
        for k in exps:
            pw = pw * w ** (k - prev)
            prev = k
            out[k] = self._c[k] * pw
        return LaurentPoly._clean(out)

    def invert_x(self) -> "LaurentPoly":
        """p(x) -> p(1/x); an involution on the support."""
        return LaurentPoly._clean({-k: v for k, v in self._c.items()})

    def eval_at(self, x0: Scalar) -> QsElem:
        """Exact value at a nonzero point of Q(s)."""
        w = _coerce(x0)
        if not w:
            raise EvalAtZero("Laurent polynomial evaluated at x = 0")
        if not self._c:
            return ZERO
        exps = sorted(self._c)
        pw = w ** exps[0]
        acc = ZERO
        prev = exps[0]
        for k in exps:
            pw = pw * w ** (k - prev)
            prev = k
            acc = acc + self._c[k] * pw
        return acc

    def euler_d(self) -> "LaurentPoly":
        """Euler derivative x * d/dx: multiplies each term by its exponent."""
        return LaurentPoly._clean({k: v * k for k, v in self._c.items()})

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        bits = []
        for k, v in self.terms():
            if k == 0:
                bits.append(f"({v})")
            elif k == 1:
                bits.append(f"({v})*x")
            else:
                bits.append(f"({v})*x^{k}")
        return "LaurentPoly[" + " + ".join(bits) + "]"
