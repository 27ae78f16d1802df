"""Exact arithmetic in the cyclotomic field Q(zeta_12).

An element is stored as ``(a0 + a1*z + a2*z^2 + a3*z^3) / d`` with integer
``a_i``, a positive integer ``d`` and ``gcd(a0, a1, a2, a3, d) == 1``, where
``z`` is a primitive 12th root of unity.  Products are reduced with the
minimal polynomial ``z^4 - z^2 + 1``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

from .errors import CycloDivisionByZero

__all__ = [
    "Cyclo",
    "ZERO",
    "ONE",
    "ZETA",
    "I",
    "XI3",
    "as_cyclo",
    "root_of_unity",
]

# z^e for e = 0..11 in the power basis {1, z, z^2, z^3}
_POWERS = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (-1, 0, 0, 0),
    (0, -1, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, -1),
    (1, 0, -1, 0),
    (0, 1, 0, -1),
)


def _normalize(a0, a1, a2, a3, d):
    if d < 0:
        a0, a1, a2, a3, d = -a0, -a1, -a2, -a3, -d
    g = gcd(a0, a1, a2, a3, d)
    if g != 1:
        a0 //= g
        a1 //= g
        a2 //= g
        a3 //= g
        d //= g
    return a0, a1, a2, a3, d


def _galois(c, j):
    """Image of the numerator tuple ``c`` under z -> z^j."""
    out = [0, 0, 0, 0]
    for i, ci in enumerate(c):
        if ci:
            p = _POWERS[(i * j) % 12]
            for t in range(4):
                if p[t]:
                    out[t] += ci * p[t]
    return out


class Cyclo:
    """An element of Q(zeta_12); immutable and hashable."""

    __slots__ = ("_a", "_d")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        fr = [Fraction(c) for c in (c0, c1, c2, c3)]
        d = 1
        for f in fr:
            d = d * f.denominator // gcd(d, f.denominator)
        nums = [f.numerator * (d // f.denominator) for f in fr]
        a0, a1, a2, a3, d = _normalize(nums[0], nums[1], nums[2], nums[3], d)
        self._a = (a0, a1, a2, a3)
        self._d = d

    @classmethod
    def _raw(cls, a0, a1, a2, a3, d):
        obj = object.__new__(cls)
        a0, a1, a2, a3, d = _normalize(a0, a1, a2, a3, d)
        obj._a = (a0, a1, a2, a3)
        obj._d = d
        return obj

    @classmethod
    def _int(cls, v):
        obj = object.__new__(cls)
        obj._a = (v, 0, 0, 0)
        obj._d = 1
        return obj

    # -- accessors -------------------------------------------------------

    @property
    def coefficients(self):
        """The four rational coordinates in the basis 1, z, z^2, z^3."""
        d = self._d
        return tuple(Fraction(a, d) for a in self._a)

    @property
    def numerators(self):
        return self._a

    @property
    def denominator(self):
        return self._d

    def is_rational(self):
        a = self._a
        return a[1] == 0 and a[2] == 0 and a[3] == 0

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._a[0], self._d)

    # -- field operations ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Cyclo):
            other = as_cyclo(other, strict=False)
            if other is NotImplemented:
                return NotImplemented
        a, b = self._a, other._a
        d1, d2 = self._d, other._d
        if d1 == d2:
            return Cyclo._raw(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], d1)
        return Cyclo._raw(
            a[0] * d2 + b[0] * d1,
            a[1] * d2 + b[1] * d1,
            a[2] * d2 + b[2] * d1,
            a[3] * d2 + b[3] * d1,
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self):
        a = self._a
        obj = object.__new__(Cyclo)
        obj._a = (-a[0], -a[1], -a[2], -a[3])
        obj._d = self._d
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Cyclo):
            other = as_cyclo(other, strict=False)
            if other is NotImplemented:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            if isinstance(other, int):
                a = self._a
                return Cyclo._raw(a[0] * other, a[1] * other, a[2] * other, a[3] * other, self._d)
            other = as_cyclo(other, strict=False)
            if other is NotImplemented:
                return NotImplemented
        a, b = self._a, other._a
        d = self._d * other._d
        if b[1] == 0 and b[2] == 0 and b[3] == 0:
            s = b[0]
            return Cyclo._raw(a[0] * s, a[1] * s, a[2] * s, a[3] * s, d)
        if a[1] == 0 and a[2] == 0 and a[3] == 0:
            s = a[0]
            return Cyclo._raw(b[0] * s, b[1] * s, b[2] * s, b[3] * s, d)
        p0 = a[0] * b[0]
        p1 = a[0] * b[1] + a[1] * b[0]
        p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        p3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        p4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
        p5 = a[2] * b[3] + a[3] * b[2]
        p6 = a[3] * b[3]
        # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        return Cyclo._raw(p0 - p4 - p6, p1 - p5, p2 + p4, p3 + p5, d)

    __rmul__ = __mul__

    def norm(self):
        """Field norm to Q, the product of the four Galois conjugates."""
        prod = Cyclo._raw(*self._a, 1)
        for j in (5, 7, 11):
            prod = prod * Cyclo._raw(*_galois(self._a, j), 1)
        return Fraction(prod._a[0], self._d ** 4)

    def inverse(self):
        if not self:
            raise CycloDivisionByZero("division by zero in Q(zeta_12)")
        a = self._a
        if a[1] == 0 and a[2] == 0 and a[3] == 0:
            return Cyclo._raw(self._d, 0, 0, 0, a[0])
        # a^{-1} = (product of the other conjugates) / N(a)
        rest = Cyclo._raw(*_galois(a, 5), 1)
        rest = rest * Cyclo._raw(*_galois(a, 7), 1)
        rest = rest * Cyclo._raw(*_galois(a, 11), 1)
        n = (Cyclo._raw(*a, 1) * rest)._a[0]
        r = rest._a
        # (a/d)^{-1} = d * rest / n
        d = self._d
        return Cyclo._raw(r[0] * d, r[1] * d, r[2] * d, r[3] * d, n)

    def __truediv__(self, other):
        if not isinstance(other, Cyclo):
            other = as_cyclo(other, strict=False)
            if other is NotImplemented:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_cyclo(other) * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self):
        """Complex conjugation, z -> z^11."""
        return Cyclo._raw(*_galois(self._a, 11), self._d)

    def is_real(self):
        return self.conjugate() == self

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self._a == other._a and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == Cyclo(other)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._a[0], self._d))
        return hash((self._a, self._d))

    def __bool__(self):
        a = self._a
        return bool(a[0] or a[1] or a[2] or a[3])

    # -- rendering -------------------------------------------------------

    def to_complex(self):
        """Floating point value, for display only."""
        z = cmath.exp(2j * cmath.pi / 12)
        return sum(a * z**i for i, a in enumerate(self._a)) / self._d

    def to_json(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    @classmethod
    def from_json(cls, data):
        if len(data) != 4:
            raise ValueError("a Cyclo is serialized as four rationals")
        return cls(*(Fraction(s) for s in data))

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self._a[0], self._d))
        parts = []
        names = ("", "z", "z^2", "z^3")
        for c, name in zip(self.coefficients, names):
            if not c:
                continue
            if not name:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{c}*{name}")
        s = " + ".join(parts).replace("+ -", "- ")
        return f"({s})"

    def __repr__(self):
        return f"Cyclo({', '.join(str(c) for c in self.coefficients)})"


def as_cyclo(value, strict=True):
    if isinstance(value, Cyclo):
        return value
    if isinstance(value, int):
        return Cyclo._int(value)
    if isinstance(value, (Fraction, str)):
        return Cyclo(value)
    if strict:
        raise TypeError(f"cannot interpret {value!r} as an element of Q(zeta_12)")
    return NotImplemented


def root_of_unity(e):
    """zeta_12 ** e."""
    return Cyclo._raw(*_POWERS[e % 12], 1)


ZERO = Cyclo._int(0)
ONE = Cyclo._int(1)
ZETA = root_of_unity(1)
I = root_of_unity(3)
XI3 = root_of_unity(4)
