"""Exact complex scalars for the rational computation path.

The float path of the toolbox uses plain ``complex`` / ``numpy.complex128``.
The exact path uses :class:`ExactScalar`: complex numbers whose real and
imaginary parts live in the quadratic field Q(sqrt 3), i.e. values
``(a + b*sqrt3) + i*(c + d*sqrt3)`` with rational a, b, c, d.  Plain
Gaussian rationals are the b = d = 0 subring; the sqrt-3 part is needed to
represent spin-coupled eigenstate coefficients exactly.

All toolbox code treats scalars generically through ``+``, ``*``, unary
minus and ``.conjugate()``, so ``int``, ``Fraction``, ``complex`` and
``ExactScalar`` coefficients can all be used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import DomainError

_SQRT3 = math.sqrt(3.0)

RationalLike = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


class ExactScalar:
    """Complex number with components a + b*sqrt(3), a and b rational."""

    __slots__ = ("ra", "rb", "ia", "ib")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0,
                 re_sqrt3: RationalLike = 0, im_sqrt3: RationalLike = 0):
        self.ra = _as_fraction(re)
        self.rb = _as_fraction(re_sqrt3)
        self.ia = _as_fraction(im)
        self.ib = _as_fraction(im_sqrt3)

    @classmethod
    def _coerce(cls, x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ExactScalar(self.ra + o.ra, self.ia + o.ia,
                           self.rb + o.rb, self.ib + o.ib)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.ra, -self.ia, -self.rb, -self.ib)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # component product in Q(sqrt3): (a+b s)(c+d s) = (ac+3bd) + (ad+bc) s
        re_a = (self.ra * o.ra + 3 * self.rb * o.rb) - (self.ia * o.ia + 3 * self.ib * o.ib)
        re_b = (self.ra * o.rb + self.rb * o.ra) - (self.ia * o.ib + self.ib * o.ia)
        im_a = (self.ra * o.ia + 3 * self.rb * o.ib) + (self.ia * o.ra + 3 * self.ib * o.rb)
        im_b = (self.ra * o.ib + self.rb * o.ia) + (self.ia * o.rb + self.ib * o.ra)
        return ExactScalar(re_a, im_a, re_b, im_b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self._inverse()

    def _inverse(self) -> "ExactScalar":
        if not self:
            raise DomainError("division by zero ExactScalar")
        # 1/z = conj(z) / (z conj(z)); the norm lies in Q(sqrt3)
        n = self * self.conjugate()
        assert n.ia == 0 and n.ib == 0
        # invert a + b sqrt3: (a - b sqrt3) / (a^2 - 3 b^2)
        d = n.ra * n.ra - 3 * n.rb * n.rb
        inv_norm = ExactScalar(n.ra / d, 0, -n.rb / d, 0)
        return self.conjugate() * inv_norm

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.ra, -self.ia, self.rb, -self.ib)

    # -- comparisons and conversions ---------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.ra, self.rb, self.ia, self.ib) == (o.ra, o.rb, o.ia, o.ib)

    def __hash__(self):
        if self.rb == 0 and self.ib == 0:
            return hash(complex(self.ra, self.ia)) if self.ia else hash(self.ra)
        return hash((self.ra, self.rb, self.ia, self.ib))

    def __bool__(self):
        return bool(self.ra or self.rb or self.ia or self.ib)

    def __complex__(self):
        return complex(float(self.ra) + float(self.rb) * _SQRT3,
                       float(self.ia) + float(self.ib) * _SQRT3)

    @property
    def is_rational(self) -> bool:
        return self.rb == 0 and self.ib == 0

    def __repr__(self):
        def part(a, b):
            if b == 0:
                return str(a)
            return f"({a}+{b}*sqrt3)"
        if self.ia == 0 and self.ib == 0:
            return f"ExactScalar({part(self.ra, self.rb)})"
        return f"ExactScalar({part(self.ra, self.rb)}+{part(self.ia, self.ib)}i)"


SQRT3 = ExactScalar(0, 0, 1, 0)


def conj(x):
    """Complex conjugate of any supported scalar (int, Fraction, complex, ExactScalar)."""
    return x.conjugate()


def parse_rational(value) -> Fraction:
    """Parse a JSON coefficient component as an exact rational.

    Accepts integers and strings in "p/q" form (also plain integer strings).
    """
    if isinstance(value, bool):
        raise DomainError("boolean is not a valid coefficient component")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"invalid rational string {value!r}") from exc
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise DomainError(f"non-integer float {value!r} not allowed in exact mode")
    raise DomainError(f"invalid coefficient component {value!r}")


def parse_number(value) -> float:
    """Parse a JSON coefficient component as a float (numbers or "p/q" strings)."""
    if isinstance(value, bool):
        raise DomainError("boolean is not a valid coefficient component")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"invalid rational string {value!r}") from exc
    raise DomainError(f"invalid coefficient component {value!r}")
