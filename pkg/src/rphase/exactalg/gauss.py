"""Gaussian rationals a + b*i with exact gmpy2 rational parts."""

from __future__ import annotations

from numbers import Rational

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)


def to_mpq(value) -> mpq:
    if isinstance(value, type(_ZERO)):
        return value
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Rational):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value)
    raise TypeError(f"cannot convert {value!r} to an exact rational")


class GaussQ:
    """Immutable Gaussian rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_mpq(re))
        object.__setattr__(self, "im", to_mpq(im))

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussQ":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussQ is immutable")

    def __reduce__(self):
        return (GaussQ, (self.re, self.im))

    @staticmethod
    def coerce(value) -> "GaussQ":
        if isinstance(value, GaussQ):
            return value
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        return GaussQ._raw(to_mpq(value), _ZERO)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussQ":
        return GaussQ._raw(-self.re, -self.im)

    def __add__(self, other) -> "GaussQ":
        other = GaussQ.coerce(other)
        return GaussQ._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussQ":
        other = GaussQ.coerce(other)
        return GaussQ._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussQ":
        return GaussQ.coerce(other) - self

    def __mul__(self, other) -> "GaussQ":
        other = GaussQ.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussQ._raw(a * c, _ZERO)
        return GaussQ._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussQ":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussQ._raw(self.re / norm, -self.im / norm)

    def __truediv__(self, other) -> "GaussQ":
        return self * GaussQ.coerce(other).inverse()

    def __rtruediv__(self, other) -> "GaussQ":
        return GaussQ.coerce(other) * self.inverse()

    def conjugate(self) -> "GaussQ":
        return GaussQ._raw(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def __repr__(self) -> str:
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self) -> str:
        return render_gauss(self)


def _rat_str(q: mpq) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_gauss(c: GaussQ) -> str:
    if not c.im:
        return _rat_str(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{_rat_str(c.im)}*i"
    sign = "+" if c.im > 0 else "-"
    mag = abs(c.im)
    im = "i" if mag == 1 else f"{_rat_str(mag)}*i"
    return f"({_rat_str(c.re)} {sign} {im})"


ZERO = GaussQ._raw(_ZERO, _ZERO)
ONE = GaussQ._raw(_ONE, _ZERO)
I_UNIT = GaussQ._raw(_ZERO, _ONE)
