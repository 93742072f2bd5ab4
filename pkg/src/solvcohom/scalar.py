"""
Exact arithmetic over the Gaussian rationals ℚ(i).

Every coefficient in a complex, a cochain or a structure equation is a
:class:`GaussianRational`, a thin immutable wrapper over one element of
sympy's ``QQ_I`` that reads its parts back as :class:`fractions.Fraction`.
"""

import re
from fractions import Fraction
from typing import Union

from sympy import QQ, QQ_I

from .core.errors import ErrorCode
from .core.exceptions import DivisionByZeroException, ParseException

Number = Union["GaussianRational", Fraction, int]

_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*i)?")


class GaussianRational:
    """An element a + b·i of ℚ(i), stored as one element of sympy's ``QQ_I``."""

    __slots__ = ("_value",)

    def __init__(self, re: Union[Fraction, int] = 0, im: Union[Fraction, int] = 0):
        re, im = Fraction(re), Fraction(im)
        self._value = QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))

    @classmethod
    def _wrap(cls, element) -> "GaussianRational":
        result = cls.__new__(cls)
        result._value = element
        return result

    @property
    def re(self) -> Fraction:
        return _fraction(self._value.x)

    @property
    def im(self) -> Fraction:
        return _fraction(self._value.y)

    @classmethod
    def coerce(cls, value: Number) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: Number) -> "GaussianRational":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational._wrap(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "GaussianRational":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational._wrap(self._value - other._value)

    def __rsub__(self, other: Number) -> "GaussianRational":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Number) -> "GaussianRational":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational._wrap(self._value * other._value)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "GaussianRational":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "GaussianRational":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._wrap(-self._value)

    def __pos__(self) -> "GaussianRational":
        return self

    def __bool__(self) -> bool:
        return bool(self._value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def inverse(self) -> "GaussianRational":
        if not self:
            raise DivisionByZeroException(self)
        return GaussianRational._wrap(QQ_I.revert(self._value))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._wrap(QQ_I(self._value.x, -self._value.y))

    def norm(self) -> Fraction:
        x, y = self._value.x, self._value.y
        return _fraction(x * x + y * y)

    @property
    def is_zero(self) -> bool:
        return not self

    @property
    def is_rational(self) -> bool:
        return not self._value.y

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    # -- sympy bridge ---------------------------------------------------

    def to_domain(self):
        """Element of sympy's ``QQ_I`` with the same value."""
        return self._value

    @classmethod
    def from_domain(cls, element) -> "GaussianRational":
        return cls._wrap(QQ_I.convert(element))

    # -- text -----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse the ``a/b+c/d*i`` grammar produced by :meth:`__str__`."""
        source = text.strip()
        if not source:
            raise ParseException(ErrorCode.PRS001, text=text, column=1)

        real = imag = None
        pos = 0
        while pos < len(source):
            match = _TERM.match(source, pos)
            sign, number, unit = match.groups()
            if match.end() == pos or (number is None and unit is None):
                raise ParseException(ErrorCode.PRS001, text=text, column=pos + 1)
            if pos > 0 and not sign:
                raise ParseException(ErrorCode.PRS001, text=text, column=pos + 1)
            try:
                value = Fraction(number) if number is not None else Fraction(1)
            except ZeroDivisionError:
                raise ParseException(
                    ErrorCode.PRS001, text=text, column=pos + 1
                ) from None
            if sign == "-":
                value = -value
            if unit is None:
                if real is not None:
                    raise ParseException(ErrorCode.PRS001, text=text, column=pos + 1)
                real = value
            else:
                if imag is not None:
                    raise ParseException(ErrorCode.PRS001, text=text, column=pos + 1)
                imag = value
            pos = match.end()
            while pos < len(source) and source[pos].isspace():
                pos += 1
        return cls(real or Fraction(0), imag or Fraction(0))

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            magnitude = abs(self.im)
            body = "i" if magnitude == 1 else f"{magnitude}*i"
            if self.im < 0:
                parts.append(f"-{body}")
            else:
                parts.append(f"+{body}" if parts else body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def _fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _maybe(value) -> "GaussianRational | None":
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GaussianRational(Fraction(value))
    return None


def gr(value: Union[Number, str]) -> GaussianRational:
    """Shorthand constructor accepting ints, fractions and strings."""
    return GaussianRational.coerce(value)


def add(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return a + b


def mul(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return a * b


def inv(a: GaussianRational) -> GaussianRational:
    return a.inverse()


def conj(a: GaussianRational) -> GaussianRational:
    return a.conjugate()
