"""Exact Gaussian-rational scalars for the dual exact/float arithmetic modes.

Rank and membership decisions are discontinuous, so classification defaults
to exact arithmetic over the field Q(i) of Gaussian rationals, implemented by
:class:`QQi`.  Probabilities and spectra are continuous and use ordinary
complex floats.  Mixing the two modes in arithmetic raises :class:`ModeError`;
the only sanctioned crossing is the explicit downcast ``complex(q)``.
"""

from __future__ import annotations

from fractions import Fraction


class ModeError(TypeError):
    """Raised when exact and floating-point data are mixed implicitly."""


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float) or isinstance(value, complex):
        raise ModeError(
            "floating-point value used where an exact rational is required; "
            "convert explicitly or switch to float mode"
        )
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rational_from_string(text):
    """Parse 'p/q' or 'p' into a Fraction (integers may be arbitrarily large)."""
    return Fraction(text.strip())


def format_rational(value):
    """Render a Fraction as 'p' or 'p/q'."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


class QQi:
    """A Gaussian rational re + im*i with arbitrary-precision components.

    Instances are immutable values.  Arithmetic with ``int`` and ``Fraction``
    promotes them exactly; arithmetic with floats raises :class:`ModeError`.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QQi values are immutable")

    # -- conversions ------------------------------------------------------

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self):
        return QQi(self.re, -self.im)

    def abs2(self):
        """|z|^2 as an exact Fraction."""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self):
        return not self.re and not self.im

    @property
    def is_real(self):
        return not self.im

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QQi):
            return other
        if isinstance(other, (int, Fraction)):
            return QQi(other)
        if isinstance(other, (float, complex)):
            raise ModeError(
                "cannot mix QQi with floating-point values; downcast with complex()"
            )
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QQi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QQi(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QQi(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QQi(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        denom = other.abs2()
        if not denom:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi(
            (self.re * other.re + self.im * other.im) / denom,
            (self.im * other.re - self.re * other.im) / denom,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return QQI_ONE / (self ** (-exponent))
        result = QQI_ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QQi(other)
        if isinstance(other, QQi):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        if not self.im:
            return format_rational(self.re)
        if not self.re:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"


QQI_ZERO = QQi(0)
QQI_ONE = QQi(1)
QQI_I = QQi(0, 1)


def is_exact_scalar(value):
    return isinstance(value, (QQi, int, Fraction))


def to_qqi(value):
    """Coerce an exact scalar (int, Fraction, QQi) to QQi."""
    if isinstance(value, QQi):
        return value
    return QQi(value)
