from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from ..core.exceptions import FormatError, InputError, NotDyadicError, NotPowerOfTwoError

Number = Union[int, Fraction]

_DYADIC_TEXT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def as_exact(value: Number) -> Fraction:
    """
    Return `value` as a Dyadic when its denominator is a power of two, else as a Fraction.

    Args:
        value (int | Fraction): Exact number.

    Returns:
        Fraction: A `Dyadic` instance when possible, otherwise a plain `Fraction`.
    """
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, (int, Fraction)) and is_power_of_two(Fraction(value).denominator):
        return Dyadic(value)
    return value


class Dyadic(Fraction):
    """
    Exact element of Z[1/2]: numerator / 2**exponent, stored in lowest terms.

    A thin subclass of `Fraction` that refuses denominators that are not powers
    of two. Text is accepted only as "p/q" or an integer; decimal notation is not. Ring operations with ints or other dyadics stay dyadic; division and
    mixing with general fractions fall back to `Fraction` when the result leaves Z[1/2].
    """
    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        if isinstance(numerator, float) or isinstance(denominator, float):
            raise NotDyadicError("floating point values are not accepted")
        if isinstance(numerator, str):
            if denominator is not None:
                raise FormatError("a text value takes no separate denominator")
            numerator = parse_rational(numerator)
        try:
            self = super().__new__(cls, numerator, denominator)
        except (ValueError, ZeroDivisionError) as exc:
            raise NotDyadicError(f"invalid dyadic {numerator!r}: {exc}") from exc
        if not is_power_of_two(self.denominator):
            raise NotDyadicError(f"{Fraction(self)} is not a dyadic rational")
        return self

    @property
    def exponent(self) -> int:
        """k such that value = numerator / 2**k."""
        return self.denominator.bit_length() - 1

    def __repr__(self):
        return f"Dyadic({self})"

    def __add__(self, other):
        return as_exact(Fraction.__add__(self, other))

    def __radd__(self, other):
        return as_exact(Fraction.__radd__(self, other))

    def __sub__(self, other):
        return as_exact(Fraction.__sub__(self, other))

    def __rsub__(self, other):
        return as_exact(Fraction.__rsub__(self, other))

    def __mul__(self, other):
        return as_exact(Fraction.__mul__(self, other))

    def __rmul__(self, other):
        return as_exact(Fraction.__rmul__(self, other))

    def __truediv__(self, other):
        return as_exact(Fraction.__truediv__(self, other))

    def __rtruediv__(self, other):
        return as_exact(Fraction.__rtruediv__(self, other))

    def __neg__(self):
        return Dyadic(Fraction.__neg__(self))

    def __pos__(self):
        return self

    def __abs__(self):
        return Dyadic(Fraction.__abs__(self))


def compare(a: Number, b: Number) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return (a > b) - (a < b)


def slope_exponent(dx: Number, dy: Number) -> int:
    """
    Return e with dy/dx == 2**e exactly.

    Args:
        dx (Number): Positive run of a segment.
        dy (Number): Positive rise of a segment.

    Returns:
        int: The exponent e.

    Raises:
        InputError: If dx or dy is not positive.
        NotPowerOfTwoError: If dy/dx is not an integral power of two.
    """
    if dx <= 0 or dy <= 0:
        raise InputError(f"segment extents must be positive, got dx={dx}, dy={dy}")
    ratio = Fraction(dy) / Fraction(dx)
    if ratio.denominator == 1 and is_power_of_two(ratio.numerator):
        return ratio.numerator.bit_length() - 1
    if ratio.numerator == 1 and is_power_of_two(ratio.denominator):
        return -(ratio.denominator.bit_length() - 1)
    raise NotPowerOfTwoError(f"slope {ratio} is not an integral power of two")


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" (any positive q) or a bare integer.

    Raises:
        FormatError: If the text is not of that form or q is zero.
    """
    match = _DYADIC_TEXT.match(text)
    if not match:
        raise FormatError(f"'{text}' is not of the form p/q or an integer")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise FormatError(f"'{text}' has a zero denominator")
    return Fraction(int(numerator), int(denominator or 1))


def parse_dyadic(text: str) -> Dyadic:
    """
    Parse "p/q" with q a power of two, or a bare integer.

    Raises:
        FormatError: If the text is malformed.
        NotDyadicError: If q is not a power of two.
    """
    return Dyadic(parse_rational(text))
