"""Exact non-negative rationals with a tagged infinity point.

Finite values are backed by :class:`fractions.Fraction`, which already keeps
numerator and denominator in lowest terms with arbitrary-precision integers.
Infinity is a separate tag rather than a ``1/0`` sentinel.
"""
from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from functools import reduce
from typing import Union

from durion import instrument
from durion.errors import DomainError, UndefinedFormError

__all__ = [
    "Rational",
    "Ordering",
    "INF",
    "ZERO",
    "ONE",
    "rat_make",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "rat_cmp",
    "rat_gcd",
    "rat_gcd_all",
]

RationalLike = Union["Rational", int, Fraction, str]

_TEXT_RE = re.compile(r"\s*(?:(?P<inf>inf)|(?P<num>\d+)(?:/(?P<den>\d+))?)\s*")


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Rational:
    """A value of Q+ u {0} u {inf}.

    >>> Rational(6, 12)
    Rational(1, 2)
    >>> str(Rational(8, 3)), str(Rational(4)), str(INF)
    ('8/3', '4', 'inf')
    """

    __slots__ = ("_q",)

    def __init__(self, numerator: int = 0, denominator: int = 1):
        for part in (numerator, denominator):
            if isinstance(part, bool) or not isinstance(part, int):
                raise TypeError(f"Rational parts must be int, got {type(part).__name__}")
        if denominator == 0:
            raise DomainError("denominator must be positive (use INF for infinity)")
        if denominator < 0 or numerator < 0:
            raise DomainError(f"negative rationals are not representable: {numerator}/{denominator}")
        self._q: Fraction | None = Fraction(numerator, denominator)

    @classmethod
    def _wrap(cls, q: Fraction | None) -> Rational:
        obj = object.__new__(cls)
        obj._q = q
        return obj

    @classmethod
    def from_fraction(cls, q: Fraction) -> Rational:
        if q < 0:
            raise DomainError(f"negative rationals are not representable: {q}")
        return cls._wrap(Fraction(q))

    @classmethod
    def infinity(cls) -> Rational:
        return INF

    @classmethod
    def parse(cls, text: str) -> Rational:
        """Parse ``p/q``, ``p`` or ``inf``."""
        m = _TEXT_RE.fullmatch(text)
        if m is None:
            raise DomainError(f"not a non-negative rational: {text!r}")
        if m["inf"]:
            return INF
        return cls(int(m["num"]), int(m["den"]) if m["den"] else 1)

    @classmethod
    def coerce(cls, value: RationalLike) -> Rational:
        if isinstance(value, Rational):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a rational")
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a Rational")

    @property
    def is_infinite(self) -> bool:
        return self._q is None

    @property
    def is_finite(self) -> bool:
        return self._q is not None

    @property
    def is_zero(self) -> bool:
        return self._q == 0

    @property
    def is_integer(self) -> bool:
        return self._q is not None and self._q.denominator == 1

    @property
    def numerator(self) -> int:
        return 1 if self._q is None else self._q.numerator

    @property
    def denominator(self) -> int:
        return 1 if self._q is None else self._q.denominator

    def to_fraction(self) -> Fraction:
        if self._q is None:
            raise DomainError("infinity has no fraction form")
        return self._q

    def to_decimal(self, places: int = 6) -> str:
        """Display-only decimal rendering, never used in computation."""
        if self._q is None:
            return "inf"
        scaled = self._q.numerator * 10**places // self._q.denominator
        whole, frac = divmod(scaled, 10**places)
        if places == 0:
            return str(whole)
        return f"{whole}.{frac:0{places}d}".rstrip("0").rstrip(".")

    def __str__(self):
        if self._q is None:
            return "inf"
        if self._q.denominator == 1:
            return str(self._q.numerator)
        return f"{self._q.numerator}/{self._q.denominator}"

    def __repr__(self):
        if self._q is None:
            return "INF"
        return f"Rational({self._q.numerator}, {self._q.denominator})"

    def __hash__(self):
        return hash(math.inf) if self._q is None else hash(self._q)

    def __eq__(self, other):
        if not isinstance(other, Rational):
            try:
                other = Rational.coerce(other)
            except (TypeError, DomainError):
                return NotImplemented
        return self._q == other._q

    def __lt__(self, other):
        return rat_cmp(self, _operand(other)) is Ordering.LESS

    def __le__(self, other):
        return rat_cmp(self, _operand(other)) is not Ordering.GREATER

    def __gt__(self, other):
        return rat_cmp(self, _operand(other)) is Ordering.GREATER

    def __ge__(self, other):
        return rat_cmp(self, _operand(other)) is not Ordering.LESS

    def __add__(self, other):
        return rat_add(self, _operand(other))

    __radd__ = __add__

    def __mul__(self, other):
        return rat_mul(self, _operand(other))

    __rmul__ = __mul__

    def __sub__(self, other):
        return rat_sub(self, _operand(other))

    def __rsub__(self, other):
        return rat_sub(_operand(other), self)

    def __truediv__(self, other):
        return rat_div(self, _operand(other))

    def __rtruediv__(self, other):
        return rat_div(_operand(other), self)

    def __reduce__(self):
        if self._q is None:
            return (Rational.infinity, ())
        return (Rational, (self._q.numerator, self._q.denominator))


def _operand(value) -> Rational:
    return Rational.coerce(value)


INF = Rational._wrap(None)
ZERO = Rational(0)
ONE = Rational(1)


def rat_make(num: int, den: int) -> Rational:
    return Rational(num, den)


def rat_add(a: Rational, b: Rational) -> Rational:
    if a._q is None or b._q is None:
        return INF
    return Rational._wrap(a._q + b._q)


def rat_sub(a: Rational, b: Rational) -> Rational:
    if a._q is None or b._q is None:
        raise UndefinedFormError(f"subtraction involving infinity: {a} - {b}")
    if a._q < b._q:
        raise DomainError(f"{a} - {b} would be negative")
    return Rational._wrap(a._q - b._q)


def rat_mul(a: Rational, b: Rational) -> Rational:
    if a._q is None or b._q is None:
        if a.is_zero or b.is_zero:
            raise UndefinedFormError("0 * inf is undefined")
        return INF
    return Rational._wrap(a._q * b._q)


def rat_div(a: Rational, b: Rational) -> Rational:
    if b.is_zero:
        raise DomainError(f"division by zero: {a} / 0")
    if b._q is None:
        if a._q is None:
            raise UndefinedFormError("inf / inf is undefined")
        return ZERO
    if a._q is None:
        return INF
    return Rational._wrap(a._q / b._q)


def rat_cmp(a: Rational, b: Rational) -> Ordering:
    if a._q is None:
        return Ordering.EQUAL if b._q is None else Ordering.GREATER
    if b._q is None:
        return Ordering.LESS
    if a._q == b._q:
        return Ordering.EQUAL
    return Ordering.LESS if a._q < b._q else Ordering.GREATER


def rat_gcd(a: Rational, b: Rational) -> Rational:
    """Largest rational dividing both arguments into integers.

    For ``p1/q1`` and ``p2/q2`` in lowest terms this is
    ``gcd(p1, p2) / lcm(q1, q2)``; ``gcd(x, 0) == x``.

    >>> str(rat_gcd(Rational(1, 2), Rational(2, 3)))
    '1/6'
    """
    if a.is_infinite or b.is_infinite:
        raise DomainError("gcd is undefined for infinite arguments")
    if a.is_zero and b.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    instrument.counters["gcd"] += 1
    num = math.gcd(a.numerator, b.numerator)
    den = math.lcm(a.denominator, b.denominator)
    return Rational(num, den)


def rat_gcd_all(values) -> Rational:
    values = list(values)
    if not values:
        raise DomainError("gcd of an empty collection")
    return reduce(rat_gcd, values)
