"""The two duration semirings.

ASD (absolute symbolic duration) lives on Q+ u {inf} with ``min`` as the
selection and the harmonic combination ``ab / (a + b)`` as concatenation;
quarter = 4, eighth = 8, grace = inf.  RSD (relative symbolic duration) lives
on Q+ u {0} with ``max`` and ``+``; values are multiples of a reference note.

Neither structure is asked to have an absorbing zero, and the value types do
not define ``<``: the min-induced natural order and the "is shorter than"
order run in opposite directions on ASD, so both are separate functions.
"""
from __future__ import annotations

import abc
from dataclasses import dataclass
from functools import reduce

from durion.errors import DomainError
from durion.numeric import INF, ZERO, Rational, RationalLike

__all__ = [
    "AsdValue",
    "RsdValue",
    "Semiring",
    "ASD",
    "RSD",
    "asd_oplus",
    "asd_otimes",
    "asd_repeat",
    "rsd_oplus",
    "rsd_otimes",
    "rsd_repeat",
    "natural_leq",
    "duration_lt",
    "semiring_of",
]


@dataclass(frozen=True, slots=True)
class AsdValue:
    value: Rational

    def __post_init__(self):
        value = Rational.coerce(self.value)
        if value.is_zero:
            raise DomainError("0 is not an ASD duration (the null duration is inf)")
        object.__setattr__(self, "value", value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, slots=True)
class RsdValue:
    value: Rational

    def __post_init__(self):
        value = Rational.coerce(self.value)
        if value.is_infinite:
            raise DomainError("inf is not an RSD duration (the null duration is 0)")
        object.__setattr__(self, "value", value)

    def __str__(self):
        return str(self.value)


def _scalar(n: RationalLike) -> Rational:
    n = Rational.coerce(n)
    if n.is_zero or n.is_infinite:
        raise DomainError(f"repeat scalar must be positive and finite, got {n}")
    return n


def asd_oplus(a: AsdValue, b: AsdValue) -> AsdValue:
    return a if a.value <= b.value else b


def asd_otimes(a: AsdValue, b: AsdValue) -> AsdValue:
    if a.value.is_infinite:
        return b
    if b.value.is_infinite:
        return a
    x, y = a.value, b.value
    return AsdValue(x * y / (x + y))


def asd_repeat(a: AsdValue, n: RationalLike) -> AsdValue:
    return AsdValue(a.value / _scalar(n))


def rsd_oplus(a: RsdValue, b: RsdValue) -> RsdValue:
    return a if a.value >= b.value else b


def rsd_otimes(a: RsdValue, b: RsdValue) -> RsdValue:
    return RsdValue(a.value + b.value)


def rsd_repeat(a: RsdValue, n: RationalLike) -> RsdValue:
    return RsdValue(a.value * _scalar(n))


class Semiring(abc.ABC):
    """Common interface of the two duration semirings.

    ``zero`` is the identity of ``oplus`` and ``one`` the neutral element of
    ``otimes``; ``one`` is not required to absorb anything.
    """

    name: str
    value_type: type

    @abc.abstractmethod
    def oplus(self, a, b): ...

    @abc.abstractmethod
    def otimes(self, a, b): ...

    @abc.abstractmethod
    def repeat(self, a, n: RationalLike): ...

    @property
    @abc.abstractmethod
    def zero(self): ...

    @property
    @abc.abstractmethod
    def one(self): ...

    def element(self, value: RationalLike):
        return self.value_type(value)

    def sum(self, values):
        """Fold ``oplus`` over values (the identity for an empty input)."""
        return reduce(self.oplus, values, self.zero)

    def product(self, values):
        """Fold ``otimes`` over values (the neutral element for an empty input)."""
        return reduce(self.otimes, values, self.one)

    def __repr__(self):
        return self.name


class AbsoluteSemiring(Semiring):
    name = "ASD"
    value_type = AsdValue

    def oplus(self, a, b):
        return asd_oplus(a, b)

    def otimes(self, a, b):
        return asd_otimes(a, b)

    def repeat(self, a, n):
        return asd_repeat(a, n)

    @property
    def zero(self):
        return AsdValue(INF)

    @property
    def one(self):
        return AsdValue(INF)


class RelativeSemiring(Semiring):
    name = "RSD"
    value_type = RsdValue

    def oplus(self, a, b):
        return rsd_oplus(a, b)

    def otimes(self, a, b):
        return rsd_otimes(a, b)

    def repeat(self, a, n):
        return rsd_repeat(a, n)

    @property
    def zero(self):
        return RsdValue(ZERO)

    @property
    def one(self):
        return RsdValue(ZERO)


ASD = AbsoluteSemiring()
RSD = RelativeSemiring()


def semiring_of(value) -> Semiring:
    if isinstance(value, AsdValue):
        return ASD
    if isinstance(value, RsdValue):
        return RSD
    raise TypeError(f"{value!r} is neither an AsdValue nor an RsdValue")


def same_semiring(a, b) -> Semiring:
    s = semiring_of(a)
    if semiring_of(b) is not s:
        raise TypeError(f"cannot combine {type(a).__name__} with {type(b).__name__}")
    return s


def natural_leq(s: Semiring, x, y) -> bool:
    """``x <= y`` in the order induced by ``oplus``: ``x + y == x``."""
    return s.oplus(x, y) == x


def duration_lt(a, b) -> bool:
    """True iff ``a`` denotes a strictly shorter duration than ``b``."""
    s = same_semiring(a, b)
    if s is ASD:
        return a.value > b.value
    return a.value < b.value

