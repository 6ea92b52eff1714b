"""Ties, dots and tuplets over either semiring, and the ASD <-> RSD morphism.

Every modifier dispatches on the type of its argument, so ``tie(AsdValue(8),
AsdValue(8))`` concatenates in ASD while the same call on RsdValues adds.
Mixing the two raises TypeError.
"""
from __future__ import annotations

from dataclasses import dataclass

from durion.errors import DomainError
from durion.numeric import INF, Rational, RationalLike
from durion.semiring import AsdValue, RsdValue, same_semiring, semiring_of

__all__ = [
    "ReferenceDelta",
    "QUARTER",
    "morph",
    "morph_inv",
    "tie",
    "dot",
    "tuplet",
    "repeat",
    "as_rsd",
    "as_asd",
]


@dataclass(frozen=True, slots=True)
class ReferenceDelta:
    """Reference note for RSD values, written as its ASD numeral (quarter = 4)."""

    delta: Rational

    def __post_init__(self):
        delta = Rational.coerce(self.delta)
        if delta.is_zero or delta.is_infinite:
            raise DomainError(f"reference delta must be positive and finite, got {delta}")
        object.__setattr__(self, "delta", delta)

    @classmethod
    def coerce(cls, value) -> ReferenceDelta:
        return value if isinstance(value, ReferenceDelta) else cls(value)

    def __str__(self):
        return str(self.delta)


QUARTER = ReferenceDelta(4)


def morph(x: AsdValue, delta=QUARTER) -> RsdValue:
    """Map an ASD value to RSD units relative to ``delta``: ``delta / x``.

    >>> str(morph(AsdValue(6)))
    '2/3'
    """
    if not isinstance(x, AsdValue):
        raise TypeError(f"morph expects an AsdValue, got {type(x).__name__}")
    return RsdValue(ReferenceDelta.coerce(delta).delta / x.value)


def morph_inv(x: RsdValue, delta=QUARTER) -> AsdValue:
    if not isinstance(x, RsdValue):
        raise TypeError(f"morph_inv expects an RsdValue, got {type(x).__name__}")
    if x.value.is_zero:
        return AsdValue(INF)
    return AsdValue(ReferenceDelta.coerce(delta).delta / x.value)


def tie(a, b):
    return same_semiring(a, b).otimes(a, b)


def dot(a, n: int = 1):
    """Prolong ``a`` by ``n`` dots.

    Unrolls ``dot(a, k+1) = repeat(a, 1/2**(k+1)) (x) dot(a, k)`` from
    ``dot(a, 0) = a``, using the repeat and concatenation of a's semiring.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"dot count must be a non-negative integer, got {n!r}")
    s = semiring_of(a)
    result = a
    for k in range(n):
        result = s.otimes(s.repeat(a, Rational(1, 2 ** (k + 1))), result)
    return result


def tuplet(a, gamma: int):
    """Duration of one note of a ``gamma``-tuplet played in the time of two ``a``."""
    if isinstance(gamma, bool) or not isinstance(gamma, int) or gamma < 3:
        raise DomainError(f"tuplet gamma must be an integer >= 3, got {gamma!r}")
    return semiring_of(a).repeat(a, Rational(2, gamma))


def repeat(a, n: RationalLike):
    return semiring_of(a).repeat(a, n)


def as_rsd(x, delta=QUARTER) -> RsdValue:
    """Bring a value of either semiring into RSD units."""
    if isinstance(x, RsdValue):
        return x
    return morph(x, delta)


def as_asd(x, delta=QUARTER) -> AsdValue:
    if isinstance(x, AsdValue):
        return x
    return morph_inv(x, delta)

