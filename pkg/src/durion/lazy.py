"""Lazy duration expressions.

A parsed duration is kept as a tree whose leaves are single note symbols
(1, 2, 4, ..., 128) or a grace note, with dots, tuplets, ties and repeats
stored unevaluated.  The tree is folded into ASD or RSD only when a task asks
for a value.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

from durion import instrument
from durion.errors import DomainError
from durion.modifiers import QUARTER, ReferenceDelta, dot, morph, tie, tuplet
from durion.numeric import INF, ZERO, Rational
from durion.semiring import AsdValue, RsdValue, asd_repeat, rsd_repeat

__all__ = [
    "BASE_SYMBOLS",
    "Base",
    "Grace",
    "Dot",
    "Tuplet",
    "Tie",
    "Repeat",
    "DurationExpr",
    "Task",
    "EvalStrategy",
    "eval_asd",
    "eval_rsd",
    "evaluate",
    "choose_strategy",
    "resolve",
    "is_integral_asd",
    "render",
    "parse_expr",
]

BASE_SYMBOLS = frozenset(2**n for n in range(8))


@dataclass(frozen=True)
class Base:
    symbol: int

    def __post_init__(self):
        if isinstance(self.symbol, bool) or self.symbol not in BASE_SYMBOLS:
            raise DomainError(f"base symbol must be one of 1, 2, 4, ..., 128, got {self.symbol!r}")


@dataclass(frozen=True)
class Grace:
    pass


@dataclass(frozen=True)
class Dot:
    inner: DurationExpr
    count: int = 1

    def __post_init__(self):
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            raise DomainError(f"Dot count must be >= 1, got {self.count!r}")


@dataclass(frozen=True)
class Tuplet:
    inner: DurationExpr
    gamma: int

    def __post_init__(self):
        if isinstance(self.gamma, bool) or not isinstance(self.gamma, int) or self.gamma < 3:
            raise DomainError(f"Tuplet gamma must be >= 3, got {self.gamma!r}")


@dataclass(frozen=True)
class Tie:
    left: DurationExpr
    right: DurationExpr


@dataclass(frozen=True)
class Repeat:
    inner: DurationExpr
    scalar: Rational

    def __post_init__(self):
        scalar = Rational.coerce(self.scalar)
        if scalar.is_zero or scalar.is_infinite:
            raise DomainError(f"Repeat scalar must be positive and finite, got {scalar}")
        object.__setattr__(self, "scalar", scalar)


DurationExpr = Union[Base, Grace, Dot, Tuplet, Tie, Repeat]


def _fold_asd(e) -> AsdValue:
    if isinstance(e, Base):
        return AsdValue(e.symbol)
    if isinstance(e, Grace):
        return AsdValue(INF)
    if isinstance(e, Dot):
        return dot(_fold_asd(e.inner), e.count)
    if isinstance(e, Tuplet):
        return tuplet(_fold_asd(e.inner), e.gamma)
    if isinstance(e, Tie):
        return tie(_fold_asd(e.left), _fold_asd(e.right))
    if isinstance(e, Repeat):
        return asd_repeat(_fold_asd(e.inner), e.scalar)
    raise TypeError(f"not a duration expression: {e!r}")


def _fold_rsd(e, delta: ReferenceDelta) -> RsdValue:
    if isinstance(e, Base):
        return morph(AsdValue(e.symbol), delta)
    if isinstance(e, Grace):
        return RsdValue(ZERO)
    if isinstance(e, Dot):
        return dot(_fold_rsd(e.inner, delta), e.count)
    if isinstance(e, Tuplet):
        return tuplet(_fold_rsd(e.inner, delta), e.gamma)
    if isinstance(e, Tie):
        return tie(_fold_rsd(e.left, delta), _fold_rsd(e.right, delta))
    if isinstance(e, Repeat):
        return rsd_repeat(_fold_rsd(e.inner, delta), e.scalar)
    raise TypeError(f"not a duration expression: {e!r}")


def eval_asd(e: DurationExpr) -> AsdValue:
    """Resolve an expression to its ASD value.

    >>> str(eval_asd(Tie(Base(8), Base(8))))
    '4'
    """
    instrument.counters["fold"] += 1
    return _fold_asd(e)


def eval_rsd(e: DurationExpr, delta=QUARTER) -> RsdValue:
    """Resolve an expression in RSD units relative to ``delta``.

    Only the leaves are morphed; modifiers are applied with RSD arithmetic,
    so the result agrees with ``morph(eval_asd(e), delta)`` by construction
    of the morphism rather than by calling it.
    """
    instrument.counters["fold"] += 1
    return _fold_rsd(e, ReferenceDelta.coerce(delta))


def is_integral_asd(e: DurationExpr) -> bool:
    return eval_asd(e).value.is_integer


class Task(str, enum.Enum):
    GRAPHICAL_EDIT = "graphical_edit"
    CROSS_MEASURE = "cross_measure"
    PIANOROLL = "pianoroll"
    ONSET_FOLD = "onset_fold"


@dataclass(frozen=True)
class EvalStrategy:
    """Which semiring a task is evaluated in.

    ``mode`` is ``"asd"``, ``"rsd"`` or ``"auto"``; ``delta`` is carried by
    the modes that may end up in RSD and is None for ``"asd"``.
    """

    mode: str
    delta: ReferenceDelta | None = None

    def __post_init__(self):
        if self.mode not in ("asd", "rsd", "auto"):
            raise ValueError(f"unknown strategy mode {self.mode!r}")
        if self.mode == "asd":
            if self.delta is not None:
                raise ValueError("force_asd carries no reference delta")
        else:
            object.__setattr__(self, "delta", ReferenceDelta.coerce(self.delta or QUARTER))

    @classmethod
    def force_asd(cls) -> EvalStrategy:
        return cls("asd")

    @classmethod
    def force_rsd(cls, delta=QUARTER) -> EvalStrategy:
        return cls("rsd", ReferenceDelta.coerce(delta))

    @classmethod
    def auto(cls, delta=QUARTER) -> EvalStrategy:
        return cls("auto", ReferenceDelta.coerce(delta))

    def __str__(self):
        if self.mode == "asd":
            return "force_asd"
        name = "force_rsd" if self.mode == "rsd" else "auto"
        return f"{name}(delta={self.delta})"


def choose_strategy(exprs, task, delta=QUARTER) -> EvalStrategy:
    """Pick the evaluation unit for a task.

    Edits on graphical symbols stay in ASD and never need a common divisor;
    anything that runs across measures or onto a time grid goes to RSD.
    Only the task tag decides; ``exprs`` is accepted for signature stability.
    """
    task = Task(task)
    if task is Task.GRAPHICAL_EDIT:
        return EvalStrategy.force_asd()
    return EvalStrategy.force_rsd(delta)


def resolve(strategy: EvalStrategy, task) -> EvalStrategy:
    if strategy.mode != "auto":
        return strategy
    return choose_strategy((), task, strategy.delta)


def evaluate(e: DurationExpr, strategy: EvalStrategy, task=Task.ONSET_FOLD):
    strategy = resolve(strategy, task)
    if strategy.mode == "asd":
        return eval_asd(e)
    return eval_rsd(e, strategy.delta)


def render(e: DurationExpr) -> str:
    """Canonical text form, e.g. ``dot(8,1)`` or ``repeat(tuplet(8,3),1/2)``."""
    if isinstance(e, Base):
        return str(e.symbol)
    if isinstance(e, Grace):
        return "grace"
    if isinstance(e, Dot):
        return f"dot({render(e.inner)},{e.count})"
    if isinstance(e, Tuplet):
        return f"tuplet({render(e.inner)},{e.gamma})"
    if isinstance(e, Tie):
        return f"tie({render(e.left)},{render(e.right)})"
    if isinstance(e, Repeat):
        return f"repeat({render(e.inner)},{e.scalar})"
    raise TypeError(f"not a duration expression: {e!r}")


_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([a-z]+)|(.))")


def _tokenize(text):
    text = text.strip()
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        number, word, punct = m.groups()
        if number is not None:
            tokens.append(("num", number))
        elif word is not None:
            tokens.append(("word", word))
        elif punct is not None and not punct.isspace():
            tokens.append(("punct", punct))
        pos = m.end()
    return tokens


def parse_expr(text: str) -> DurationExpr:
    """Inverse of :func:`render`."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(kind, value=None):
        nonlocal pos
        k, v = peek()
        if k != kind or (value is not None and v != value):
            raise ValueError(f"bad duration expression {text!r}: expected {value or kind}, got {v!r}")
        pos += 1
        return v

    def integer():
        v = take("num")
        if "/" in v:
            raise ValueError(f"bad duration expression {text!r}: expected integer, got {v}")
        return int(v)

    def expr():
        kind, value = peek()
        if kind == "num":
            return Base(integer())
        word = take("word")
        if word == "grace":
            return Grace()
        take("punct", "(")
        inner = expr()
        take("punct", ",")
        if word == "dot":
            node = Dot(inner, integer())
        elif word == "tuplet":
            node = Tuplet(inner, integer())
        elif word == "tie":
            node = Tie(inner, expr())
        elif word == "repeat":
            node = Repeat(inner, Rational.parse(take("num")))
        else:
            raise ValueError(f"bad duration expression {text!r}: unknown modifier {word!r}")
        take("punct", ")")
        return node

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"bad duration expression {text!r}: trailing input")
    return result
