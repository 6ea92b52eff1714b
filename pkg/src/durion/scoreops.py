"""Score-level operations: divs encoding, onsets, voice completion, note
splitting and pianorolls.

Two unit systems meet here.  Lazy durations are evaluated either in ASD or in
RSD relative to a reference note (``reference``, quarter by default).  The
integer encoding then picks a grid step ``delta`` in RSD units, the common
divisor of every duration, so that each duration becomes an integer count of
grid steps ("divs").
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from itertools import accumulate, groupby

import numpy as np

from durion.errors import DomainError
from durion.kern import Score, ScoreEvent, Voice, event_token
from durion.lazy import BASE_SYMBOLS, Base, Dot, EvalStrategy, Repeat, Task, eval_asd, eval_rsd, resolve
from durion.modifiers import QUARTER, ReferenceDelta, as_rsd, morph
from durion.numeric import ONE, ZERO, Rational, rat_gcd
from durion.semiring import ASD, RSD, AsdValue, RsdValue, semiring_of

__all__ = [
    "DivsEncoding",
    "Pianoroll",
    "common_divisor",
    "to_divs",
    "onsets",
    "timeline",
    "voice_total",
    "longest_voice_total",
    "complete_voice",
    "complete_score",
    "split_event",
    "encode_divs",
    "pianoroll",
    "voice_pianoroll",
]


def _rational(x) -> Rational:
    if isinstance(x, AsdValue):
        raise TypeError("expected an RSD duration, got an AsdValue")
    if isinstance(x, RsdValue):
        return x.value
    return Rational.coerce(x)


def common_divisor(durations) -> Rational:
    """Largest ``delta`` such that every duration is an integer multiple of it.

    >>> str(common_divisor([RsdValue(Rational(1, 2)), RsdValue(Rational(2, 3))]))
    '1/6'
    """
    values = [_rational(d) for d in durations]
    if not values:
        raise DomainError("common divisor of an empty duration list")
    if any(v.is_zero for v in values):
        raise DomainError("zero durations (grace notes) must be excluded before encoding")
    result = values[0]
    for v in values[1:]:
        result = rat_gcd(result, v)
    return result


def to_divs(durations, delta) -> list[int]:
    delta = _rational(delta)
    if delta.is_zero or delta.is_infinite:
        raise DomainError(f"grid step must be positive and finite, got {delta}")
    out = []
    for i, d in enumerate(durations):
        q = _rational(d) / delta
        if not q.is_integer:
            raise DomainError(f"index {i}: duration {_rational(d)} is not an integer multiple of {delta}")
        out.append(q.numerator)
    return out


def onsets(voice_durations, strategy: EvalStrategy):
    """Prefix concatenations of a voice's durations.

    Returns ``(starts, total)`` in the strategy's unit: ``starts[0]`` is the
    neutral element of concatenation (0 in RSD, inf in ASD) and ``total`` is
    the fold of every duration, i.e. the offset of the last event.
    """
    strategy = resolve(strategy, Task.ONSET_FOLD)
    if strategy.mode == "asd":
        s, values = ASD, [eval_asd(e) for e in voice_durations]
    else:
        s, values = RSD, [eval_rsd(e, strategy.delta) for e in voice_durations]
    folds = list(accumulate(values, s.otimes, initial=s.one))
    return folds[:-1], folds[-1]


def voice_total(voice: Voice, strategy: EvalStrategy):
    return onsets(voice.durations(), strategy)[1]


def timeline(voice: Voice, strategy: EvalStrategy, reference=QUARTER):
    """RSD durations, onsets and total of a voice, computed in the strategy's unit.

    In ASD each measure is folded on its own and the measure offsets are
    chained in RSD, which keeps the ASD arithmetic within one measure.
    Either route yields identical RSD values.  ``reference`` sets the RSD
    unit of the ASD route; the RSD route uses the strategy's own delta.
    """
    strategy = resolve(strategy, Task.CROSS_MEASURE)
    if strategy.mode == "rsd":
        durs = [eval_rsd(e.duration, strategy.delta) for e in voice.events]
        starts, total = onsets(voice.durations(), strategy)
        return durs, starts, total

    reference = ReferenceDelta.coerce(reference)
    durs, starts = [], []
    offset = RsdValue(ZERO)
    for _, group in groupby(voice.events, key=lambda e: e.measure_index):
        exprs = [e.duration for e in group]
        local, measure_total = onsets(exprs, EvalStrategy.force_asd())
        durs.extend(morph(eval_asd(e), reference) for e in exprs)
        starts.extend(RSD.otimes(offset, morph(x, reference)) for x in local)
        offset = RSD.otimes(offset, morph(measure_total, reference))
    return durs, starts, offset


def longest_voice_total(totals, unit: str):
    """Fold ``oplus`` over voice totals: the longest one, in either unit."""
    s = {"asd": ASD, "rsd": RSD}[unit]
    totals = list(totals)
    if not totals:
        raise DomainError("no voice totals to compare")
    for t in totals:
        if semiring_of(t) is not s:
            raise TypeError(f"expected {s.name} totals, got {type(t).__name__}")
    return s.sum(totals)


def _rest_fill(deficit: Rational, reference: ReferenceDelta):
    plain = [(Base(s), reference.delta / s) for s in sorted(BASE_SYMBOLS)]
    dotted = [(Dot(b, 1), v * Rational(3, 2)) for b, v in plain]
    rests = []
    while not deficit.is_zero:
        exact = next((e for e, v in plain + dotted if v == deficit), None)
        if exact is not None:
            rests.append(exact)
            break
        fit = next(((e, v) for e, v in plain if v <= deficit), None)
        if fit is None:
            smallest, value = plain[-1]
            rests.append(Repeat(smallest, deficit / value))
            break
        rests.append(fit[0])
        deficit = deficit - fit[1]
    return rests


def complete_voice(voice: Voice, target_total, delta_ref=QUARTER) -> Voice:
    """Append rests so the voice lasts exactly ``target_total`` (RSD units).

    The deficit is filled greedily: a single plain or single-dotted symbol
    if one matches exactly, otherwise the longest plain symbol that fits,
    repeated; a remainder below a 128th becomes a Repeat of the 128th rest.
    """
    reference = ReferenceDelta.coerce(delta_ref)
    target = _rational(target_total)
    current = voice_total(voice, EvalStrategy.force_rsd(reference)).value
    if current > target:
        raise DomainError(f"voice {voice.voice_index} lasts {current}, longer than the target {target}")
    rests = _rest_fill(target - current, reference)
    if not rests:
        return voice
    measure = voice.events[-1].measure_index if voice.events else 0
    added = [ScoreEvent("rest", None, r, event_token("rest", r), measure) for r in rests]
    return replace(voice, events=voice.events + tuple(added))


def complete_score(score: Score, strategy: EvalStrategy | None = None, reference=QUARTER) -> Score:
    """Pad every voice with rests up to the longest voice."""
    if not score.voices:
        return score
    strategy = resolve(strategy or EvalStrategy.force_rsd(reference), Task.CROSS_MEASURE)
    if strategy.mode == "rsd":
        reference = strategy.delta
    totals = [voice_total(v, strategy) for v in score.voices]
    longest = longest_voice_total(totals, strategy.mode)
    target = as_rsd(longest, reference)
    voices = [complete_voice(v, target, reference) for v in score.voices]
    return replace(score, voices=voices)


def split_event(voice: Voice, index: int, parts: int = 2) -> Voice:
    """Replace one event by ``parts`` equal events of the same kind and pitch."""
    if isinstance(parts, bool) or not isinstance(parts, int) or parts < 2:
        raise DomainError(f"parts must be an integer >= 2, got {parts!r}")
    if not 0 <= index < len(voice.events):
        raise DomainError(f"event index {index} out of range for a voice of {len(voice.events)} events")
    old = voice.events[index]
    duration = Repeat(old.duration, Rational(1, parts))
    new = replace(old, duration=duration, source_token=event_token(old.kind, duration, old.pitch_text))
    events = voice.events[:index] + (new,) * parts + voice.events[index + 1 :]
    return replace(voice, events=events)


@dataclass(frozen=True)
class DivsEncoding:
    """Every duration as an integer number of ``delta`` steps (RSD units)."""

    delta: Rational
    divs: tuple
    onsets: tuple

    def __post_init__(self):
        object.__setattr__(self, "divs", tuple(tuple(v) for v in self.divs))
        object.__setattr__(self, "onsets", tuple(tuple(v) for v in self.onsets))

    @property
    def totals(self) -> list[int]:
        return [o[-1] + d[-1] if d else 0 for d, o in zip(self.divs, self.onsets)]

    def to_dict(self) -> dict:
        return {
            "delta": str(self.delta),
            "divs": [list(v) for v in self.divs],
            "onsets": [list(v) for v in self.onsets],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> DivsEncoding:
        data = json.loads(text)
        return cls(Rational.parse(data["delta"]), data["divs"], data["onsets"])


def encode_divs(score: Score, delta="auto", strategy: EvalStrategy | None = None, reference=QUARTER) -> DivsEncoding:
    """Integer-encode every voice of a score.

    With ``delta="auto"`` the grid step is the common divisor of all non-zero
    note and rest durations; an explicit step must divide all of them.
    """
    strategy = resolve(strategy or EvalStrategy.force_rsd(reference), Task.CROSS_MEASURE)
    if strategy.mode == "rsd":
        reference = strategy.delta
    lines = [timeline(v, strategy, reference) for v in score.voices]
    if delta == "auto":
        nonzero = [d for durs, _, _ in lines for d in durs if not d.value.is_zero]
        step = common_divisor(nonzero) if nonzero else ONE
    else:
        step = _rational(delta)
    divs, starts = [], []
    for i, (durs, on, _) in enumerate(lines):
        try:
            divs.append(to_divs(durs, step))
        except DomainError as exc:
            raise DomainError(f"voice {i} {exc}") from None
        starts.append(to_divs(on, step))
    return DivsEncoding(step, divs, starts)


class Pianoroll:
    """Pitch x time-step grid; each cell counts the voices sounding there.

    ``grid`` has one row per MIDI number (128 rows) and one column per
    ``delta`` step.  Adding rolls sums them element-wise.
    """

    def __init__(self, delta, grid):
        self.delta = Rational.coerce(delta)
        grid = np.asarray(grid, dtype=np.int64)
        if grid.ndim != 2 or grid.shape[0] != 128:
            raise ValueError(f"grid must have shape (128, columns), got {grid.shape}")
        self.grid = grid

    @classmethod
    def empty(cls, delta, columns: int) -> Pianoroll:
        return cls(delta, np.zeros((128, columns), dtype=np.int64))

    @property
    def columns(self) -> int:
        return self.grid.shape[1]

    @property
    def rows(self) -> dict[int, list[int]]:
        """Sounding pitches only, ascending."""
        return {int(p): self.grid[p].tolist() for p in np.flatnonzero(self.grid.any(axis=1))}

    def active(self) -> np.ndarray:
        return self.grid > 0

    def __add__(self, other: Pianoroll) -> Pianoroll:
        if self.delta != other.delta:
            raise DomainError(f"cannot merge rolls with steps {self.delta} and {other.delta}")
        width = max(self.columns, other.columns)
        out = np.zeros((128, width), dtype=np.int64)
        out[:, : self.columns] += self.grid
        out[:, : other.columns] += other.grid
        return Pianoroll(self.delta, out)

    def __eq__(self, other):
        if not isinstance(other, Pianoroll):
            return NotImplemented
        return self.delta == other.delta and np.array_equal(self.grid, other.grid)

    def __repr__(self):
        return f"Pianoroll(delta={self.delta}, columns={self.columns}, pitches={sorted(self.rows)})"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["pitch"] + [f"c{i}" for i in range(self.columns)])
        for pitch, cells in self.rows.items():
            writer.writerow([pitch] + cells)
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "delta": str(self.delta),
            "columns": self.columns,
            "rows": {str(p): cells for p, cells in self.rows.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Pianoroll:
        data = json.loads(text)
        roll = cls.empty(Rational.parse(data["delta"]), data["columns"])
        for pitch, cells in data["rows"].items():
            roll.grid[int(pitch)] = cells
        return roll

    def to_text(self) -> str:
        lines = []
        for pitch, cells in sorted(self.rows.items(), reverse=True):
            body = "".join("." if c == 0 else (str(c) if c < 10 else "+") for c in cells)
            lines.append(f"{pitch:>3} {body}")
        return "\n".join(lines) + ("\n" if lines else "")


def voice_pianoroll(voice: Voice, divs, starts, delta, columns: int) -> Pianoroll:
    roll = Pianoroll.empty(delta, columns)
    for event, d, start in zip(voice.events, divs, starts):
        if event.is_note and d:
            roll.grid[event.pitch, start : start + d] += 1
    return roll


def pianoroll(score: Score, delta="auto", strategy: EvalStrategy | None = None, reference=QUARTER) -> Pianoroll:
    """Merged pianoroll of a score.

    Voices are first completed against the longest one, then encoded on a
    common grid; per-voice rolls are summed.  Rests and grace notes paint
    nothing.
    """
    strategy = resolve(strategy or EvalStrategy.force_rsd(reference), Task.PIANOROLL)
    completed = complete_score(score, strategy, reference)
    enc = encode_divs(completed, delta, strategy, reference)
    columns = max(enc.totals, default=0)
    roll = Pianoroll.empty(enc.delta, columns)
    for voice, d, s in zip(completed.voices, enc.divs, enc.onsets):
        roll = roll + voice_pianoroll(voice, d, s, enc.delta, columns)
    return roll
