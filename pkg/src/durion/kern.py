"""A partial Humdrum **kern reader that keeps durations lazy.

Supported subset: the ``**kern`` header and ``*-`` terminator, tab-separated
parallel spines, notes, rests, grace notes (``q``), augmentation dots,
barlines and comments.  Chords, ties, slurs, phrases, beams, spine
split/merge/add/exchange and non-kern spines raise UnsupportedFeatureError.
No duration is evaluated while parsing: each recip numeral becomes a
:mod:`durion.lazy` tree built from integer factorisation only.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace

from durion.errors import KernParseError, UnsupportedDurationError, UnsupportedFeatureError
from durion.lazy import BASE_SYMBOLS, Base, Dot, Grace, Repeat, Tuplet, eval_asd, render

__all__ = [
    "ScoreEvent",
    "Voice",
    "Score",
    "parse_kern",
    "parse_recip",
    "parse_pitch",
    "to_recip",
    "midi_name",
    "kern_pitch",
]

_RECIP_RE = re.compile(r"(\d+)(\.*)")
_PITCH_RE = re.compile(r"([a-gA-G]+)([#\-]*)")
_TOKEN_RE = re.compile(r"(?P<recip>\d+\.*)?(?P<body>[a-gA-G]+[#\-]*|r)(?P<grace>q)?")

# marker characters of constructs outside the subset
_UNSUPPORTED = {
    " ": "chord",
    "[": "tie",
    "]": "tie",
    "_": "tie",
    "(": "slur",
    ")": "slur",
    "{": "phrase",
    "}": "phrase",
    "L": "beam",
    "J": "beam",
    "K": "beam",
    "k": "beam",
    "%": "rational recip",
}

_SPINE_OPS = {
    "*^": "spine split",
    "*v": "spine merge",
    "*+": "spine add",
    "*x": "spine exchange",
}

_STEPS = {"c": 0, "d": 2, "e": 4, "f": 5, "g": 7, "a": 9, "b": 11}
_NAMES = ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"]


@dataclass(frozen=True)
class ScoreEvent:
    kind: str
    pitch: int | None
    duration: object
    source_token: str = ""
    measure_index: int = 0

    def __post_init__(self):
        if self.kind not in ("note", "rest"):
            raise ValueError(f"event kind must be 'note' or 'rest', got {self.kind!r}")
        if (self.kind == "note") != (self.pitch is not None):
            raise ValueError("a note carries a pitch and a rest does not")

    @property
    def is_note(self):
        return self.kind == "note"

    @property
    def pitch_text(self) -> str | None:
        """Pitch spelling as written in the source token, else a generated name."""
        if self.pitch is None:
            return None
        m = _PITCH_RE.search(self.source_token)
        return m.group(0) if m else kern_pitch(self.pitch)


@dataclass(frozen=True)
class Voice:
    events: tuple = ()
    voice_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        measures = [e.measure_index for e in self.events]
        if any(b < a for a, b in zip(measures, measures[1:])):
            raise ValueError("voice events must have non-decreasing measure_index")

    def __len__(self):
        return len(self.events)

    def durations(self):
        return [e.duration for e in self.events]


@dataclass(frozen=True)
class Score:
    voices: tuple = ()
    measure_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "voices", tuple(self.voices))
        if [v.voice_index for v in self.voices] != list(range(len(self.voices))):
            raise ValueError("voice indices must be 0, 1, ..., n-1 in order")

    def with_voice(self, voice: Voice) -> Score:
        voices = list(self.voices)
        voices[voice.voice_index] = voice
        return replace(self, voices=voices)


def _factor(n: int):
    """Lazy tree for an undotted recip numeral ``n``.

    Powers of two are base symbols.  Otherwise ``n = 2**k * m`` with odd
    ``m >= 3`` becomes an ``m``-tuplet on base ``2**(k+1)``: the tuplet scales
    by ``m/2``, which lands exactly on ``n``.
    """
    if n <= 0:
        raise UnsupportedDurationError(f"recip {n} (breve and longer)")
    k = 0
    m = n
    while m % 2 == 0:
        m //= 2
        k += 1
    if m == 1:
        if n not in BASE_SYMBOLS:
            raise UnsupportedDurationError(f"recip {n} (shorter than a 128th)")
        return Base(n)
    base = 2 ** (k + 1)
    if base not in BASE_SYMBOLS:
        raise UnsupportedDurationError(f"recip {n} (tuplet base {base} shorter than a 128th)")
    return Tuplet(Base(base), m)


def parse_recip(text: str):
    """Parse a recip duration such as ``"8"``, ``"12"`` or ``"4.."``.

    >>> parse_recip("12")
    Tuplet(inner=Base(symbol=8), gamma=3)
    >>> parse_recip("4.")
    Dot(inner=Base(symbol=4), count=1)
    """
    m = _RECIP_RE.fullmatch(text)
    if m is None:
        raise KernParseError("malformed recip", token=text)
    expr = _factor(int(m.group(1)))
    dots = len(m.group(2))
    return Dot(expr, dots) if dots else expr


def parse_pitch(text: str) -> int:
    """MIDI number of a kern pitch: ``c`` = 60, ``cc`` = 72, ``C`` = 48, ``CC`` = 36."""
    m = _PITCH_RE.fullmatch(text)
    if m is None:
        raise KernParseError("malformed pitch", token=text)
    letters, accidentals = m.groups()
    if len(set(letters)) != 1:
        raise KernParseError("pitch letters must repeat a single letter of one case", token=text)
    step = _STEPS[letters[0].lower()]
    if letters[0].islower():
        octave = 4 + len(letters) - 1
    else:
        octave = 3 - (len(letters) - 1)
    midi = 12 * (octave + 1) + step + accidentals.count("#") - accidentals.count("-")
    if not 0 <= midi <= 127:
        raise KernParseError(f"pitch out of MIDI range ({midi})", token=text)
    return midi


def midi_name(midi: int) -> str:
    return f"{_NAMES[midi % 12]}{midi // 12 - 1}"


def kern_pitch(midi: int) -> str:
    """Kern spelling of a MIDI number, sharps for black keys (61 -> ``c#``)."""
    name = _NAMES[midi % 12]
    octave = midi // 12 - 1
    letter, accidental = name[0], name[1:]
    if octave >= 4:
        return letter.lower() * (octave - 3) + accidental
    return letter * (4 - octave) + accidental


def to_recip(expr) -> str | None:
    """Kern recip text for a lazy duration, or None when kern cannot spell it."""
    if isinstance(expr, Base):
        return str(expr.symbol)
    if isinstance(expr, Grace):
        return "q"
    if isinstance(expr, Dot):
        inner = to_recip(expr.inner)
        if inner is None or inner == "q" or inner.endswith("."):
            return None
        return inner + "." * expr.count
    if isinstance(expr, Tuplet) and isinstance(expr.inner, Base) and expr.gamma % 2 == 1:
        return str(expr.inner.symbol * expr.gamma // 2)
    if isinstance(expr, Repeat):
        value = eval_asd(expr).value
        if value.is_integer:
            try:
                _factor(value.numerator)
            except UnsupportedDurationError:
                return None
            return str(value.numerator)
    return None


def event_token(kind: str, duration, pitch_text: str | None = None) -> str:
    """Kern-like token for a synthesized event; falls back to the lazy text form."""
    recip = to_recip(duration)
    if recip is None:
        recip = render(duration)
    if recip == "q":
        return (pitch_text or "r") + "q"
    return recip + (pitch_text if kind == "note" else "r")


def _parse_token(token: str, line: int, measure: int) -> ScoreEvent:
    for ch in token:
        if ch in _UNSUPPORTED:
            raise UnsupportedFeatureError(_UNSUPPORTED[ch], line=line, token=token)
    m = _TOKEN_RE.fullmatch(token)
    if m is None:
        raise KernParseError("malformed token", line=line, token=token)
    recip, body, grace = m.group("recip", "body", "grace")
    try:
        if grace:
            duration = Grace()
        elif recip is None:
            raise KernParseError("missing duration", line=line, token=token)
        else:
            duration = parse_recip(recip)
        if body == "r":
            return ScoreEvent("rest", None, duration, token, measure)
        return ScoreEvent("note", parse_pitch(body), duration, token, measure)
    except KernParseError as exc:
        if exc.line is None:
            exc.line = line
            exc.token = token
        raise


def parse_kern(text: str) -> Score:
    """Read a **kern document into a Score with one Voice per spine.

    Spines are numbered left to right from 0.  Every barline token increments
    its spine's measure counter; events carry the counter value at the time
    they are read.
    """
    spines = None
    events: list[list[ScoreEvent]] = []
    measures: list[int] = []
    terminated = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("!"):
            continue
        if terminated:
            raise KernParseError("content after spine terminator", line=lineno)
        tokens = line.split("\t")
        if spines is None:
            if not line.startswith("**"):
                raise KernParseError("missing **kern header", line=lineno)
            for tok in tokens:
                if tok != "**kern":
                    if tok.startswith("**"):
                        raise UnsupportedFeatureError(f"non-kern spine {tok}", line=lineno, token=tok)
                    raise KernParseError("malformed exclusive interpretation", line=lineno, token=tok)
            spines = len(tokens)
            events = [[] for _ in range(spines)]
            measures = [0] * spines
            continue
        if len(tokens) != spines:
            raise KernParseError(f"expected {spines} spine(s), found {len(tokens)}", line=lineno)
        if line.startswith("*"):
            ends = 0
            for tok in tokens:
                if not tok.startswith("*"):
                    raise KernParseError("data token in interpretation record", line=lineno, token=tok)
                if tok in _SPINE_OPS:
                    raise UnsupportedFeatureError(_SPINE_OPS[tok], line=lineno, token=tok)
                if tok.startswith("**"):
                    raise UnsupportedFeatureError("exclusive interpretation change", line=lineno, token=tok)
                ends += tok == "*-"
            if ends == spines:
                terminated = True
            elif ends:
                raise UnsupportedFeatureError("partial spine termination", line=lineno)
            continue
        for i, tok in enumerate(tokens):
            if tok.startswith("="):
                measures[i] += 1
            elif tok.startswith("!") or tok == ".":
                continue
            elif tok.startswith("*"):
                raise KernParseError("interpretation token in data record", line=lineno, token=tok)
            else:
                events[i].append(_parse_token(tok, lineno, measures[i]))
    if spines is None:
        raise KernParseError("missing **kern header", line=1)
    if not terminated:
        raise KernParseError("missing *- spine terminator", line=lineno)
    voices = [Voice(evs, i) for i, evs in enumerate(events)]
    used = [e.measure_index for v in voices for e in v.events]
    return Score(voices, max(used) + 1 if used else 0)
