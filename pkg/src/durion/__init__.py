"""Exact symbolic music durations in absolute (ASD) and relative (RSD) units."""
from durion.errors import (
    DomainError,
    DurionError,
    KernParseError,
    UndefinedFormError,
    UnsupportedDurationError,
    UnsupportedFeatureError,
)
from durion.kern import Score, ScoreEvent, Voice, parse_kern, parse_pitch, parse_recip
from durion.lazy import (
    Base,
    Dot,
    EvalStrategy,
    Grace,
    Repeat,
    Task,
    Tie,
    Tuplet,
    choose_strategy,
    eval_asd,
    eval_rsd,
    is_integral_asd,
    parse_expr,
    render,
)
from durion.modifiers import QUARTER, ReferenceDelta, dot, morph, morph_inv, tie, tuplet
from durion.numeric import INF, Rational, rat_gcd
from durion.scoreops import (
    DivsEncoding,
    Pianoroll,
    common_divisor,
    complete_voice,
    encode_divs,
    longest_voice_total,
    onsets,
    pianoroll,
    split_event,
    to_divs,
)
from durion.semiring import ASD, RSD, AsdValue, RsdValue, duration_lt, natural_leq

__version__ = "0.1.0"
