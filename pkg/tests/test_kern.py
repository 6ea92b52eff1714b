import pytest

from helpers import FIXTURES
from durion import instrument
from durion.errors import KernParseError, UnsupportedDurationError, UnsupportedFeatureError
from durion.kern import Score, ScoreEvent, Voice, midi_name, parse_kern, parse_pitch, parse_recip, to_recip
from durion.lazy import BASE_SYMBOLS, Base, Dot, Grace, Repeat, Tuplet, eval_asd, eval_rsd
from durion.numeric import Rational

Q = Rational


def leaves(e):
    if isinstance(e, (Base, Grace)):
        yield e
    elif hasattr(e, "inner"):
        yield from leaves(e.inner)
    else:
        yield from leaves(e.left)
        yield from leaves(e.right)


@pytest.mark.parametrize(
    "text, expected, asd",
    [
        ("12", Tuplet(Base(8), 3), 12),
        ("6", Tuplet(Base(4), 3), 6),
        ("20", Tuplet(Base(8), 5), 20),
        ("4.", Dot(Base(4), 1), Q(8, 3)),
        ("16", Base(16), 16),
        ("3", Tuplet(Base(2), 3), 3),
        ("8..", Dot(Base(8), 2), Q(32, 7)),
    ],
)
def test_parse_recip(text, expected, asd):
    assert parse_recip(text) == expected
    assert eval_asd(parse_recip(text)).value == asd


def test_factorisation_exhaustive():
    for n in range(1, 129):
        expr = parse_recip(str(n))
        assert eval_asd(expr).value == n
        assert to_recip(expr) == str(n)
        assert all(isinstance(x, Base) and x.symbol in BASE_SYMBOLS for x in leaves(expr))


@pytest.mark.parametrize("text", ["0", "256", "384", "640"])
def test_parse_recip_unsupported(text):
    with pytest.raises(UnsupportedDurationError):
        parse_recip(text)


@pytest.mark.parametrize("text", ["", "4x", ".", "a4"])
def test_parse_recip_malformed(text):
    with pytest.raises(KernParseError):
        parse_recip(text)


@pytest.mark.parametrize(
    "text, midi",
    [("c", 60), ("e", 64), ("G#", 56), ("cc", 72), ("C", 48), ("CC", 36), ("b-", 70), ("ccc##", 86), ("AAA", 33)],
)
def test_parse_pitch(text, midi):
    assert parse_pitch(text) == midi


@pytest.mark.parametrize("text", ["cC", "cd", "h", "c+", "CCCCCC", "cccccccc"])
def test_parse_pitch_rejects(text):
    with pytest.raises(KernParseError):
        parse_pitch(text)


def test_midi_name():
    assert midi_name(60) == "C4"
    assert midi_name(56) == "G#3"


def test_figure1(figure1):
    top, bottom = figure1.voices
    t = Tuplet(Base(4), 3)
    assert top.durations() == [Base(8), Base(16), Base(16), Base(4), t, t, t]
    assert [e.pitch for e in top.events] == [60, 62, 60, 64, 65, 64, 62]
    assert [str(eval_rsd(d, 4)) for d in top.durations()] == ["1/2", "1/4", "1/4", "1", "2/3", "2/3", "2/3"]
    assert bottom.durations() == [Base(2)]
    assert all(e.measure_index == 1 for v in figure1.voices for e in v.events)
    assert figure1.measure_count == 2


def test_dotted_fixture():
    score = parse_kern((FIXTURES / "dotted.krn").read_text(encoding="utf-8"))
    assert len(score.voices) == 3
    first = score.voices[0].events[0]
    assert first.duration == Dot(Base(4), 1) and first.pitch == 60
    assert eval_asd(Dot(Base(8), 1)).value == Q(16, 3)
    grace = score.voices[2].events[2]
    assert grace.duration == Grace() and grace.pitch == 60
    rest = score.voices[1].events[2]
    assert rest.kind == "rest" and rest.pitch is None
    assert [e.measure_index for e in score.voices[0].events] == [1, 1, 1, 1, 2, 2]


def test_rest_token():
    score = parse_kern("**kern\n4r\n*-\n")
    (event,) = score.voices[0].events
    assert event.kind == "rest" and event.duration == Base(4) and event.pitch is None


def test_measure_index_counts_preceding_barlines():
    text = "**kern\t**kern\n4c\t4d\n=1\t=1\n4e\t.\n=2\t=2\n=3\t=3\n4f\t4g\n*-\t*-\n"
    score = parse_kern(text)
    assert [e.measure_index for e in score.voices[0].events] == [0, 1, 3]
    assert [e.measure_index for e in score.voices[1].events] == [0, 3]


def test_crlf_and_comments_are_handled():
    score = parse_kern("!!comment\r\n**kern\r\n!local\r\n4c\r\n*-\r\n")
    assert len(score.voices[0].events) == 1


@pytest.mark.parametrize(
    "name, error, feature",
    [
        ("chord.krn", UnsupportedFeatureError, "chord"),
        ("spine_split.krn", UnsupportedFeatureError, "spine split"),
        ("tie.krn", UnsupportedFeatureError, "tie"),
        ("non_kern.krn", UnsupportedFeatureError, "non-kern spine **dynam"),
        ("breve.krn", UnsupportedDurationError, None),
        ("no_header.krn", KernParseError, None),
        ("malformed.krn", KernParseError, None),
        ("unterminated.krn", KernParseError, None),
    ],
)
def test_bad_inputs(name, error, feature):
    with pytest.raises(error) as info:
        parse_kern((FIXTURES / "bad" / name).read_text(encoding="utf-8"))
    assert info.value.line is not None
    if feature is not None:
        assert info.value.feature == feature


def test_missing_header_message():
    with pytest.raises(KernParseError, match=r"line 1: missing \*\*kern header"):
        parse_kern("")


@pytest.mark.parametrize("token, feature", [("4c(", "slur"), ("8cL", "beam"), ("4c_", "tie"), ("3%2c", "rational recip")])
def test_unsupported_markers(token, feature):
    with pytest.raises(UnsupportedFeatureError) as info:
        parse_kern(f"**kern\n{token}\n*-\n")
    assert info.value.feature == feature


def test_column_count_mismatch():
    with pytest.raises(KernParseError, match="expected 2 spine"):
        parse_kern("**kern\t**kern\n4c\n*-\t*-\n")


def test_parse_performs_no_duration_arithmetic():
    texts = [p.read_text(encoding="utf-8") for p in sorted(FIXTURES.glob("*.krn"))]
    with instrument.counting() as seen:
        for text in texts:
            parse_kern(text)
    assert seen["fold"] == 0 and seen["gcd"] == 0


def test_event_and_container_invariants():
    with pytest.raises(ValueError):
        ScoreEvent("note", None, Base(4))
    with pytest.raises(ValueError):
        ScoreEvent("rest", 60, Base(4))
    with pytest.raises(ValueError):
        Voice([ScoreEvent("rest", None, Base(4), measure_index=2), ScoreEvent("rest", None, Base(4), measure_index=1)])
    with pytest.raises(ValueError):
        Score([Voice([], 1)])


def test_to_recip():
    assert to_recip(Dot(Tuplet(Base(8), 3), 1)) == "12."
    assert to_recip(Repeat(Base(16), Q(1, 2))) == "32"
    assert to_recip(Repeat(Base(4), 3)) is None


def test_kern_pitch_roundtrip():
    from durion.kern import kern_pitch

    assert kern_pitch(60) == "c" and kern_pitch(36) == "CC" and kern_pitch(73) == "cc#"
    for midi in range(0, 128):
        assert parse_pitch(kern_pitch(midi)) == midi
