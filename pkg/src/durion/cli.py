"""``durion`` command line: parse, divs, split, pianoroll, complete, convert.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 unsupported feature,
4 domain or arithmetic error.
"""
from __future__ import annotations

import argparse
import sys

from durion import instrument
from durion.errors import DomainError, KernParseError, UnsupportedFeatureError
from durion.kern import Score, parse_kern
from durion.lazy import EvalStrategy, eval_asd, eval_rsd, render
from durion.modifiers import ReferenceDelta, morph, morph_inv
from durion.numeric import Rational
from durion.scoreops import complete_score, encode_divs, pianoroll, split_event
from durion.semiring import AsdValue, RsdValue

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_DOMAIN = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_rational(text):
    try:
        value = Rational.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value.is_zero or value.is_infinite:
        raise argparse.ArgumentTypeError(f"expected a positive finite rational, got {text!r}")
    return value


def _delta(text):
    return "auto" if text == "auto" else _positive_rational(text)


def _value(text):
    try:
        return Rational.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path) -> Score:
    return parse_kern(_read(path))


def _write(args, text: str):
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _show(value: Rational, approx: bool) -> str:
    if approx and not value.is_integer and value.is_finite:
        return f"{value} (~{value.to_decimal()})"
    return str(value)


def _strategy(args) -> EvalStrategy:
    if getattr(args, "unit", "rsd") == "asd":
        return EvalStrategy.force_asd()
    return EvalStrategy.force_rsd(args.reference)


def _event_line(voice_index, event, reference, approx=False) -> str:
    if event.is_note:
        what = f"note {event.pitch_text}({event.pitch})"
    else:
        what = "rest"
    asd = eval_asd(event.duration).value
    rsd = eval_rsd(event.duration, reference).value
    return (
        f"voice={voice_index} m={event.measure_index} {what} {render(event.duration)} "
        f"asd={_show(asd, approx)} rsd={_show(rsd, approx)}"
    )


def cmd_parse(args) -> str:
    score = _load(args.file)
    lines = [
        _event_line(v.voice_index, e, args.reference, args.approx)
        for v in score.voices
        for e in v.events
    ]
    return "".join(line + "\n" for line in lines)


def cmd_complete(args) -> str:
    score = _load(args.file)
    completed = complete_score(score, _strategy(args), args.reference)
    out = []
    for before, after in zip(score.voices, completed.voices):
        for i, e in enumerate(after.events):
            line = _event_line(after.voice_index, e, args.reference, args.approx)
            out.append(line + (" (added)" if i >= len(before.events) else "") + "\n")
    return "".join(out)


def cmd_divs(args) -> str:
    score = _load(args.file)
    return encode_divs(score, args.delta, _strategy(args), args.reference).to_json() + "\n"


def cmd_split(args) -> str:
    if args.parts < 2:
        raise UsageError("--parts must be at least 2")
    score = _load(args.file)
    if not 0 <= args.voice < len(score.voices):
        raise UsageError(f"--voice {args.voice} out of range (score has {len(score.voices)} voices)")
    voice = score.voices[args.voice]
    if not 0 <= args.index < len(voice.events):
        raise UsageError(f"--index {args.index} out of range (voice has {len(voice.events)} events)")
    split = split_event(voice, args.index, args.parts)
    tokens = " ".join(e.source_token for e in split.events)

    if args.unit == "asd":
        old = eval_asd(voice.events[args.index].duration)
        new = [str(eval_asd(e.duration)) for e in split.events[args.index : args.index + args.parts]]
        return f"{old} → {', '.join(new)}; other events untouched\nvoice {args.voice}: {tokens}\n"

    new_score = score.with_voice(split)
    before = encode_divs(score, "auto", _strategy(args), args.reference)
    after = encode_divs(new_score, "auto", _strategy(args), args.reference)
    changed = total = 0
    for v, (old_divs, new_divs) in enumerate(zip(before.divs, after.divs)):
        if v == args.voice:
            new_divs = new_divs[: args.index] + new_divs[args.index + args.parts :]
            old_divs = old_divs[: args.index] + old_divs[args.index + 1 :]
        total += len(old_divs)
        changed += sum(a != b for a, b in zip(old_divs, new_divs))
    if changed == total and total:
        affected = "all"
    elif changed == 0:
        affected = "none"
    else:
        affected = f"{changed} of {total}"
    lines = [f"δ: {before.delta} → {after.delta}; affected values: {affected}"]
    for v, divs in zip(new_score.voices, after.divs):
        lines.append(f"voice {v.voice_index}: {' '.join(e.source_token for e in v.events)}")
        lines.append(f"divs {v.voice_index}: {' '.join(map(str, divs))}")
    return "\n".join(lines) + "\n"


def cmd_pianoroll(args) -> str:
    score = _load(args.file)
    roll = pianoroll(score, args.delta, _strategy(args), args.reference)
    if args.format == "json":
        return roll.to_json() + "\n"
    if args.format == "text":
        return f"delta={roll.delta} columns={roll.columns}\n" + roll.to_text()
    return roll.to_csv()


def cmd_convert(args) -> str:
    ref = ReferenceDelta(args.reference)
    if args.source == "asd":
        value = AsdValue(args.value)
        result = value if args.target == "asd" else morph(value, ref)
    else:
        value = RsdValue(args.value)
        result = value if args.target == "rsd" else morph_inv(value, ref)
    return _show(result.value, args.approx) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="durion", description="Exact symbolic music durations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, unit=True):
        p.add_argument("file", help="**kern file, or - for stdin")
        p.add_argument("--reference", type=_positive_rational, default=Rational(4),
                       help="RSD reference note as an ASD numeral (default 4, a quarter)")
        if unit:
            p.add_argument("--unit", choices=["asd", "rsd"], default="rsd")
        p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("parse", help="list events with lazy and evaluated durations")
    common(p, unit=False)
    p.add_argument("--approx", action="store_true", help="also show decimal approximations")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("complete", help="pad short voices with rests")
    common(p)
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("divs", help="integer (common divisor) encoding as JSON")
    common(p)
    p.add_argument("--delta", type=_delta, default="auto")
    p.set_defaults(func=cmd_divs)

    p = sub.add_parser("split", help="split one event and show what must be recomputed")
    common(p)
    p.add_argument("--voice", type=int, default=0)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--parts", type=int, default=2)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("pianoroll", help="merged pianoroll of all voices")
    common(p)
    p.add_argument("--delta", type=_delta, default="auto")
    p.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    p.set_defaults(func=cmd_pianoroll)

    p = sub.add_parser("convert", help="convert one value between ASD and RSD")
    p.add_argument("--value", type=_value, required=True)
    p.add_argument("--from", dest="source", choices=["asd", "rsd"], required=True)
    p.add_argument("--to", dest="target", choices=["asd", "rsd"], required=True)
    p.add_argument("--reference", type=_positive_rational, default=Rational(4))
    p.add_argument("--approx", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _write(args, args.func(args))
    except UsageError as exc:
        print(f"durion: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedFeatureError as exc:
        print(f"durion: error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except KernParseError as exc:
        print(f"durion: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"durion: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
