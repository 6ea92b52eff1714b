"""Run the two-voice running example end to end and print each stage.

    python3 scripts/example1_pipeline.py [--kern FILE] [--unit rsd|asd]
"""
import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from durion import instrument
from durion.kern import parse_kern
from durion.lazy import EvalStrategy, eval_asd, render
from durion.scoreops import complete_score, encode_divs, pianoroll, split_event

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class PipelineConfig:
    kern: Path = ROOT / "tests" / "fixtures" / "figure1.krn"
    unit: str = "rsd"
    reference: int = 4
    split_voice: int = 0
    split_index: int = 2
    split_parts: int = 2


def run(cfg: PipelineConfig):
    strategy = EvalStrategy.force_asd() if cfg.unit == "asd" else EvalStrategy.force_rsd(cfg.reference)
    start = time.perf_counter()
    with instrument.counting() as counts:
        score = parse_kern(cfg.kern.read_text(encoding="utf-8"))
        parse_folds = counts["fold"]

        enc = encode_divs(score, "auto", strategy, cfg.reference)
        print(f"delta = {enc.delta}")
        for v, divs in enumerate(enc.divs):
            print(f"  voice {v} divs {list(divs)}  onsets {list(enc.onsets[v])}")

        voice = score.voices[cfg.split_voice]
        split = split_event(voice, cfg.split_index, cfg.split_parts)
        gcd_before = counts["gcd"]
        new = [str(eval_asd(e.duration)) for e in split.events[cfg.split_index : cfg.split_index + cfg.split_parts]]
        print(f"split ASD: {eval_asd(voice.events[cfg.split_index].duration)} -> {', '.join(new)}"
              f" (gcd calls: {counts['gcd'] - gcd_before})")
        after = encode_divs(score.with_voice(split), "auto", strategy, cfg.reference)
        print(f"split divs: delta {enc.delta} -> {after.delta}, voice {cfg.split_voice} {list(after.divs[cfg.split_voice])}")

        completed = complete_score(score, strategy, cfg.reference)
        for before, v in zip(score.voices, completed.voices):
            added = [render(e.duration) for e in v.events[len(before.events):]]
            print(f"completion voice {v.voice_index}: added rests {added}")

        roll = pianoroll(score, "auto", strategy, cfg.reference)
        print(f"pianoroll: delta {roll.delta}, {roll.columns} columns, pitches {sorted(roll.rows)}")
    print(f"folds during parsing: {parse_folds}; total gcd calls: {counts['gcd']}")
    print(f"elapsed: {time.perf_counter() - start:.4f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kern", type=Path, default=PipelineConfig.kern)
    ap.add_argument("--unit", choices=["asd", "rsd"], default="rsd")
    ap.add_argument("--reference", type=int, default=4)
    ap.add_argument("--split-index", type=int, default=2)
    args = ap.parse_args()
    run(PipelineConfig(kern=args.kern, unit=args.unit, reference=args.reference, split_index=args.split_index))


if __name__ == "__main__":
    main()
