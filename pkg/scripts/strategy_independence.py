"""Check that folding random duration trees in ASD and RSD gives the same value.

    python3 scripts/strategy_independence.py --trees 100000 --depth 6 --seed 1
"""
import argparse
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from helpers import random_tree, tree_depth  # noqa: E402

from durion.lazy import eval_asd, eval_rsd, render  # noqa: E402
from durion.modifiers import ReferenceDelta, morph  # noqa: E402


@dataclass
class IndependenceConfig:
    trees: int = 10_000
    depth: int = 6
    seed: int = 0
    deltas: list = field(default_factory=lambda: [1, 2, 4, 8])


def run(cfg: IndependenceConfig) -> int:
    rng = random.Random(cfg.seed)
    refs = [ReferenceDelta(d) for d in cfg.deltas]
    violations = 0
    depths = [0] * (cfg.depth + 1)
    start = time.perf_counter()
    for i in range(cfg.trees):
        tree = random_tree(rng, cfg.depth)
        depths[tree_depth(tree)] += 1
        ref = refs[i % len(refs)]
        if morph(eval_asd(tree), ref) != eval_rsd(tree, ref):
            violations += 1
            print(f"violation at delta={ref}: {render(tree)}")
    elapsed = time.perf_counter() - start
    print(f"trees={cfg.trees} depth<={cfg.depth} seed={cfg.seed} deltas={cfg.deltas}")
    print("depth histogram: " + " ".join(f"{d}:{n}" for d, n in enumerate(depths) if n))
    print(f"violations: {violations}  ({elapsed:.2f} s)")
    return violations


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trees", type=int, default=10_000)
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sys.exit(1 if run(IndependenceConfig(args.trees, args.depth, args.seed)) else 0)


if __name__ == "__main__":
    main()
