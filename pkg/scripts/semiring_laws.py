"""Exhaustively check the semiring laws on small rationals p/q with p, q <= N.

    python3 scripts/semiring_laws.py --limit 8
"""
import argparse
import itertools
import sys
from dataclasses import dataclass
from fractions import Fraction

from durion.numeric import Rational
from durion.semiring import ASD, RSD, natural_leq


@dataclass
class LawsConfig:
    limit: int = 8


def violations(s, domain):
    leq = lambda x, y: natural_leq(s, x, y)
    counts = dict.fromkeys(
        ["commutativity", "associativity", "idempotence", "distributivity", "monotonicity", "totality"], 0
    )
    for a, b in itertools.product(domain, repeat=2):
        counts["commutativity"] += s.oplus(a, b) != s.oplus(b, a) or s.otimes(a, b) != s.otimes(b, a)
        counts["totality"] += not (leq(a, b) or leq(b, a))
    for a in domain:
        counts["idempotence"] += s.oplus(a, a) != a
    for a, b, c in itertools.product(domain, repeat=3):
        counts["associativity"] += (
            s.oplus(s.oplus(a, b), c) != s.oplus(a, s.oplus(b, c))
            or s.otimes(s.otimes(a, b), c) != s.otimes(a, s.otimes(b, c))
        )
        counts["distributivity"] += s.otimes(a, s.oplus(b, c)) != s.oplus(s.otimes(a, b), s.otimes(a, c))
        counts["monotonicity"] += leq(a, b) and not leq(s.otimes(a, c), s.otimes(b, c))
    return counts


def run(cfg: LawsConfig) -> int:
    values = sorted({Fraction(p, q) for p in range(1, cfg.limit + 1) for q in range(1, cfg.limit + 1)})
    total = 0
    for s in (ASD, RSD):
        domain = [s.element(Rational.from_fraction(v)) for v in values] + [s.one]
        counts = violations(s, domain)
        total += sum(counts.values())
        print(f"{s.name}: {len(domain)} values, {len(domain) ** 3} triples")
        for law, n in counts.items():
            print(f"  {law:15s} {n}")
    return total


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=8)
    sys.exit(1 if run(LawsConfig(ap.parse_args().limit)) else 0)


if __name__ == "__main__":
    main()
