"""Operation counters used to observe how much work a pipeline performs.

``counters["gcd"]`` counts rational GCD evaluations and ``counters["fold"]``
counts lazy-expression evaluations.
"""
from collections import Counter
from contextlib import contextmanager

counters: Counter = Counter()


@contextmanager
def counting():
    """Yield a Counter holding the increments made inside the block.

    >>> with counting() as seen:
    ...     counters["gcd"] += 2
    >>> seen["gcd"]
    2
    """
    before = counters.copy()
    delta = Counter()
    try:
        yield delta
    finally:
        for key, value in counters.items():
            diff = value - before.get(key, 0)
            if diff:
                delta[key] = diff
