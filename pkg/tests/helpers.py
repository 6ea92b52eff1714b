"""Shared enumeration domains and hypothesis strategies."""
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from durion.numeric import Rational

FIXTURES = Path(__file__).parent / "fixtures"


def small_fractions(limit):
    """Distinct values p/q with 1 <= p, q <= limit."""
    return sorted({Fraction(p, q) for p in range(1, limit + 1) for q in range(1, limit + 1)})


def small_rationals(limit):
    return [Rational.from_fraction(f) for f in small_fractions(limit)]


rationals = st.builds(
    Rational,
    st.integers(min_value=0, max_value=10**6),
    st.integers(min_value=1, max_value=10**6),
)
positive_rationals = st.builds(
    Rational,
    st.integers(min_value=1, max_value=10**4),
    st.integers(min_value=1, max_value=10**4),
)


def _lazy_nodes():
    from durion import lazy

    return lazy


def expr_trees(max_leaves=12):
    """Hypothesis strategy for DurationExpr trees."""
    lazy = _lazy_nodes()
    leaves = st.one_of(
        st.sampled_from(sorted(lazy.BASE_SYMBOLS)).map(lazy.Base),
        st.just(lazy.Grace()),
    )
    scalars = st.builds(
        Rational,
        st.integers(min_value=1, max_value=9),
        st.integers(min_value=1, max_value=9),
    )

    def extend(children):
        return st.one_of(
            st.builds(lazy.Dot, children, st.integers(min_value=1, max_value=3)),
            st.builds(lazy.Tuplet, children, st.integers(min_value=3, max_value=9)),
            st.builds(lazy.Tie, children, children),
            st.builds(lazy.Repeat, children, scalars),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def random_tree(rng, depth):
    """Seeded random DurationExpr of depth at most ``depth`` (a leaf has depth 1)."""
    lazy = _lazy_nodes()
    if depth <= 1 or rng.random() < 0.25:
        if rng.random() < 0.05:
            return lazy.Grace()
        return lazy.Base(rng.choice(sorted(lazy.BASE_SYMBOLS)))
    kind = rng.randrange(4)
    inner = random_tree(rng, depth - 1)
    if kind == 0:
        return lazy.Dot(inner, rng.randint(1, 3))
    if kind == 1:
        return lazy.Tuplet(inner, rng.randint(3, 9))
    if kind == 2:
        return lazy.Tie(inner, random_tree(rng, depth - 1))
    return lazy.Repeat(inner, Rational(rng.randint(1, 9), rng.randint(1, 9)))


def tree_depth(e):
    lazy = _lazy_nodes()
    if isinstance(e, (lazy.Base, lazy.Grace)):
        return 1
    if isinstance(e, lazy.Tie):
        return 1 + max(tree_depth(e.left), tree_depth(e.right))
    return 1 + tree_depth(e.inner)
