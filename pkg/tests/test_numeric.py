import itertools
import pickle
from fractions import Fraction

import pytest
from hypothesis import given

from helpers import positive_rationals, rationals, small_rationals
from durion import instrument
from durion.errors import DomainError, UndefinedFormError
from durion.numeric import (
    INF,
    ZERO,
    Ordering,
    Rational,
    rat_add,
    rat_cmp,
    rat_div,
    rat_gcd,
    rat_make,
    rat_mul,
    rat_sub,
)

R = Rational


def canonical(x: Rational) -> bool:
    if x.is_infinite:
        return True
    from math import gcd

    return x.denominator >= 1 and x.numerator >= 0 and gcd(x.numerator, x.denominator) == 1


@pytest.mark.parametrize(
    "num, den, expected",
    [(6, 12, (1, 2)), (0, 5, (0, 1)), (8, 3, (8, 3))],
)
def test_make_canonical(num, den, expected):
    x = rat_make(num, den)
    assert (x.numerator, x.denominator) == expected
    assert canonical(x)


def test_make_rejects_zero_denominator_and_negatives():
    with pytest.raises(DomainError):
        rat_make(1, 0)
    with pytest.raises(DomainError):
        rat_make(-1, 2)
    with pytest.raises(TypeError):
        R(1.5)


def test_basic_arithmetic():
    assert rat_add(R(1, 2), R(1, 4)) == R(3, 4)
    assert rat_div(R(2, 3), R(1, 12)) == R(8)
    assert rat_mul(INF, R(1, 2)) is INF
    assert rat_sub(R(3, 4), R(1, 4)) == R(1, 2)


def test_infinity_rules():
    assert rat_add(INF, R(3)) == INF
    assert rat_add(INF, INF) == INF
    assert rat_div(R(5), INF) == ZERO
    assert rat_div(INF, R(2)) == INF
    with pytest.raises(UndefinedFormError):
        rat_sub(INF, INF)
    with pytest.raises(UndefinedFormError):
        rat_mul(ZERO, INF)
    with pytest.raises(UndefinedFormError):
        rat_div(INF, INF)
    with pytest.raises(DomainError):
        rat_div(R(1), ZERO)
    with pytest.raises(DomainError):
        rat_sub(R(1, 4), R(1, 2))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (R(1, 3), R(2, 6), Ordering.EQUAL),
        (INF, R(10**9), Ordering.GREATER),
        (R(2, 3), R(3, 4), Ordering.LESS),
        (INF, INF, Ordering.EQUAL),
    ],
)
def test_cmp(a, b, expected):
    assert rat_cmp(a, b) is expected


def brute_gcd(a: Fraction, b: Fraction) -> Fraction:
    """Largest c/k (k up to the product of denominators) dividing a and b into integers."""
    best = Fraction(0)
    kmax = a.denominator * b.denominator
    for k in range(1, kmax + 1):
        for c in range(1, int(min(a, b) * k) + 1 if min(a, b) > 0 else int(max(a, b) * k) + 1):
            g = Fraction(c, k)
            if (a / g).denominator == 1 and (b / g).denominator == 1 and g > best:
                best = g
    return best


@pytest.mark.parametrize(
    "a, b, expected",
    [(R(1, 2), R(2, 3), R(1, 6)), (R(1, 2), R(1, 4), R(1, 4)), (R(3, 4), R(3, 4), R(3, 4))],
)
def test_gcd_examples(a, b, expected):
    assert rat_gcd(a, b) == expected
    assert Rational.from_fraction(brute_gcd(a.to_fraction(), b.to_fraction())) == expected


def test_gcd_matches_brute_force_oracle():
    values = small_rationals(4)
    for a, b in itertools.product(values, repeat=2):
        g = rat_gcd(a, b)
        assert g == Rational.from_fraction(brute_gcd(a.to_fraction(), b.to_fraction()))
        assert (a / g).is_integer and (b / g).is_integer


def test_gcd_with_zero_and_errors():
    assert rat_gcd(R(3, 7), ZERO) == R(3, 7)
    with pytest.raises(DomainError):
        rat_gcd(INF, R(1))
    with pytest.raises(DomainError):
        rat_gcd(ZERO, ZERO)


def test_gcd_is_counted():
    with instrument.counting() as seen:
        rat_gcd(R(1, 2), R(1, 3))
    assert seen["gcd"] == 1


def test_laws_over_enumeration():
    values = [ZERO] + small_rationals(12)
    for a, b in itertools.product(values, repeat=2):
        assert rat_add(a, b) == rat_add(b, a)
        assert rat_mul(a, b) == rat_mul(b, a)
        assert canonical(rat_add(a, b)) and canonical(rat_mul(a, b))
        if not b.is_zero:
            assert rat_div(rat_mul(a, b), b) == a
    sub = [ZERO] + small_rationals(5)
    for a, b, c in itertools.product(sub, repeat=3):
        assert rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c))


@given(rationals, positive_rationals)
def test_roundtrip_property(a, b):
    assert (a * b) / b == a
    assert canonical(a * b) and canonical(a + b)


@given(rationals, rationals)
def test_cmp_agrees_with_fraction(a, b):
    expected = (a.to_fraction() > b.to_fraction()) - (a.to_fraction() < b.to_fraction())
    assert rat_cmp(a, b) == expected


@pytest.mark.parametrize("text", ["0", "7", "3/4", "inf", "10/4"])
def test_text_roundtrip(text):
    x = Rational.parse(text)
    assert Rational.parse(str(x)) == x


def test_rendering():
    assert str(R(10, 4)) == "5/2"
    assert str(R(3)) == "3"
    assert str(INF) == "inf"
    assert R(2, 3).to_decimal() == "0.666666"
    assert R(1, 2).to_decimal() == "0.5"
    with pytest.raises(DomainError):
        Rational.parse("-1/2")
    with pytest.raises(DomainError):
        Rational.parse("1/0")


def test_hash_eq_and_pickle():
    assert hash(R(2, 4)) == hash(R(1, 2))
    assert R(4) == 4
    assert {R(1, 2), R(2, 4), INF, Rational.infinity()} == {R(1, 2), INF}
    assert pickle.loads(pickle.dumps(INF)) is INF
    assert pickle.loads(pickle.dumps(R(3, 5))) == R(3, 5)
