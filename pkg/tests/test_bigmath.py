from fractions import Fraction
from math import factorial

import pytest

from algebra.bigmath import (
    INFINITY,
    as_rational,
    binom,
    catalan,
    digit_sum,
    falling,
    is_prime,
    require_prime,
    unit_part,
    vp,
    vp_factorial,
    vp_rat,
)
from algebra.errors import InvalidInput, NotPrime


def test_vp():
    assert vp(49, 7) == 2
    assert vp(0, 5) is INFINITY
    assert vp(-12, 3) == 1
    assert vp(250, 5) == 3


def test_vp_rat():
    assert vp_rat(Fraction(7, 2), 7) == 1
    assert vp_rat(Fraction(5, 125), 5) == -2
    assert vp_rat(0, 3) is INFINITY


def test_infinity_ordering():
    assert INFINITY > 10**100
    assert not INFINITY < 3
    assert INFINITY + 3 is INFINITY
    assert min(INFINITY, 7) == 7


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_vp_factorial_matches_direct_valuation(p):
    for n in range(60):
        assert vp_factorial(n, p) == vp(factorial(n), p)


def test_vp_factorial_examples():
    assert vp_factorial(9, 3) == 4
    assert vp_factorial(0, 7) == 0
    assert vp_factorial(6, 7) == 0


def test_falling_and_binom():
    assert falling(5, 3) == 60
    assert falling(11, 0) == 1
    assert falling(3, 5) == 0
    assert binom(5, 1) == 5
    assert binom(4, 0) == 1
    assert binom(10, 2) == 45
    assert binom(3, -1) == 0
    assert [binom(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]


def test_catalan_and_digit_sum():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert digit_sum(10, 3) == 2
    assert unit_part(250, 5) == 2


def test_as_rational():
    assert as_rational("3/6") == Fraction(1, 2)
    value = as_rational("4/2")
    assert value == 2 and isinstance(value, int)
    assert as_rational(Fraction(6, 3)) == 2
    with pytest.raises(InvalidInput):
        as_rational("x")
    with pytest.raises(InvalidInput):
        as_rational("1/0")
    with pytest.raises(InvalidInput):
        as_rational(1.5)


def test_primes():
    assert is_prime(7)
    assert not is_prime(9)
    assert require_prime(13) == 13
    with pytest.raises(NotPrime):
        require_prime(9)
