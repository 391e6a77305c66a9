"""
algebra.bigmath - Exact integers, rationals and p-adic valuations

Integers are Python ints, rationals are `fractions.Fraction` (always reduced, positive
denominator). Valuations of zero are the explicit `INFINITY` value, never a large int.
"""

from fractions import Fraction
from functools import total_ordering
from math import comb, factorial

from sympy import isprime

from algebra.errors import InvalidInput, NotPrime

Rational = int | Fraction


@total_ordering
class Infinity:
    """The valuation of zero. Compares above every integer and absorbs addition"""

    _instance = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Infinity)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (Infinity, int)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("INFINITY")

    def __add__(self, other: "int | Infinity") -> "Infinity":
        return self

    __radd__ = __add__

    def __repr__(self) -> str:
        return "INFINITY"

    __str__ = __repr__


INFINITY = Infinity()

Valuation = int | Infinity


def as_rational(value: Rational | str) -> Rational:
    """Normalise an int, a Fraction or a "num/den" string; integral values stay ints"""
    if isinstance(value, bool):
        raise InvalidInput(f"Not a number: {value!r}")
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as error:
            raise InvalidInput(f"Not an exact rational: {value!r}") from error
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise InvalidInput(f"Not an exact number: {value!r}")


def is_prime(p: int) -> bool:
    return isinstance(p, int) and isprime(p)


def require_prime(p: int) -> int:
    """Validate a prime at an API or CLI boundary; internals trust their caller"""
    if not is_prime(p):
        raise NotPrime(f"{p} is not a prime")
    return p


def vp(a: int, p: int) -> Valuation:
    """Exponent of the highest power of p dividing a, INFINITY for a = 0"""
    if a == 0:
        return INFINITY
    a = abs(a)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def vp_rat(x: Rational, p: int) -> Valuation:
    """v_p(num) - v_p(den) on the reduced form; may be negative"""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return vp(x.numerator, p) - vp(x.denominator, p)


def digit_sum(n: int, p: int) -> int:
    total = 0
    while n:
        n, d = divmod(n, p)
        total += d
    return total


def vp_factorial(n: int, p: int) -> int:
    """Legendre: v_p(n!) = (n - s_p(n)) / (p - 1)"""
    if n < 0:
        raise InvalidInput("vp_factorial needs n >= 0")
    return (n - digit_sum(n, p)) // (p - 1)


def falling(a: int, n: int) -> int:
    """(a)_n = a (a-1) ... (a-n+1), with (a)_0 = 1"""
    result = 1
    for i in range(n):
        result *= a - i
    return result


def binom(n: int, k: int) -> int:
    """Binomial coefficient for any integer n and k >= 0"""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return falling(n, k) // factorial(k)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def unit_part(a: int, p: int) -> int:
    """a / p^{v_p(a)} for a != 0"""
    while a % p == 0:
        a //= p
    return a
