"""
algebra.bell - Partial Bell polynomials evaluated on exact sequences

B_{n,k}(x_1, x_2, ...) is computed with the binomial recurrence
    B_{n,k} = sum_{j=1}^{n-k+1} binom(n-1, j-1) x_j B_{n-j,k-1}
and checked against the direct sum over pi(n, k) (`bell_oracle`). Entries past the
end of the input sequence are zero.
"""

from fractions import Fraction
from math import factorial
from typing import Sequence

from sympy.utilities.iterables import partitions

from algebra.bigmath import Rational, as_rational, binom, falling
from algebra.errors import OracleTooLarge
from systems.config import config
from systems.logging import Logger

logger: Logger = Logger("algebra.bell", False)


class BellTable:
    """
    BellTable - Memo of B_{n,k}(xs) for 0 <= k <= n <= n_max

    Built once, read-only afterwards. Integer inputs keep integer entries.
    """

    def __init__(self, xs: Sequence[Rational], n_max: int, k_max: int | None = None) -> None:
        self.xs: tuple[Rational, ...] = tuple(as_rational(x) for x in xs)
        self.n_max: int = n_max
        self.k_max: int = n_max if k_max is None else min(k_max, n_max)

        # rows[k][n] = B_{n,k}
        self.rows: list[list[Rational]] = [[1] + [0] * n_max]
        for k in range(1, self.k_max + 1):
            previous = self.rows[k - 1]
            row: list[Rational] = [0] * (n_max + 1)
            for n in range(k, n_max + 1):
                total: Rational = 0
                for j in range(1, min(n - k + 1, len(self.xs)) + 1):
                    x = self.xs[j - 1]
                    if x:
                        total += binom(n - 1, j - 1) * x * previous[n - j]
                row[n] = total
            self.rows.append(row)

        logger.log(f"Bell table built up to n={n_max}, k={self.k_max}", "table")

    def __call__(self, n: int, k: int) -> Rational:
        if k < 0 or n < 0 or k > n:
            return 0
        if n > self.n_max or k > self.k_max:
            raise IndexError(f"B_({n},{k}) is outside of this table")
        return self.rows[k][n]


def bell(n: int, k: int, xs: Sequence[Rational]) -> Fraction:
    """Exact B_{n,k}(xs), 0 outside 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return Fraction(BellTable(xs, n, k)(n, k))


def _sum_over_partitions(n: int, k: int, xs: tuple[Rational, ...]) -> Fraction:
    total = Fraction(0)
    for block in partitions(n, m=k):
        block = dict(block)
        if sum(block.values()) != k or sum(size * count for size, count in block.items()) != n:
            continue
        term = Fraction(factorial(n))
        for size, count in block.items():
            x = xs[size - 1] if size <= len(xs) else 0
            term *= Fraction(x, factorial(size)) ** count / factorial(count)
        total += term
    return total


def bell_oracle(n: int, k: int, xs: Sequence[Rational]) -> Fraction:
    """
    bell_oracle - B_{n,k} as the sum over all i in pi(n, k) of
    n! / (i_1! i_2! ...) * prod (x_j / j!)^{i_j}

    Reference implementation only, exponential in n.
    """

    limit = config.bell.oracle_limit
    if n > limit:
        raise OracleTooLarge(f"Partition enumeration is limited to n <= {limit}, got {n}")
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    return _sum_over_partitions(n, k, tuple(as_rational(x) for x in xs))


def bell_falling(n: int, k: int, a: int) -> Fraction:
    """B_{n,k}((a)_1, (a)_2, ...) = 1/k! sum_{j=0}^k (-1)^{k-j} binom(k, j) (ja)_n"""
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    total = sum((-1) ** (k - j) * binom(k, j) * falling(j * a, n) for j in range(k + 1))
    return Fraction(total, factorial(k))


def falling_sequence(a: int, length: int) -> list[int]:
    """((a)_1, ..., (a)_length), the input sequence of `bell_falling`"""
    return [falling(a, j) for j in range(1, length + 1)]
