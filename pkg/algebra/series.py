"""
algebra.series - Truncated formal power series over exact rationals

`IntSeries` stores u_0 .. u_M densely (known mod x^{M+1}); every binary operation
truncates to the smaller order. Also home of the Lagrange inversion engine and of
the formal root of f(x) = 0 when f'(0) is invertible.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from algebra.bell import BellTable
from algebra.bigmath import Rational, as_rational, binom
from algebra.errors import (
    CompositionNeedsZeroConstant,
    DegenerateExponent,
    InvalidInput,
    LinearCoefficientZero,
    NotInvertible,
)
from systems.logging import Logger

logger: Logger = Logger("algebra.series", False)


@dataclass(frozen=True)
class IntSeries:
    coeffs: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidInput("A series needs at least its constant coefficient")

    @classmethod
    def of(cls, coeffs: Iterable[Rational | str], order: int) -> "IntSeries":
        """Pad with zeros or cut so that the series is known mod x^{order+1}"""
        values = [as_rational(c) for c in coeffs][: order + 1]
        values += [0] * (order + 1 - len(values))
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> "IntSeries":
        return cls.of([], order)

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls.of([1], order)

    @classmethod
    def variable(cls, order: int) -> "IntSeries":
        return cls.of([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> Rational:
        return self.coeffs[index] if 0 <= index < len(self.coeffs) else 0

    def truncate(self, order: int) -> "IntSeries":
        return IntSeries.of(self.coeffs, min(order, self.order))

    # -- ring operations --
    def __add__(self, other: "IntSeries | Rational") -> "IntSeries":
        if not isinstance(other, IntSeries):
            other = IntSeries.of([other], self.order)
        order = min(self.order, other.order)
        return IntSeries.of((self[i] + other[i] for i in range(order + 1)), order)

    __radd__ = __add__

    def __neg__(self) -> "IntSeries":
        return IntSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntSeries | Rational") -> "IntSeries":
        return self + (-other)

    def __rsub__(self, other: Rational) -> "IntSeries":
        return (-self) + other

    def __mul__(self, other: "IntSeries | Rational") -> "IntSeries":
        if not isinstance(other, IntSeries):
            factor = as_rational(other)
            return IntSeries(tuple(c * factor for c in self.coeffs))
        order = min(self.order, other.order)
        product: list[Rational] = [0] * (order + 1)
        for i in range(order + 1):
            a = self[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other[j]
                if b:
                    product[i + j] += a * b
        return IntSeries.of(product, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntSeries":
        base = self if exponent >= 0 else self.reciprocal()
        result = IntSeries.one(self.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self[i] == other[i] for i in range(order + 1))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def reciprocal(self) -> "IntSeries":
        """1/f by the coefficient recursion v_n = -(1/u_0) sum_{i=1}^n u_i v_{n-i}"""
        if self[0] == 0:
            raise NotInvertible("The constant coefficient is zero")
        head = Fraction(1) / Fraction(self[0])
        inverse: list[Rational] = [as_rational(head)]
        for n in range(1, self.order + 1):
            total = sum((self[i] * inverse[n - i] for i in range(1, n + 1)), start=Fraction(0))
            inverse.append(as_rational(-total * head))
        return IntSeries(tuple(inverse))

    def compose(self, inner: "IntSeries") -> "IntSeries":
        """f(g) for g(0) = 0, Horner scheme, order min(M_f, M_g)"""
        if inner[0] != 0:
            raise CompositionNeedsZeroConstant("The inner series must have a zero constant term")
        order = min(self.order, inner.order)
        inner = inner.truncate(order)
        result = IntSeries.of([self[order]], order)
        for i in range(order - 1, -1, -1):
            result = result * inner + self[i]
        return result

    def derivative(self) -> "IntSeries":
        """f' known mod x^M (one order is lost)"""
        if self.order == 0:
            return IntSeries.zero(0)
        return IntSeries(tuple(i * self.coeffs[i] for i in range(1, self.order + 1)))

    def shift(self) -> "IntSeries":
        """x * f, known one order further"""
        return IntSeries((0,) + self.coeffs)

    def substitute_scaled(self, factor: Rational) -> "IntSeries":
        """f(c x)"""
        factor = as_rational(factor)
        return IntSeries(tuple(as_rational(c * factor**i) for i, c in enumerate(self.coeffs)))

    def evaluate(self, x: Rational) -> Rational:
        """Exact value of the stored polynomial part at x"""
        total: Rational = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return as_rational(total)

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def to_ints(self) -> list[int]:
        if not self.is_integral():
            raise InvalidInput("The series has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(x^{self.order + 1})"


def mul(f: IntSeries, g: IntSeries) -> IntSeries:
    return f * g


def add(f: IntSeries, g: IntSeries) -> IntSeries:
    return f + g


def compose(f: IntSeries, g: IntSeries) -> IntSeries:
    return f.compose(g)


def reciprocal(f: IntSeries) -> IntSeries:
    return f.reciprocal()


# -- Lagrange inversion --


def lagrange_invert(alphas: Sequence[Rational], order: int) -> list[Rational]:
    """
    lagrange_invert - Coefficients of the compositional inverse of
    phi(t) = t (1 + sum alpha_r t^r / r!), namely phi^{-1}(u) = u (1 + sum beta_n u^n / n!) with

        beta_n = sum_{j=1}^n (-1)^j (n+j)! / (n+1)! B_{n,j}(alpha_1, alpha_2, ...)
    """

    if order < 1:
        raise InvalidInput("Inversion needs an order >= 1")
    table = BellTable(alphas[:order], order)
    betas: list[Rational] = []
    for n in range(1, order + 1):
        total: Rational = 0
        for j in range(1, n + 1):
            total += (-1) ** j * Fraction(factorial(n + j), factorial(n + 1)) * table(n, j)
        betas.append(as_rational(total))
    return betas


def from_scaled_coefficients(scaled: Sequence[Rational], order: int) -> IntSeries:
    """t (1 + sum s_r t^r / r!) as a series known mod t^{order+1}"""
    coeffs: list[Rational] = [0, 1]
    coeffs += [Fraction(as_rational(s), factorial(r)) for r, s in enumerate(scaled, start=1)]
    return IntSeries.of(coeffs, order)


@dataclass
class InversionProblem:
    alphas: tuple[Rational, ...]
    order: int
    betas: tuple[Rational, ...] = field(default=())

    @classmethod
    def solve(cls, alphas: Sequence[Rational], order: int) -> "InversionProblem":
        alphas = tuple(as_rational(a) for a in alphas[:order])
        alphas += (0,) * (order - len(alphas))
        return cls(alphas, order, tuple(lagrange_invert(alphas, order)))

    def phi(self) -> IntSeries:
        return from_scaled_coefficients(self.alphas, self.order + 1)

    def inverse(self) -> IntSeries:
        return from_scaled_coefficients(self.betas, self.order + 1)


# -- Formal roots of f(x) = a_0 + a_1 x + a_2 x^2 + ... --


@dataclass(frozen=True)
class RootTerm:
    n: int
    bracket: Rational
    value: Rational


def _check_linear(a: Sequence[Rational]) -> tuple[Rational, ...]:
    a = tuple(as_rational(c) for c in a)
    if len(a) < 2 or a[1] == 0:
        raise LinearCoefficientZero("The formal root needs an invertible linear coefficient")
    return a


def root_brackets(a: Sequence[Rational], n_max: int) -> list[Rational]:
    """
    root_brackets - For n = 0 .. n_max

        sum_{k=0}^n (-1)^{n-k+1} / (a_1^k (n+1)!) binom(2n+1, n-k) B_{n+k,k}(1! a_1, 2! a_2, ...)

    Only a_1, a_2, ... are used.
    """

    a = _check_linear(a)
    xs = [factorial(j) * a[j] for j in range(1, len(a))]
    table = BellTable(xs, 2 * n_max, n_max)
    brackets: list[Rational] = []
    for n in range(n_max + 1):
        total: Rational = 0
        for k in range(n + 1):
            total += Fraction(
                (-1) ** (n - k + 1) * binom(2 * n + 1, n - k) * table(n + k, k),
                factorial(n + 1),
            ) / Fraction(a[1]) ** k
        brackets.append(as_rational(total))
    return brackets


def root_brackets_alt(a: Sequence[Rational], n_max: int) -> list[Rational]:
    """Same brackets through sum_{j=0}^n (-1)^{n+j+1} / (a_1^j n!) (n+j)!/(n+1)! B_{n,j}(1! a_2, 2! a_3, ...)"""
    a = _check_linear(a)
    xs = [factorial(j) * a[j + 1] for j in range(1, len(a) - 1)]
    table = BellTable(xs, n_max)
    brackets: list[Rational] = []
    for n in range(n_max + 1):
        total: Rational = 0
        for j in range(n + 1):
            total += Fraction(
                (-1) ** (n + j + 1) * factorial(n + j) * table(n, j),
                factorial(n) * factorial(n + 1),
            ) / Fraction(a[1]) ** j
        brackets.append(as_rational(total))
    return brackets


def _terms(a: Sequence[Rational], brackets: list[Rational]) -> list[RootTerm]:
    ratio = Fraction(as_rational(a[0])) / Fraction(as_rational(a[1]))
    return [RootTerm(n, b, as_rational(b * ratio ** (n + 1))) for n, b in enumerate(brackets)]


def formal_root_terms(a: Sequence[Rational], n_max: int) -> list[RootTerm]:
    """Terms bracket_n (a_0/a_1)^{n+1} of the formal root of f(x) = 0, n = 0 .. n_max"""
    return _terms(a, root_brackets(a, n_max))


def formal_root_terms_alt(a: Sequence[Rational], n_max: int) -> list[RootTerm]:
    return _terms(a, root_brackets_alt(a, n_max))


def formal_root_series(a: Sequence[Rational], order: int) -> IntSeries:
    """The formal root as a series in the indeterminate t = a_0 (a[0] is ignored)"""
    a = _check_linear(a)
    coeffs: list[Rational] = [0]
    for n, bracket in enumerate(root_brackets(a, order - 1)):
        coeffs.append(as_rational(Fraction(bracket) / Fraction(a[1]) ** (n + 1)))
    return IntSeries.of(coeffs, order)


def substitute_root(a: Sequence[Rational], root: IntSeries) -> IntSeries:
    """f(x(t)) with a_0 replaced by the indeterminate t"""
    a = tuple(as_rational(c) for c in a)
    order = root.order
    value = IntSeries.variable(order)
    power = IntSeries.one(order)
    for coefficient in a[1:]:
        power = power * root
        value = value + power * coefficient
    return value


@dataclass(frozen=True)
class TrinomialTerm:
    k: int
    power: int
    coefficient: Rational
    value: Rational


def trinomial_root_terms(m: int, pcoef: Rational, q: Rational, k_max: int) -> list[TrinomialTerm]:
    """
    trinomial_root_terms - Root of x^m + p x - q = 0,

        x = sum_k (-1)^k / p^k binom(mk, k) 1/((m-1)k+1) (q/p)^{(m-1)k+1}

    `coefficient` is the factor of q^power, `value` the term at the given q.
    """

    if m <= 1:
        raise DegenerateExponent(f"The exponent must exceed 1, got {m}")
    pcoef = Fraction(as_rational(pcoef))
    if pcoef == 0:
        raise LinearCoefficientZero("The linear coefficient p must be nonzero")
    q = as_rational(q)
    terms: list[TrinomialTerm] = []
    for k in range(k_max + 1):
        power = (m - 1) * k + 1
        coefficient = Fraction((-1) ** k * binom(m * k, k), power) / pcoef ** (k + power)
        terms.append(TrinomialTerm(k, power, as_rational(coefficient), as_rational(coefficient * q**power)))
    return terms
