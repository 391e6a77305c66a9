"""
algebra.polynomial - Integer polynomials a_0 + a_1 x + ... + a_m x^m (constant term first)
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import Poly, QQ, gcd as poly_gcd, symbols

from algebra.bigmath import Rational, as_rational, binom
from algebra.errors import InvalidInput

X = symbols("x")


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs) or (0,))

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        values = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InvalidInput(f"Integer coefficient expected, got {c!r}")
            values.append(c)
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """ "1,11,-5" -> 1 + 11x - 5x^2 """
        try:
            return cls.of(int(part) for part in text.split(","))
        except ValueError as error:
            raise InvalidInput(f"Comma-separated integers expected, got {text!r}") from error

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index] if 0 <= index < len(self.coeffs) else 0

    def __call__(self, x: Rational) -> Rational:
        total: Rational = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return as_rational(total)

    def evaluate_mod(self, x: int, modulus: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = (total * x + c) % modulus
        return total

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0,))

    def taylor_coefficient(self, r: Rational, j: int) -> Rational:
        """f^{(j)}(r) / j! = sum_i binom(i, j) a_i r^{i-j}"""
        return as_rational(sum((binom(i, j) * c * Fraction(r) ** (i - j) for i, c in enumerate(self.coeffs) if i >= j), Fraction(0)))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    def to_sympy(self) -> Poly:
        return Poly(list(reversed(self.coeffs)), X, domain=QQ)

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        """Primitive integer polynomial with a positive leading coefficient"""
        _, primitive = poly.clear_denoms(convert=True)
        _, primitive = primitive.primitive()
        values = [int(c) for c in reversed(primitive.all_coeffs())]
        if values[-1] < 0:
            values = [-c for c in values]
        return cls(tuple(values))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and self.degree > 0:
                continue
            terms.append(f"{c}" if i == 0 else (f"{c}*x" if i == 1 else f"{c}*x^{i}"))
        return " + ".join(terms).replace("+ -", "- ")


def gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """gcd over Q[x], scaled to a primitive integer polynomial"""
    return IntPolynomial.from_sympy(poly_gcd(f.to_sympy(), g.to_sympy()))


def exact_quotient(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    quotient, remainder = divmod(f.to_sympy(), g.to_sympy())
    if not remainder.is_zero:
        raise InvalidInput(f"{g} does not divide {f}")
    values = [Fraction(str(c)) for c in reversed(quotient.all_coeffs())]
    if any(v.denominator != 1 for v in values):
        raise InvalidInput(f"{f} / {g} is not an integer polynomial")
    return IntPolynomial(tuple(int(v) for v in values))


def rational_roots(f: IntPolynomial) -> list[Fraction]:
    """Distinct rational roots of f, read off its linear factors over Q"""
    if f.degree < 1:
        return []
    _, factors = f.to_sympy().factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() == 1:
            a, b = (Fraction(str(c)) for c in factor.all_coeffs())
            roots.append(-b / a)
    return sorted(roots)
