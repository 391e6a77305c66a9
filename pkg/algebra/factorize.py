"""
algebra.factorize - Reducibility and explicit factorizations in Z[[x]]

Handles f(x) = p^w + p^m gamma_1 x + gamma_2 x^2 + ... (polynomial or power series)
through a root r = p^ell (1 + sum e_j p^{ell j}) of f in pZ_p:

    f = A B,  A = p^ell - x - x sum a_n x^n,
              B = p^{w-ell} + (p^{w-2ell} + p^{m-ell} gamma_1) x + x sum b_n x^n

The a_n come from inverting phi(x) = x E(x), E = 1 + sum e_j x^j. The b_n come from the
reciprocal 1 + x + x sum t_n x^n of A(p^ell x) / p^ell. Every lemma the construction rests
on is re-checked and reported in `FactorPair.checks`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from sympy import factorint

from algebra.bell import BellTable
from algebra.bigmath import Rational, as_rational, vp, vp_rat
from algebra.errors import (
    DerivativeNotUnit,
    DivisibilityViolation,
    EvenPrime,
    InsufficientCongruence,
    InsufficientPrecision,
    IntegralityViolation,
    InvalidInput,
    LemmaViolation,
    NoMultipleRoot,
    NonIntegralShift,
    NoSuitableRoot,
    NotARootModP,
    PrimeMismatch,
    UnitPartNotOne,
    UnsupportedShape,
    WrongValuation,
)
from algebra.hensel import lift_general
from algebra.padic import PadicInt
from algebra.polynomial import IntPolynomial, exact_quotient, gcd, rational_roots
from algebra.series import IntSeries, lagrange_invert
from systems.config import config
from systems.logging import Logger

logger: Logger = Logger("algebra.factorize", False)

UNIT = "Unit"
IRREDUCIBLE_PRIME = "IrreduciblePrime"
IRREDUCIBLE_PRIME_POWER = "IrreduciblePrimePowerUnitLinear"
REDUCIBLE_COMPOSITE = "ReducibleComposite"
NEEDS_ROOT_ANALYSIS = "NeedsRootAnalysis"
DIVISIBLE_BY_X = "DivisibleByX"


# -- Inputs --


@dataclass(frozen=True)
class SeriesInput:
    """
    SeriesInput - Coefficients c_0 .. c_K of a polynomial or power series

    With `ratio` set, the tail continues geometrically: c_{K+i} = c_K ratio^i.
    """

    coeffs: tuple[int, ...]
    ratio: int | None = None

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidInput("At least one coefficient is needed")

    @classmethod
    def wrap(cls, source: "SeriesInput | IntPolynomial") -> "SeriesInput":
        if isinstance(source, SeriesInput):
            return source
        return cls(source.coeffs)

    @classmethod
    def parse(cls, coeffs: str, tail: str = "zero") -> "SeriesInput":
        """ "9,12,7,8", "geometric:1" -> 9 + 12x + 7x^2 + 8x^3/(1 - x) """
        values = IntPolynomial.parse(coeffs).coeffs
        if tail == "zero":
            return cls(values)
        kind, _, ratio = tail.partition(":")
        if kind != "geometric":
            raise InvalidInput(f"Tail must be 'zero' or 'geometric:<ratio>', got {tail!r}")
        try:
            return cls(tuple(int(c) for c in coeffs.split(",")), int(ratio))
        except ValueError as error:
            raise InvalidInput(f"Integer ratio expected, got {ratio!r}") from error

    @property
    def is_polynomial(self) -> bool:
        return self.ratio is None

    @property
    def degree(self) -> int | None:
        return IntPolynomial(self.coeffs).degree if self.is_polynomial else None

    @property
    def tail(self) -> str:
        return "zero" if self.ratio is None else f"geometric:{self.ratio}"

    def coefficient(self, i: int) -> int:
        last = len(self.coeffs) - 1
        if i <= last:
            return self.coeffs[i]
        if self.ratio is None:
            return 0
        return self.coeffs[last] * self.ratio ** (i - last)

    def truncated(self, degree: int) -> IntPolynomial:
        if self.is_polynomial:
            return IntPolynomial(self.coeffs)
        return IntPolynomial(tuple(self.coefficient(i) for i in range(degree + 1)))

    def evaluate_exact(self, x: Rational) -> Rational:
        """f(x) in closed form, the geometric tail summing to c_K x^K / (1 - ratio x)"""
        if self.ratio is None:
            return IntPolynomial(self.coeffs)(x)
        last = len(self.coeffs) - 1
        head = IntPolynomial(self.coeffs[:last] or (0,))(x)
        denominator = 1 - self.ratio * Fraction(x)
        if denominator == 0:
            raise InvalidInput(f"The geometric tail diverges at x = {x}")
        return as_rational(head + self.coeffs[last] * Fraction(x) ** last / denominator)

    def as_series(self, order: int) -> IntSeries:
        return IntSeries.of((self.coefficient(i) for i in range(order + 1)), order)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "tail": self.tail}


@dataclass(frozen=True)
class Classification:
    kind: str
    p: int | None = None
    w: int | None = None
    m: int | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.p, "w": self.w, "m": self.m}


def classify(f0: int, f1: int) -> Classification:
    """
    classify - Case analysis on |f(0)|
    ---
    A unit f(0) makes f a unit, a prime f(0) makes it irreducible, and so does p^w with
    p ∤ f_1. A composite f(0) that is not a prime power always gives a reducible f. The
    remaining case p^w, p | f_1 depends on the roots of f in pZ_p.
    """

    if f0 == 0:
        return Classification(DIVISIBLE_BY_X)
    if abs(f0) == 1:
        return Classification(UNIT)
    factors = factorint(abs(f0))
    if len(factors) > 1:
        return Classification(REDUCIBLE_COMPOSITE)
    ((p, w),) = factors.items()
    p, w = int(p), int(w)
    if w == 1:
        return Classification(IRREDUCIBLE_PRIME, p, 1)
    if f1 == 0:
        return Classification(NEEDS_ROOT_ANALYSIS, p, w, None)
    m = vp(f1, p)
    if m == 0:
        return Classification(IRREDUCIBLE_PRIME_POWER, p, w, 0)
    return Classification(NEEDS_ROOT_ANALYSIS, p, w, m)


@dataclass(frozen=True)
class FactorizationProblem:
    p: int
    w: int
    m: int
    gammas: tuple[Rational, ...]
    order: int

    def gamma(self, j: int) -> Rational:
        return self.gammas[j - 1] if 1 <= j <= len(self.gammas) else 0

    @classmethod
    def from_coefficients(
        cls, coefficient: Callable[[int], Rational], p: int, w: int, m: int, length: int, order: int
    ) -> "FactorizationProblem":
        gammas = [as_rational(Fraction(coefficient(1)) / p**m)]
        gammas += [as_rational(coefficient(j)) for j in range(2, length + 1)]
        return cls(p, w, m, tuple(gammas), order)


@dataclass(frozen=True)
class RootDigits:
    p: int
    ell: int
    digits: tuple[int, ...]

    def e(self, j: int) -> int:
        return self.digits[j - 1] if 1 <= j <= len(self.digits) else 0

    def alphas(self) -> list[int]:
        """(1! e_1, 2! e_2, ...)"""
        return [factorial(j) * e for j, e in enumerate(self.digits, start=1)]

    def series(self, order: int) -> IntSeries:
        """E(x) = 1 + sum e_j x^j"""
        return IntSeries.of([1, *self.digits], order)

    def root(self) -> int:
        block = self.p**self.ell
        return block * (1 + sum(e * block**j for j, e in enumerate(self.digits, start=1)))


def root_to_digits(r: PadicInt, ell: int, order: int) -> RootDigits:
    """
    root_to_digits - Digits e_1 .. e_M of r = p^ell (1 + sum e_j p^{ell j}), 0 <= e_j < p^ell
    ---
    params:
        - r: PadicInt = Root known mod p^N with N >= ell (M + 3)
        - ell: int = Valuation of r
        - order: int = Number of digits M
    """

    if r.valuation() != ell:
        raise WrongValuation(f"v_p(r) is {r.valuation()}, expected {ell}")
    if r.precision < ell * (order + 3):
        raise InsufficientPrecision(f"Need r mod {r.p}^{ell * (order + 3)}, got {r.p}^{r.precision}")
    block = r.p**ell
    unit = r.residue // block
    if unit % block != 1:
        raise UnitPartNotOne(f"The unit part of r is {unit % block} mod {block}, rescale first")
    rest = (unit - 1) // block
    digits = []
    for _ in range(order):
        rest, d = divmod(rest, block)
        digits.append(d)
    return RootDigits(r.p, ell, tuple(digits))


# -- Coefficients --


def _integral(values: list[Rational], name: str) -> list[int]:
    for n, value in enumerate(values, start=1):
        if Fraction(value).denominator != 1:
            raise IntegralityViolation(f"{name}_{n} = {value} is not an integer")
    return [int(value) for value in values]


def a_coeffs(digits: RootDigits, order: int) -> list[int]:
    """a_n = beta_n / n!, with beta the Lagrange inversion of (1! e_1, 2! e_2, ...)"""
    alphas = digits.alphas()[:order]
    alphas += [0] * (order - len(alphas))
    betas = lagrange_invert(alphas, order)
    return _integral([Fraction(beta, factorial(n)) for n, beta in enumerate(betas, start=1)], "a")


def t_coeffs(digits: RootDigits, order: int) -> list[int]:
    """
    t_coeffs - t_1 .. t_M with

        t_n = 1 + sum_{k=1}^n p^{ell k} (n+1-k)/k! sum_{j=1}^k (-1)^j (n+j)!/(n+1)! B_{k,j}(1! e_1, 2! e_2, ...)
    """

    table = BellTable(digits.alphas()[:order], order)
    block = digits.p**digits.ell
    values: list[Rational] = []
    for n in range(1, order + 1):
        total = Fraction(1)
        for k in range(1, n + 1):
            inner = sum(
                (-1) ** j * Fraction(factorial(n + j), factorial(n + 1)) * table(k, j)
                for j in range(1, k + 1)
            )
            total += block**k * Fraction(n + 1 - k, factorial(k)) * inner
        values.append(total)
    return _integral(values, "t")


def tn_series(digits: RootDigits, n: int, order: int) -> IntSeries:
    """T_n = E^{-n-2} (E + x E') for n >= 1, T_{-k} = E^{k+1} T_1 for k >= 0"""
    e = digits.series(order)
    if n >= 1:
        return e ** (-n - 2) * (e + e.derivative().shift())
    return e ** (1 - n) * tn_series(digits, 1, order)


@dataclass(frozen=True)
class BHat:
    bhat: tuple[Rational, ...]
    b: tuple[Rational, ...]


def bhat_coeffs(problem: FactorizationProblem, ell: int, t: list[int]) -> BHat:
    """
    bhat_coeffs - b^_n = p^{w-2ell} t_n + p^{m-ell} gamma_1 t_{n-1} + sum_{j>=2} p^{ell(j-2)} gamma_j t_{n-j}
    ---
    with t_0 = t_{-1} = 1 and t_{-n} = 0 below. Each b^_n must be divisible by p^{ell n}, and
    b_n = b^_n / p^{ell n}.
    """

    p = problem.p

    def t_at(k: int) -> int:
        if k >= 1:
            return t[k - 1]
        return 1 if k >= -1 else 0

    bhats: list[Rational] = []
    bs: list[Rational] = []
    for n in range(1, len(t) + 1):
        value = Fraction(p) ** (problem.w - 2 * ell) * t_at(n)
        value += Fraction(p) ** (problem.m - ell) * problem.gamma(1) * t_at(n - 1)
        for j in range(2, n + 2):
            value += Fraction(p) ** (ell * (j - 2)) * problem.gamma(j) * t_at(n - j)
        if vp_rat(value, p) < ell * n:
            raise DivisibilityViolation(f"b^_{n} = {value} is not divisible by {p}^{ell * n}")
        bhats.append(as_rational(value))
        bs.append(as_rational(value / Fraction(p) ** (ell * n)))
    return BHat(tuple(bhats), tuple(bs))


# -- Lemma certificates --


def check_tn_congruences(digits: RootDigits, t: list[int], order: int) -> bool:
    """T_nu(p^ell) = t_nu mod p^{ell (nu + 2)} for nu in [-1, M], with t_0 = t_{-1} = 1"""
    block = digits.p**digits.ell
    for nu in range(-1, order + 1):
        series = tn_series(digits, nu, order + 1)
        value = sum(Fraction(series[i]) * block**i for i in range(nu + 2))
        target = t[nu - 1] if nu >= 1 else 1
        if vp_rat(value - target, digits.p) < digits.ell * (nu + 2):
            logger.warn(f"T_{nu}(p^ell) and t_{nu} differ", "lemmas")
            return False
    return True


def check_reciprocal(digits: RootDigits, a: list[int], t: list[int], order: int) -> bool:
    """(1 - x - x sum p^{ell n} a_n x^n) (1 + x + x sum t_n x^n) = 1 mod x^{M+2}"""
    block = digits.p**digits.ell
    ahat = IntSeries.of([1, -1] + [-(block**n) * a_n for n, a_n in enumerate(a, start=1)], order + 1)
    inverse = IntSeries.of([1, 1, *t], order + 1)
    return ahat * inverse == IntSeries.one(order + 1)


def check_recurrence(digits: RootDigits, lowest: int, order: int) -> bool:
    """T_{n-1} = E T_n for n in (lowest, M]"""
    e = digits.series(order + 1)
    previous = tn_series(digits, lowest, order + 1)
    for n in range(lowest + 1, order + 1):
        current = tn_series(digits, n, order + 1)
        if previous != e * current:
            return False
        previous = current
    return True


# -- Factorization --


@dataclass
class FactorPair:
    p: int
    ell: int
    order: int
    A: IntSeries
    B: IntSeries
    root: PadicInt
    digits: RootDigits
    scale: int = 1
    checks: dict[str, bool] = field(default_factory=dict)
    a: tuple[int, ...] = ()
    t: tuple[int, ...] = ()
    bhat: tuple[Rational, ...] = ()

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "ell": self.ell,
            "order": self.order,
            "A": [str(c) for c in self.A.coeffs],
            "B": [str(c) for c in self.B.coeffs],
            "root": self.root.to_json(),
            "root_digits": list(self.digits.digits),
            "scale": self.scale,
            "checks": dict(self.checks),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FactorPair":
        order = int(data["order"])
        return cls(
            p=int(data["p"]),
            ell=int(data["ell"]),
            order=order,
            A=IntSeries.of(data["A"], order),
            B=IntSeries.of(data["B"], order),
            root=PadicInt.from_json(data["root"]),
            digits=RootDigits(int(data["p"]), int(data["ell"]), tuple(int(d) for d in data["root_digits"])),
            scale=int(data.get("scale", 1)),
            checks=dict(data.get("checks", {})),
        )


def _candidates(poly: IntPolynomial, p: int, ell: int) -> list[int]:
    block = p**ell
    return [block * s for s in range(1, p) if poly.evaluate_mod(block * s, block * p) == 0]


def find_root(source: SeriesInput, p: int, ell: int, precision: int) -> PadicInt | None:
    """
    find_root - Root r of f with v_p(r) = ell, known mod p^precision, or None
    ---
    Residues r_0 = p^ell s are refined level by level while f(r_0) = 0 mod p^D. At each level
    exact roots are taken directly, otherwise the first seed with 2 kappa < nu is lifted.
    Smallest residues are tried first.
    """

    poly = source.truncated(2 * precision + config.factorize.series_margin)
    level = ell + 1
    candidates = _candidates(poly, p, ell)
    while candidates and level <= ell + config.factorize.scan_depth:
        logger.log(f"ell={ell}: {len(candidates)} candidates mod {p}^{level}", "scan")
        for r0 in candidates:
            if source.evaluate_exact(r0) == 0:
                logger.log(f"Exact root {r0}", "scan")
                return PadicInt.from_int(r0, p, precision)
            try:
                report = lift_general(poly, r0, p, precision)
            except (InsufficientCongruence, DerivativeNotUnit, NotARootModP, NonIntegralShift, EvenPrime):
                continue
            if report.root.valuation() == ell:
                return report.root

        modulus = p**level
        candidates = sorted(
            r + k * modulus
            for r in candidates
            for k in range(p)
            if poly.evaluate_mod(r + k * modulus, modulus * p) == 0
        )[: config.factorize.candidate_cap]
        level += 1
    return None


def rational_root(source: SeriesInput, p: int, ell: int, precision: int) -> PadicInt | None:
    """Rational root of a polynomial f with v_p = ell, multiple roots included"""
    if not source.is_polynomial:
        return None
    for r in rational_roots(IntPolynomial(source.coeffs)):
        if r != 0 and vp_rat(r, p) == ell:
            logger.log(f"Rational root {r}", "scan")
            return PadicInt.from_rat(r, p, precision)
    return None


def _acquire_root(source: SeriesInput, p: int, w: int, m: int, order: int) -> tuple[PadicInt, int]:
    for ell in range(1, min(m, w) + 1):
        precision = ell * (order + 2 + config.factorize.extra_blocks)
        root = find_root(source, p, ell, precision)
        if root is None:
            root = rational_root(source, p, ell, precision)
        if root is not None:
            logger.success(f"Found root {root.render(config.output.digits_shown)} with ell={ell}")
            return root, ell

    squarefree = True
    if source.is_polynomial:
        poly = IntPolynomial(source.coeffs)
        squarefree = gcd(poly, poly.derivative()).degree < 1
    necessity_known = source.is_polynomial and (source.degree or 0) <= 3 and squarefree
    message = f"No root of valuation <= {min(m, w)} in {p}Z_{p}"
    if necessity_known:
        message += ", f(x) is irreducible"
    elif not squarefree:
        message += ", gcd(f, f') is not constant: try the multiple root split (factor --multiple)"
    raise NoSuitableRoot(message, fallback_applies=w > 2 * m, necessity_known=necessity_known)


def factor(
    source: SeriesInput | IntPolynomial,
    order: int,
    root: PadicInt | None = None,
    p: int | None = None,
) -> FactorPair:
    """
    factor - f = A B in Z[[x]], both factors known mod x^{M+1}
    ---
    params:
        - source: SeriesInput | IntPolynomial = f(x) = p^w + p^m gamma_1 x + ...
        - order: int = Truncation order M
        - root: PadicInt | None = Root in pZ_p to use, searched for when omitted
        - p: int | None = Expected prime, inferred from f(0) when omitted

    When the root's unit part is not 1 mod p^ell, g(x) = f(x/c) is factored instead, c the
    inverse of that unit part mod p^ell, and A(x) = A_g(c x), B(x) = B_g(c x).
    """

    source = SeriesInput.wrap(source)
    if order < 1:
        raise InvalidInput("The truncation order must be >= 1")
    shape = classify(source.coefficient(0), source.coefficient(1))
    if shape.kind != NEEDS_ROOT_ANALYSIS or shape.m is None or source.coefficient(0) < 0:
        raise UnsupportedShape(f"f is not of the form p^w + p^m gamma_1 x + ... ({shape.kind})")
    if p is not None and p != shape.p:
        raise PrimeMismatch(f"f(0) is a power of {shape.p}, not of {p}")
    p, w, m = shape.p, shape.w, shape.m
    if p == 2:
        raise EvenPrime("The factorization needs an odd prime")
    if source.is_polynomial and source.degree < 2:
        raise UnsupportedShape("f must have degree >= 2")

    if root is None:
        root, ell = _acquire_root(source, p, w, m, order)
    else:
        if root.p != p:
            raise PrimeMismatch(f"The root lives in Z_{root.p}, f(0) is a power of {p}")
        ell = root.valuation()
        if not isinstance(ell, int) or not 1 <= ell <= m:
            raise WrongValuation(f"The root must have valuation in [1, {m}], got {ell}")
        # terms of degree > precision vanish mod p^precision since v_p(root) >= 1
        if source.truncated(root.precision).evaluate_mod(root.residue, root.modulus):
            raise NotARootModP(f"f({root.residue}) is not divisible by {p}^{root.precision}")
    if 2 * ell > w:
        raise LemmaViolation(f"A root of valuation {ell} <= m forces 2*{ell} <= w = {w}")

    block = p**ell
    unit = (root.residue // block) % block
    scale = 1 if unit == 1 else pow(unit, -1, block)
    if scale != 1:
        logger.log(f"Unit part {unit} mod {block}, rescaling x -> x/{scale}")
    length = order + 1 if source.degree is None else min(source.degree, order + 1)
    problem = FactorizationProblem.from_coefficients(
        lambda i: Fraction(source.coefficient(i), scale**i), p, w, m, max(length, 2), order
    )

    digits = root_to_digits(root * scale, ell, order)
    a = a_coeffs(digits, order)
    t = t_coeffs(digits, order)
    hat = bhat_coeffs(problem, ell, t)

    a_g = IntSeries.of([block, -1] + [-a_n for a_n in a], order)
    b_g = IntSeries.of(
        [p ** (w - ell), Fraction(p) ** (w - 2 * ell) + Fraction(p) ** (m - ell) * problem.gamma(1), *hat.b],
        order,
    )
    a_series, b_series = a_g.substitute_scaled(scale), b_g.substitute_scaled(scale)
    if not (a_series.is_integral() and b_series.is_integral()):
        raise IntegralityViolation("A or B has a non-integral coefficient")

    reconstructed = digits.root()
    annihilation = block - reconstructed - sum(a_n * reconstructed ** (n + 1) for n, a_n in enumerate(a, start=1))
    checks = {
        "product": a_series * b_series == source.as_series(order),
        "divisibility": all(vp_rat(value, p) >= ell * n for n, value in enumerate(hat.bhat, start=1)),
        "valuation_bound": 2 * ell <= w,
        "tn_congruences": check_tn_congruences(digits, t, order),
        "reciprocal": check_reciprocal(digits, a, t, order),
        "recurrence": check_recurrence(digits, -len(problem.gammas), order),
        "root_annihilation": vp(annihilation, p) >= ell * (order + 2),
    }
    failed = [name for name, passed in checks.items() if not passed]
    if failed:
        raise LemmaViolation(f"Certificate(s) failed: {', '.join(failed)}")

    logger.success(f"Factored with ell={ell}, A = {a_series}")
    return FactorPair(p, ell, order, a_series, b_series, root, digits, scale, checks, tuple(a), tuple(t), hat.bhat)


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    mismatches: tuple[int, ...]
    checks: dict[str, bool]

    def to_json(self) -> dict:
        return {"passed": self.passed, "mismatches": list(self.mismatches), "checks": dict(self.checks)}


def verify_factorization(source: SeriesInput | IntPolynomial, pair: FactorPair, order: int) -> VerificationReport:
    source = SeriesInput.wrap(source)
    order = min(order, pair.A.order, pair.B.order)
    product = pair.A * pair.B
    mismatches = tuple(i for i in range(order + 1) if product[i] != source.coefficient(i))
    checks = {
        "product": not mismatches,
        "constant": pair.A[0] * pair.B[0] == source.coefficient(0),
        "integral": pair.A.is_integral() and pair.B.is_integral(),
    }
    return VerificationReport(all(checks.values()), mismatches, checks)


# -- Multiple roots --


@dataclass(frozen=True)
class MultipleRootSplit:
    G: IntPolynomial
    reduced: IntPolynomial

    def to_json(self) -> dict:
        return {"G": list(self.G.coeffs), "reduced": list(self.reduced.coeffs)}


def _has_root_in_pzp(g: IntPolynomial, p: int) -> bool:
    if g[0] == 0:
        return True
    source = SeriesInput(g.coeffs)
    for ell in range(1, vp(g[0], p) + 1):
        if find_root(source, p, ell, ell + 1) is not None:
            return True
    return False


def factor_multiple_root(f: IntPolynomial, p: int | None = None) -> MultipleRootSplit:
    """
    factor_multiple_root - f = G f_red with G = gcd(f, f'), when G has a root in pZ_p
    ---
    G is the primitive integer representative with a positive leading coefficient.
    """

    if p is None:
        if f[0] == 0:
            raise InvalidInput("f(0) = 0, the prime cannot be inferred")
        primes = list(factorint(abs(f[0])))
        if len(primes) != 1:
            raise InvalidInput(f"f(0) = {f[0]} is not a prime power, give the prime explicitly")
        p = int(primes[0])

    g = gcd(f, f.derivative())
    if g.degree < 1:
        raise NoMultipleRoot(f"{f} is squarefree")
    if not _has_root_in_pzp(g, p):
        raise NoMultipleRoot(f"gcd(f, f') = {g} has no root in {p}Z_{p}")
    reduced = exact_quotient(f, g)
    if g * reduced != f:
        raise LemmaViolation("G * f_red differs from f")
    return MultipleRootSplit(g, reduced)
