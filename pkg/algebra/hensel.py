"""
algebra.hensel - Explicit Hensel lifts in Z_p

A root r_0 of f modulo p (or p^nu) is lifted by summing the formal root of the
shifted polynomial g(x) = p^{-2 kappa} f(r_0 + p^kappa x). Every term is an exact
rational of positive valuation, so the partial sum reduces cleanly mod p^N. The
number of terms comes from the Legendre bound on v_p((n+1)!), and every result is
certified afterwards by f(root) = 0 mod p^N.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from algebra.bigmath import INFINITY, Rational, Valuation, as_rational, binom, catalan, vp, vp_rat
from algebra.errors import (
    AlgebraError,
    BadExponents,
    DerivativeNotUnit,
    EvenPrime,
    InsufficientCongruence,
    NonIntegralShift,
    NotARootModP,
    NotDivisible,
    OutOfRange,
    PrecisionExhausted,
)
from algebra.padic import PadicInt
from algebra.polynomial import IntPolynomial
from algebra.series import formal_root_terms
from systems.config import config
from systems.logging import Logger

logger: Logger = Logger("algebra.hensel", False)


@dataclass(frozen=True)
class ShiftedTaylor:
    """c_j = p^{(j-2) kappa} f^{(j)}(r_0) / j!, so that sum c_j x^j = p^{-2 kappa} f(r_0 + p^kappa x)"""

    cs: tuple[Rational, ...]
    r0: int
    kappa: int
    p: int

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial.of(int(c) for c in self.cs)

    def __call__(self, x: Rational) -> Rational:
        total: Rational = 0
        for c in reversed(self.cs):
            total = total * x + c
        return as_rational(total)


@dataclass(frozen=True)
class LiftReport:
    root: PadicInt
    terms_used: int
    residual_valuation: Valuation
    seed: int
    method: str

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "seed": self.seed,
            "root": self.root.to_json(),
            "residue": self.root.residue,
            "terms_used": self.terms_used,
            "residual_valuation": str(self.residual_valuation),
        }


def taylor_shift(f: IntPolynomial, r0: int, kappa: int, p: int) -> ShiftedTaylor:
    cs = []
    for j in range(max(f.degree, 0) + 1):
        c = Fraction(f.taylor_coefficient(r0, j)) * Fraction(p) ** ((j - 2) * kappa)
        if vp_rat(c, p) < 0:
            raise NonIntegralShift(f"c_{j} = {c} is not {p}-integral: 2*kappa = {2 * kappa} is too large for r0 = {r0}")
        cs.append(as_rational(c))
    return ShiftedTaylor(tuple(cs), r0, kappa, p)


def truncation_index(v0: Valuation, p: int, precision: int) -> int:
    """
    truncation_index - Number of series terms needed for precision N

    The n-th term has valuation >= (n+1) v0 - v_p((n+1)!) > n (v0 - 1/(p-1)) + v0, so every
    term from the returned index on is divisible by p^N.
    """

    if v0 is INFINITY:
        return 0
    slope = v0 * (p - 1) - 1
    if slope <= 0:
        raise EvenPrime(f"v_p(c_0) = {v0} gives no convergence margin for p = {p}")
    return max(0, -(-(precision - v0) * (p - 1) // slope))


def series_root_terms(cs: tuple[Rational, ...], n_terms: int) -> list[Rational]:
    """The terms gamma_n c_0^{n+1} / (n+1)! of the Hensel series, n < n_terms"""
    if n_terms <= 0:
        return []
    return [term.value for term in formal_root_terms(cs, n_terms - 1)]


def _report(f: IntPolynomial, value: Rational, p: int, precision: int, terms: int, seed: int, method: str) -> LiftReport:
    root = PadicInt.from_rat(value, p, precision)
    residual = vp(f(root.residue), p)
    if residual < precision:
        raise PrecisionExhausted(f"f(root) has valuation {residual} < {precision}")
    logger.success(f"Lifted {seed} to {root} ({method}, {terms} terms)")
    return LiftReport(root, terms, residual, seed, method)


def _lift(f: IntPolynomial, r0: int, p: int, precision: int, kappa: int, method: str) -> LiftReport:
    shifted = taylor_shift(f, r0, kappa, p)
    n_terms = truncation_index(vp_rat(shifted.cs[0], p), p, precision)
    rho = sum(series_root_terms(shifted.cs, n_terms), Fraction(0))
    return _report(f, r0 + p**kappa * rho, p, precision, n_terms, r0, method)


def _check_simple_seed(f: IntPolynomial, r0: int, p: int) -> None:
    if p == 2:
        raise EvenPrime("The series lift needs an odd prime")
    if f(r0) % p:
        raise NotARootModP(f"f({r0}) = {f(r0)} is not divisible by {p}")
    if f.derivative()(r0) % p == 0:
        raise DerivativeNotUnit(f"f'({r0}) is divisible by {p}")


def lift_simple(f: IntPolynomial, r0: int, p: int, precision: int) -> LiftReport:
    """Lift a simple root r_0 of f mod p (p odd) to a root mod p^N"""
    _check_simple_seed(f, r0, p)
    return _lift(f, r0 % p, p, precision, 0, "simple")


def lift_general(
    f: IntPolynomial,
    r0: int,
    p: int,
    precision: int,
    nu: int | None = None,
    kappa: int | None = None,
) -> LiftReport:
    """
    lift_general - Lift r_0 with f(r_0) = 0 mod p^nu and v_p(f'(r_0)) = kappa, 0 <= 2 kappa < nu
    ---
    Missing parameters are derived: kappa = v_p(f'(r_0)), nu = v_p(f(r_0)) capped.
    """

    derivative = vp(f.derivative()(r0), p)
    if derivative is INFINITY:
        raise DerivativeNotUnit(f"f'({r0}) = 0, r0 is not usable as a seed")
    if kappa is None:
        kappa = derivative
    elif derivative != kappa:
        raise DerivativeNotUnit(f"v_p(f'({r0})) = {derivative}, not {kappa}")

    value = vp(f(r0), p)
    cap = precision + 2 * kappa + 1
    if nu is None:
        nu = min(value, cap)
    elif value < nu:
        raise NotARootModP(f"f({r0}) is not divisible by {p}^{nu}")
    if nu < 1:
        raise NotARootModP(f"f({r0}) is not divisible by {p}")
    if 2 * kappa >= nu:
        raise InsufficientCongruence(f"Need 2*kappa < nu, got kappa = {kappa}, nu = {nu}")

    return _lift(f, r0 % p**nu, p, precision, kappa, "general")


def roots_mod_p(f: IntPolynomial, p: int) -> list[int]:
    return [r for r in range(p) if f.evaluate_mod(r, p) == 0]


def lift_branches(f: IntPolynomial, r0: int, p: int, precision: int, depth: int | None = None) -> list[LiftReport]:
    """
    lift_branches - Every root of f congruent to r_0 that one rescaling step exposes
    ---
    When v_p(f(r_0)) = 2 kappa the seed is degenerate: the roots s of g = p^{-2 kappa} f(r_0 + p^kappa x)
    mod p are lifted in turn and mapped back to r_0 + p^kappa s.
    """

    depth = config.hensel.branch_depth if depth is None else depth
    kappa = vp(f.derivative()(r0), p)
    nu = vp(f(r0), p)
    if kappa is INFINITY:
        raise DerivativeNotUnit(f"f'({r0}) = 0, r0 is not usable as a seed")
    if nu == 0:
        raise NotARootModP(f"f({r0}) is not divisible by {p}")
    if kappa == 0 and p != 2:
        return [lift_simple(f, r0, p, precision)]
    if nu > 2 * kappa:
        return [lift_general(f, r0, p, precision, min(nu, precision + 2 * kappa + 1), kappa)]
    if nu < 2 * kappa or depth <= 0:
        raise InsufficientCongruence(f"v_p(f({r0})) = {nu} against v_p(f'({r0})) = {kappa}")

    g = taylor_shift(f, r0, kappa, p).polynomial()
    logger.log(f"Degenerate seed {r0}, rescaled to {g}", "branches")
    reports: dict[int, LiftReport] = {}
    failure: AlgebraError | None = None
    for s in roots_mod_p(g, p):
        try:
            inner = lift_branches(g, s, p, precision, depth - 1)
        except AlgebraError as error:
            logger.warn(f"Branch {r0} + {p}^{kappa}*{s} skipped: {error}", "branches")
            failure = error
            continue
        for report in inner:
            value = r0 + p**kappa * report.root.residue
            reports.setdefault(
                value % p**precision,
                _report(f, value, p, precision, report.terms_used, r0, "branch"),
            )
    if not reports:
        raise failure or NotARootModP(f"The rescaled polynomial {g} has no root mod {p}")
    return [reports[key] for key in sorted(reports)]


def newton_lift(f: IntPolynomial, r0: int, p: int, precision: int) -> PadicInt:
    """Classical Newton iteration r <- r - f(r)/f'(r), doubling the precision each step"""
    if f(r0) % p:
        raise NotARootModP(f"f({r0}) = {f(r0)} is not divisible by {p}")
    derivative = f.derivative()
    if derivative(r0) % p == 0:
        raise DerivativeNotUnit(f"f'({r0}) is divisible by {p}")

    r, k = r0 % p, 1
    while k < precision:
        k = min(2 * k, precision)
        modulus = p**k
        r = (r - f.evaluate_mod(r, modulus) * pow(derivative.evaluate_mod(r, modulus), -1, modulus)) % modulus
    return PadicInt.from_int(r, p, precision)


def lift_quadratic(a0: int, a1: int, a2: int, r0: int, p: int, precision: int) -> LiftReport:
    """r = r_0 - c_0/c_1 sum_n Cat_n (c_0 c_2 / c_1^2)^n"""
    f = IntPolynomial.of((a0, a1, a2))
    _check_simple_seed(f, r0, p)
    r0 %= p
    c0, c1, c2 = f(r0), f.derivative()(r0), a2
    if c2 == 0 or c0 == 0:
        return _report(f, r0 - Fraction(c0, c1), p, precision, 1, r0, "quadratic")

    n_terms = -(-precision // vp(c0, p))
    ratio = Fraction(c0 * c2, c1 * c1)
    total = sum((catalan(n) * ratio**n for n in range(n_terms)), Fraction(0))
    return _report(f, r0 - Fraction(c0, c1) * total, p, precision, n_terms, r0, "quadratic")


def lift_cubic(a0: int, a1: int, a2: int, a3: int, r0: int, p: int, precision: int) -> LiftReport:
    """
    lift_cubic - r = r_0 - c_0/c_1 sum_k [sum_{j<=k} (-1)^{k-j} c_2^j / (2k-j+1)
    binom(k, j) binom(3k-j, k) (c_0 c_3 / c_1)^{k-j}] (c_0 / c_1^2)^k
    """

    f = IntPolynomial.of((a0, a1, a2, a3))
    _check_simple_seed(f, r0, p)
    r0 %= p
    c0, c1, c2, c3 = (f.taylor_coefficient(r0, j) for j in range(4))
    if c0 == 0:
        return _report(f, r0, p, precision, 0, r0, "cubic")

    # the (k, j) term carries c_0^{n+1} / (n+1) with n = 2k - j
    n_terms = truncation_index(vp(c0, p), p, precision)
    inner = Fraction(c0 * c3, c1)
    outer = Fraction(c0, c1 * c1)
    total = Fraction(0)
    for k in range(n_terms):
        for j in range(k + 1):
            if 2 * k - j >= n_terms:
                continue
            total += Fraction(
                (-1) ** (k - j) * c2**j * binom(k, j) * binom(3 * k - j, k), 2 * k - j + 1
            ) * inner ** (k - j) * outer**k
    return _report(f, r0 - Fraction(c0, c1) * total, p, precision, n_terms, r0, "cubic")


def lift_sparse(a0: int, a1: int, al: int, am: int, ell: int, m: int, p: int, precision: int) -> LiftReport:
    """
    lift_sparse - Root r ≡ 0 of a_0 + a_1 x + a_l x^l + a_m x^m, 1 < l < m, p | a_0, p ∤ a_1
    """

    if not 1 < ell < m:
        raise BadExponents(f"Need 1 < l < m, got l = {ell}, m = {m}")
    if p == 2:
        raise EvenPrime("The series lift needs an odd prime")
    if a0 % p:
        raise NotDivisible(f"{p} does not divide a_0 = {a0}")
    if a1 % p == 0:
        raise DerivativeNotUnit(f"{p} divides a_1 = {a1}")

    coeffs = [0] * (m + 1)
    coeffs[0], coeffs[1] = a0, a1
    coeffs[ell] += al
    coeffs[m] += am
    f = IntPolynomial.of(coeffs)
    if a0 == 0:
        return _report(f, 0, p, precision, 0, 0, "sparse")

    n_terms = truncation_index(vp(a0, p), p, precision)
    high = Fraction(a0 ** (m - ell) * am, a1 ** (m - ell))
    low = Fraction(a0 ** (ell - 1), a1**ell)
    total = Fraction(0)
    k = 0
    while (ell - 1) * k < n_terms:
        for j in range(k + 1):
            exponent = m * (k - j) + ell * j
            denominator = exponent - k + 1
            if denominator - 1 >= n_terms or (al == 0 and j > 0):
                continue
            total += Fraction(
                (-1) ** exponent * al**j * binom(k, j) * binom(exponent, k), denominator
            ) * high ** (k - j) * low**k
        k += 1
    return _report(f, -Fraction(a0, a1) * total, p, precision, n_terms, 0, "sparse")


def teichmuller(q: int, p: int, precision: int) -> PadicInt:
    """
    teichmuller - The (p-1)-st root of unity xi_q = q mod p, from

        xi_q = q - c_0/c_1 sum_n [sum_{k<=n} sum_{j<=k} (-1)^{n-j} / ((p-1)^k (n+1)!)
               binom(2n+1, n-k) 1/k! binom(k, j) (j(p-1))_{n+k}] (c_0 / (q c_1))^n

    with c_0 = q^{p-1} - 1 and c_1 = (p-1) q^{p-2}.
    """

    if p == 2:
        raise EvenPrime("Teichmüller lifts are computed for odd primes")
    if not 1 <= q <= p - 1:
        raise OutOfRange(f"q must lie in [1, {p - 1}], got {q}")
    m = p - 1
    c0, c1 = q**m - 1, m * q ** (m - 1)
    if c0 == 0:
        return PadicInt.from_int(q, p, precision)

    n_terms = truncation_index(vp(c0, p), p, precision)
    # falling[j][t] = (j m)_t
    falling_rows: list[list[int]] = []
    for j in range(n_terms):
        row = [1]
        for t in range(2 * n_terms):
            row.append(row[-1] * (j * m - t))
        falling_rows.append(row)

    ratio = Fraction(c0, q * c1)
    total = Fraction(0)
    for n in range(n_terms):
        bracket = Fraction(0)
        for k in range(n + 1):
            inner = sum((-1) ** (n - j) * binom(k, j) * falling_rows[j][n + k] for j in range(k + 1))
            if inner:
                bracket += Fraction(binom(2 * n + 1, n - k) * inner, m**k * factorial(n + 1) * factorial(k))
        total += bracket * ratio**n
    xi = PadicInt.from_rat(q - Fraction(c0, c1) * total, p, precision)
    if pow(xi.residue, m, xi.modulus) != 1 % xi.modulus:
        raise PrecisionExhausted(f"xi^{m} differs from 1 mod {p}^{precision}")
    logger.log(f"Teichmüller lift of {q} mod {p}^{precision} from {n_terms} terms", "teichmuller")
    return xi


def teichmuller_oracle(q: int, p: int, precision: int) -> PadicInt:
    """lim q^{p^k} mod p^N, reached once p-th powering is idempotent"""
    modulus = p**precision
    x = q % modulus
    while True:
        y = pow(x, p, modulus)
        if y == x:
            return PadicInt(p, precision, x)
        x = y
