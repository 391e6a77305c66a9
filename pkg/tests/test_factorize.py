from fractions import Fraction
import random

import pytest

from algebra.errors import (
    DivisibilityViolation,
    EvenPrime,
    InsufficientPrecision,
    InvalidInput,
    NoMultipleRoot,
    NotARootModP,
    NoSuitableRoot,
    PrimeMismatch,
    UnitPartNotOne,
    UnsupportedShape,
    WrongValuation,
)
from algebra.factorize import (
    IRREDUCIBLE_PRIME,
    IRREDUCIBLE_PRIME_POWER,
    NEEDS_ROOT_ANALYSIS,
    REDUCIBLE_COMPOSITE,
    UNIT,
    Classification,
    FactorPair,
    FactorizationProblem,
    RootDigits,
    SeriesInput,
    a_coeffs,
    bhat_coeffs,
    check_reciprocal,
    check_recurrence,
    check_tn_congruences,
    classify,
    factor,
    factor_multiple_root,
    rational_root,
    root_to_digits,
    t_coeffs,
    tn_series,
    verify_factorization,
)
from algebra.padic import PadicInt
from algebra.polynomial import IntPolynomial
from algebra.series import IntSeries

GEOMETRIC = SeriesInput.parse("9,12,7,8", "geometric:1")


def random_digits(rng: random.Random, p: int, ell: int, order: int) -> RootDigits:
    return RootDigits(p, ell, tuple(rng.randrange(p**ell) for _ in range(order)))


@pytest.mark.parametrize(
    "f0, f1, expected",
    [
        (1, 4, Classification(UNIT)),
        (-1, 0, Classification(UNIT)),
        (5, 7, Classification(IRREDUCIBLE_PRIME, 5, 1)),
        (9, 2, Classification(IRREDUCIBLE_PRIME_POWER, 3, 2, 0)),
        (6, 1, Classification(REDUCIBLE_COMPOSITE)),
        (9, 12, Classification(NEEDS_ROOT_ANALYSIS, 3, 2, 1)),
        (27, 0, Classification(NEEDS_ROOT_ANALYSIS, 3, 3, None)),
    ],
)
def test_classify(f0, f1, expected):
    assert classify(f0, f1) == expected


def test_classify_zero_constant():
    assert classify(0, 1).kind == "DivisibleByX"


def test_series_input():
    assert GEOMETRIC.coefficient(10) == 8
    assert GEOMETRIC.tail == "geometric:1"
    assert GEOMETRIC.evaluate_exact(3) == 0
    assert GEOMETRIC.as_series(5).coeffs == (9, 12, 7, 8, 8, 8)
    assert GEOMETRIC.degree is None
    halving = SeriesInput((1, 2), ratio=2)
    assert halving.coefficient(3) == 8
    assert SeriesInput.parse("1,2,3").truncated(10).coeffs == (1, 2, 3)
    with pytest.raises(InvalidInput):
        SeriesInput.parse("1,2", "cyclic:3")
    with pytest.raises(InvalidInput):
        SeriesInput.parse("1,2", "geometric:x")


def test_root_to_digits():
    digits = root_to_digits(PadicInt.from_int(55, 5, 7), 1, 4)
    assert digits.digits == (2, 0, 0, 0)
    assert digits.root() == 55
    assert root_to_digits(PadicInt.from_int(9, 3, 14), 2, 4).digits == (0, 0, 0, 0)


def test_root_to_digits_errors():
    with pytest.raises(WrongValuation):
        root_to_digits(PadicInt.from_int(25, 5, 7), 1, 4)
    with pytest.raises(UnitPartNotOne):
        root_to_digits(PadicInt.from_int(10, 5, 7), 1, 4)
    with pytest.raises(InsufficientPrecision):
        root_to_digits(PadicInt.from_int(55, 5, 6), 1, 4)


def test_a_coeffs():
    assert a_coeffs(RootDigits(3, 1, (0, 0, 0)), 3) == [0, 0, 0]
    assert a_coeffs(RootDigits(3, 1, (1, 0, 0, 0)), 4) == [-1, 2, -5, 14]


def test_t_coeffs():
    assert t_coeffs(RootDigits(5, 1, (0, 0, 0)), 3) == [1, 1, 1]
    assert t_coeffs(RootDigits(5, 1, (2, 1, 0, 0)), 4)[0] == 1 - 5 * 2


def test_coefficients_are_integral_for_random_digits():
    rng = random.Random(7)
    for p, ell in ((3, 1), (5, 1), (3, 2), (7, 1)):
        digits = random_digits(rng, p, ell, 6)
        a, t = a_coeffs(digits, 6), t_coeffs(digits, 6)
        assert all(isinstance(value, int) for value in a + t)
        assert check_reciprocal(digits, a, t, 6)
        assert check_tn_congruences(digits, t, 6)


def test_tn_series():
    trivial = RootDigits(3, 1, (0, 0, 0, 0))
    for n in (-2, 0, 1, 3):
        assert tn_series(trivial, n, 6) == IntSeries.one(6)

    rng = random.Random(9)
    digits = RootDigits(5, 1, tuple(rng.randint(-3, 5) for _ in range(6)))
    e = digits.series(8)
    for n in range(-2, 6):
        assert tn_series(digits, n - 1, 8) == e * tn_series(digits, n, 8)
    assert check_recurrence(digits, -3, 6)


def test_bhat_coeffs():
    hat = bhat_coeffs(FactorizationProblem(3, 2, 1, (4, 7, 8, 8), 3), 1, [1, 1, 1])
    assert hat.bhat == (12, 36, 108)
    assert hat.b == (4, 4, 4)
    with pytest.raises(DivisibilityViolation):
        bhat_coeffs(FactorizationProblem(3, 2, 1, (4, 7, 8), 3), 1, [1, 1, 1])


def test_geometric_tail_factorization():
    pair = factor(GEOMETRIC, 10)
    assert pair.A.coeffs == (3, -1) + (0,) * 9
    assert pair.B.coeffs == (3, 5) + (4,) * 9
    assert pair.ell == 1 and pair.scale == 1
    assert pair.digits.digits == (0,) * 10
    assert all(pair.checks.values())


def test_rescaled_factorization():
    f = IntPolynomial.of((9, -3, -2))  # (3 - 2x)(3 + x)
    pair = factor(f, 6)
    assert pair.scale == 2
    assert pair.A.coeffs == (3, -2, 0, 0, 0, 0, 0)
    assert pair.B.coeffs == (3, 1, 0, 0, 0, 0, 0)
    assert all(pair.checks.values())


def test_double_rational_root():
    square = IntPolynomial.of((3, -2)) * IntPolynomial.of((3, -2))
    assert rational_root(SeriesInput.wrap(square), 3, 1, 5) == PadicInt.from_rat(Fraction(3, 2), 3, 5)
    assert rational_root(GEOMETRIC, 3, 1, 5) is None

    pair = factor(square, 6)
    assert pair.scale == 2
    assert pair.A.coeffs == (3, -2, 0, 0, 0, 0, 0)
    assert pair.B.coeffs == (3, -2, 0, 0, 0, 0, 0)

    f = square * IntPolynomial.of((1, 1))
    pair = factor(f, 6)
    assert pair.A.coeffs == (3, -2, 0, 0, 0, 0, 0)
    assert pair.B.coeffs == (3, 1, -2, 0, 0, 0, 0)
    assert all(pair.checks.values())
    assert pair.bhat[0] == Fraction(-3, 2) and pair.checks["divisibility"]
    assert verify_factorization(f, pair, 6).passed


def test_supplied_root():
    pair = factor(GEOMETRIC, 6, root=PadicInt.from_int(3, 3, 40))
    assert pair.A == factor(GEOMETRIC, 6).A
    with pytest.raises(PrimeMismatch):
        factor(GEOMETRIC, 6, root=PadicInt.from_int(3, 5, 40))
    with pytest.raises(WrongValuation):
        factor(GEOMETRIC, 6, root=PadicInt.from_int(9, 3, 40))
    # f(6) = -63/5
    with pytest.raises(NotARootModP):
        factor(GEOMETRIC, 6, root=PadicInt.from_int(6, 3, 40))


def test_planted_factorizations():
    rng = random.Random(12)
    order = 8
    for _ in range(25):
        p, ell = rng.choice((3, 5, 7)), rng.choice((1, 2))
        u1 = rng.randint(-3, 3)
        v1 = rng.choice([v for v in range(-6, 7) if v % p])
        v = IntPolynomial.of([p ** (ell + 1), v1] + [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))])
        f = IntPolynomial.of((p**ell, -1, -u1)) * v
        pair = factor(f, order)
        assert pair.p == p and pair.ell == ell
        assert pair.A.is_integral() and pair.B.is_integral()
        assert pair.A * pair.B == SeriesInput.wrap(f).as_series(order)
        assert pair.A[0] == p**ell and pair.B[0] == p ** (ell + 1)
        assert verify_factorization(f, pair, order).passed


def test_factor_rejects_other_shapes():
    with pytest.raises(UnsupportedShape):
        factor(IntPolynomial.of((5, 5, 1)), 4)
    with pytest.raises(UnsupportedShape):
        factor(IntPolynomial.of((9, 3)), 4)
    with pytest.raises(EvenPrime):
        factor(IntPolynomial.of((4, 2, 1)), 4)
    with pytest.raises(PrimeMismatch):
        factor(GEOMETRIC, 4, p=5)


def test_no_suitable_root():
    # 9 + 3x + x^2 has its roots in Q_3(sqrt(-3))
    with pytest.raises(NoSuitableRoot) as caught:
        factor(IntPolynomial.of((9, 3, 1)), 4)
    assert caught.value.details == {"fallback_applies": False, "necessity_known": True}


def test_no_suitable_root_with_multiple_factor():
    square = IntPolynomial.of((9, 3, 1)) * IntPolynomial.of((9, 3, 1))
    with pytest.raises(NoSuitableRoot) as caught:
        factor(square, 4)
    assert caught.value.details == {"fallback_applies": False, "necessity_known": False}
    assert "multiple" in str(caught.value)


def test_verify_factorization_finds_tampering():
    pair = factor(GEOMETRIC, 10)
    assert verify_factorization(GEOMETRIC, pair, 10).passed

    coeffs = list(pair.B.coeffs)
    coeffs[2] += 1
    tampered = FactorPair(pair.p, pair.ell, pair.order, pair.A, IntSeries(tuple(coeffs)), pair.root, pair.digits)
    report = verify_factorization(GEOMETRIC, tampered, 10)
    assert not report.passed
    assert report.mismatches[0] == 2


def test_factor_pair_json():
    pair = factor(GEOMETRIC, 6)
    restored = FactorPair.from_json(pair.to_json())
    assert restored.A == pair.A and restored.B == pair.B
    assert restored.root == pair.root
    assert restored.digits == pair.digits


@pytest.mark.parametrize("p", [3, 5])
def test_multiple_root(p):
    f = IntPolynomial.of((-p, 1)) * IntPolynomial.of((-p, 1)) * IntPolynomial.of((1, 1))
    split = factor_multiple_root(f)
    assert split.G == IntPolynomial.of((-p, 1))
    assert split.reduced == IntPolynomial.of((-p, 1 - p, 1))
    assert split.G * split.reduced == f


def test_multiple_root_of_higher_degree():
    square = IntPolynomial.of((-9, 0, 1))
    split = factor_multiple_root(square * square)
    assert split.G == square and split.reduced == square


def test_no_multiple_root():
    with pytest.raises(NoMultipleRoot):
        factor_multiple_root(IntPolynomial.of((-3, -2, 1)))
    # (x - 1)^2 (x + 3): the double root is not in 3Z_3
    with pytest.raises(NoMultipleRoot):
        factor_multiple_root(IntPolynomial.of((3, -5, 1, 1)))
