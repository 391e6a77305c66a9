"""
algebra.errors - Exceptions raised by the algebra modules

Every error carries a stable `code` (the class name) and the exit code the CLI uses for it.
"""


class AlgebraError(Exception):
    """Base class of every domain error (CLI exit code 1)"""

    exit_code: int = 1

    @property
    def code(self) -> str:
        return type(self).__name__

    @property
    def details(self) -> dict:
        return {}


class InvalidInput(AlgebraError):
    """Malformed or out-of-contract user input (CLI exit code 2)"""

    exit_code = 2


class NotPrime(InvalidInput):
    pass


# bigmath / bell
class OracleTooLarge(AlgebraError):
    pass


# padic
class NotPadicInteger(AlgebraError):
    pass


class NotAUnit(AlgebraError):
    pass


class PrimeMismatch(AlgebraError):
    pass


# series
class CompositionNeedsZeroConstant(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class LinearCoefficientZero(AlgebraError):
    pass


class DegenerateExponent(AlgebraError):
    pass


# hensel
class NonIntegralShift(AlgebraError):
    pass


class NotARootModP(AlgebraError):
    pass


class DerivativeNotUnit(AlgebraError):
    pass


class EvenPrime(AlgebraError):
    pass


class InsufficientCongruence(AlgebraError):
    pass


class BadExponents(AlgebraError):
    pass


class NotDivisible(AlgebraError):
    pass


class OutOfRange(AlgebraError):
    pass


class PrecisionExhausted(AlgebraError):
    pass


# factorize
class WrongValuation(AlgebraError):
    pass


class UnitPartNotOne(AlgebraError):
    pass


class InsufficientPrecision(AlgebraError):
    pass


class IntegralityViolation(AlgebraError):
    pass


class DivisibilityViolation(AlgebraError):
    pass


class LemmaViolation(AlgebraError):
    pass


class UnsupportedShape(AlgebraError):
    pass


class NoMultipleRoot(AlgebraError):
    pass


class NoSuitableRoot(AlgebraError):
    """No root of valuation ell <= m was found

    `fallback_applies` tells whether w > 2m, the case where f is still reducible
    but needs the zero-root algorithm, which is not provided here.
    """

    def __init__(self, message: str, fallback_applies: bool = False, necessity_known: bool = False) -> None:
        super().__init__(message)
        self.fallback_applies: bool = fallback_applies
        self.necessity_known: bool = necessity_known

    @property
    def details(self) -> dict:
        return {"fallback_applies": self.fallback_applies, "necessity_known": self.necessity_known}


class UsageError(InvalidInput):
    """Command line that does not parse"""
