"""
algebra.padic - p-adic integers known modulo p^N

A `PadicInt` is the residue of an element of Z_p modulo p^N. Arithmetic between
two values keeps the smaller precision; mixing primes raises PrimeMismatch.
"""

from dataclasses import dataclass
from fractions import Fraction

from algebra.bigmath import Rational, vp, vp_rat
from algebra.errors import InvalidInput, NotAUnit, NotPadicInteger, PrimeMismatch


@dataclass(frozen=True)
class AtLeast:
    """Valuation of a zero residue: the true valuation is only known to be >= bound"""

    bound: int

    def __str__(self) -> str:
        return f">={self.bound}"


@dataclass(frozen=True)
class DigitVector:
    p: int
    digits: tuple[int, ...]

    def value(self) -> int:
        return sum(d * self.p**i for i, d in enumerate(self.digits))


@dataclass(frozen=True)
class PadicInt:
    p: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise InvalidInput(f"Precision must be positive, got {self.precision}")
        if not 0 <= self.residue < self.p**self.precision:
            raise InvalidInput(f"Residue {self.residue} is not reduced mod {self.p}^{self.precision}")

    # -- construction --
    @classmethod
    def from_int(cls, a: int, p: int, precision: int) -> "PadicInt":
        return cls(p, precision, a % p**precision)

    @classmethod
    def from_rat(cls, x: Rational, p: int, precision: int) -> "PadicInt":
        x = Fraction(x)
        if vp_rat(x, p) < 0:
            raise NotPadicInteger(f"{x} has negative {p}-adic valuation")
        modulus = p**precision
        return cls(p, precision, x.numerator * pow(x.denominator, -1, modulus) % modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    # -- inspection --
    def valuation(self) -> int | AtLeast:
        if self.residue == 0:
            return AtLeast(self.precision)
        return vp(self.residue, self.p)

    def digits(self) -> DigitVector:
        digits = []
        value = self.residue
        for _ in range(self.precision):
            value, d = divmod(value, self.p)
            digits.append(d)
        return DigitVector(self.p, tuple(digits))

    def signed(self) -> int:
        """Representative in (-p^N/2, p^N/2]"""
        return self.residue - self.modulus if self.residue > self.modulus // 2 else self.residue

    def with_precision(self, precision: int) -> "PadicInt":
        if precision > self.precision:
            raise InvalidInput(f"Cannot raise precision from {self.precision} to {precision}")
        return PadicInt.from_int(self.residue, self.p, precision)

    # -- arithmetic --
    def _coerce(self, other: "PadicInt | int") -> "PadicInt":
        if isinstance(other, int):
            return PadicInt.from_int(other, self.p, self.precision)
        if other.p != self.p:
            raise PrimeMismatch(f"Cannot combine {self.p}-adic and {other.p}-adic values")
        return other

    def _combine(self, other: "PadicInt | int", value: int) -> "PadicInt":
        precision = min(self.precision, self._coerce(other).precision)
        return PadicInt.from_int(value, self.p, precision)

    def __add__(self, other: "PadicInt | int") -> "PadicInt":
        return self._combine(other, self.residue + self._coerce(other).residue)

    def __sub__(self, other: "PadicInt | int") -> "PadicInt":
        return self._combine(other, self.residue - self._coerce(other).residue)

    def __mul__(self, other: "PadicInt | int") -> "PadicInt":
        return self._combine(other, self.residue * self._coerce(other).residue)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other: int) -> "PadicInt":
        return self._coerce(other) - self

    def __neg__(self) -> "PadicInt":
        return PadicInt.from_int(-self.residue, self.p, self.precision)

    def __pow__(self, exponent: int) -> "PadicInt":
        if exponent < 0:
            return self.unit_inverse() ** -exponent
        return PadicInt(self.p, self.precision, pow(self.residue, exponent, self.modulus))

    def unit_inverse(self) -> "PadicInt":
        if self.residue % self.p == 0:
            raise NotAUnit(f"{self.residue} is not a {self.p}-adic unit")
        return PadicInt(self.p, self.precision, pow(self.residue, -1, self.modulus))

    # -- rendering --
    def render(self, shown: int | None = None) -> str:
        """d0 + d1*p + d2*p^2 + ... + O(p^N), zero digits omitted"""
        digits = self.digits().digits
        limit = len(digits) if shown is None else min(shown, len(digits))
        parts = []
        for i, d in enumerate(digits[:limit]):
            if d == 0:
                continue
            if i == 0:
                parts.append(f"{d}")
            elif i == 1:
                parts.append(f"{d}*{self.p}")
            else:
                parts.append(f"{d}*{self.p}^{i}")
        if limit < len(digits) and any(digits[limit:]):
            parts.append("...")
        parts.append(f"O({self.p}^{self.precision})")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {"p": self.p, "precision": self.precision, "digits": list(self.digits().digits)}

    @classmethod
    def from_json(cls, data: dict) -> "PadicInt":
        digits = DigitVector(int(data["p"]), tuple(int(d) for d in data["digits"]))
        return cls(digits.p, int(data["precision"]), digits.value())
