# ──────────────────────────────────────────────────────────────
# junta_bounds/measures/dyadic.py
# Exact numbers of the form numerator / 2^exponent.
# ──────────────────────────────────────────────────────────────
import typing as t
from fractions import Fraction
from functools import total_ordering

from pydantic_core import core_schema

Number = t.Union["DyadicRational", int]


@total_ordering
class DyadicRational:
    """numerator / 2^exponent with exponent >= 0, kept canonical: odd numerator unless exponent is 0."""

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int, exponent: int = 0) -> None:
        if exponent < 0:
            numerator, exponent = numerator << -exponent, 0
        if numerator == 0:
            exponent = 0
        else:
            shift = min(exponent, (numerator & -numerator).bit_length() - 1)
            numerator >>= shift
            exponent -= shift
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name: str, value: t.Any) -> None:
        raise AttributeError("DyadicRational is immutable")

    def __reduce__(self) -> t.Tuple[t.Any, ...]:
        return (DyadicRational, (self.numerator, self.exponent))

    # -------- constructors --------
    @classmethod
    def power_of_two(cls, k: int) -> "DyadicRational":
        """2^k for any integer k."""
        return cls(1, -k)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "DyadicRational":
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not dyadic")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "DyadicRational":
        return cls.from_fraction(Fraction(text))

    # -------- arithmetic --------
    @staticmethod
    def _coerce(other: t.Any) -> t.Optional["DyadicRational"]:
        if isinstance(other, DyadicRational):
            return other
        if isinstance(other, int):
            return DyadicRational(other)
        return None

    def _aligned(self, other: "DyadicRational") -> t.Tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return self.numerator << (e - self.exponent), other.numerator << (e - other.exponent), e

    def __add__(self, other: t.Any) -> "DyadicRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b, e = self._aligned(rhs)
        return DyadicRational(a + b, e)

    __radd__ = __add__

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.numerator, self.exponent)

    def __sub__(self, other: t.Any) -> "DyadicRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: t.Any) -> "DyadicRational":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: t.Any) -> "DyadicRational":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return DyadicRational(self.numerator * rhs.numerator, self.exponent + rhs.exponent)

    __rmul__ = __mul__

    def scale(self, k: int) -> "DyadicRational":
        """self * 2^k."""
        return DyadicRational(self.numerator, self.exponent - k)

    # -------- comparison --------
    def __eq__(self, other: t.Any) -> bool:
        if isinstance(other, Fraction):
            return self.as_fraction() == other
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.numerator == rhs.numerator and self.exponent == rhs.exponent

    def __lt__(self, other: t.Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b, _ = self._aligned(rhs)
        return a < b

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __bool__(self) -> bool:
        return self.numerator != 0

    # -------- conversions --------
    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __float__(self) -> float:
        return self.numerator / (1 << self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def __repr__(self) -> str:
        return f"DyadicRational({self.numerator}, {self.exponent})"

    # -------- pydantic integration --------
    @classmethod
    def _validate(cls, value: t.Any) -> "DyadicRational":
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot read {value!r} as a dyadic rational")

    @classmethod
    def __get_pydantic_core_schema__(cls, source: t.Any, handler: t.Any) -> core_schema.CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls._validate,
            serialization=core_schema.plain_serializer_function_ser_schema(str),
        )


ZERO = DyadicRational(0)
ONE = DyadicRational(1)


def dyadic_sum(values: t.Iterable[DyadicRational]) -> DyadicRational:
    total = ZERO
    for value in values:
        total = total + value
    return total
