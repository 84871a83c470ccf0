"""Exact scalars over the three coefficient rings used by the engine.

``INT`` is the integers, ``DYADIC`` is Z[1/2] stored as an odd numerator over
a power of two, and ``MOD2`` is the field with two elements.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class Variant(enum.Enum):
    INT = "int"
    DYADIC = "dyadic"
    MOD2 = "mod2"


class VariantMismatch(TypeError):
    """Raised when two scalars from different coefficient rings meet."""


class Op(enum.Enum):
    ADD = "add"
    MUL = "mul"
    NEG = "neg"


def _two_adic_split(num: int, exp: int) -> tuple[int, int]:
    if num == 0:
        return 0, 0
    # strip common factors of two in one shot
    tz = (num & -num).bit_length() - 1
    k = min(tz, exp)
    return num >> k, exp - k


@dataclass(frozen=True, slots=True)
class Coefficient:
    variant: Variant
    num: int
    exp: int = 0

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("dyadic exponent must be nonnegative")
        if self.variant is Variant.DYADIC:
            if (self.num, self.exp) != _two_adic_split(self.num, self.exp):
                raise ValueError(f"non-canonical dyadic {self.num}/2^{self.exp}")
        elif self.exp:
            raise ValueError(f"{self.variant.name} scalars carry no exponent")
        if self.variant is Variant.MOD2 and self.num not in (0, 1):
            raise ValueError("MOD2 scalar must be 0 or 1")

    # constructors -------------------------------------------------------
    @classmethod
    def integer(cls, n: int) -> "Coefficient":
        return cls(Variant.INT, int(n))

    @classmethod
    def mod2(cls, n: int) -> "Coefficient":
        return cls(Variant.MOD2, int(n) & 1)

    @classmethod
    def dyadic(cls, num: int, exp: int = 0) -> "Coefficient":
        return dyadic_normalize(num, exp)

    @classmethod
    def from_raw(cls, variant: Variant, value) -> "Coefficient":
        """Wrap a raw polynomial coefficient (int or Fraction)."""
        if variant is Variant.DYADIC:
            value = Fraction(value)
            den = value.denominator
            if den & (den - 1):
                raise ValueError(f"{value} is not dyadic")
            return dyadic_normalize(value.numerator, den.bit_length() - 1)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            value = value.numerator
        if variant is Variant.MOD2:
            return cls.mod2(value)
        return cls.integer(value)

    # queries -------------------------------------------------------------
    def raw(self):
        """The value as a plain ``int`` or ``Fraction``."""
        if self.variant is Variant.DYADIC and self.exp:
            return Fraction(self.num, 1 << self.exp)
        return self.num

    def is_zero(self) -> bool:
        return self.num == 0

    def is_integral(self) -> bool:
        return self.exp == 0

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        return scalar_arith(Op.ADD, self, other)

    def __mul__(self, other):
        return scalar_arith(Op.MUL, self, other)

    def __neg__(self):
        return scalar_arith(Op.NEG, self)

    def __sub__(self, other):
        return scalar_arith(Op.ADD, self, -other)

    def __str__(self):
        if self.variant is Variant.MOD2:
            return "1 (mod 2)" if self.num else "0"
        if self.variant is Variant.DYADIC and self.exp:
            return f"{self.num}/2^{self.exp}"
        return str(self.num)


def dyadic_normalize(numerator: int, exponent: int) -> Coefficient:
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    num, exp = _two_adic_split(int(numerator), int(exponent))
    return Coefficient(Variant.DYADIC, num, exp)


def scalar_arith(op: Op, a: Coefficient, b: Coefficient | None = None) -> Coefficient:
    if op is Op.NEG:
        if a.variant is Variant.MOD2:
            return a
        return Coefficient(a.variant, -a.num, a.exp)
    if b is None or a.variant is not b.variant:
        raise VariantMismatch(f"cannot combine {a.variant.name} with "
                              f"{getattr(b, 'variant', None)}")
    v = a.variant
    if v is Variant.MOD2:
        n = (a.num + b.num) if op is Op.ADD else (a.num * b.num)
        return Coefficient.mod2(n)
    if v is Variant.INT:
        n = (a.num + b.num) if op is Op.ADD else (a.num * b.num)
        return Coefficient(v, n)
    if op is Op.MUL:
        return dyadic_normalize(a.num * b.num, a.exp + b.exp)
    e = max(a.exp, b.exp)
    return dyadic_normalize((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e)


def parse_scalar(text: str, variant: Variant) -> Coefficient:
    """Inverse of ``str(Coefficient)``."""
    text = text.strip()
    if variant is Variant.MOD2:
        return Coefficient.mod2(int(text.split()[0]))
    if "/2^" in text:
        num, exp = text.split("/2^")
        c = dyadic_normalize(int(num), int(exp))
        if variant is not Variant.DYADIC:
            if not c.is_integral():
                raise ValueError(f"{text} is not an integer")
            return Coefficient.integer(c.num)
        return c
    n = int(text)
    return Coefficient.integer(n) if variant is Variant.INT else dyadic_normalize(n, 0)
