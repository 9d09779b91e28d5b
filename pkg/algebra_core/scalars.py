"""Exact ground fields: the rationals and prime fields, backed by sympy domains"""

from dataclasses import dataclass, field
from typing import Any, Optional

from sympy import isprime
from sympy.polys.domains import GF, QQ

from utils.errors import ArgumentError


@dataclass(frozen=True)
class ScalarField:
    """The coefficient field K. ``modulus=None`` means Q, otherwise GF(modulus)."""

    modulus: Optional[int] = None
    domain: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.modulus is None:
            domain = QQ
        else:
            if self.modulus < 2 or not isprime(self.modulus):
                raise ArgumentError(f"{self.modulus} is not prime")
            domain = GF(self.modulus)
        object.__setattr__(self, 'domain', domain)

    @classmethod
    def rationals(cls) -> "ScalarField":
        return cls()

    @classmethod
    def prime(cls, p: int) -> "ScalarField":
        return cls(modulus=p)

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def from_int(self, value: int):
        return self.domain(value)

    def from_fraction(self, numerator: int, denominator: int = 1):
        if denominator == 0:
            raise ArgumentError("zero denominator")
        if self.modulus is None:
            return QQ(numerator, denominator)
        den = self.domain(denominator)
        if self.is_zero(den):
            raise ArgumentError(f"denominator {denominator} vanishes mod {self.modulus}")
        return self.domain(numerator) / den

    def convert(self, value):
        """Accept ints, (num, den) pairs and elements of this field"""
        if isinstance(value, tuple):
            return self.from_fraction(*value)
        if isinstance(value, int):
            return self.from_int(value)
        return self.domain.convert(value)

    def is_zero(self, value) -> bool:
        return self.domain.is_zero(value)

    def is_one(self, value) -> bool:
        return self.domain.is_one(value)

    def inverse(self, value):
        if self.is_zero(value):
            raise ZeroDivisionError("zero has no inverse")
        return self.domain.one / value

    def canonical(self, value) -> tuple:
        """(numerator, denominator) with positive denominator; residues in [0, p)"""
        if self.modulus is None:
            return int(self.domain.numer(value)), int(self.domain.denom(value))
        return int(value) % self.modulus, 1

    def is_negative(self, value) -> bool:
        return self.modulus is None and self.canonical(value)[0] < 0

    def render(self, value) -> str:
        num, den = self.canonical(value)
        return str(num) if den == 1 else f"{num}/{den}"

    def describe(self) -> str:
        return "Q" if self.modulus is None else f"GF({self.modulus})"
