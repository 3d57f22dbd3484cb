"""Exact coefficient fields: the rationals and prime fields."""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ

from extscope.errors import ParseError, UsageError

MAX_CHARACTERISTIC = 2**31

_TAG = re.compile(r"^\s*(?:(?P<q>QQ|Q)|F(?P<f>\d+)|GF\((?P<gf>\d+)\)|ZZ/(?P<zz>\d+))\s*$")


@lru_cache(maxsize=None)
def _domain(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class CoefficientField:
    """Coefficient field of a ring: characteristic 0 means the rationals, otherwise the prime field F_p.

    Elements are sympy domain elements; canonical representatives in F_p are 0..p-1.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p >= MAX_CHARACTERISTIC:
            raise UsageError(f"unsupported characteristic {p}")
        if p and not isprime(p):
            raise UsageError(f"characteristic {p} is not a prime")

    @classmethod
    def from_tag(cls, tag: str) -> 'CoefficientField':
        """Parse ``QQ``, ``F5``, ``GF(5)`` or ``ZZ/5``."""

        match = _TAG.match(tag)
        if match is None:
            raise ParseError(f"unknown coefficient field {tag!r}")

        if match.group('q'):
            return cls(0)

        digits = match.group('f') or match.group('gf') or match.group('zz')
        try:
            return cls(int(digits))
        except UsageError as error:
            raise ParseError(str(error)) from error

    @property
    def domain(self):
        """The sympy domain doing the arithmetic."""
        return _domain(self.characteristic)

    @property
    def tag(self) -> str:
        return "QQ" if self.characteristic == 0 else f"F{self.characteristic}"

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, value: Any):
        """Bring an int, a rational or a domain element into the field."""

        domain = self.domain
        if domain.of_type(value):
            return value
        if isinstance(value, int):
            return domain(value)

        numerator = getattr(value, 'numerator', None)
        denominator = getattr(value, 'denominator', None)
        if numerator is None or denominator is None:
            return domain.convert(value)

        # gmpy and flint expose numerator as a method on some versions
        if callable(numerator):
            numerator, denominator = numerator(), denominator()

        return self.from_rational(int(numerator), int(denominator))

    def from_rational(self, numerator: int, denominator: int = 1):
        """The element numerator/denominator."""

        if denominator == 0:
            raise UsageError("zero denominator")

        if self.characteristic == 0:
            return QQ(numerator, denominator)

        if denominator % self.characteristic == 0:
            raise UsageError(f"denominator {denominator} vanishes in {self.tag}")

        return self.domain(numerator) / self.domain(denominator)

    def to_sympy(self, element):
        """sympy Rational/Integer of an element, used by the printer."""
        return self.domain.to_sympy(element)

    def __str__(self) -> str:
        return self.tag
