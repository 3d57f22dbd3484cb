"""Sparse polynomials over a RingSpec."""

from typing import TYPE_CHECKING, Any, Dict, Iterator, List, Optional, Tuple, Union

from sympy.polys.monomials import monomial_div, monomial_mul

from extscope.errors import InhomogeneousError, UsageError
from extscope.poly.order import Monomial

if TYPE_CHECKING:
    from extscope.poly.ring import RingSpec

ANY_DEGREE = "any"

Scalar = Union[int, Any]


class Polynomial:
    """Immutable polynomial in the ambient polynomial ring of a RingSpec.

    Terms are kept as ``{exponent tuple: coefficient}`` with zero coefficients removed. Elements of a
    quotient ring are ordinary polynomials; ``RingSpec.reduce`` gives their canonical normal form.
    """

    __slots__ = ('_ring', '_terms', '_sorted', '_hash')

    def __init__(self, ring: 'RingSpec', terms: Optional[Dict[Monomial, Scalar]] = None, trusted: bool = False):
        ring = ring.ambient
        self._ring = ring
        self._sorted = None
        self._hash = None

        if trusted:
            self._terms = terms
            return

        field = ring.field
        clean = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != ring.ngens or any(e < 0 for e in monomial):
                raise UsageError(f"monomial {monomial} does not fit {ring.ngens} variables")
            value = field.convert(coefficient)
            if value:
                clean[monomial] = clean.get(monomial, field.zero) + value
                if not clean[monomial]:
                    del clean[monomial]
        self._terms = clean

    @classmethod
    def constant(cls, ring: 'RingSpec', value: Scalar) -> 'Polynomial':
        return cls(ring, {(0,) * ring.ngens: value})

    @classmethod
    def monomial(cls, ring: 'RingSpec', exponents: Monomial, coefficient: Scalar = 1) -> 'Polynomial':
        return cls(ring, {tuple(exponents): coefficient})

    @property
    def ring(self) -> 'RingSpec':
        return self._ring

    @property
    def field(self):
        return self._ring.field

    def as_dict(self) -> Dict[Monomial, Any]:
        """Copy of the term dictionary."""
        return dict(self._terms)

    def terms(self) -> List[Tuple[Monomial, Any]]:
        """Terms sorted from the largest monomial down."""

        if self._sorted is None:
            key = self._ring.order.key
            self._sorted = sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=True)
        return self._sorted

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms()]

    def coefficient(self, monomial: Monomial):
        return self._terms.get(tuple(monomial), self.field.zero)

    def __iter__(self) -> Iterator[Tuple[Monomial, Any]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        zero = (0,) * self._ring.ngens
        return all(m == zero for m in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def leading_monomial(self) -> Optional[Monomial]:
        return self.terms()[0][0] if self._terms else None

    @property
    def leading_coefficient(self):
        return self.terms()[0][1] if self._terms else self.field.zero

    @property
    def leading_term(self) -> 'Polynomial':
        if not self._terms:
            return self
        monomial, coefficient = self.terms()[0]
        return Polynomial(self._ring, {monomial: coefficient}, trusted=True)

    def degree(self) -> Optional[int]:
        """Largest weighted degree of a term, None for zero."""

        if not self._terms:
            return None
        order = self._ring.order
        return max(order.degree(m) for m in self._terms)

    def homogeneous_degree(self) -> Union[int, str]:
        """Common weighted degree of all terms, ``ANY_DEGREE`` for zero.

        :raise InhomogeneousError: carrying the first two different degrees met in term order
        """

        if not self._terms:
            return ANY_DEGREE

        order = self._ring.order
        degree = None
        for monomial, _ in self.terms():
            current = order.degree(monomial)
            if degree is None:
                degree = current
            elif current != degree:
                raise InhomogeneousError(f"{self} is not homogeneous: degrees {degree} and {current}", (degree, current))
        return degree

    def is_homogeneous(self) -> bool:
        try:
            self.homogeneous_degree()
        except InhomogeneousError:
            return False
        return True

    def _coerce(self, other: Any) -> 'Polynomial':
        if isinstance(other, Polynomial):
            if other._ring is not self._ring and other._ring != self._ring:
                raise UsageError(f"mixing polynomials of {self._ring} and {other._ring}")
            return other
        return Polynomial.constant(self._ring, other)

    def __add__(self, other: Any) -> 'Polynomial':
        other = self._coerce(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            value = terms.get(monomial)
            value = coefficient if value is None else value + coefficient
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return Polynomial(self._ring, terms, trusted=True)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial(self._ring, {m: -c for m, c in self._terms.items()}, trusted=True)

    def __sub__(self, other: Any) -> 'Polynomial':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> 'Polynomial':
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> 'Polynomial':
        other = self._coerce(other)
        terms: Dict[Monomial, Any] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = monomial_mul(m1, m2)
                value = terms.get(monomial)
                terms[monomial] = c1 * c2 if value is None else value + c1 * c2
        return Polynomial(self._ring, {m: c for m, c in terms.items() if c}, trusted=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Polynomial':
        if exponent < 0:
            raise UsageError("negative powers are not polynomials")
        result = Polynomial.constant(self._ring, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def mul_term(self, monomial: Monomial, coefficient: Any) -> 'Polynomial':
        """Product with the single term ``coefficient * x^monomial``."""

        if not coefficient:
            return Polynomial(self._ring, {}, trusted=True)
        return Polynomial(
            self._ring, {monomial_mul(m, monomial): c * coefficient for m, c in self._terms.items()}, trusted=True
        )

    def scale(self, coefficient: Any) -> 'Polynomial':
        return self.mul_term((0,) * self._ring.ngens, self.field.convert(coefficient))

    def monic(self) -> 'Polynomial':
        if not self._terms:
            return self
        return self.scale(self.field.one / self.leading_coefficient)

    def exact_quotient(self, monomial: Monomial) -> 'Polynomial':
        """Divide every term by a monomial that divides all of them."""

        terms = {}
        for m, c in self._terms.items():
            q = monomial_div(m, monomial)
            if q is None:
                raise UsageError(f"{monomial} does not divide {self}")
            terms[q] = c
        return Polynomial(self._ring, terms, trusted=True)

    def embed(self, ring: 'RingSpec', offset: int = 0) -> 'Polynomial':
        """The same polynomial in a ring whose variables are ``offset`` new ones followed by ours."""

        ring = ring.ambient
        if ring.ngens != self._ring.ngens + offset:
            raise UsageError(f"cannot embed {self._ring} into {ring}")
        pad = (0,) * offset
        return Polynomial(ring, {pad + m: c for m, c in self._terms.items()}, trusted=True)

    def project(self, ring: 'RingSpec', offset: int) -> 'Polynomial':
        """Inverse of ``embed`` for polynomials free of the first ``offset`` variables."""

        terms = {}
        for m, c in self._terms.items():
            if any(m[:offset]):
                raise UsageError(f"{self} still involves eliminated variables")
            terms[m[offset:]] = c
        return Polynomial(ring, terms, trusted=True)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            return self._ring == other._ring and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.constant(self._ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ring.variables, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        from extscope.poly.parser import format_polynomial  # pylint: disable=import-outside-toplevel
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self._ring.variables}, {str(self)!r})"

    def to_json(self) -> str:
        return str(self)


def homogeneity_check(polynomial: Polynomial) -> Union[int, str]:
    """Common weighted degree of ``polynomial`` (``ANY_DEGREE`` for zero); raises InhomogeneousError otherwise."""
    return polynomial.homogeneous_degree()


def divide_with_remainder(dividend: Polynomial, divisors: List[Polynomial]) -> Tuple[List[Polynomial], Polynomial]:
    """Multivariate division: ``dividend = sum(q_i * divisors[i]) + r`` with no term of ``r`` divisible by a
    leading monomial of a divisor. The first divisor whose leading monomial divides wins.

    :raise UsageError: for a zero divisor or a divisor from another ring
    """

    ring = dividend.ring
    for position, divisor in enumerate(divisors):
        if divisor.ring != ring:
            raise UsageError(f"divisor {position} lives in {divisor.ring}, the dividend in {ring}")
        if not divisor:
            raise UsageError(f"divisor {position} is zero")

    zero = Polynomial(ring, {}, trusted=True)
    quotients = [zero] * len(divisors)
    remainder: Dict[Monomial, Any] = {}
    current = dividend
    leads = [(d.leading_monomial, d.leading_coefficient) for d in divisors]

    while current:
        monomial, coefficient = current.terms()[0]
        for index, (lead, lead_coefficient) in enumerate(leads):
            factor = monomial_div(monomial, lead)
            if factor is not None:
                scale = coefficient / lead_coefficient
                quotients[index] = quotients[index] + Polynomial(ring, {factor: scale}, trusted=True)
                current = current - divisors[index].mul_term(factor, scale)
                break
        else:
            remainder[monomial] = coefficient
            current = current - Polynomial(ring, {monomial: coefficient}, trusted=True)

    return quotients, Polynomial(ring, remainder, trusted=True)
