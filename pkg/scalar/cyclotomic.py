"""
Exact arithmetic in the cyclotomic field Q(eps).
Provides cyclotomic moduli and the CycScalar field element class.

Elements are stored in the power basis 1, eps, ..., eps^(phi(l)-1) and are always
fully reduced modulo the l-th cyclotomic polynomial, so equality is coefficientwise.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

import sympy

from utils.errors import FieldMismatchError

# Configure logging
logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

_Q = sympy.Symbol("q")


@lru_cache(maxsize=None)
def cyclotomic_modulus(l: int) -> Tuple[int, ...]:
    """
    Minimal polynomial of a primitive l-th root of unity over the rationals.

    Args:
        l: Order of the root of unity

    Returns:
        Integer coefficients of Phi_l, lowest degree first

    Raises:
        ValueError: If l < 1
    """
    if l < 1:
        raise ValueError(f"Root order must be positive, got {l}")
    poly = sympy.Poly(sympy.cyclotomic_poly(l, _Q), _Q)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _modulus_poly(l: int) -> sympy.Poly:
    return sympy.Poly(sympy.cyclotomic_poly(l, _Q), _Q, domain=sympy.QQ)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


class CyclotomicField:
    """Reduction data for Q(eps) with eps a primitive l-th root of unity."""

    def __init__(self, l: int):
        self.l = l
        self.modulus = cyclotomic_modulus(l)
        self.degree = len(self.modulus) - 1
        self._powers = [self.reduce([0] * k + [1]) for k in range(l)]
        logger.debug(f"Built cyclotomic field l={l} of degree {self.degree}")

    def reduce(self, coeffs: Sequence[Rational]) -> Tuple[Fraction, ...]:
        """Reduce a coefficient list modulo Phi_l to a tuple of length phi(l)."""
        b = [Fraction(c) for c in coeffs]
        d = self.degree
        for k in range(len(b) - 1, d - 1, -1):
            top = b[k]
            if top:
                for i in range(d):
                    b[k - d + i] -= top * self.modulus[i]
        b = b[:d]
        b.extend([Fraction(0)] * (d - len(b)))
        return tuple(b)

    def power_vector(self, k: int) -> Tuple[Fraction, ...]:
        """Coordinates of eps^k (any integer k)."""
        return self._powers[k % self.l]


@lru_cache(maxsize=None)
def cyclotomic_field(l: int) -> CyclotomicField:
    """Shared field instance for root order l."""
    return CyclotomicField(l)


class CycScalar:
    """
    Element of Q(eps).

    Integers and Fractions coerce into any field. Elements of different fields may
    only be combined when one of them is rational.
    """

    __slots__ = ("l", "coeffs")

    def __init__(self, l: int, coeffs: Sequence[Rational] = ()):
        self.l = l
        self.coeffs = cyclotomic_field(l).reduce(coeffs)

    @classmethod
    def _make(cls, l: int, coeffs: Tuple[Fraction, ...]) -> "CycScalar":
        obj = cls.__new__(cls)
        obj.l = l
        obj.coeffs = coeffs
        return obj

    # Constructors

    @classmethod
    def from_rational(cls, l: int, value: Rational) -> "CycScalar":
        d = cyclotomic_field(l).degree
        return cls._make(l, (Fraction(value),) + (Fraction(0),) * (d - 1))

    @classmethod
    def zero(cls, l: int) -> "CycScalar":
        return cls.from_rational(l, 0)

    @classmethod
    def one(cls, l: int) -> "CycScalar":
        return cls.from_rational(l, 1)

    @classmethod
    def root_power(cls, l: int, k: int) -> "CycScalar":
        """eps^k for any integer k."""
        return cls._make(l, cyclotomic_field(l).power_vector(k))

    @classmethod
    def epsilon(cls, l: int) -> "CycScalar":
        return cls.root_power(l, 1)

    # Predicates

    @property
    def field(self) -> CyclotomicField:
        return cyclotomic_field(self.l)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Coercion

    def _pair(self, other) -> Tuple["CycScalar", "CycScalar"]:
        if isinstance(other, CycScalar):
            if other.l == self.l:
                return self, other
            if other.is_rational():
                return self, CycScalar.from_rational(self.l, other.coeffs[0])
            if self.is_rational():
                return CycScalar.from_rational(other.l, self.coeffs[0]), other
            raise FieldMismatchError(f"Cannot combine elements of Q(eps_{self.l}) and Q(eps_{other.l})")
        if isinstance(other, (int, Fraction)):
            return self, CycScalar.from_rational(self.l, other)
        raise TypeError

    # Arithmetic

    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return CycScalar._make(a.l, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar._make(self.l, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return CycScalar._make(a.l, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        if b.is_rational():
            c = b.coeffs[0]
            return CycScalar._make(a.l, tuple(x * c for x in a.coeffs))
        if a.is_rational():
            c = a.coeffs[0]
            return CycScalar._make(a.l, tuple(c * y for y in b.coeffs))
        return CycScalar._make(a.l, a.field.reduce(_poly_mul(a.coeffs, b.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """
        Multiplicative inverse modulo Phi_l.

        Raises:
            ZeroDivisionError: If the element is zero
        """
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero in Q(eps)")
        if self.is_rational():
            return CycScalar.from_rational(self.l, 1 / self.coeffs[0])
        element = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
                             _Q, domain=sympy.QQ)
        inverse = sympy.invert(element, _modulus_poly(self.l))
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inverse.all_coeffs())]
        return CycScalar._make(self.l, self.field.reduce(coeffs))

    def __truediv__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, exponent: int) -> "CycScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycScalar.one(self.l)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycScalar):
            if other.l == self.l:
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.coeffs[0] == other.coeffs[0]
            return False
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.l, self.coeffs))

    # Formatting

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if k == 0 else ("e" if k == 1 else f"e^{k}")
            if not power:
                parts.append(str(c))
            elif c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CycScalar(l={self.l}, {self})"

    def to_serializable(self) -> Dict[str, object]:
        """Coefficient array plus l, for JSON reports."""
        return {"l": self.l, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_serializable(cls, data: Dict[str, object]) -> "CycScalar":
        return cls(int(data["l"]), [Fraction(str(c)) for c in data["coeffs"]])


def as_cyc(value: Union[Rational, CycScalar], l: int) -> CycScalar:
    """Coerce a rational or a scalar of a compatible field into Q(eps_l)."""
    if isinstance(value, CycScalar):
        if value.l == l:
            return value
        if value.is_rational():
            return CycScalar.from_rational(l, value.coeffs[0])
        raise FieldMismatchError(f"Scalar of Q(eps_{value.l}) used in Q(eps_{l})")
    return CycScalar.from_rational(l, value)
