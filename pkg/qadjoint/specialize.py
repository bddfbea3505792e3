"""
Specialization at q = eps.
Provides SpecElement, the image of an element under q -> eps, with arithmetic done by
lifting to constant coefficients and reducing again.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple, Union

from qtorus.elements import AlgebraElement, Monomial, NormalFormAlgebra, format_monomial
from scalar.cyclotomic import CycScalar, as_cyc
from scalar.laurent import QLaurent, eval_at_eps

# Configure logging
logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, CycScalar]


class SpecElement:
    """
    Element of R_eps: exponent vectors mapped to nonzero CycScalar coefficients.

    Treated as immutable; `algebra` is the unspecialized algebra the monomials live in.
    """

    __slots__ = ("algebra", "l", "_terms")

    def __init__(self, algebra: NormalFormAlgebra, l: int, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.algebra = algebra
        self.l = l
        clean: Dict[Monomial, CycScalar] = {}
        for mono, value in (terms or {}).items():
            value = as_cyc(value, l)
            if not value.is_zero():
                mono = tuple(mono)
                current = clean.get(mono)
                total = value if current is None else current + value
                if total.is_zero():
                    clean.pop(mono, None)
                else:
                    clean[mono] = total
        self._terms = clean

    # Inspection

    def terms(self) -> Iterator[Tuple[Monomial, CycScalar]]:
        return iter(sorted(self._terms.items()))

    def term_dict(self) -> Dict[Monomial, CycScalar]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> CycScalar:
        return self._terms.get(tuple(mono), CycScalar.zero(self.l))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def single_term(self) -> Tuple[Monomial, CycScalar]:
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a single term")
        (mono, coeff), = self._terms.items()
        return mono, coeff

    def lift(self) -> AlgebraElement:
        """Preimage with constant coefficients."""
        return self.algebra.element({mono: QLaurent.constant(c) for mono, c in self._terms.items()})

    # Arithmetic

    def _coerce(self, other) -> Optional["SpecElement"]:
        if isinstance(other, SpecElement):
            if other.algebra is not self.algebra or other.l != self.l:
                raise ValueError("Specialized elements of different algebras or roots")
            return other
        if isinstance(other, (int, Fraction, CycScalar)):
            return SpecElement(self.algebra, self.l, {self.algebra.unit_monomial: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms[mono] + c if mono in terms else c
        return SpecElement(self.algebra, self.l, terms)

    __radd__ = __add__

    def __neg__(self) -> "SpecElement":
        return SpecElement(self.algebra, self.l, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: Scalar) -> "SpecElement":
        factor = as_cyc(factor, self.l)
        return SpecElement(self.algebra, self.l, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return specialize(self.lift() * other.lift(), self.l)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "SpecElement":
        if exponent < 0:
            return specialize(self.lift() ** exponent, self.l)
        result = SpecElement(self.algebra, self.l, {self.algebra.unit_monomial: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycScalar)):
            other = SpecElement(self.algebra, self.l, {self.algebra.unit_monomial: other})
        if not isinstance(other, SpecElement):
            return NotImplemented
        return other.algebra is self.algebra and other.l == self.l and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.l, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.terms():
            word = format_monomial(mono, self.algebra.names)
            if not word:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(word)
            elif c == -1:
                parts.append(f"-{word}")
            else:
                parts.append(f"({c})*{word}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SpecElement(l={self.l}, {self})"


def specialize(element: AlgebraElement, l: int) -> SpecElement:
    """
    Reduce an element modulo (q - eps).

    Args:
        element: Element with Laurent coefficients
        l: Root order

    Returns:
        SpecElement with every coefficient evaluated at eps
    """
    return SpecElement(element.algebra, l, {mono: eval_at_eps(c, l) for mono, c in element.terms()})


def lift(element: SpecElement) -> AlgebraElement:
    return element.lift()


def tau_at_eps(i: int, element: SpecElement) -> SpecElement:
    """tau_i reduced at eps: each monomial scaled by eps^weight."""
    algebra = element.algebra
    return SpecElement(algebra, element.l, {
        mono: c * CycScalar.root_power(element.l, algebra.weight(i, mono)) for mono, c in element.terms()
    })


def as_spec(element: Union[AlgebraElement, SpecElement], l: int) -> SpecElement:
    if isinstance(element, SpecElement):
        if element.l != l:
            raise ValueError(f"Element specialized at l={element.l}, expected l={l}")
        return element
    return specialize(element, l)
