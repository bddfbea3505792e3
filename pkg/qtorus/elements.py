"""
Normal-form noncommutative polynomials.
Provides the element class and the algebra base shared by quantum tori and Ore extensions.

An element is a finitely supported mapping from exponent vectors (normal-ordered
monomials x_1^t_1 ... x_N^t_N) to QLaurent coefficients. Algebras supply the product
of two monomials; everything else is bilinear bookkeeping done here.
"""

import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from scalar.cyclotomic import CycScalar
from scalar.laurent import QLaurent

# Configure logging
logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, QLaurent]
ScalarLike = Union[int, Fraction, CycScalar, QLaurent]

# Coefficient pool for random elements
_RANDOM_COEFFICIENTS = (
    QLaurent.one(),
    -QLaurent.one(),
    QLaurent.constant(2),
    QLaurent.q_power(1),
    QLaurent.q_power(-1),
    QLaurent({0: 1, 1: 1}),
    QLaurent.constant(3),
    QLaurent.q_power(2, -1),
)


def add_terms(target: Terms, mono: Monomial, coeff: QLaurent) -> None:
    """In-place target[mono] += coeff, dropping zeros."""
    if coeff.is_zero:
        return
    current = target.get(mono)
    value = coeff if current is None else current + coeff
    if value.is_zero:
        target.pop(mono, None)
    else:
        target[mono] = value


def format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, mono):
        if e == 1:
            factors.append(name)
        elif e != 0:
            factors.append(f"{name}^{e}" if e > 0 else f"{name}^({e})")
    return "*".join(factors)


@dataclass(frozen=True)
class WordRelation:
    """
    A defining relation sum_k c_k * w_k = 0, each w_k a word in the generators.

    Words are tuples of (generator index, exponent) read left to right.
    """
    label: str
    terms: Tuple[Tuple[QLaurent, Tuple[Tuple[int, int], ...]], ...]


class AlgebraElement:
    """Element of a NormalFormAlgebra. Treated as immutable."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: "NormalFormAlgebra", terms: Optional[Mapping[Monomial, ScalarLike]] = None):
        self.algebra = algebra
        clean: Terms = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != algebra.N:
                raise ValueError(f"Monomial {mono} has {len(mono)} exponents, expected {algebra.N}")
            add_terms(clean, mono, QLaurent.coerce(coeff))
        self._terms = clean

    @classmethod
    def _wrap(cls, algebra: "NormalFormAlgebra", terms: Terms) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.algebra = algebra
        obj._terms = terms
        return obj

    # Inspection

    def terms(self) -> Iterator[Tuple[Monomial, QLaurent]]:
        return iter(sorted(self._terms.items()))

    def term_dict(self) -> Terms:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> QLaurent:
        return self._terms.get(tuple(mono), QLaurent.zero())

    def support(self) -> List[Monomial]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(not any(mono) for mono in self._terms)

    def scalar_part(self) -> QLaurent:
        return self.coefficient(self.algebra.unit_monomial)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def single_term(self) -> Tuple[Monomial, QLaurent]:
        """
        Raises:
            ValueError: Unless the element has exactly one term
        """
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a single term")
        (mono, coeff), = self._terms.items()
        return mono, coeff

    def degree(self) -> int:
        """Total degree sum |t_k| of the largest monomial (-1 for zero)."""
        if not self._terms:
            return -1
        return max(sum(abs(e) for e in mono) for mono in self._terms)

    def indices_used(self) -> List[int]:
        used = set()
        for mono in self._terms:
            used.update(k for k, e in enumerate(mono) if e != 0)
        return sorted(used)

    def map_coefficients(self, fn) -> "AlgebraElement":
        out: Terms = {}
        for mono, coeff in self._terms.items():
            add_terms(out, mono, QLaurent.coerce(fn(coeff)))
        return type(self)._wrap(self.algebra, out)

    # Arithmetic

    def _check_same(self, other: "AlgebraElement") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("Elements belong to different algebras")

    def _coerce(self, other) -> Optional["AlgebraElement"]:
        if isinstance(other, AlgebraElement):
            self._check_same(other)
            return other
        if isinstance(other, (int, Fraction, CycScalar, QLaurent)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            add_terms(out, mono, coeff)
        return type(self)._wrap(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return type(self)._wrap(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: ScalarLike) -> "AlgebraElement":
        factor = QLaurent.coerce(factor)
        if factor.is_zero:
            return self.algebra.zero()
        out: Terms = {}
        for mono, coeff in self._terms.items():
            add_terms(out, mono, coeff * factor)
        return type(self)._wrap(self.algebra, out)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_same(other)
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, Fraction, CycScalar, QLaurent)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar, QLaurent)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "AlgebraElement":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.algebra.inverse(self) ** (-exponent)
        result = self.algebra.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # Comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycScalar, QLaurent)):
            other = self.algebra.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra is not self.algebra:
            return False
        if set(self._terms) != set(other._terms):
            return False
        return all(self._terms[m] == other._terms[m] for m in self._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # Formatting

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            word = format_monomial(mono, self.algebra.names)
            if not word:
                parts.append(str(coeff) if coeff.is_monomial() else f"({coeff})")
            elif coeff == 1:
                parts.append(word)
            elif coeff == -1:
                parts.append(f"-{word}")
            else:
                parts.append(f"({coeff})*{word}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class NormalFormAlgebra(ABC):
    """
    Algebra with a normal-ordered monomial basis.

    The first `num_polynomial` generators carry nonnegative exponents, the remaining
    ones are invertible.
    """

    element_class = AlgebraElement

    def __init__(self, N: int, num_polynomial: int, names: Optional[Sequence[str]] = None, prefix: str = "x"):
        self.N = N
        self.num_polynomial = num_polynomial
        self.names = tuple(names) if names is not None else tuple(f"{prefix}{k + 1}" for k in range(N))
        if len(self.names) != N:
            raise ValueError(f"Expected {N} generator names, got {len(self.names)}")
        self.unit_monomial: Monomial = (0,) * N

    @abstractmethod
    def monomial_product(self, a: Monomial, b: Monomial) -> Terms:
        """Normal form of the product of two basis monomials."""

    @abstractmethod
    def weight(self, i: int, mono: Monomial) -> int:
        """Exponent m with tau_i(x^mono) = q^m x^mono."""

    @abstractmethod
    def defining_relations(self) -> List[WordRelation]:
        """Relations among the generators, as words."""

    def inverse(self, element: AlgebraElement) -> AlgebraElement:
        raise ValueError(f"{element} is not invertible in {type(self).__name__}")

    # Constructors

    def element(self, terms: Optional[Mapping[Monomial, ScalarLike]] = None) -> AlgebraElement:
        return self.element_class(self, terms)

    def zero(self) -> AlgebraElement:
        return self.element_class._wrap(self, {})

    def one(self) -> AlgebraElement:
        return self.element_class._wrap(self, {self.unit_monomial: QLaurent.one()})

    def scalar(self, value: ScalarLike) -> AlgebraElement:
        value = QLaurent.coerce(value)
        if value.is_zero:
            return self.zero()
        return self.element_class._wrap(self, {self.unit_monomial: value})

    def monomial(self, exponents: Sequence[int], coefficient: ScalarLike = 1) -> AlgebraElement:
        exponents = tuple(int(e) for e in exponents)
        for k in range(self.num_polynomial):
            if exponents[k] < 0:
                raise ValueError(f"Generator {self.names[k]} is not invertible")
        return self.element({exponents: coefficient})

    def generator(self, k: int) -> AlgebraElement:
        return self.monomial(tuple(1 if j == k else 0 for j in range(self.N)))

    def generators(self) -> List[AlgebraElement]:
        return [self.generator(k) for k in range(self.N)]

    def is_invertible_generator(self, k: int) -> bool:
        return k >= self.num_polynomial

    # Products

    def multiply_terms(self, left: Mapping[Monomial, QLaurent], right: Mapping[Monomial, QLaurent]) -> Terms:
        out: Terms = {}
        for ma, ca in left.items():
            for mb, cb in right.items():
                coeff = ca * cb
                if coeff.is_zero:
                    continue
                for mono, c in self.monomial_product(ma, mb).items():
                    add_terms(out, mono, c * coeff)
        return out

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return self.element_class._wrap(self, self.multiply_terms(a._terms, b._terms))

    def commutator(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """ab - ba."""
        return a * b - b * a

    def evaluate_word(self, word: Iterable[Tuple[int, int]]) -> AlgebraElement:
        result = self.one()
        for k, e in word:
            result = result * (self.generator(k) ** e)
        return result

    def q_commutation_exponent(self, a: AlgebraElement, b: AlgebraElement) -> Optional[int]:
        """
        The integer c with ab = q^c ba, if one exists.

        The exponent is read off the lowest q-degrees of one common coefficient and
        then checked on the whole product.
        """
        ab = a * b
        ba = b * a
        if ab.is_zero() or ba.is_zero():
            return 0 if ab.is_zero() and ba.is_zero() else None
        mono, coeff = next(ba.terms())
        other = ab.coefficient(mono)
        if other.is_zero:
            return None
        c = other.min_degree - coeff.min_degree
        return c if ab == ba.scale(QLaurent.q_power(c)) else None

    def apply_tau(self, i: int, a: AlgebraElement) -> AlgebraElement:
        """tau_i scales each monomial by q^weight."""
        out: Terms = {}
        for mono, coeff in a._terms.items():
            add_terms(out, mono, coeff.shift(self.weight(i, mono)))
        return self.element_class._wrap(self, out)

    def tau_power(self, i: int, a: AlgebraElement, k: int) -> AlgebraElement:
        out: Terms = {}
        for mono, coeff in a._terms.items():
            add_terms(out, mono, coeff.shift(k * self.weight(i, mono)))
        return self.element_class._wrap(self, out)

    def is_weight_vector(self, a: AlgebraElement) -> bool:
        """Every tau_i acts on a by a single power of q."""
        support = list(a._terms)
        for i in range(self.N):
            if len({self.weight(i, mono) for mono in support}) > 1:
                return False
        return True

    def random_element(self, seed: int, maxdeg: int, support: Optional[Sequence[int]] = None,
                       max_terms: int = 4) -> AlgebraElement:
        """
        Deterministic pseudo-random element.

        Args:
            seed: Random seed
            maxdeg: Bound on the total degree sum |t_k| of every monomial
            support: Generator indices allowed to appear (default: all)
            max_terms: Upper bound on the number of terms drawn

        Returns:
            Nonzero element with coefficients drawn from a fixed nonzero pool.
            A draw whose terms cancel is discarded and the seeded stream
            draws again.
        """
        if maxdeg < 0:
            raise ValueError(f"maxdeg must be nonnegative, got {maxdeg}")
        rng = random.Random(seed)
        indices = list(range(self.N)) if support is None else list(support)
        out: Terms = {}
        while not out:
            out = self._draw_terms(rng, indices, maxdeg, max_terms)
        return self.element_class._wrap(self, out)

    def _draw_terms(self, rng: random.Random, indices: List[int], maxdeg: int, max_terms: int) -> Terms:
        out: Terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exponents = [0] * self.N
            budget = rng.randint(0, maxdeg) if indices else 0
            for _ in range(budget):
                k = rng.choice(indices)
                if self.is_invertible_generator(k) and rng.random() < 0.5:
                    exponents[k] -= 1
                else:
                    exponents[k] += 1
            add_terms(out, tuple(exponents), rng.choice(_RANDOM_COEFFICIENTS))
        return out
