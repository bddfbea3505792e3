"""
Laurent polynomials in q over Q(eps).
Provides QLaurent, specialization at q = eps and exact division by (q - eps).
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from scalar.cyclotomic import CycScalar, cyclotomic_field
from utils.errors import NotDivisibleError

# Configure logging
logger = logging.getLogger(__name__)

Coefficient = Union[Fraction, CycScalar]
ScalarLike = Union[int, Fraction, CycScalar]


def _normalize(value: ScalarLike) -> Coefficient:
    if isinstance(value, CycScalar):
        return value
    return Fraction(value)


class QLaurent:
    """
    Finitely supported mapping from q-exponents to coefficients.

    Coefficients are Fractions or CycScalars; zero coefficients are never stored.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, ScalarLike]] = None):
        clean: Dict[int, Coefficient] = {}
        for k, v in (terms or {}).items():
            if v != 0:
                clean[int(k)] = _normalize(v)
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: Dict[int, Coefficient]) -> "QLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    # Constructors

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "QLaurent":
        return cls._wrap({0: Fraction(1)})

    @classmethod
    def constant(cls, value: ScalarLike) -> "QLaurent":
        return cls({0: value})

    @classmethod
    def q_power(cls, k: int, coefficient: ScalarLike = 1) -> "QLaurent":
        return cls({k: coefficient})

    @classmethod
    def coerce(cls, value: Union["QLaurent", ScalarLike]) -> "QLaurent":
        if isinstance(value, QLaurent):
            return value
        return cls.constant(value)

    # Inspection

    def items(self) -> Iterator[Tuple[int, Coefficient]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, k: int) -> Coefficient:
        return self._terms.get(k, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        return max(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_term(self) -> Coefficient:
        return self.coefficient(0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    # Arithmetic

    def __add__(self, other):
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Fraction, CycScalar)):
                other = QLaurent.constant(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return QLaurent._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent._wrap({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (QLaurent, int, Fraction, CycScalar)):
            return NotImplemented
        return self + (-QLaurent.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            if other == 0:
                return QLaurent.zero()
            return QLaurent._wrap({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, QLaurent):
            return NotImplemented
        out: Dict[int, Coefficient] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return QLaurent({k: v for k, v in out.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QLaurent":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QLaurent.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "QLaurent":
        """Multiply by q^k."""
        return QLaurent._wrap({e + k: v for e, v in self._terms.items()})

    def inverse(self) -> "QLaurent":
        """
        Inverse of a unit c*q^k.

        Raises:
            ValueError: If the polynomial is not a monomial
        """
        if not self.is_monomial():
            raise ValueError(f"{self} is not a unit of the Laurent ring")
        (k, c), = self._terms.items()
        return QLaurent._wrap({-k: 1 / c})

    def map_coefficients(self, fn: Callable[[Coefficient], ScalarLike]) -> "QLaurent":
        return QLaurent({k: fn(v) for k, v in self._terms.items()})

    def evaluate(self, value: ScalarLike) -> ScalarLike:
        """Substitute q := value (value must be invertible when negative powers occur)."""
        total: ScalarLike = Fraction(0)
        for k, c in self._terms.items():
            total = total + c * value ** k
        return total

    def exact_divide(self, divisor: "QLaurent") -> "QLaurent":
        """
        Divide exactly by another Laurent polynomial.

        Raises:
            ZeroDivisionError: If the divisor is zero
            NotDivisibleError: If the division leaves a remainder
        """
        if divisor.is_zero:
            raise ZeroDivisionError("Division by the zero Laurent polynomial")
        if self.is_zero:
            return QLaurent.zero()
        dlo = divisor.min_degree
        nlo = self.min_degree
        den = [divisor.coefficient(k) for k in range(dlo, divisor.max_degree + 1)]
        num: List[ScalarLike] = [self.coefficient(k) for k in range(nlo, self.max_degree + 1)]
        if len(num) < len(den):
            raise NotDivisibleError(f"{self} is not divisible by {divisor}")
        quotient: List[ScalarLike] = [Fraction(0)] * (len(num) - len(den) + 1)
        lead = den[-1]
        for shift in range(len(num) - len(den), -1, -1):
            c = num[shift + len(den) - 1] / lead
            quotient[shift] = c
            if c != 0:
                for k, dk in enumerate(den):
                    num[shift + k] = num[shift + k] - c * dk
        if any(x != 0 for x in num):
            raise NotDivisibleError(f"{self} is not divisible by {divisor}")
        return QLaurent({nlo - dlo + k: c for k, c in enumerate(quotient)})

    # Comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycScalar)):
            other = QLaurent.constant(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if set(self._terms) != set(other._terms):
            return False
        return all(self._terms[k] == other._terms[k] for k in self._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # Formatting

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            coeff = str(c)
            if isinstance(c, CycScalar) and not c.is_rational():
                coeff = f"({coeff})"
            if k == 0:
                parts.append(coeff)
                continue
            power = "q" if k == 1 else f"q^({k})" if k < 0 else f"q^{k}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{coeff}*{power}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QLaurent({self})"


def eval_at_eps(p: QLaurent, l: int) -> CycScalar:
    """
    Specialize q := eps, a primitive l-th root of unity.

    Args:
        p: Laurent polynomial
        l: Root order

    Returns:
        The value in Q(eps), reduced modulo Phi_l
    """
    field = cyclotomic_field(l)
    acc = [Fraction(0)] * field.degree
    total = CycScalar._make(l, tuple(acc))
    for k, c in p.items():
        if isinstance(c, CycScalar):
            total = total + c * CycScalar.root_power(l, k)
        else:
            vec = field.power_vector(k)
            for i, v in enumerate(vec):
                if v:
                    acc[i] += c * v
    return total + CycScalar._make(l, tuple(acc))


def exact_div_q_minus_eps(p: QLaurent, l: int) -> QLaurent:
    """
    Divide by (q - eps) by synthetic division.

    Args:
        p: Laurent polynomial with p(eps) = 0
        l: Root order

    Returns:
        p / (q - eps)

    Raises:
        NotDivisibleError: If p(eps) != 0
    """
    if p.is_zero:
        return QLaurent.zero()
    eps = CycScalar.epsilon(l)
    lo, hi = p.min_degree, p.max_degree
    d = hi - lo
    if d == 0:
        raise NotDivisibleError(f"{p} does not vanish at eps (l={l})")
    a = [p.coefficient(k) for k in range(lo, hi + 1)]
    b: List[ScalarLike] = [Fraction(0)] * d
    b[d - 1] = a[d]
    for k in range(d - 1, 0, -1):
        b[k - 1] = a[k] + eps * b[k]
    remainder = a[0] + eps * b[0]
    if remainder != 0:
        raise NotDivisibleError(f"{p} does not vanish at eps (l={l})")
    return QLaurent({lo + k: b[k] for k in range(d)})


def q_adic_valuation(p: QLaurent, l: int) -> int:
    """
    Multiplicity of (q - eps) as a factor of p.

    Raises:
        ValueError: If p is zero
    """
    if p.is_zero:
        raise ValueError("Valuation of the zero polynomial is infinite")
    count = 0
    while True:
        try:
            p = exact_div_q_minus_eps(p, l)
        except NotDivisibleError:
            return count
        count += 1


def divisible_by_q_minus_eps_power(p: QLaurent, l: int, power: int) -> bool:
    """True when (q - eps)^power divides p."""
    for _ in range(power):
        if p.is_zero:
            return True
        try:
            p = exact_div_q_minus_eps(p, l)
        except NotDivisibleError:
            return False
    return True
