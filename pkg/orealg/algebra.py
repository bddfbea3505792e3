"""
Arithmetic in quantum solvable algebras.
Provides OreAlgebra: normal-form multiplication by rewriting, and the tau/delta calculus.
"""

import logging
from typing import Dict, List, Optional, Tuple

from orealg.spec import OreAlgebraSpec
from qtorus.elements import AlgebraElement, Monomial, NormalFormAlgebra, Terms, WordRelation, add_terms
from scalar.laurent import QLaurent, eval_at_eps
from utils.config import settings
from utils.errors import FuelExhaustedError, OutOfDomainError

# Configure logging
logger = logging.getLogger(__name__)

_ONE = QLaurent.one()


class OreElement(AlgebraElement):
    """Element of a quantum solvable algebra in the PBW basis x_1^t_1 ... x_N^t_N."""

    __slots__ = ()


class OreAlgebra(NormalFormAlgebra):
    """
    Quantum solvable algebra built from a spec.

    Products are normalized by moving a factor x_i^alpha right past x_j^beta (i > j)
    with x_i^alpha x_j = q^(s_ij alpha) (x_j x_i^alpha - delta_j(x_i^alpha)), i.e. the
    Ore rule x_j a = tau_j(a) x_j + delta_j(a) read backwards. Every elementary rewrite
    spends one unit of fuel; a product that runs out raises FuelExhaustedError.
    """

    element_class = OreElement

    def __init__(self, spec: OreAlgebraSpec, fuel: Optional[int] = None):
        super().__init__(spec.N, spec.n, names=spec.names)
        self.spec = spec
        self.S = spec.S
        self.W = spec.W
        self.skew_constants = spec.skew_constants
        self.fuel = fuel if fuel is not None else settings.REWRITE_FUEL
        self._relations: Dict[Tuple[int, int], Terms] = spec.relation_table()
        self._product_cache: Dict[Tuple[Monomial, Monomial], Terms] = {}
        self._swap_cache: Dict[Tuple[int, int, int, int], Terms] = {}
        self._power_delta_cache: Dict[Tuple[int, int, int], Terms] = {}
        self._delta_cache: Dict[Tuple[int, Monomial], Terms] = {}
        self._budget: Optional[int] = None

    def __repr__(self) -> str:
        return f"OreAlgebra({self.spec.name}, n={self.spec.n}, m={self.spec.m})"

    # Rewriting

    def _spend(self) -> None:
        self._budget -= 1
        if self._budget < 0:
            raise FuelExhaustedError(f"More than {self.fuel} rewrites in one product of {self.spec.name}")

    def _unit(self, k: int, e: int) -> Monomial:
        mono = [0] * self.N
        mono[k] = e
        return tuple(mono)

    def monomial_product(self, a: Monomial, b: Monomial) -> Terms:
        cached = self._product_cache.get((a, b))
        if cached is not None:
            return cached
        outer = self._budget is None
        if outer:
            self._budget = self.fuel
        try:
            result = self._compute_product(a, b)
        finally:
            if outer:
                used = self.fuel - self._budget
                self._budget = None
                if used > 1000:
                    logger.debug(f"Product {a} * {b} used {used} rewrites")
        self._product_cache[(a, b)] = result
        return result

    def _compute_product(self, a: Monomial, b: Monomial) -> Terms:
        self._spend()
        hi = max((k for k in range(self.N) if a[k]), default=-1)
        lo = min((k for k in range(self.N) if b[k]), default=self.N)
        if hi <= lo:
            return {tuple(x + y for x, y in zip(a, b)): _ONE}
        head = list(a)
        head[hi] = 0
        tail = list(b)
        tail[lo] = 0
        middle = self._swap(hi, a[hi], lo, b[lo])
        left = self._left_multiply(tuple(head), middle)
        return self._right_multiply(left, tuple(tail))

    def _left_multiply(self, mono: Monomial, terms: Terms) -> Terms:
        if not any(mono):
            return terms
        return self.multiply_terms({mono: _ONE}, terms)

    def _right_multiply(self, terms: Terms, mono: Monomial) -> Terms:
        if not any(mono):
            return terms
        return self.multiply_terms(terms, {mono: _ONE})

    def _swap(self, i: int, alpha: int, j: int, beta: int) -> Terms:
        """Normal form of x_i^alpha x_j^beta for i > j."""
        key = (i, alpha, j, beta)
        cached = self._swap_cache.get(key)
        if cached is not None:
            return cached
        self._spend()
        if (j, i) not in self._relations:
            mono = [0] * self.N
            mono[i] = alpha
            mono[j] = beta
            result = {tuple(mono): QLaurent.q_power(self.S[i][j] * alpha * beta)}
        else:
            inner: Terms = {tuple(x + y for x, y in zip(self._unit(j, 1), self._unit(i, alpha))): _ONE}
            for mono, coeff in self._delta_of_power(j, i, alpha).items():
                add_terms(inner, mono, -coeff)
            scale = QLaurent.q_power(self.S[i][j] * alpha)
            inner = {mono: coeff * scale for mono, coeff in inner.items()}
            result = self._right_multiply(inner, self._unit(j, beta - 1))
        self._swap_cache[key] = result
        return result

    def _delta_of_power(self, j: int, k: int, e: int) -> Terms:
        """delta_j(x_k^e) = sum_a q^(w_jk a) x_k^a r_jk x_k^(e-1-a)."""
        key = (j, k, e)
        cached = self._power_delta_cache.get(key)
        if cached is not None:
            return cached
        relation = self._relations.get((j, k))
        out: Terms = {}
        if relation and e > 0:
            for a in range(e):
                left = {self._unit(k, a): QLaurent.q_power(self.W[j][k] * a)}
                piece = self.multiply_terms(self.multiply_terms(left, relation), {self._unit(k, e - 1 - a): _ONE})
                for mono, coeff in piece.items():
                    add_terms(out, mono, coeff)
        self._power_delta_cache[key] = out
        return out

    # The tau/delta calculus

    def weight(self, i: int, mono: Monomial) -> int:
        row = self.W[i]
        return sum(row[k] * e for k, e in enumerate(mono) if e)

    def apply_delta(self, i: int, a: AlgebraElement) -> OreElement:
        """
        The tau_i-derivation delta_i, extended from delta_i(x_j) = r_ij by the
        rule delta(ab) = delta(a) b + tau(a) delta(b).

        Args:
            i: Polynomial generator index (0-based)
            a: Element of the subalgebra on indices > i

        Returns:
            delta_i(a)

        Raises:
            OutOfDomainError: If a involves a generator of index <= i
        """
        if not 0 <= i < self.spec.n:
            raise OutOfDomainError(f"delta_{i + 1} is only defined for polynomial generators")
        out: Terms = {}
        for mono, coeff in a.terms():
            if any(mono[k] for k in range(i + 1)):
                raise OutOfDomainError(f"delta_{i + 1} is defined on the subalgebra generated by "
                                       f"x_{i + 2}..x_{self.N}, got {a}")
            for m, c in self._delta_monomial(i, mono).items():
                add_terms(out, m, c * coeff)
        return OreElement._wrap(self, out)

    def _delta_monomial(self, i: int, mono: Monomial) -> Terms:
        key = (i, mono)
        cached = self._delta_cache.get(key)
        if cached is not None:
            return cached
        factors = [(k, e) for k, e in enumerate(mono) if e]
        out: Terms = {}
        for p, (k, e) in enumerate(factors):
            if (i, k) not in self._relations:
                continue
            prefix = [0] * self.N
            for kk, ee in factors[:p]:
                prefix[kk] = ee
            suffix = [0] * self.N
            for kk, ee in factors[p + 1:]:
                suffix[kk] = ee
            prefix = tuple(prefix)
            left = {prefix: QLaurent.q_power(self.weight(i, prefix))}
            piece = self._right_multiply(self.multiply_terms(left, self._delta_of_power(i, k, e)), tuple(suffix))
            for m, c in piece.items():
                add_terms(out, m, c)
        self._delta_cache[key] = out
        return out

    def delta_power(self, i: int, a: AlgebraElement, k: int) -> OreElement:
        for _ in range(k):
            a = self.apply_delta(i, a)
        return a

    def pi_n(self, g: AlgebraElement, n: int, i: int) -> OreElement:
        """
        tau_i^(n-1)(g) ... tau_i(g) g.

        Raises:
            ValueError: If n < 1
        """
        if n < 1:
            raise ValueError(f"pi_n needs n >= 1, got {n}")
        result = g
        for k in range(1, n):
            result = self.tau_power(i, g, k) * result
        return result

    def relation_element(self, i: int, j: int) -> OreElement:
        return self.element(self._relations.get((i, j), {}))

    def defining_relations(self) -> List[WordRelation]:
        relations = []
        for i in range(self.N):
            for j in range(i + 1, self.N):
                s = self.S[i][j]
                terms = [(_ONE, ((i, 1), (j, 1))), (-QLaurent.q_power(s), ((j, 1), (i, 1)))]
                rhs = self._relations.get((i, j), {})
                for mono, coeff in sorted(rhs.items()):
                    terms.append((-coeff, tuple((k, e) for k, e in enumerate(mono) if e)))
                label = f"{self.names[i]}*{self.names[j]} = q^{s}*{self.names[j]}*{self.names[i]}"
                if rhs:
                    label += f" + {self.relation_element(i, j)}"
                relations.append(WordRelation(label=label, terms=tuple(terms)))
        return relations

    def inverse(self, element: AlgebraElement) -> OreElement:
        """
        Inverse of c x^a with a supported on the invertible generators.

        Raises:
            ValueError: For any other element
        """
        if not element.is_monomial():
            raise ValueError(f"{element} is not invertible")
        mono, coeff = element.single_term()
        if any(mono[k] for k in range(self.spec.n)) or not coeff.is_monomial():
            raise ValueError(f"{element} is not invertible")
        neg = tuple(-e for e in mono)
        unit = self.monomial_product(mono, neg)
        (_, c), = unit.items()
        return OreElement._wrap(self, {neg: c.inverse() * coeff.inverse()})

    # Root-of-unity conditions

    def lambda_witness(self, l: int) -> Optional[Tuple[int, int]]:
        """First (i, g) with [x_i^l, x_g] nonzero at q = eps, or None."""
        for i in range(self.spec.n):
            power = self.generator(i) ** l
            for g in range(self.N):
                commutator = self.commutator(power, self.generator(g))
                if any(not eval_at_eps(c, l).is_zero() for _, c in commutator.terms()):
                    return i, g
        return None

    def lambda_member(self, l: int) -> bool:
        """
        x_1^l, ..., x_n^l are central modulo (q - eps).

        Args:
            l: Root order

        Returns:
            True when every commutator [x_i^l, x_g] vanishes at q = eps
        """
        witness = self.lambda_witness(l)
        if witness is not None:
            i, g = witness
            logger.debug(f"x_{i + 1}^{l} does not commute with x_{g + 1} at eps")
        return witness is None


def lambda_member(spec: OreAlgebraSpec, l: int) -> bool:
    return OreAlgebra(spec).lambda_member(l)
