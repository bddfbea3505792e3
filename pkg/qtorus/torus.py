"""
Twisted Laurent polynomial algebras (quantum tori).
Provides TorusAlgebra with u_i u_j = q^(s_ij) u_j u_i and normal-ordered arithmetic.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Union

from intlat.alternating import IntSkewMatrix
from qtorus.elements import AlgebraElement, Monomial, NormalFormAlgebra, Terms, WordRelation
from scalar.laurent import QLaurent

# Configure logging
logger = logging.getLogger(__name__)


class TorusElement(AlgebraElement):
    """Element of a quantum torus, stored in the order u_1^n_1 ... u_M^n_M."""

    __slots__ = ()


class TorusAlgebra(NormalFormAlgebra):
    """
    Quantum torus on invertible generators u_1..u_M.

    Normal-ordered monomials multiply as u^a u^b = q^kappa(a, b) u^(a+b) with
    kappa(a, b) = sum_{i<j} s_ji a_j b_i, the cost of moving the low-index factors
    of u^b left past the high-index factors of u^a.
    """

    element_class = TorusElement

    def __init__(self, S: Union[IntSkewMatrix, Sequence[Sequence[int]]], names: Optional[Sequence[str]] = None):
        if not isinstance(S, IntSkewMatrix):
            S = IntSkewMatrix.from_rows(S)
        self.S = S
        super().__init__(S.M, 0, names=names, prefix="u")

    @property
    def M(self) -> int:
        return self.N

    def __repr__(self) -> str:
        return f"TorusAlgebra(M={self.M}, S={[list(r) for r in self.S.entries]})"

    def cocycle(self, a: Monomial, b: Monomial) -> int:
        s = self.S.entries
        total = 0
        for j in range(self.N):
            if a[j]:
                for i in range(j):
                    if b[i]:
                        total += s[j][i] * a[j] * b[i]
        return total

    def commutation_exponent(self, a: Monomial, b: Monomial) -> int:
        """The c with u^a u^b = q^c u^b u^a, namely a^T S b."""
        return self.S.pairing(a, b)

    def monomial_product(self, a: Monomial, b: Monomial) -> Terms:
        return {tuple(x + y for x, y in zip(a, b)): QLaurent.q_power(self.cocycle(a, b))}

    def weight(self, i: int, mono: Monomial) -> int:
        return sum(self.S.entries[i][j] * e for j, e in enumerate(mono))

    def defining_relations(self) -> List[WordRelation]:
        relations = []
        for i in range(self.N):
            for j in range(i + 1, self.N):
                s = self.S.entries[i][j]
                relations.append(WordRelation(
                    label=f"{self.names[i]}*{self.names[j]} = q^{s}*{self.names[j]}*{self.names[i]}",
                    terms=((QLaurent.one(), ((i, 1), (j, 1))), (-QLaurent.q_power(s), ((j, 1), (i, 1)))),
                ))
        return relations

    def monomial_inverse(self, a: Monomial) -> TorusElement:
        """(u^a)^(-1) = q^(-kappa(a, -a)) u^(-a)."""
        neg = tuple(-x for x in a)
        return self.element({neg: QLaurent.q_power(-self.cocycle(a, neg))})

    def monomial(self, exponents: Sequence[int], coefficient=1) -> TorusElement:
        return self.element({tuple(int(e) for e in exponents): coefficient})

    def inverse(self, element: AlgebraElement) -> TorusElement:
        """
        Inverse of a unit c q^k u^a.

        Raises:
            ValueError: If the element is not a single term with unit coefficient
        """
        if not element.is_monomial():
            raise ValueError(f"{element} is not a unit of the quantum torus")
        mono, coeff = element.single_term()
        return self.monomial_inverse(mono).scale(coeff.inverse())

    def sub_torus(self, indices: Sequence[int]) -> "TorusAlgebra":
        """Torus on a subset of the generators, with the restricted matrix."""
        return TorusAlgebra(self.S.restrict(indices), names=[self.names[k] for k in indices])


@lru_cache(maxsize=64)
def quantum_plane(s: int = 1) -> TorusAlgebra:
    """Two-generator torus with u_1 u_2 = q^s u_2 u_1."""
    return TorusAlgebra([[0, s], [-s, 0]])
