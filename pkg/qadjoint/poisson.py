"""
Poisson structure on the center at eps.
Provides the bracket {u, v} = D_u(v), Poisson matrices of monomial center generators
evaluated at characters, their exact ranks, and characters of torus centers.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from intlat.smith import IntVector, hermite_normal_form, solve_integer_system, transpose
from intlat.congruence import kernel_basis
from qadjoint.adjoint import CentralWitness, quantum_adjoint
from qadjoint.specialize import SpecElement
from qtorus.elements import Monomial
from qtorus.torus import TorusAlgebra
from scalar.cyclotomic import CycScalar, as_cyc
from scalar.linalg import matrix_rank, zeros
from utils.config import settings
from utils.errors import InconsistentPointError, InternalArithmeticError, UnsupportedInputError

# Configure logging
logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, CycScalar]


def poisson_bracket(u: CentralWitness, v: CentralWitness, check_antisymmetry: bool = True) -> SpecElement:
    """
    {u_eps, v_eps} = D_u(v_eps).

    Args:
        u: Certified central element
        v: Certified central element
        check_antisymmetry: Also compute -D_v(u_eps) and compare

    Returns:
        The bracket at eps

    Raises:
        InternalArithmeticError: If the two expressions of the bracket disagree
    """
    bracket = quantum_adjoint(u, v.u)
    if check_antisymmetry:
        other = quantum_adjoint(v, u.u)
        if bracket != -other:
            raise InternalArithmeticError(f"{{{u}, {v}}} = {bracket} but -D_v(u) = {-other}")
    return bracket


def poisson_jacobi(witnesses: Sequence[CentralWitness]) -> Optional[Tuple[int, int, int]]:
    """
    First triple (0-based) violating the Jacobi identity, or None.

    {a, {b, c}} + {b, {c, a}} + {c, {a, b}} is computed as D_a(D_b(c)) + cyclic terms.
    """
    k = len(witnesses)
    for i in range(k):
        for j in range(i + 1, k):
            for m in range(j + 1, k):
                a, b, c = witnesses[i], witnesses[j], witnesses[m]
                total = (quantum_adjoint(a, quantum_adjoint(b, c.u))
                         + quantum_adjoint(b, quantum_adjoint(c, a.u))
                         + quantum_adjoint(c, quantum_adjoint(a, b.u)))
                if not total.is_zero():
                    return i, j, m
    return None


def _generator_exponent(witness: CentralWitness) -> Monomial:
    at_eps = witness.at_eps
    if not at_eps.is_monomial():
        raise UnsupportedInputError(f"Poisson matrices need monomial generators, got {at_eps}")
    return at_eps.single_term()[0]


@dataclass
class PoissonMatrix:
    """
    Bracket matrix {a_i, a_j} of center generators, optionally evaluated at a point.

    `values` holds the evaluated matrix over Q(eps) once a point is given.
    """
    generators: Tuple[CentralWitness, ...]
    entries: List[List[SpecElement]]
    point: Optional[Tuple[CycScalar, ...]] = None
    values: Optional[np.ndarray] = None

    @property
    def size(self) -> int:
        return len(self.generators)

    @property
    def l(self) -> int:
        return self.generators[0].l

    def exponents(self) -> List[Monomial]:
        return [_generator_exponent(w) for w in self.generators]


def poisson_matrix(generators: Sequence[CentralWitness]) -> PoissonMatrix:
    """
    Symbolic Poisson matrix; antisymmetry is checked entry by entry.

    Raises:
        InternalArithmeticError: If {a_i, a_j} != -{a_j, a_i}
    """
    generators = tuple(generators)
    k = len(generators)
    entries: List[List[Optional[SpecElement]]] = [[None] * k for _ in range(k)]
    for i in range(k):
        algebra = generators[i].algebra
        entries[i][i] = SpecElement(algebra, generators[i].l)
        for j in range(i + 1, k):
            bracket = poisson_bracket(generators[i], generators[j])
            entries[i][j] = bracket
            entries[j][i] = -bracket
    return PoissonMatrix(generators=generators, entries=entries)


class _PointEvaluator:
    """
    Character on the subalgebra generated by monomial central elements a_1..a_k.

    A monomial x^n with n = V c is evaluated as prod chi(a_i)^(c_i) / lambda, where the
    ordered product prod a_i^(c_i) equals lambda x^n at eps.
    """

    def __init__(self, generators: Sequence[CentralWitness], point: Sequence[Scalar]):
        self.generators = list(generators)
        self.l = self.generators[0].l
        self.algebra = self.generators[0].algebra
        if len(point) != len(self.generators):
            raise InconsistentPointError(f"{len(point)} values given for {len(self.generators)} generators")
        self.point = tuple(as_cyc(v, self.l) for v in point)
        if any(v.is_zero() for v in self.point):
            raise InconsistentPointError("Character values of central monomials must be nonzero")
        self.exponents = [_generator_exponent(w) for w in self.generators]
        self.at_eps = [w.at_eps for w in self.generators]
        self.V = transpose(self.exponents)
        self._cache: Dict[Monomial, CycScalar] = {}
        self._check_relations()

    def _scale_of(self, c: Sequence[int]) -> Tuple[Monomial, CycScalar]:
        """The monomial x^n and the lambda with prod a_i^(c_i) = lambda x^n at eps."""
        positive = SpecElement(self.algebra, self.l, {self.algebra.unit_monomial: 1})
        negative = SpecElement(self.algebra, self.l, {self.algebra.unit_monomial: 1})
        for a, ci in zip(self.at_eps, c):
            if ci > 0:
                positive = positive * a ** ci
            elif ci < 0:
                negative = negative * a ** (-ci)
        n = tuple(sum(e[r] * ci for e, ci in zip(self.exponents, c)) for r in range(self.algebra.N))
        p_mono, p = positive.single_term()
        unit = SpecElement(self.algebra, self.l, {n: 1}) * negative
        u_mono, r = unit.single_term()
        if u_mono != p_mono:
            raise InternalArithmeticError(f"Monomial bookkeeping mismatch: {p_mono} != {u_mono}")
        return n, p / r

    def _character_of_product(self, c: Sequence[int]) -> CycScalar:
        value = CycScalar.one(self.l)
        for v, ci in zip(self.point, c):
            value = value * v ** ci
        return value

    def _check_relations(self) -> None:
        for relation in kernel_basis(self.V) if self.V else ():
            _, scale = self._scale_of(relation)
            if self._character_of_product(relation) != scale:
                raise InconsistentPointError(f"Values {', '.join(map(str, self.point))} violate the relation "
                                             f"with exponents {list(relation)} among the generators")

    def monomial_value(self, n: Monomial) -> CycScalar:
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        c = solve_integer_system(self.V, n)
        if c is None:
            raise UnsupportedInputError(f"Monomial {n} is not a product of the listed generators")
        _, scale = self._scale_of(c)
        value = self._character_of_product(c) / scale
        self._cache[n] = value
        return value

    def __call__(self, element: SpecElement) -> CycScalar:
        total = CycScalar.zero(self.l)
        for mono, coeff in element.terms():
            total = total + coeff * self.monomial_value(mono)
        return total


def evaluate_at_point(matrix: PoissonMatrix, point: Sequence[Scalar]) -> np.ndarray:
    """
    Evaluate a Poisson matrix at a character.

    Raises:
        InconsistentPointError: If the values violate a relation among the generators
    """
    evaluator = _PointEvaluator(matrix.generators, point)
    values = zeros(matrix.size, matrix.size, matrix.l)
    for i in range(matrix.size):
        for j in range(matrix.size):
            values[i, j] = evaluator(matrix.entries[i][j])
    matrix.point = evaluator.point
    matrix.values = values
    return values


def poisson_matrix_rank(generators: Sequence[CentralWitness],
                        point: Sequence[Scalar]) -> Tuple[PoissonMatrix, int]:
    """
    Rank of the Poisson matrix at a character: the dimension of the symplectic leaf.

    Args:
        generators: Certified central monomials
        point: Character values, one per generator

    Returns:
        (evaluated PoissonMatrix, exact rank over Q(eps))

    Raises:
        InconsistentPointError: If the values violate a relation among the generators
    """
    matrix = poisson_matrix(generators)
    values = evaluate_at_point(matrix, point)
    rank = matrix_rank(values, matrix.l)
    logger.debug(f"Poisson rank {rank} at {[str(v) for v in matrix.point]}")
    return matrix, rank


@dataclass(frozen=True)
class TorusCharacter:
    """
    Character of the torus center at eps induced by a torus point nu.

    On the central lattice with basis b_1..b_r (Hermite form) it sends
    u^(sum k_i b_i) to nu^n eps^e(k), e(k) = -(sum_{i<j} k_i k_j B_ij + sum_i k_i (k_i - 1)/2 B_ii)
    with B_ij = kappa(b_i, b_j), which makes it multiplicative.
    """
    torus: TorusAlgebra
    l: int
    nu: Tuple[CycScalar, ...]
    lattice: Tuple[IntVector, ...] = field(default=())

    def __post_init__(self):
        if not self.lattice:
            from qtorus.center import center_at_eps

            object.__setattr__(self, "lattice", center_at_eps(self.torus, self.l).basis)

    def __call__(self, n: Sequence[int]) -> CycScalar:
        n = tuple(int(x) for x in n)
        k = solve_integer_system(transpose(self.lattice), n) if self.lattice else None
        if k is None:
            raise InconsistentPointError(f"u^{list(n)} is not central at eps (l={self.l})")
        B = [[self.torus.cocycle(bi, bj) for bj in self.lattice] for bi in self.lattice]
        e = 0
        for i, ki in enumerate(k):
            e += ki * (ki - 1) // 2 * B[i][i]
            for j in range(i + 1, len(k)):
                e += ki * k[j] * B[i][j]
        value = CycScalar.root_power(self.l, -e)
        for x, ni in zip(self.nu, n):
            value = value * as_cyc(x, self.l) ** ni
        return value

    def values_on(self, generators: Sequence[CentralWitness]) -> List[CycScalar]:
        """chi(a) for central monomials a = c u^n, c the coefficient at eps."""
        values = []
        for w in generators:
            mono, coeff = w.at_eps.single_term()
            values.append(coeff * self(mono))
        return values


def random_torus_point(M: int, rng: random.Random) -> Tuple[Fraction, ...]:
    """Nonzero rational torus point with small numerators and denominators."""
    return tuple(Fraction(rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 3)) for _ in range(M))


def generic_poisson_rank(generators: Sequence[CentralWitness], samples: Optional[int] = None,
                         seed: int = 0) -> int:
    """
    Rank of the Poisson structure at a generic point.

    Evaluates at the all-ones torus point and at `samples` random nonzero points and
    takes the maximum. Generators must be central monomials of a quantum torus.

    Raises:
        UnsupportedInputError: If the generators do not live in a quantum torus
    """
    if not generators:
        return 0
    torus = generators[0].algebra
    if not isinstance(torus, TorusAlgebra):
        raise UnsupportedInputError("Generic points are sampled on quantum tori only")
    l = generators[0].l
    samples = settings.GENERIC_RANK_SAMPLES if samples is None else samples
    rng = random.Random(seed)
    matrix = poisson_matrix(generators)
    lattice = hermite_normal_form([_generator_exponent(w) for w in generators] +
                                  [tuple(l if j == i else 0 for j in range(torus.M)) for i in range(torus.M)])
    points = [(1,) * torus.M] + [random_torus_point(torus.M, rng) for _ in range(samples)]
    best = 0
    for nu in points:
        character = TorusCharacter(torus=torus, l=l, nu=tuple(as_cyc(x, l) for x in nu), lattice=lattice)
        values = evaluate_at_point(matrix, character.values_on(generators))
        best = max(best, matrix_rank(values, l))
    logger.debug(f"Generic Poisson rank {best} over {len(points)} points")
    return best
