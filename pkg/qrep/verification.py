"""
Verification of exact representations.
Provides relation and character checks, commutant dimensions (Schur criterion),
intertwiner spaces and isomorphism tests between representations.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from qadjoint.specialize import SpecElement
from qrep.irreps import Rep
from qtorus.elements import AlgebraElement
from scalar.cyclotomic import CycScalar
from scalar.laurent import eval_at_eps
from scalar.linalg import SparseEchelon, identity, inverse, is_zero_matrix, matrices_equal, zeros
from utils.config import settings
from utils.errors import TooLargeError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass
class RepVerification:
    """Outcome of verify_rep; failing checks are listed by label."""
    passed: bool = True
    failures: List[str] = field(default_factory=list)
    checked: int = 0

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)


def _check_relations(rep: Rep, result: RepVerification) -> None:
    for relation in rep.algebra.defining_relations():
        total = zeros(rep.dimension, rep.dimension, rep.l)
        for coeff, word in relation.terms:
            total = total + rep.evaluate_word(word) * eval_at_eps(coeff, rep.l)
        result.checked += 1
        if not is_zero_matrix(total):
            result.fail(f"relation {relation.label}")


def _check_invertibility(rep: Rep, result: RepVerification) -> None:
    for k in range(rep.algebra.N):
        if not rep.algebra.is_invertible_generator(k):
            continue
        result.checked += 1
        try:
            inverse(rep.matrices[k], rep.l)
        except ValueError:
            result.fail(f"{rep.algebra.names[k]} is invertible but its matrix is singular")


def _check_character(rep: Rep, result: RepVerification) -> None:
    decomposition, character = rep.decomposition, rep.character
    torus = decomposition.torus
    dim = rep.dimension
    for k, (exponent, gamma) in enumerate(zip(decomposition.y_exponents, character.gamma(rep.l))):
        result.checked += 1
        value = rep.evaluate(torus.monomial(exponent) ** rep.l)
        if not matrices_equal(value, identity(dim, rep.l) * gamma):
            result.fail(f"y{k + 1}^{rep.l} does not act by {gamma}")
    for j, (exponent, alpha) in enumerate(zip(decomposition.z_exponents, character.alpha)):
        result.checked += 1
        if not matrices_equal(rep.evaluate(torus.monomial(exponent)), identity(dim, rep.l) * alpha):
            result.fail(f"z{j + 1} does not act by {alpha}")


def verify_rep(rep: Rep) -> RepVerification:
    """
    Check a representation exactly.

    Every defining relation is evaluated at eps, invertible generators must map to
    invertible matrices, and for representations built from a torus decomposition
    the center must act by the stored character.

    Args:
        rep: Representation to check

    Returns:
        RepVerification; `rep.verified` is updated as well
    """
    result = RepVerification()
    _check_relations(rep, result)
    _check_invertibility(rep, result)
    if rep.character is not None and rep.decomposition is not None:
        _check_character(rep, result)
    rep.verified = result.passed
    logger.debug(f"verify_rep({rep.label or rep.dimension}): {result.checked} checks, "
                 f"{len(result.failures)} failures")
    return result


def _commuting_system(left: Sequence[np.ndarray], right: Sequence[np.ndarray], l: int) -> Tuple[SparseEchelon, int, int]:
    """Equations X A_g = B_g X for X of shape (rows of B) x (rows of A)."""
    n = left[0].shape[0] if left else 1
    m = right[0].shape[0] if right else 1
    unknowns = n * m
    if unknowns > settings.COMMUTANT_MAX_UNKNOWNS:
        raise TooLargeError(f"Linear system has {unknowns} unknowns, bound is {settings.COMMUTANT_MAX_UNKNOWNS}")
    echelon = SparseEchelon(l)
    for a, b in zip(left, right):
        for i in range(m):
            for j in range(n):
                row: Dict[int, CycScalar] = {}
                for k in range(n):
                    if a[k, j] != 0:
                        index = i * n + k
                        row[index] = row.get(index, 0) + a[k, j]
                for k in range(m):
                    if b[i, k] != 0:
                        index = k * n + j
                        row[index] = row.get(index, 0) - b[i, k]
                echelon.add_row(row)
    return echelon, m, n


def commutant_dimension(rep: Rep) -> int:
    """
    Dimension of {X : X rho(g) = rho(g) X for every generator g}.

    Equals 1 exactly when the representation is absolutely irreducible.

    Raises:
        TooLargeError: If dim^2 exceeds settings.COMMUTANT_MAX_UNKNOWNS
    """
    echelon, m, n = _commuting_system(rep.matrices, rep.matrices, rep.l)
    dimension = m * n - echelon.rank
    logger.debug(f"Commutant of a {rep.dimension}-dimensional rep has dimension {dimension}")
    return dimension


def intertwiner_space(first: Rep, second: Rep) -> List[np.ndarray]:
    """
    Basis of {X : X rho_1(g) = rho_2(g) X}, X of shape dim_2 x dim_1.

    Raises:
        TooLargeError: If dim_1 * dim_2 exceeds settings.COMMUTANT_MAX_UNKNOWNS
    """
    echelon, m, n = _commuting_system(first.matrices, second.matrices, first.l)
    basis = []
    for vector in echelon.nullspace(m * n):
        matrix = zeros(m, n, first.l)
        for index, value in vector.items():
            matrix[index // n, index % n] = value
        basis.append(matrix)
    return basis


def find_intertwiner(first: Rep, second: Rep) -> Optional[np.ndarray]:
    """
    An invertible intertwiner, if one is found.

    Tries each basis element and then the combinations sum_k k X_k; for
    irreducible representations the space has dimension at most one.
    """
    if first.dimension != second.dimension:
        return None
    basis = intertwiner_space(first, second)
    candidates = list(basis)
    if len(basis) > 1:
        combination = zeros(first.dimension, first.dimension, first.l)
        for k, matrix in enumerate(basis, start=1):
            combination = combination + matrix * k
        candidates.append(combination)
    for candidate in candidates:
        try:
            inverse(candidate, first.l)
        except ValueError:
            continue
        return candidate
    return None


def are_isomorphic(first: Rep, second: Rep) -> bool:
    return find_intertwiner(first, second) is not None


def central_scalar(rep: Rep, element) -> Optional[CycScalar]:
    """
    The scalar by which an element acts, or None if rho(element) is not scalar.

    Args:
        rep: Representation
        element: AlgebraElement or SpecElement

    Returns:
        c with rho(element) = c I
    """
    if not isinstance(element, (AlgebraElement, SpecElement)):
        raise TypeError(f"Cannot evaluate {type(element).__name__} in a representation")
    value = rep.evaluate(element)
    c = value[0, 0] if rep.dimension else CycScalar.zero(rep.l)
    return c if matrices_equal(value, identity(rep.dimension, rep.l) * c) else None
