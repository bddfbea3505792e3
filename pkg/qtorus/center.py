"""
Centers of quantum tori.
Provides center lattices at generic q and at q = eps, a brute-force oracle, and the
decomposition of a torus into a symplectic part and its generic center.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np

from intlat.alternating import AlternatingForm, alternating_normal_form
from intlat.congruence import kernel_basis
from intlat.smith import (IntMatrix, IntVector, hermite_normal_form, mat_vec, smith_normal_form,
                          solve_integer_system, transpose, unimodular_inverse)
from qtorus.torus import TorusAlgebra, TorusElement
from scalar.laurent import eval_at_eps
from utils.config import settings
from utils.errors import TooLargeError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CenterLattice:
    """
    Exponent lattice of a monomial center, in Hermite normal form.

    `l` is None for the center at generic q.
    """
    basis: IntMatrix
    M: int
    l: Optional[int] = None

    @property
    def generic(self) -> bool:
        return self.l is None

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, n: Sequence[int]) -> bool:
        if not any(n):
            return True
        if not self.basis:
            return False
        return solve_integer_system(transpose(self.basis), n) is not None

    def monomials(self, torus: TorusAlgebra) -> List[TorusElement]:
        return [torus.monomial(b) for b in self.basis]

    def __str__(self) -> str:
        where = "generic q" if self.l is None else f"eps of order {self.l}"
        return f"<{', '.join(str(list(b)) for b in self.basis)}> at {where}"


def center_generic(torus: TorusAlgebra) -> CenterLattice:
    """
    Center at indeterminate q: monomials u^n with S n = 0.

    Args:
        torus: Quantum torus

    Returns:
        CenterLattice spanned by ker S
    """
    basis = kernel_basis(torus.S.entries) if torus.M else ()
    return CenterLattice(basis=basis, M=torus.M)


def center_at_eps(torus: TorusAlgebra, l: int) -> CenterLattice:
    """
    Center of the specialization at a primitive l-th root: {n : S n = 0 mod l}.

    With U S V = D, n is central iff m = V^(-1) n has d_i m_i = 0 mod l, so the
    lattice is spanned by (l / gcd(d_i, l)) V e_i and by V e_i beyond the rank.

    Args:
        torus: Quantum torus
        l: Root order

    Returns:
        CenterLattice in Hermite normal form
    """
    M = torus.M
    if M == 0:
        return CenterLattice(basis=(), M=0, l=l)
    form = smith_normal_form(torus.S.entries)
    columns = transpose(form.V)
    vectors = []
    for i in range(M):
        d = form.D[i][i]
        factor = l // gcd(d, l) if d != 0 else 1
        vectors.append(tuple(factor * x for x in columns[i]))
    lattice = CenterLattice(basis=hermite_normal_form(vectors), M=M, l=l)
    logger.debug(f"Center at eps (l={l}): {lattice}")
    return lattice


def brute_force_center(torus: TorusAlgebra, l: int) -> CenterLattice:
    """
    Independent oracle for center_at_eps.

    Enumerates residues [0, l)^M, keeps those whose monomial commutes with every
    generator after specialization, and adds l Z^M.

    Raises:
        TooLargeError: Beyond the configured generator and root-order bounds
    """
    M = torus.M
    if M > settings.BRUTE_FORCE_MAX_GENERATORS or l > settings.BRUTE_FORCE_MAX_L:
        raise TooLargeError(f"Brute-force center supports M <= {settings.BRUTE_FORCE_MAX_GENERATORS} "
                            f"and l <= {settings.BRUTE_FORCE_MAX_L}, got M={M}, l={l}")
    generators = torus.generators()
    vectors: List[IntVector] = [tuple(l if j == i else 0 for j in range(M)) for i in range(M)]
    for residue in np.ndindex(*([l] * M)):
        n = tuple(int(x) for x in residue)
        if not any(n):
            continue
        element = torus.monomial(n)
        central = all(
            all(eval_at_eps(c, l).is_zero() for _, c in torus.commutator(element, g).terms())
            for g in generators
        )
        if central:
            vectors.append(n)
    return CenterLattice(basis=hermite_normal_form(vectors), M=M, l=l)


@dataclass(frozen=True)
class TorusDecomposition:
    """
    B = A (x) Z(B) for a quantum torus.

    y_k = u^(W e_k) for k < 2r satisfy y_(2k-1) y_(2k) = q^(d_k) y_(2k) y_(2k-1) and
    z_j = u^(W e_(2r+j)) span the generic center.
    """
    torus: TorusAlgebra
    form: AlternatingForm
    W_inverse: IntMatrix

    @property
    def d(self) -> Tuple[int, ...]:
        return self.form.d

    @property
    def r(self) -> int:
        return self.form.r

    @property
    def t(self) -> int:
        return self.form.t

    def exponent(self, k: int) -> IntVector:
        """Column k of W."""
        return tuple(row[k] for row in self.form.W)

    @property
    def y_exponents(self) -> List[IntVector]:
        return [self.exponent(k) for k in range(2 * self.r)]

    @property
    def z_exponents(self) -> List[IntVector]:
        return [self.exponent(k) for k in range(2 * self.r, self.torus.M)]

    def y_generators(self) -> List[TorusElement]:
        return [self.torus.monomial(e) for e in self.y_exponents]

    def z_generators(self) -> List[TorusElement]:
        return [self.torus.monomial(e) for e in self.z_exponents]

    def to_y_coordinates(self, n: Sequence[int]) -> IntVector:
        """W^(-1) n."""
        return mat_vec(self.W_inverse, n)


def torus_decompose(torus: TorusAlgebra) -> TorusDecomposition:
    """
    Split a torus into hyperbolic pairs and central generators.

    Args:
        torus: Quantum torus

    Returns:
        TorusDecomposition built from the alternating normal form of S
    """
    form = alternating_normal_form(torus.S)
    decomposition = TorusDecomposition(torus=torus, form=form, W_inverse=unimodular_inverse(form.W) if torus.M else ())
    logger.debug(f"Torus decomposition: d={form.d}, t={form.t}")
    return decomposition
