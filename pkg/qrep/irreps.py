"""
Exact representations of quantum tori at eps.
Provides central characters, the Rep container, irreducible torus representations
built from clock/shift blocks, and the dimension formula l^(rank/2).
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional, Protocol, Sequence, Tuple, Union

import numpy as np

from intlat.smith import elementary_divisors
from qadjoint.specialize import SpecElement, specialize
from qrep.clock_shift import clock_shift_block, embed
from qtorus.center import TorusDecomposition, torus_decompose
from qtorus.elements import AlgebraElement, NormalFormAlgebra
from qtorus.torus import TorusAlgebra
from scalar.cyclotomic import CycScalar, as_cyc
from scalar.linalg import identity, inverse, matrix_power, zeros
from utils.errors import BadParametersError

# Configure logging
logger = logging.getLogger(__name__)

Scalar = Union[int, CycScalar]


@dataclass(frozen=True)
class CentralCharacter:
    """
    l-th roots nu_1..nu_2r of the values chi(y_k^l), and values alpha_1..alpha_t of
    chi on the generic-center generators z_j.
    """
    nu: Tuple[CycScalar, ...]
    alpha: Tuple[CycScalar, ...] = ()

    @classmethod
    def build(cls, l: int, nu: Sequence[Scalar], alpha: Sequence[Scalar] = ()) -> "CentralCharacter":
        """
        Raises:
            BadParametersError: If a value is zero
        """
        nu = tuple(as_cyc(v, l) for v in nu)
        alpha = tuple(as_cyc(v, l) for v in alpha)
        if any(v.is_zero() for v in nu + alpha):
            raise BadParametersError("Central character values must be invertible")
        return cls(nu=nu, alpha=alpha)

    @classmethod
    def trivial(cls, l: int, r: int, t: int) -> "CentralCharacter":
        one = CycScalar.one(l)
        return cls(nu=(one,) * (2 * r), alpha=(one,) * t)

    def gamma(self, l: int) -> Tuple[CycScalar, ...]:
        """chi(y_k^l) = nu_k^l."""
        return tuple(v ** l for v in self.nu)


@dataclass
class Rep:
    """
    Matrices over Q(eps), one per generator of `algebra`.

    `character` and `decomposition` are set for representations built from a torus
    decomposition; user-supplied matrices leave them empty.
    """
    algebra: NormalFormAlgebra
    l: int
    matrices: Tuple[np.ndarray, ...]
    character: Optional[CentralCharacter] = None
    decomposition: Optional[TorusDecomposition] = None
    label: str = ""
    verified: Optional[bool] = None
    _inverses: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(self.matrices) != self.algebra.N:
            raise BadParametersError(f"{len(self.matrices)} matrices given for {self.algebra.N} generators")
        shapes = {m.shape for m in self.matrices}
        if len(shapes) > 1 or any(s[0] != s[1] for s in shapes):
            raise BadParametersError(f"Generator matrices must be square of one size, got {sorted(shapes)}")

    @property
    def dimension(self) -> int:
        return self.matrices[0].shape[0] if self.matrices else 1

    def generator_power(self, k: int, e: int) -> np.ndarray:
        """rho(x_k)^e; negative powers invert (ValueError if singular)."""
        if e >= 0:
            return matrix_power(self.matrices[k], e, self.l)
        if k not in self._inverses:
            self._inverses[k] = inverse(self.matrices[k], self.l)
        return matrix_power(self._inverses[k], -e, self.l)

    def evaluate_word(self, word: Sequence[Tuple[int, int]]) -> np.ndarray:
        result = identity(self.dimension, self.l)
        for k, e in word:
            result = result @ self.generator_power(k, e)
        return result

    def evaluate(self, element: Union[AlgebraElement, SpecElement]) -> np.ndarray:
        """rho of an element, monomials read in normal order."""
        if not isinstance(element, SpecElement):
            element = specialize(element, self.l)
        result = zeros(self.dimension, self.dimension, self.l)
        for mono, coeff in element.terms():
            word = [(k, e) for k, e in enumerate(mono) if e]
            result = result + self.evaluate_word(word) * coeff
        return result


def _check_coprime(torus: TorusAlgebra, l: int) -> None:
    divisors = elementary_divisors(torus.S.entries) if torus.M else ()
    bad = [d for d in divisors if gcd(d, l) != 1]
    if bad:
        raise BadParametersError(f"l={l} is not prime to the elementary divisors {list(divisors)} of S")


def _check_character(decomposition: TorusDecomposition, character: CentralCharacter) -> None:
    r, t = decomposition.r, decomposition.t
    if len(character.nu) != 2 * r or len(character.alpha) != t:
        raise BadParametersError(f"Character needs {2 * r} nu values and {t} alpha values, "
                                 f"got {len(character.nu)} and {len(character.alpha)}")


class HasTorus(Protocol):
    torus: TorusAlgebra


def rep_dimension_formula(stratum: Union[TorusAlgebra, HasTorus], l: int,
                          character: Optional[CentralCharacter] = None) -> int:
    """
    Dimension l^(rank S / 2) of every irreducible representation at eps.

    The dimension does not depend on the character; a given character is only checked
    for shape against the stratum.

    Args:
        stratum: A stratum (anything with a `torus` attribute) or a quantum torus
        l: Root order
        character: Optional central character on the stratum

    Raises:
        BadParametersError: If l is not prime to the elementary divisors of S, or the
            character has the wrong number of values
    """
    torus = stratum if isinstance(stratum, TorusAlgebra) else stratum.torus
    _check_coprime(torus, l)
    if character is not None:
        _check_character(torus_decompose(torus), character)
    return l ** (torus.S.rank // 2)


def build_torus_irrep(torus: TorusAlgebra, l: int, character: Optional[CentralCharacter] = None,
                      label: str = "") -> Rep:
    """
    Irreducible representation of a quantum torus at eps with a given central character.

    The y-generators of the alternating normal form act by tensor products of clock/shift
    blocks, the z-generators by alpha_j I. Each u_i = lambda^(-1) prod_k y_k^(c_k) with
    c = W^(-1) e_i, lambda being the normal-ordering scalar at eps.

    Args:
        torus: Quantum torus
        l: Root order
        character: Values nu, alpha (all ones when None)
        label: Free-form label stored on the Rep

    Returns:
        Rep of dimension l^r

    Raises:
        BadParametersError: If l is not prime to the elementary divisors of S, or the
            character has the wrong number of values
    """
    _check_coprime(torus, l)
    decomposition = torus_decompose(torus)
    r, t = decomposition.r, decomposition.t
    if character is None:
        character = CentralCharacter.trivial(l, r, t)
    _check_character(decomposition, character)

    sizes = [l] * r
    dim = l ** r
    y_matrices: List[np.ndarray] = []
    for k, d in enumerate(decomposition.d):
        clock, shift = clock_shift_block(l, d, character.nu[2 * k], character.nu[2 * k + 1])
        y_matrices.append(embed(clock, k, sizes, l))
        y_matrices.append(embed(shift, k, sizes, l))
    for alpha in character.alpha:
        y_matrices.append(identity(dim, l) * alpha)
    y_inverses = [inverse(m, l) for m in y_matrices]

    y_elements = [torus.monomial(e) for e in decomposition.y_exponents + decomposition.z_exponents]
    matrices = []
    for i in range(torus.M):
        c = decomposition.to_y_coordinates(tuple(1 if j == i else 0 for j in range(torus.M)))
        product = torus.one()
        matrix = identity(dim, l)
        for k, ck in enumerate(c):
            if ck:
                product = product * y_elements[k] ** ck
                source = y_matrices[k] if ck > 0 else y_inverses[k]
                matrix = matrix @ matrix_power(source, abs(ck), l)
        mono, scale = specialize(product, l).single_term()
        if mono != tuple(1 if j == i else 0 for j in range(torus.M)):
            raise BadParametersError(f"Change of basis does not return u_{i + 1}: got exponent {mono}")
        matrices.append(matrix * scale.inverse())
    rep = Rep(algebra=torus, l=l, matrices=tuple(matrices), character=character,
              decomposition=decomposition, label=label)
    logger.debug(f"Built torus irrep of dimension {rep.dimension} (d={decomposition.d}, t={t}, l={l})")
    return rep


def direct_sum(first: Rep, second: Rep) -> Rep:
    """Block-diagonal sum of two representations of the same algebra."""
    if first.algebra is not second.algebra or first.l != second.l:
        raise BadParametersError("Direct sum needs representations of one algebra at one root")
    n, m = first.dimension, second.dimension
    matrices = []
    for a, b in zip(first.matrices, second.matrices):
        block = zeros(n + m, n + m, first.l)
        block[:n, :n] = a
        block[n:, n:] = b
        matrices.append(block)
    return Rep(algebra=first.algebra, l=first.l, matrices=tuple(matrices),
               label=f"{first.label} + {second.label}".strip(" +"))
