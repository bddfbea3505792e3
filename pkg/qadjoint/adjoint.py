"""
Quantum adjoint action at a root of unity.
Provides central certification, D_u(a) = ((ua - au)/(q - eps)) at eps, and the
derivations theta and Delta of the tau/delta calculus.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

from qadjoint.specialize import SpecElement, as_spec, specialize
from qtorus.elements import AlgebraElement, NormalFormAlgebra
from qtorus.torus import TorusAlgebra
from scalar.cyclotomic import CycScalar
from scalar.laurent import exact_div_q_minus_eps
from utils.errors import NotCentralError, NotDivisibleError

# Configure logging
logger = logging.getLogger(__name__)

Operand = Union[AlgebraElement, SpecElement]


def divide_by_q_minus_eps(element: AlgebraElement, l: int) -> AlgebraElement:
    """
    Coefficientwise exact division by (q - eps).

    Raises:
        NotDivisibleError: If some coefficient does not vanish at eps
    """
    return element.map_coefficients(lambda c: exact_div_q_minus_eps(c, l))


@dataclass(frozen=True)
class CentralWitness:
    """
    An element u with u mod (q - eps) central, and its certificate: for every
    generator g the quotient (u g - g u)/(q - eps).
    """
    u: AlgebraElement
    l: int
    certificate: Tuple[AlgebraElement, ...]

    @property
    def algebra(self) -> NormalFormAlgebra:
        return self.u.algebra

    @property
    def at_eps(self) -> SpecElement:
        return specialize(self.u, self.l)

    def __str__(self) -> str:
        return str(self.u)


def certify_central(u: AlgebraElement, l: int) -> CentralWitness:
    """
    Certify that u is central modulo (q - eps).

    Args:
        u: Candidate element
        l: Root order

    Returns:
        CentralWitness holding every generator commutator divided by (q - eps)

    Raises:
        NotCentralError: If a commutator does not vanish at eps; `generator` is the 0-based index
    """
    algebra = u.algebra
    quotients: List[AlgebraElement] = []
    for k, g in enumerate(algebra.generators()):
        try:
            quotients.append(divide_by_q_minus_eps(algebra.commutator(u, g), l))
        except NotDivisibleError as e:
            raise NotCentralError(f"{u} does not commute with {algebra.names[k]} at eps (l={l})",
                                  generator=k) from e
    logger.debug(f"Certified {u} central at l={l}")
    return CentralWitness(u=u, l=l, certificate=tuple(quotients))


def quantum_adjoint(witness: CentralWitness, a: Operand) -> SpecElement:
    """
    The quantum adjoint action D_u(a).

    Args:
        witness: Certified central element u
        a: Element of R or of R_eps (a constant-coefficient preimage is used)

    Returns:
        ((u a - a u)/(q - eps)) reduced at eps

    Raises:
        NotCentralError: If the commutator with a is not divisible by (q - eps)
    """
    l = witness.l
    preimage = a.lift() if isinstance(a, SpecElement) else a
    try:
        quotient = divide_by_q_minus_eps(witness.algebra.commutator(witness.u, preimage), l)
    except NotDivisibleError as e:
        raise NotCentralError(f"[{witness.u}, {preimage}] is not divisible by (q - eps)") from e
    return specialize(quotient, l)


def theta(i: int, a: Operand, l: int) -> SpecElement:
    """
    theta_i = (tau_i^l - id)/(q - eps) on R_eps.

    On a monomial of tau_i-weight w this is multiplication by l w eps^(-1).

    Args:
        i: 0-based index of tau_i
        a: Element of R or R_eps
        l: Root order

    Returns:
        theta_i(a)
    """
    a = as_spec(a, l)
    algebra = a.algebra
    eps_inverse = CycScalar.root_power(l, -1)
    return SpecElement(algebra, l, {
        mono: c * (l * algebra.weight(i, mono)) * eps_inverse for mono, c in a.terms()
    })


def big_delta(i: int, a: Operand, l: int) -> SpecElement:
    """
    Delta_i = delta_i^l/(q - eps) reduced at eps.

    Raises:
        NotDivisibleError: If delta_i^l(a) does not vanish at eps (l is misconfigured)
        OutOfDomainError: If a involves a generator of index <= i
    """
    algebra = a.algebra
    preimage = a.lift() if isinstance(a, SpecElement) else a
    return specialize(divide_by_q_minus_eps(algebra.delta_power(i, preimage, l), l), l)


def torus_adjoint_power(torus: TorusAlgebra, i: int, j: int, l: int) -> SpecElement:
    """
    Closed form D_{u_i^l}(u_j) = s_ij l eps^(-1) u_j u_i^l.

    Args:
        torus: Quantum torus
        i: Index of the central power
        j: Index of the generator acted on
        l: Root order

    Returns:
        The value at eps
    """
    s = torus.S.entries[i][j]
    product = specialize(torus.generator(j) * torus.generator(i) ** l, l)
    return product.scale(CycScalar.root_power(l, -1) * (s * l))


def default_central_elements(algebra: NormalFormAlgebra, l: int) -> List[CentralWitness]:
    """The l-th powers of generators that are central at eps."""
    witnesses = []
    for k, g in enumerate(algebra.generators()):
        try:
            witnesses.append(certify_central(g ** l, l))
        except NotCentralError:
            logger.debug(f"{algebra.names[k]}^{l} is not central at eps")
    return witnesses

