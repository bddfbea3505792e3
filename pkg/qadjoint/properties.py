"""
Properties of the quantum adjoint action.
Provides property_check, running derivation, representative-independence, product,
bracket, weight and expansion properties of D_u on supplied or random inputs.
"""

import logging
import random
from typing import Callable, Dict, List, Optional, Sequence

from orealg.algebra import OreAlgebra
from orealg.identities import IdentityOutcome, root_assumptions
from qadjoint.adjoint import (CentralWitness, big_delta, certify_central, default_central_elements,
                              divide_by_q_minus_eps, quantum_adjoint, theta)
from qadjoint.poisson import poisson_bracket, poisson_jacobi
from qadjoint.specialize import SpecElement, specialize, tau_at_eps
from qtorus.elements import AlgebraElement, NormalFormAlgebra
from scalar.cyclotomic import CycScalar
from scalar.laurent import QLaurent, exact_div_q_minus_eps
from scalar.qnumbers import q_binomial
from utils.config import settings
from utils.errors import InternalArithmeticError, InvalidInputError, UnsupportedInputError

# Configure logging
logger = logging.getLogger(__name__)

PropertyFn = Callable[["PropertyContext", random.Random], Optional[str]]
PROPERTIES: Dict[str, PropertyFn] = {}


def register(name: str):
    def decorator(fn: PropertyFn) -> PropertyFn:
        PROPERTIES[name] = fn
        return fn
    return decorator


class PropertyContext:
    """Algebra, root order, central elements and operand source for one property run."""

    def __init__(self, algebra: NormalFormAlgebra, l: int, central: Sequence[CentralWitness],
                 inputs: Optional[Sequence[AlgebraElement]], degree: int):
        self.algebra = algebra
        self.l = l
        self.central = list(central)
        self.inputs = list(inputs) if inputs is not None else None
        self.degree = degree

    def element(self, rng: random.Random, position: int = 0, support: Optional[Sequence[int]] = None) -> AlgebraElement:
        if self.inputs is not None:
            if position >= len(self.inputs):
                raise UnsupportedInputError(f"Property needs at least {position + 1} input element(s)")
            return self.inputs[position]
        return self.algebra.random_element(rng.randrange(2**31), self.degree, support=support)

    def central_element(self, rng: random.Random) -> CentralWitness:
        if not self.central:
            raise UnsupportedInputError(f"No central element available at l={self.l}")
        return rng.choice(self.central)

    def weight_vectors(self) -> List[CentralWitness]:
        return [w for w in self.central if self.algebra.is_weight_vector(w.u)]


@register("P2.2")
def _derivation(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    u = ctx.central_element(rng)
    a, b = ctx.element(rng, 0), ctx.element(rng, 1)
    left = quantum_adjoint(u, a * b)
    right = quantum_adjoint(u, a) * specialize(b, ctx.l) + specialize(a, ctx.l) * quantum_adjoint(u, b)
    return None if left == right else f"u = {u}, a = {a}, b = {b}"


@register("P2.3")
def _representative_independence(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    u = ctx.central_element(rng)
    r, a = ctx.element(rng, 0), ctx.element(rng, 1)
    q_minus_eps = QLaurent({1: 1, 0: -CycScalar.epsilon(ctx.l)})
    u1 = certify_central(u.u + r.scale(q_minus_eps), ctx.l)
    left = quantum_adjoint(u1, a) - quantum_adjoint(u, a)
    right = specialize(r * a - a * r, ctx.l)
    return None if left == right else f"u = {u}, r = {r}, a = {a}"


@register("P2.4")
def _product_rule(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    u, v = ctx.central_element(rng), ctx.central_element(rng)
    a = ctx.element(rng, 0)
    uv = certify_central(u.u * v.u, ctx.l)
    left = quantum_adjoint(uv, a)
    right = quantum_adjoint(u, a) * v.at_eps + u.at_eps * quantum_adjoint(v, a)
    return None if left == right else f"u = {u}, v = {v}, a = {a}"


@register("P2.5")
def _bracket(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    u, v = ctx.central_element(rng), ctx.central_element(rng)
    try:
        poisson_bracket(u, v)
    except InternalArithmeticError as e:
        return str(e)
    if not poisson_bracket(u, u).is_zero():
        return f"{{{u}, {u}}} != 0"
    triple = poisson_jacobi(ctx.central[:4])
    if triple is not None:
        names = ", ".join(str(ctx.central[k]) for k in triple)
        return f"Jacobi identity fails for {names}"
    return None


def _theta_by_division(ctx: PropertyContext, i: int, a: AlgebraElement) -> SpecElement:
    algebra = ctx.algebra
    return specialize(divide_by_q_minus_eps(algebra.tau_power(i, a, ctx.l) - a, ctx.l), ctx.l)


@register("prop3.14a")
def _theta_on_weight_vectors(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    candidates = ctx.weight_vectors()
    if not candidates:
        raise UnsupportedInputError("No central weight vector available")
    u = rng.choice(candidates)
    for i in range(ctx.algebra.N):
        m = ctx.algebra.weight(i, next(u.u.terms())[0])
        expected = u.at_eps.scale(CycScalar.root_power(ctx.l, -1) * (m * ctx.l))
        if _theta_by_division(ctx, i, u.u) != expected:
            return f"theta_{i + 1}({u}) != {m}*l*eps^-1*{u}"
    return None


@register("prop3.14b")
def _tau_twist(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    candidates = ctx.weight_vectors()
    if not candidates:
        raise UnsupportedInputError("No central weight vector available")
    u = rng.choice(candidates)
    a = ctx.element(rng, 0)
    for i in range(ctx.algebra.N):
        m = ctx.algebra.weight(i, next(u.u.terms())[0])
        left = tau_at_eps(i, quantum_adjoint(u, a))
        right = quantum_adjoint(u, ctx.algebra.apply_tau(i, a)).scale(CycScalar.root_power(ctx.l, m))
        if left != right:
            return f"tau_{i + 1} D_u != eps^{m} D_u tau_{i + 1} for u = {u}, a = {a}"
    return None


@register("prop3.14c")
def _theta_twist(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    candidates = ctx.weight_vectors()
    if not candidates:
        raise UnsupportedInputError("No central weight vector available")
    u = rng.choice(candidates)
    a = ctx.element(rng, 0)
    l = ctx.l
    for i in range(ctx.algebra.N):
        m = ctx.algebra.weight(i, next(u.u.terms())[0])
        m_bar = CycScalar.root_power(l, -1) * (m * l)
        left = theta(i, quantum_adjoint(u, a), l)
        right = quantum_adjoint(u, theta(i, a, l) + specialize(a, l).scale(m_bar))
        if left != right:
            return f"theta_{i + 1} D_u != D_u (theta_{i + 1} + {m_bar}) for u = {u}, a = {a}"
    return None


@register("eq2.5")
def _adjoint_expansion(ctx: PropertyContext, rng: random.Random) -> Optional[str]:
    algebra = ctx.algebra
    if not isinstance(algebra, OreAlgebra):
        raise UnsupportedInputError("The expansion of D_x needs an Ore algebra")
    l = ctx.l
    indices = [i for i in range(algebra.spec.n) if root_assumptions(algebra, i, l) is None]
    if not indices:
        raise UnsupportedInputError(f"No generator x_i with x_i^{l} central at eps")
    i = rng.choice(indices)
    x = algebra.generator(i)
    s = algebra.skew_constants[i]
    a = ctx.element(rng, 0, support=range(i + 1, algebra.N))
    witness = certify_central(x ** l, l)
    left = quantum_adjoint(witness, a)
    right = theta(i, a, l) * specialize(x ** l, l) + big_delta(i, a, l)
    delta_k = a
    for k in range(1, l):
        delta_k = algebra.apply_delta(i, delta_k)
        if delta_k.is_zero():
            break
        coefficient = q_binomial(l, k, s)
        try:
            coefficient = exact_div_q_minus_eps(coefficient, l)
        except ArithmeticError as e:
            raise UnsupportedInputError(f"binom({l}, {k}) does not vanish at eps") from e
        term = (algebra.tau_power(i, delta_k, l - k) * (x ** (l - k))).scale(coefficient)
        right = right + specialize(term, l)
    return None if left == right else f"a = {a} at {algebra.names[i]}: {left} != {right}"


def property_names() -> List[str]:
    return sorted(PROPERTIES)


def property_check(name: str, algebra: NormalFormAlgebra, l: int,
                   central: Optional[Sequence[AlgebraElement]] = None,
                   inputs: Optional[Sequence[AlgebraElement]] = None, seed: Optional[int] = None,
                   degree: Optional[int] = None, cases: Optional[int] = None) -> IdentityOutcome:
    """
    Check a property of the quantum adjoint action.

    Args:
        name: Property id (see property_names())
        algebra: Torus or Ore algebra
        l: Root order
        central: Elements to certify and use as u; l-th powers of generators when None
        inputs: Explicit operands; random elements are drawn when None
        seed: Random seed
        degree: Degree bound of random elements
        cases: Number of random cases

    Returns:
        IdentityOutcome with the first counterexample, if any

    Raises:
        InvalidInputError: For an unknown property
        UnsupportedInputError: When no suitable central element or operand exists
        NotCentralError: If a supplied central element fails certification
    """
    fn = PROPERTIES.get(name)
    if fn is None:
        raise InvalidInputError(f"Unknown property '{name}'; known: {', '.join(property_names())}")
    seed = settings.DEFAULT_SEED if seed is None else seed
    degree = settings.DEFAULT_DEGREE if degree is None else degree
    cases = settings.DEFAULT_CASES if cases is None else cases
    if inputs is not None:
        cases = 1
    witnesses = ([certify_central(u, l) for u in central] if central is not None
                 else default_central_elements(algebra, l))
    ctx = PropertyContext(algebra, l, witnesses, inputs, degree)
    rng = random.Random(f"{name}:{seed}")
    outcome = IdentityOutcome(name=name, passed=True, cases=0)
    for _ in range(cases):
        outcome.cases += 1
        counterexample = fn(ctx, rng)
        if counterexample is not None:
            outcome.passed = False
            outcome.counterexample = counterexample
            logger.debug(f"{name} failed: {counterexample}")
            break
    return outcome


def run_property_suite(algebra: NormalFormAlgebra, l: int, names: Optional[Sequence[str]] = None,
                       seed: Optional[int] = None, degree: Optional[int] = None,
                       cases: Optional[int] = None, progress=None) -> List[IdentityOutcome]:
    """Run several properties; inapplicable ones are reported as skipped passes."""
    outcomes = []
    for name in names or property_names():
        try:
            outcome = property_check(name, algebra, l, seed=seed, degree=degree, cases=cases)
        except UnsupportedInputError as e:
            outcome = IdentityOutcome(name=name, passed=True, cases=0, details=[f"not applicable: {e}"])
        outcomes.append(outcome)
        if progress is not None:
            progress()
    return outcomes
