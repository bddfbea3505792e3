"""
Executable identities of the tau/delta calculus.
Provides a registry of named identities and identity_check, which runs one of them on
supplied or seeded random inputs and reports the first counterexample.
"""

import logging
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from orealg.algebra import OreAlgebra, OreElement
from scalar.cyclotomic import CycScalar
from scalar.laurent import QLaurent, divisible_by_q_minus_eps_power, eval_at_eps, exact_div_q_minus_eps, q_adic_valuation
from scalar.qnumbers import q_binomial, q_factorial
from utils.config import settings
from utils.errors import InvalidInputError, NotDivisibleError, UnsupportedInputError

# Configure logging
logger = logging.getLogger(__name__)

Operands = Tuple[object, ...]


@dataclass
class IdentityOutcome:
    """Result of one identity run; failures are data, never raised."""
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None
    details: List[str] = field(default_factory=list)

    @property
    def skipped(self) -> bool:
        """No case ran because the side conditions were never met."""
        return self.passed and self.cases == 0

    def __str__(self) -> str:
        if self.skipped:
            return f"{self.name}: skipped"
        verdict = "pass" if self.passed else f"FAIL ({self.counterexample})"
        return f"{self.name}: {verdict} [{self.cases} cases]"


@dataclass(frozen=True)
class OreIdentity:
    """
    One identity of the registry.

    `draw` produces random operands for generator index i, `check` returns a
    counterexample description or None. `per_index` is False for identities that do
    not single out a generator.
    """
    name: str
    description: str
    check: Callable[[OreAlgebra, Optional[int], Optional[int], Operands], Optional[str]]
    draw: Callable[[OreAlgebra, Optional[int], random.Random, int, Optional[int]], Operands]
    needs_l: bool = False
    needs_root_assumptions: bool = False
    per_index: bool = True


IDENTITIES: Dict[str, OreIdentity] = {}


def register(name: str, description: str, draw, needs_l: bool = False,
             needs_root_assumptions: bool = False, per_index: bool = True):
    def decorator(fn):
        IDENTITIES[name] = OreIdentity(name, description, fn, draw, needs_l, needs_root_assumptions, per_index)
        return fn
    return decorator


# Helpers

def _subalgebra_element(algebra: OreAlgebra, i: int, rng: random.Random, degree: int) -> OreElement:
    """Random element of the subalgebra on indices > i."""
    return algebra.random_element(rng.randrange(2**31), degree, support=range(i + 1, algebra.N))


def _at_eps(element: OreElement, l: int) -> Dict[tuple, CycScalar]:
    out = {}
    for mono, coeff in element.terms():
        value = eval_at_eps(coeff, l)
        if not value.is_zero():
            out[mono] = value
    return out


def _divide(element: OreElement, l: int) -> OreElement:
    """Coefficientwise exact division by (q - eps)."""
    return element.map_coefficients(lambda c: exact_div_q_minus_eps(c, l))


def _lift(values: Dict[tuple, CycScalar], algebra: OreAlgebra) -> OreElement:
    return algebra.element({mono: QLaurent.constant(v) for mono, v in values.items()})


def root_assumptions(algebra: OreAlgebra, i: int, l: int) -> Optional[str]:
    """
    Reason why x_i does not meet the root-of-unity hypotheses, or None.

    The skew constant must be prime to l when nonzero and x_i^l must be central at eps.
    """
    s = algebra.skew_constants[i]
    if s != 0 and gcd(s, l) != 1:
        return f"gcd(s_{i + 1}, l) = gcd({s}, {l}) != 1"
    power = algebra.generator(i) ** l
    for g in algebra.generators():
        if any(not eval_at_eps(c, l).is_zero() for _, c in algebra.commutator(power, g).terms()):
            return f"{algebra.names[i]}^{l} is not central at eps (l={l})"
    return None


def _normal_generators(algebra: OreAlgebra, i: int) -> List[int]:
    """Generators x_j, j > i, q-commuting with every generator of index > i."""
    out = []
    for j in range(i + 1, algebra.spec.n):
        xj = algebra.generator(j)
        if all(algebra.q_commutation_exponent(xj, algebra.generator(k)) is not None
               for k in range(i + 1, algebra.N) if k != j):
            out.append(j)
    return out


# Draws

def _draw_one(algebra, i, rng, degree, l):
    return (_subalgebra_element(algebra, i, rng, degree),)


def _draw_pair_with_order(algebra, i, rng, degree, l):
    return (_subalgebra_element(algebra, i, rng, degree), _subalgebra_element(algebra, i, rng, degree),
            rng.randint(1, 4))


def _draw_with_k(algebra, i, rng, degree, l):
    return _subalgebra_element(algebra, i, rng, degree), rng.randint(1, 2 * l)


def _draw_generator_power(algebra, i, rng, degree, l):
    candidates = _normal_generators(algebra, i)
    if not candidates:
        raise UnsupportedInputError(f"No generator above {algebra.names[i]} spans a monomial ideal")
    n = rng.randint(1, max(1, degree))
    return algebra.generator(rng.choice(candidates)), n, n + rng.randint(0, 1)


def _draw_triple(algebra, i, rng, degree, l):
    return tuple(algebra.random_element(rng.randrange(2**31), degree) for _ in range(3))


# Identities

@register("eq2.2", "x_i^l a = sum_k binom(l, k) tau^(l-k) delta^k(a) x_i^(l-k)", _draw_one, needs_l=True)
def _power_expansion(algebra: OreAlgebra, i: int, l: int, operands: Operands) -> Optional[str]:
    a, = operands
    x = algebra.generator(i)
    s = algebra.skew_constants[i]
    direct = (x ** l) * a
    expanded = algebra.zero()
    delta_k = a
    for k in range(l + 1):
        term = algebra.tau_power(i, delta_k, l - k) * (x ** (l - k))
        expanded = expanded + term.scale(q_binomial(l, k, s))
        delta_k = algebra.apply_delta(i, delta_k)
    if direct != expanded:
        return f"a = {a}: {direct} != {expanded}"
    return None


@register("eq2.3", "delta^n(ab) = sum_k binom(n, k) tau^(n-k) delta^k(a) delta^(n-k)(b)", _draw_pair_with_order)
def _leibniz_power(algebra: OreAlgebra, i: int, l: Optional[int], operands: Operands) -> Optional[str]:
    a, b, n = operands
    s = algebra.skew_constants[i]
    left = algebra.delta_power(i, a * b, n)
    right = algebra.zero()
    for k in range(n + 1):
        term = algebra.tau_power(i, algebra.delta_power(i, a, k), n - k) * algebra.delta_power(i, b, n - k)
        right = right + term.scale(q_binomial(n, k, s))
    if left != right:
        return f"a = {a}, b = {b}, n = {n}"
    return None


@register("lemma2.7", "delta^l and tau^l - id vanish modulo (q - eps)", _draw_one,
          needs_l=True, needs_root_assumptions=True)
def _root_vanishing(algebra: OreAlgebra, i: int, l: int, operands: Operands) -> Optional[str]:
    a, = operands
    if _at_eps(algebra.delta_power(i, a, l), l):
        return f"delta^{l}(a) != 0 at eps for a = {a}"
    if _at_eps(algebra.tau_power(i, a, l) - a, l):
        return f"tau^{l}(a) != a at eps for a = {a}"
    return None


@register("lemma2.8", "(k)! divides delta^k(a) at q = eps", _draw_with_k,
          needs_l=True, needs_root_assumptions=True)
def _factorial_divisibility(algebra: OreAlgebra, i: int, l: int, operands: Operands) -> Optional[str]:
    a, k = operands
    factorial = q_factorial(k, algebra.skew_constants[i])
    if factorial.is_zero:
        return None
    nu = q_adic_valuation(factorial, l)
    for mono, coeff in algebra.delta_power(i, a, k).terms():
        if not divisible_by_q_minus_eps_power(coeff, l, nu):
            return f"delta^{k}(a)/({k})! has a pole at eps for a = {a} (monomial {mono})"
    return None


@register("lemma2.9", "delta^n(a^m)/(n)! = Pi_n(delta(a)) (m = n), 0 (n < m) modulo the ideal of a",
          _draw_generator_power, needs_root_assumptions=True)
def _power_modulo_ideal(algebra: OreAlgebra, i: int, l: Optional[int], operands: Operands) -> Optional[str]:
    a, n, m = operands
    if not a.is_monomial() or sum(a.single_term()[0]) != 1 or a.single_term()[1] != 1:
        raise UnsupportedInputError(f"Ideal membership is only decidable for a single generator, got {a}")
    j = next(k for k, e in enumerate(a.single_term()[0]) if e)
    if j not in _normal_generators(algebra, i):
        raise UnsupportedInputError(f"{a} does not generate a monomial ideal above {algebra.names[i]}")
    if m < n:
        raise UnsupportedInputError(f"Needs n <= m, got n={n}, m={m}")

    def outside_ideal(element: OreElement) -> OreElement:
        return algebra.element({mono: c for mono, c in element.terms() if mono[j] == 0})

    left = outside_ideal(algebra.delta_power(i, a ** m, n))
    if m == n:
        right = outside_ideal(algebra.pi_n(algebra.apply_delta(i, a), n, i)).scale(
            q_factorial(n, algebra.skew_constants[i]))
    else:
        right = algebra.zero()
    if left != right:
        return f"a = {a}, n = {n}, m = {m}: {left} != {right}"
    return None


@register("lemma2.11", "delta theta = (theta + s l eps^-1) delta at q = eps", _draw_one, needs_l=True)
def _theta_shift(algebra: OreAlgebra, i: int, l: int, operands: Operands) -> Optional[str]:
    a, = operands
    s = algebra.skew_constants[i]
    try:
        theta_a = _lift(_at_eps(_divide(algebra.tau_power(i, a, l) - a, l), l), algebra)
        da = algebra.apply_delta(i, a)
        theta_da = _divide(algebra.tau_power(i, da, l) - da, l)
        shift = exact_div_q_minus_eps(QLaurent.q_power(s * l) - QLaurent.one(), l) if s else QLaurent.zero()
    except NotDivisibleError as e:
        return f"theta is undefined on a = {a}: {e}"
    left = _at_eps(algebra.apply_delta(i, theta_a), l)
    right = _at_eps(theta_da + da.scale(shift), l)
    if left != right:
        return f"a = {a}"
    return None


@register("condition3.2", "delta tau = q^s tau delta", _draw_one)
def _skew_commutation(algebra: OreAlgebra, i: int, l: Optional[int], operands: Operands) -> Optional[str]:
    a, = operands
    left = algebra.apply_delta(i, algebra.apply_tau(i, a))
    right = algebra.apply_tau(i, algebra.apply_delta(i, a)).scale(QLaurent.q_power(algebra.skew_constants[i]))
    if left != right:
        return f"a = {a}"
    return None


@register("pbw-associativity", "(ab)c = a(bc)", _draw_triple, per_index=False)
def _associativity(algebra: OreAlgebra, i: Optional[int], l: Optional[int], operands: Operands) -> Optional[str]:
    a, b, c = operands
    if (a * b) * c != a * (b * c):
        return f"a = {a}, b = {b}, c = {c}"
    return None


def identity_names() -> List[str]:
    return sorted(IDENTITIES)


def identity_check(name: str, algebra: OreAlgebra, l: Optional[int] = None, index: Optional[int] = None,
                   inputs: Optional[Sequence[object]] = None, seed: Optional[int] = None,
                   degree: Optional[int] = None, cases: Optional[int] = None) -> IdentityOutcome:
    """
    Run a named identity.

    Args:
        name: Registry id (see identity_names())
        algebra: Algebra to check in
        l: Root order, for identities that specialize at eps
        index: 0-based generator index; all polynomial generators when None
        inputs: Explicit operands; random operands are drawn when None
        seed: Seed of the random draws
        degree: Degree bound of random elements
        cases: Number of random cases per generator

    Returns:
        IdentityOutcome with the first counterexample, if any

    Raises:
        InvalidInputError: For an unknown identity
        UnsupportedInputError: When the side conditions cannot be established
    """
    identity = IDENTITIES.get(name)
    if identity is None:
        raise InvalidInputError(f"Unknown identity '{name}'; known: {', '.join(identity_names())}")
    if identity.needs_l and l is None:
        raise UnsupportedInputError(f"Identity {name} needs a root order l")
    seed = settings.DEFAULT_SEED if seed is None else seed
    degree = settings.DEFAULT_DEGREE if degree is None else degree
    cases = settings.DEFAULT_CASES if cases is None else cases

    outcome = IdentityOutcome(name=name, passed=True, cases=0)
    if not identity.per_index:
        indices: List[Optional[int]] = [None]
    elif index is not None:
        indices = [index]
    else:
        indices = list(range(algebra.spec.n))

    checked_any = False
    for i in indices:
        if identity.needs_root_assumptions and i is not None:
            if l is None:
                raise UnsupportedInputError(f"Identity {name} needs a root order l")
            reason = root_assumptions(algebra, i, l)
            if reason is not None:
                if index is not None:
                    raise UnsupportedInputError(f"{name}: {reason}")
                outcome.details.append(f"skipped {algebra.names[i]}: {reason}")
                continue
        if inputs is not None:
            operand_sets = [tuple(inputs)]
        else:
            rng = random.Random(f"{name}:{seed}:{i}")
            try:
                operand_sets = [identity.draw(algebra, i, rng, degree, l) for _ in range(cases)]
            except UnsupportedInputError as e:
                if index is not None:
                    raise
                outcome.details.append(f"skipped {algebra.names[i]}: {e}")
                continue
        checked_any = True
        for operands in operand_sets:
            outcome.cases += 1
            counterexample = identity.check(algebra, i, l, operands)
            if counterexample is not None:
                where = f" at {algebra.names[i]}" if i is not None else ""
                outcome.passed = False
                outcome.counterexample = f"{counterexample}{where}"
                logger.debug(f"{name} failed{where}: {counterexample}")
                return outcome
    if not checked_any and indices:
        raise UnsupportedInputError(f"{name}: no generator satisfies the side conditions "
                                    f"({'; '.join(outcome.details)})")
    return outcome


def run_identity_suite(algebra: OreAlgebra, l: int, names: Optional[Sequence[str]] = None,
                       seed: Optional[int] = None, degree: Optional[int] = None,
                       cases: Optional[int] = None, progress=None) -> List[IdentityOutcome]:
    """
    Run several identities; unsupported ones are reported as skipped passes.

    Args:
        progress: Optional callable invoked once per finished identity
    """
    outcomes = []
    for name in names or identity_names():
        try:
            outcome = identity_check(name, algebra, l=l, seed=seed, degree=degree, cases=cases)
        except UnsupportedInputError as e:
            outcome = IdentityOutcome(name=name, passed=True, cases=0, details=[f"not applicable: {e}"])
        outcomes.append(outcome)
        if progress is not None:
            progress()
    return outcomes
