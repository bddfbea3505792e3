"""
q-combinatorics in the Laurent ring.
Provides q-integers, q-factorials and q-binomial coefficients with skew constant s.
"""

import logging
from functools import lru_cache

from scalar.laurent import QLaurent
from utils.errors import InternalArithmeticError, NotDivisibleError

# Configure logging
logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def q_int(n: int, s: int) -> QLaurent:
    """
    The q^s-integer (q^(sn) - 1)/(q^s - 1), or n when s = 0.

    Args:
        n: Any integer
        s: Skew constant

    Returns:
        Exact Laurent polynomial
    """
    if s == 0:
        return QLaurent.constant(n)
    if n >= 0:
        return QLaurent({s * k: 1 for k in range(n)})
    return QLaurent({s * k: -1 for k in range(n, 0)})


@lru_cache(maxsize=None)
def q_factorial(n: int, s: int) -> QLaurent:
    """(n)! = (1)(2)...(n) in q^s-integers."""
    if n < 0:
        raise ValueError(f"q-factorial of negative integer {n}")
    result = QLaurent.one()
    for k in range(1, n + 1):
        result = result * q_int(k, s)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, s: int) -> QLaurent:
    """
    q^s-binomial coefficient by the q-Pascal rule
    binom(n, k) = binom(n-1, k-1) + q^(sk) binom(n-1, k).

    Raises:
        ValueError: Unless 0 <= k <= n
    """
    if k < 0 or k > n:
        raise ValueError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return QLaurent.one()
    return q_binomial(n - 1, k - 1, s) + QLaurent.q_power(s * k) * q_binomial(n - 1, k, s)


def q_binomial_from_factorials(n: int, k: int, s: int) -> QLaurent:
    """
    q^s-binomial coefficient as the ratio (n)!/((k)!(n-k)!).

    Raises:
        ValueError: Unless 0 <= k <= n
        InternalArithmeticError: If the factorial ratio is not exact
    """
    if k < 0 or k > n:
        raise ValueError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    denominator = q_factorial(k, s) * q_factorial(n - k, s)
    try:
        return q_factorial(n, s).exact_divide(denominator)
    except NotDivisibleError as e:
        logger.error(f"Non-exact q-factorial ratio for n={n}, k={k}, s={s}")
        raise InternalArithmeticError(str(e)) from e
