"""
Clock and shift matrices.
Provides the l x l blocks realizing y1 y2 = eps^d y2 y1 and exact Kronecker products.
"""

import logging
from math import gcd
from typing import Sequence, Tuple, Union

import numpy as np

from scalar.cyclotomic import CycScalar, as_cyc
from scalar.linalg import identity, zeros
from utils.errors import BadParametersError

# Configure logging
logger = logging.getLogger(__name__)


def clock_shift_block(l: int, d: int, nu1: Union[int, CycScalar] = 1,
                      nu2: Union[int, CycScalar] = 1) -> Tuple[np.ndarray, np.ndarray]:
    """
    Build the clock and shift pair of one hyperbolic block.

    Args:
        l: Root order
        d: Block exponent, prime to l
        nu1: Scale of the clock matrix
        nu2: Scale of the shift matrix

    Returns:
        (Y1, Y2) with Y1 = nu1 diag(eps^(kd)), Y2 = nu2 (e_j -> e_(j+1 mod l)),
        so that Y1 Y2 = eps^d Y2 Y1 and Yi^l = nu_i^l I

    Raises:
        BadParametersError: If gcd(d, l) != 1
    """
    if gcd(d, l) != 1:
        raise BadParametersError(f"Clock/shift block needs gcd(d, l) = 1, got d={d}, l={l}")
    nu1 = as_cyc(nu1, l)
    nu2 = as_cyc(nu2, l)
    clock = zeros(l, l, l)
    shift = zeros(l, l, l)
    for k in range(l):
        clock[k, k] = nu1 * CycScalar.root_power(l, k * d)
        shift[(k + 1) % l, k] = nu2
    return clock, shift


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of object matrices."""
    n, m = a.shape
    p, r = b.shape
    out = np.empty((n * p, m * r), dtype=object)
    for i in range(n):
        for j in range(m):
            out[i * p:(i + 1) * p, j * r:(j + 1) * r] = a[i, j] * b
    return out


def embed(block: np.ndarray, position: int, sizes: Sequence[int], l: int) -> np.ndarray:
    """I (x) ... (x) block (x) ... (x) I with the block at `position`."""
    result = identity(1, l)
    for k, size in enumerate(sizes):
        result = kron(result, block if k == position else identity(size, l))
    return result
