"""
Integer kernels and congruence lifting.
Provides kernel bases, suffix submatrices and lifting of solutions mod l to solutions over Z.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence, Tuple, Union

from intlat.smith import IntMatrix, IntVector, hermite_normal_form, mat_vec, smith_normal_form, to_int_matrix, transpose
from utils.errors import BadParametersError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotLiftable:
    """A residue solution mod l with no integral solution above it."""
    residue: IntVector
    l: int
    reason: str


def kernel_basis(s: Sequence[Sequence[int]]) -> IntMatrix:
    """
    Basis of {n in Z^M : S n = 0} in Hermite normal form.

    Args:
        s: Integer matrix with M columns

    Returns:
        Basis vectors as rows (empty when S has trivial kernel)
    """
    s = to_int_matrix(s)
    ncols = len(s[0]) if s else 0
    if not s:
        return to_int_matrix([[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)])
    form = smith_normal_form(s)
    columns = transpose(form.V)
    return hermite_normal_form(columns[form.rank:])


def suffix_submatrix(s: Sequence[Sequence[int]], j: int) -> IntMatrix:
    """The columns j, j+1, ..., M-1 of S (0-based), all rows kept."""
    return to_int_matrix([row[j:] for row in s])


@lru_cache(maxsize=1024)
def _lifting_data(s: IntMatrix):
    kernel = kernel_basis(s)
    if not kernel:
        return kernel, None
    return kernel, smith_normal_form(transpose(kernel))


def solve_and_lift_congruence(s_j: Sequence[Sequence[int]], l: int,
                              n: Sequence[int]) -> Union[IntVector, NotLiftable]:
    """
    Lift a solution of S_j n = 0 mod l to an integral solution.

    Args:
        s_j: Integer matrix
        l: Modulus
        n: Residue vector with S_j n = 0 mod l

    Returns:
        m with S_j m = 0 over Z and m = n mod l, or NotLiftable

    Raises:
        BadParametersError: If n is not a solution mod l
    """
    s_j = to_int_matrix(s_j)
    n = tuple(int(v) for v in n)
    if any(v % l for v in mat_vec(s_j, n)):
        raise BadParametersError(f"{n} does not solve the system modulo {l}")

    kernel, form = _lifting_data(s_j)
    if form is None:
        if all(v % l == 0 for v in n):
            return tuple(0 for _ in n)
        return NotLiftable(n, l, "the integral kernel is zero")

    # Solve K^T c = n (mod l) through U K^T V = D
    U, D, V = form
    y = mat_vec(U, n)
    c_prime = [0] * len(kernel)
    for i, yi in enumerate(y):
        d = D[i][i] if i < len(kernel) else 0
        if d == 0:
            if yi % l:
                return NotLiftable(n, l, f"inconsistent congruence in coordinate {i + 1}")
            continue
        g = gcd(d, l)
        if yi % g:
            return NotLiftable(n, l, f"elementary divisor {d} shares factor {g} with {l}")
        modulus = l // g
        c_prime[i] = ((yi // g) * pow(d // g, -1, modulus)) % modulus if modulus > 1 else 0

    c = mat_vec(V, c_prime)
    m = tuple(sum(ci * k[idx] for ci, k in zip(c, kernel)) for idx in range(len(n)))
    logger.debug(f"Lifted residue {n} mod {l} to {m}")
    return m
