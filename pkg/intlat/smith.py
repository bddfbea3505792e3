"""
Smith and Hermite normal forms over the integers.
Provides SNF with unimodular transforms, canonical lattice bases and integral solving.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

# Configure logging
logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]
IntVector = Tuple[int, ...]


def to_int_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity_matrix(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    """Exact integer product (object dtype keeps Python integers)."""
    if not a or not b:
        rows = len(a)
        cols = len(b[0]) if b else 0
        return tuple(tuple(0 for _ in range(cols)) for _ in range(rows))
    product = np.array(a, dtype=object) @ np.array(b, dtype=object)
    return to_int_matrix(product.tolist())


def transpose(a: Sequence[Sequence[int]]) -> IntMatrix:
    return to_int_matrix(list(zip(*a))) if a else ()


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant via sympy's Bareiss implementation."""
    if not a:
        return 1
    return int(sympy.Matrix(a).det(method="bareiss"))


@dataclass(frozen=True)
class SmithForm:
    """U A V = D with U, V unimodular and D diagonal with d_1 | d_2 | ..."""
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def elementary_divisors(self) -> IntVector:
        return tuple(d for d in self.diagonal if d != 0)

    def __iter__(self):
        return iter((self.U, self.D, self.V))


class _SmithReducer:
    """Working state of the reduction: matrix plus accumulated row and column transforms."""

    def __init__(self, a: Sequence[Sequence[int]]):
        self.a = [list(map(int, row)) for row in a]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        self.left = identity_matrix(self.rows)
        self.right = identity_matrix(self.cols)

    def row_swap(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.left[i], self.left[j] = self.left[j], self.left[i]

    def col_swap(self, i: int, j: int) -> None:
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.right:
            row[i], row[j] = row[j], row[i]

    def row_add(self, target: int, source: int, factor: int) -> None:
        self.a[target] = [x + factor * y for x, y in zip(self.a[target], self.a[source])]
        self.left[target] = [x + factor * y for x, y in zip(self.left[target], self.left[source])]

    def col_add(self, target: int, source: int, factor: int) -> None:
        for row in self.a:
            row[target] += factor * row[source]
        for row in self.right:
            row[target] += factor * row[source]

    def row_negate(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        self.left[i] = [-x for x in self.left[i]]

    def block_is_zero(self, s: int) -> bool:
        return all(self.a[i][j] == 0 for i in range(s, self.rows) for j in range(s, self.cols))

    def move_least_to_start(self, s: int) -> None:
        best = None
        for i in range(s, self.rows):
            for j in range(s, self.cols):
                v = self.a[i][j]
                if v != 0 and (best is None or abs(v) < abs(self.a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return
        if best[0] != s:
            self.row_swap(s, best[0])
        if best[1] != s:
            self.col_swap(s, best[1])

    def edging_is_zero(self, s: int) -> bool:
        return (all(self.a[i][s] == 0 for i in range(s + 1, self.rows))
                and all(self.a[s][j] == 0 for j in range(s + 1, self.cols)))

    def move_least_edging_to_start(self, s: int) -> None:
        pos = None
        least = abs(self.a[s][s])
        for i in range(s + 1, self.rows):
            v = self.a[i][s]
            if v != 0 and abs(v) < least:
                pos, least = (i, s), abs(v)
        for j in range(s + 1, self.cols):
            v = self.a[s][j]
            if v != 0 and abs(v) < least:
                pos, least = (s, j), abs(v)
        if pos is None:
            return
        if pos[1] == s:
            self.row_swap(s, pos[0])
        else:
            self.col_swap(s, pos[1])

    def clear_edging(self, s: int) -> None:
        while not self.edging_is_zero(s):
            self.move_least_edging_to_start(s)
            pivot = self.a[s][s]
            for i in range(s + 1, self.rows):
                if self.a[i][s] != 0:
                    self.row_add(i, s, -(self.a[i][s] // pivot))
            for j in range(s + 1, self.cols):
                if self.a[s][j] != 0:
                    self.col_add(j, s, -(self.a[s][j] // pivot))

    def find_non_divisible(self, s: int) -> Optional[int]:
        pivot = self.a[s][s]
        for i in range(s + 1, self.rows):
            for j in range(s + 1, self.cols):
                if self.a[i][j] % pivot != 0:
                    return i
        return None

    def run(self) -> SmithForm:
        for s in range(min(self.rows, self.cols)):
            if self.block_is_zero(s):
                break
            self.move_least_to_start(s)
            while True:
                self.clear_edging(s)
                offending_row = self.find_non_divisible(s)
                if offending_row is None:
                    break
                self.row_add(s, offending_row, 1)
            if self.a[s][s] < 0:
                self.row_negate(s)
        return SmithForm(to_int_matrix(self.left), to_int_matrix(self.a), to_int_matrix(self.right))


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithForm:
    """
    Smith normal form with transforms.

    Args:
        a: Integer matrix (rows)

    Returns:
        SmithForm (U, D, V) with U a V = D, U and V unimodular
    """
    form = _SmithReducer(a).run()
    logger.debug(f"SNF diagonal {form.diagonal}")
    return form


def elementary_divisors(a: Sequence[Sequence[int]]) -> IntVector:
    """Nonzero diagonal entries of the Smith normal form."""
    return smith_normal_form(a).elementary_divisors


def coprime_to_elementary_divisors(a: Sequence[Sequence[int]], l: int) -> bool:
    return all(gcd(d, l) == 1 for d in elementary_divisors(a))


def hermite_normal_form(vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """
    Row-style Hermite normal form of the lattice spanned by the given vectors.

    Pivots are positive, entries above each pivot lie in [0, pivot), zero rows dropped.
    The result depends only on the lattice, so it is a canonical basis.
    """
    rows = [list(map(int, v)) for v in vectors if any(v)]
    if not rows:
        return ()
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        if r >= len(rows):
            break
        while True:
            nonzero = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if len(nonzero) <= 1:
                break
            pivot = min(nonzero, key=lambda i: abs(rows[i][col]))
            for i in nonzero:
                if i != pivot:
                    factor = rows[i][col] // rows[pivot][col]
                    rows[i] = [x - factor * y for x, y in zip(rows[i], rows[pivot])]
        nonzero = [i for i in range(r, len(rows)) if rows[i][col] != 0]
        if not nonzero:
            continue
        i = nonzero[0]
        rows[r], rows[i] = rows[i], rows[r]
        if rows[r][col] < 0:
            rows[r] = [-x for x in rows[r]]
        for k in range(r):
            factor = rows[k][col] // rows[r][col]
            if factor:
                rows[k] = [x - factor * y for x, y in zip(rows[k], rows[r])]
        r += 1
    return to_int_matrix(row for row in rows[:r] if any(row))


def solve_integer_system(a: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[IntVector]:
    """
    Particular integral solution of a x = b.

    Returns:
        A solution vector, or None when no integral solution exists
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    if ncols == 0:
        return () if not any(b) else None
    U, D, V = smith_normal_form(a)
    rhs = mat_vec(U, b)
    y = [0] * ncols
    for i in range(nrows):
        d = D[i][i] if i < ncols else 0
        if d == 0:
            if rhs[i] != 0:
                return None
            continue
        if rhs[i] % d != 0:
            return None
        y[i] = rhs[i] // d
    return mat_vec(V, y)


def unimodular_inverse(w: Sequence[Sequence[int]]) -> IntMatrix:
    """
    Integer inverse of a unimodular matrix.

    Raises:
        ValueError: If det w is not +-1
    """
    matrix = sympy.Matrix(w)
    if abs(matrix.det()) != 1:
        raise ValueError("Matrix is not unimodular")
    return to_int_matrix(matrix.inv().tolist())
