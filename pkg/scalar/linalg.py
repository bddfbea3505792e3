"""
Exact linear algebra over Q(eps).
Provides sparse incremental echelon forms, rank, nullspace and inverses for
matrices stored as numpy object arrays of CycScalar.
"""

import logging
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from scalar.cyclotomic import CycScalar, as_cyc

# Configure logging
logger = logging.getLogger(__name__)

SparseRow = Dict[int, CycScalar]


class SparseEchelon:
    """
    Row echelon form built one row at a time.

    Pivot rows are normalized to leading coefficient 1 and keyed by pivot column.
    """

    def __init__(self, l: int):
        self.l = l
        self._pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Reduce a row against the current pivots."""
        work = {c: as_cyc(v, self.l) for c, v in row.items() if v != 0}
        while work:
            col = min(work)
            pivot_row = self._pivots.get(col)
            if pivot_row is None:
                return work
            factor = work[col]
            for c, v in pivot_row.items():
                value = work.get(c, 0) - factor * v
                if value == 0:
                    work.pop(c, None)
                else:
                    work[c] = value
        return work

    def add_row(self, row: SparseRow) -> bool:
        """
        Insert a row.

        Returns:
            True if the row was independent of the rows already inserted
        """
        reduced = self.reduce(row)
        if not reduced:
            return False
        col = min(reduced)
        lead_inverse = reduced[col].inverse()
        self._pivots[col] = {c: v * lead_inverse for c, v in reduced.items()}
        return True

    def nullspace(self, ncols: int) -> List[SparseRow]:
        """
        Basis of the solutions of the inserted homogeneous system.

        Args:
            ncols: Number of unknowns

        Returns:
            One sparse vector per free column
        """
        reduced = {c: dict(r) for c, r in self._pivots.items()}
        for col in sorted(reduced, reverse=True):
            source = reduced[col]
            for other_col, other in reduced.items():
                if other_col < col and col in other:
                    factor = other[col]
                    for c, v in source.items():
                        value = other.get(c, 0) - factor * v
                        if value == 0:
                            other.pop(c, None)
                        else:
                            other[c] = value
        one = CycScalar.one(self.l)
        basis: List[SparseRow] = []
        for free in range(ncols):
            if free in reduced:
                continue
            vector: SparseRow = {free: one}
            for col, r in reduced.items():
                if free in r:
                    vector[col] = -r[free]
            basis.append(vector)
        return basis


def infer_order(matrices: Sequence[np.ndarray], default: Optional[int] = None) -> int:
    """Root order of the first non-rational entry (or of any CycScalar entry)."""
    fallback = default
    for m in matrices:
        for value in np.asarray(m, dtype=object).flat:
            if isinstance(value, CycScalar):
                if not value.is_rational():
                    return value.l
                fallback = fallback or value.l
    if fallback is None:
        raise ValueError("Cannot infer the root order from rational matrices")
    return fallback


def to_field_matrix(values: Sequence[Sequence[Union[int, CycScalar]]], l: int) -> np.ndarray:
    """Object array of CycScalar entries."""
    rows = [[as_cyc(v, l) for v in row] for row in values]
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = v
    return out


def zeros(n: int, m: int, l: int) -> np.ndarray:
    return np.full((n, m), CycScalar.zero(l), dtype=object)


def identity(n: int, l: int) -> np.ndarray:
    out = zeros(n, n, l)
    for i in range(n):
        out[i, i] = CycScalar.one(l)
    return out


def is_zero_matrix(matrix: np.ndarray) -> bool:
    return all(v == 0 for v in matrix.flat)


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def matrix_rank(matrix: np.ndarray, l: Optional[int] = None) -> int:
    """Exact rank over Q(eps)."""
    matrix = np.asarray(matrix, dtype=object)
    order = l or infer_order([matrix], default=1)
    echelon = SparseEchelon(order)
    for row in matrix:
        echelon.add_row({j: v for j, v in enumerate(row) if v != 0})
    return echelon.rank


def nullspace(matrix: np.ndarray, l: Optional[int] = None) -> List[List[CycScalar]]:
    """Dense nullspace basis {v : matrix v = 0}."""
    matrix = np.asarray(matrix, dtype=object)
    order = l or infer_order([matrix], default=1)
    ncols = matrix.shape[1]
    echelon = SparseEchelon(order)
    for row in matrix:
        echelon.add_row({j: v for j, v in enumerate(row) if v != 0})
    zero = CycScalar.zero(order)
    return [[vec.get(j, zero) for j in range(ncols)] for vec in echelon.nullspace(ncols)]


def inverse(matrix: np.ndarray, l: Optional[int] = None) -> np.ndarray:
    """
    Inverse by Gauss-Jordan elimination.

    Raises:
        ValueError: If the matrix is not square or is singular
    """
    matrix = np.asarray(matrix, dtype=object)
    n, m = matrix.shape
    if n != m:
        raise ValueError(f"Cannot invert a {n}x{m} matrix")
    order = l or infer_order([matrix], default=1)
    work = [[as_cyc(v, order) for v in row] + [CycScalar.one(order) if i == j else CycScalar.zero(order)
                                              for j in range(n)]
            for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("Matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        lead_inverse = work[col][col].inverse()
        work[col] = [v * lead_inverse for v in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return to_field_matrix([row[n:] for row in work], order)


def matrix_power(matrix: np.ndarray, exponent: int, l: int) -> np.ndarray:
    """Integer power; negative exponents invert first."""
    if exponent < 0:
        return matrix_power(inverse(matrix, l), -exponent, l)
    result = identity(matrix.shape[0], l)
    base = matrix
    while exponent:
        if exponent & 1:
            result = result @ base
        base = base @ base
        exponent >>= 1
    return result
