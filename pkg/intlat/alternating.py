"""
Skew-symmetric integer matrices and their alternating normal form.
Provides IntSkewMatrix and congruence reduction W^T S W to hyperbolic blocks.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from intlat.smith import IntMatrix, identity_matrix, int_matmul, smith_normal_form, to_int_matrix, transpose

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntSkewMatrix:
    """Integer matrix with s_ij = -s_ji and zero diagonal."""
    entries: IntMatrix

    def __post_init__(self):
        m = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != m:
                raise ValueError(f"Row {i + 1} has {len(row)} entries, expected {m}")
            if row[i] != 0:
                raise ValueError(f"Diagonal entry s_{i + 1}{i + 1} = {row[i]} is not zero")
            for j in range(i + 1, m):
                if row[j] != -self.entries[j][i]:
                    raise ValueError(f"s_{i + 1}{j + 1} = {row[j]} but s_{j + 1}{i + 1} = {self.entries[j][i]}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntSkewMatrix":
        return cls(to_int_matrix(rows))

    @classmethod
    def zero(cls, m: int) -> "IntSkewMatrix":
        return cls(tuple((0,) * m for _ in range(m)))

    @property
    def M(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def restrict(self, indices: Sequence[int]) -> "IntSkewMatrix":
        """Principal submatrix on the given (0-based) indices."""
        return IntSkewMatrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object).reshape(self.M, self.M)

    @property
    def rank(self) -> int:
        return smith_normal_form(self.entries).rank if self.M else 0

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """a^T S b."""
        return sum(a[i] * self.entries[i][j] * b[j] for i in range(self.M) for j in range(self.M))


@dataclass(frozen=True)
class AlternatingForm:
    """W unimodular with W^T S W = diag([[0, d_1], [-d_1, 0]], ..., 0_t)."""
    W: IntMatrix
    d: Tuple[int, ...]
    t: int

    @property
    def r(self) -> int:
        return len(self.d)

    def block_matrix(self) -> IntMatrix:
        m = 2 * self.r + self.t
        block = [[0] * m for _ in range(m)]
        for k, dk in enumerate(self.d):
            block[2 * k][2 * k + 1] = dk
            block[2 * k + 1][2 * k] = -dk
        return to_int_matrix(block)


class _CongruenceReducer:
    """Simultaneous row/column operations A <- P^T A P, tracking W <- W P."""

    def __init__(self, s: IntSkewMatrix):
        self.m = s.M
        self.a = [list(row) for row in s.entries]
        self.w = identity_matrix(self.m)

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.w:
            row[i], row[j] = row[j], row[i]

    def add(self, target: int, source: int, factor: int) -> None:
        """Column target += factor * column source, then the same on rows."""
        if factor == 0:
            return
        for row in self.a:
            row[target] += factor * row[source]
        self.a[target] = [x + factor * y for x, y in zip(self.a[target], self.a[source])]
        for row in self.w:
            row[target] += factor * row[source]

    def least_entry(self, p: int):
        best = None
        for i in range(p, self.m):
            for j in range(i + 1, self.m):
                v = self.a[i][j]
                if v != 0 and (best is None or abs(v) < abs(self.a[best[0]][best[1]])):
                    best = (i, j)
        return best

    def block_rows_clear(self, p: int) -> bool:
        return all(self.a[p][k] == 0 and self.a[p + 1][k] == 0 for k in range(p + 2, self.m))

    def non_divisible_row(self, p: int):
        d = self.a[p][p + 1]
        for i in range(p + 2, self.m):
            for j in range(i + 1, self.m):
                if self.a[i][j] % d != 0:
                    return i
        return None

    def run(self) -> AlternatingForm:
        d: List[int] = []
        p = 0
        while p + 1 < self.m:
            if self.least_entry(p) is None:
                break
            while True:
                i, j = self.least_entry(p)
                self.swap(p, i)
                self.swap(p + 1, j)
                if self.a[p][p + 1] < 0:
                    self.swap(p, p + 1)
                pivot = self.a[p][p + 1]
                for k in range(p + 2, self.m):
                    self.add(k, p + 1, -(self.a[p][k] // pivot))
                    self.add(k, p, -(self.a[p + 1][k] // self.a[p + 1][p]))
                if not self.block_rows_clear(p):
                    continue
                offending = self.non_divisible_row(p)
                if offending is None:
                    break
                self.add(p, offending, 1)
            d.append(self.a[p][p + 1])
            p += 2
        return AlternatingForm(W=to_int_matrix(self.w), d=tuple(d), t=self.m - 2 * len(d))


def alternating_normal_form(s: IntSkewMatrix) -> AlternatingForm:
    """
    Congruence normal form of a skew-symmetric integer matrix.

    Args:
        s: Skew-symmetric matrix

    Returns:
        AlternatingForm with W^T S W block diagonal and d_1 | d_2 | ... | d_r
    """
    form = _CongruenceReducer(s).run()
    logger.debug(f"Alternating form of {s.M}x{s.M} matrix: d={form.d}, t={form.t}")
    return form


def congruence_transform(s: IntSkewMatrix, w: IntMatrix) -> IntMatrix:
    """W^T S W."""
    return int_matmul(int_matmul(transpose(w), s.entries), w)
