"""
Minor enumeration for admissibility tests.
Provides exact minors of all sizes and the coprimality test against l.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator, Optional, Sequence, Tuple

from intlat.smith import determinant
from utils.config import settings
from utils.errors import TooLargeError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Minor:
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    value: int


@dataclass(frozen=True)
class MinorCheck:
    coprime: bool
    witness: Optional[Minor] = None

    def __bool__(self) -> bool:
        return self.coprime


def iter_minors(s: Sequence[Sequence[int]]) -> Iterator[Minor]:
    """All minors of all sizes, smallest first."""
    nrows = len(s)
    ncols = len(s[0]) if s else 0
    for size in range(1, min(nrows, ncols) + 1):
        for rows in combinations(range(nrows), size):
            for cols in combinations(range(ncols), size):
                value = determinant([[s[i][j] for j in cols] for i in rows])
                yield Minor(rows, cols, value)


def minor_coprimality(s: Sequence[Sequence[int]], l: int) -> MinorCheck:
    """
    Test gcd(l, minor) = 1 for every nonzero minor of S.

    Args:
        s: Integer matrix
        l: Root order

    Returns:
        MinorCheck; on failure carries the first offending minor

    Raises:
        TooLargeError: If the matrix exceeds the enumeration bound
    """
    size = max(len(s), len(s[0]) if s else 0)
    if size > settings.MINOR_ENUMERATION_LIMIT:
        raise TooLargeError(f"Minor enumeration is capped at {settings.MINOR_ENUMERATION_LIMIT}, got {size}")
    for minor in iter_minors(s):
        if minor.value != 0 and gcd(l, minor.value) != 1:
            logger.debug(f"Minor {minor} shares a factor with l={l}")
            return MinorCheck(False, minor)
    return MinorCheck(True)
