"""
Admissibility of a root order l.
Provides the clause-by-clause verdict: l-th powers central at eps, coprimality with
all minors of S and with the skew constants, and the assumed good-reduction clause.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import List, Optional

from intlat.minors import Minor, minor_coprimality
from orealg.algebra import OreAlgebra
from orealg.spec import OreAlgebraSpec
from utils.errors import BadParametersError

# Configure logging
logger = logging.getLogger(__name__)

GOOD_REDUCTION_NOTE = ("not effectively testable; assumed, since a quantum solvable algebra has at most "
                       "finitely many points of bad reduction")


class ClauseStatus(str, Enum):
    """Outcome of one admissibility clause."""
    PASS = "pass"
    FAIL = "fail"
    ASSUMED = "assumed"


@dataclass(frozen=True)
class Clause:
    name: str
    status: ClauseStatus
    detail: str = ""


@dataclass
class AdmissibilityVerdict:
    """Verdict for one l; admissible unless some clause failed."""
    l: int
    clauses: List[Clause] = field(default_factory=list)
    witness_minor: Optional[Minor] = None

    @property
    def admissible(self) -> bool:
        return all(c.status != ClauseStatus.FAIL for c in self.clauses)

    def failing(self) -> List[Clause]:
        return [c for c in self.clauses if c.status == ClauseStatus.FAIL]

    def __str__(self) -> str:
        if self.admissible:
            return f"l={self.l}: admissible"
        return f"l={self.l}: not admissible ({', '.join(c.name for c in self.failing())})"


def admissible(spec: OreAlgebraSpec, l: int, algebra: Optional[OreAlgebra] = None) -> AdmissibilityVerdict:
    """
    Decide whether l is an admissible root order for an algebra.

    Clauses:
        (a) x_1^l, ..., x_n^l are central modulo (q - eps)
        (b) gcd(l, mu) = 1 for every nonzero minor mu of S
        (c) gcd(l, s_i) = 1 for every nonzero skew constant s_i
        (d) eps is a point of good reduction (reported as ASSUMED)

    Args:
        spec: Algebra specification
        l: Root order
        algebra: Prebuilt OreAlgebra for spec, reused for clause (a)

    Returns:
        AdmissibilityVerdict listing every clause

    Raises:
        BadParametersError: If l < 2
        TooLargeError: If S exceeds the minor enumeration bound
    """
    if l < 2:
        raise BadParametersError(f"Root order must be at least 2, got {l}")
    verdict = AdmissibilityVerdict(l=l)

    algebra = algebra or OreAlgebra(spec)
    witness = algebra.lambda_witness(l)
    if witness is None:
        verdict.clauses.append(Clause("lambda", ClauseStatus.PASS, f"x_i^{l} central at eps"))
    else:
        i, g = witness
        verdict.clauses.append(Clause("lambda", ClauseStatus.FAIL,
                                      f"{spec.names[i]}^{l} does not commute with {spec.names[g]} at eps"))

    check = minor_coprimality(spec.S, l)
    if check:
        verdict.clauses.append(Clause("minors", ClauseStatus.PASS, "l is prime to every nonzero minor of S"))
    else:
        minor = check.witness
        verdict.witness_minor = minor
        rows = [r + 1 for r in minor.rows]
        cols = [c + 1 for c in minor.cols]
        verdict.clauses.append(Clause("minors", ClauseStatus.FAIL,
                                      f"minor {minor.value} (rows {rows}, columns {cols}) shares a factor with {l}"))

    bad = [(k, s) for k, s in enumerate(spec.skew_constants) if s != 0 and gcd(l, s) != 1]
    if bad:
        k, s = bad[0]
        verdict.clauses.append(Clause("skew-constants", ClauseStatus.FAIL, f"gcd({l}, s_{k + 1}={s}) != 1"))
    else:
        verdict.clauses.append(Clause("skew-constants", ClauseStatus.PASS, "l is prime to the nonzero s_i"))

    verdict.clauses.append(Clause("good-reduction", ClauseStatus.ASSUMED, GOOD_REDUCTION_NOTE))
    logger.debug(str(verdict))
    return verdict


def admissible_range(spec: OreAlgebraSpec, first: int, last: int) -> List[AdmissibilityVerdict]:
    """Verdicts for l = first..last inclusive, sharing one OreAlgebra."""
    if first > last:
        raise BadParametersError(f"Empty range {first}..{last}")
    algebra = OreAlgebra(spec)
    return [admissible(spec, l, algebra=algebra) for l in range(first, last + 1)]
