"""
Stratum reports.
Provides stratum_report, which attaches ranks, leaf and representation dimensions,
Poisson ranks and optionally built-and-verified representations to every stratum.
"""

import logging
from typing import List, Optional, Sequence

from intlat.minors import minor_coprimality
from intlat.smith import coprime_to_elementary_divisors
from models.schemas import (AdmissibilityRecord, CheckStatus, ClauseRecord, ExactScalar, RepRecord,
                            StrataResult, StratumRecord)
from orealg.algebra import OreAlgebra
from orealg.spec import OreAlgebraSpec
from qadjoint.adjoint import default_central_elements
from qadjoint.poisson import generic_poisson_rank
from qrep.irreps import CentralCharacter, Rep, build_torus_irrep
from qrep.verification import RepVerification, commutant_dimension, verify_rep
from strata.admissibility import AdmissibilityVerdict, admissible
from strata.stratification import Stratum, StratumDeclaration, enumerate_strata_qcommuting, validate_user_stratum
from utils.errors import TooLargeError

# Configure logging
logger = logging.getLogger(__name__)


def admissibility_record(verdict: AdmissibilityVerdict) -> AdmissibilityRecord:
    return AdmissibilityRecord(
        l=verdict.l,
        admissible=verdict.admissible,
        clauses=[ClauseRecord(name=c.name, status=CheckStatus(c.status.value), detail=c.detail)
                 for c in verdict.clauses],
        witness_minor=verdict.witness_minor.value if verdict.witness_minor else None,
    )


def rep_record(rep: Rep, verification: RepVerification, commutant: Optional[int]) -> RepRecord:
    character = rep.character or CentralCharacter(nu=())
    return RepRecord(
        dimension=rep.dimension,
        status=CheckStatus.PASS if verification.passed else CheckStatus.FAIL,
        failures=verification.failures,
        checks=verification.checked,
        commutant_dimension=commutant,
        nu=[ExactScalar.from_cyc(v) for v in character.nu],
        alpha=[ExactScalar.from_cyc(v) for v in character.alpha],
    )


def build_and_check(stratum: Stratum, l: int, character: Optional[CentralCharacter] = None) -> RepRecord:
    """Build the irreducible representation of a stratum torus, verify it and compute its commutant."""
    rep = build_torus_irrep(stratum.torus, l, character, label=stratum.label)
    verification = verify_rep(rep)
    try:
        commutant = commutant_dimension(rep)
    except TooLargeError as e:
        logger.warning(f"Skipping commutant of stratum {stratum.label}: {e}")
        commutant = None
    return rep_record(rep, verification, commutant)


def stratum_record(stratum: Stratum, l: int, build_reps: bool = False) -> StratumRecord:
    """
    Per-stratum claims, each backed by a completed check.

    The stratum is admissible at l when l is prime to every minor of its matrix; the
    representation dimension l^(rank/2) is reported only when l is prime to the
    elementary divisors, and is cross-checked against the generic Poisson rank.
    """
    matrix = [list(row) for row in stratum.matrix.entries]
    notes: List[str] = []
    coprime = coprime_to_elementary_divisors(matrix, l) if matrix else True
    minors_ok = bool(minor_coprimality(matrix, l)) if matrix else True
    rep_dimension = None
    poisson_rank = None
    consistent = True
    if coprime:
        rep_dimension = stratum.rep_dimension(l)
        poisson_rank = generic_poisson_rank(default_central_elements(stratum.torus, l))
        consistent = poisson_rank == stratum.rank and rep_dimension == l ** (poisson_rank // 2)
        if not consistent:
            notes.append(f"Poisson rank {poisson_rank} disagrees with rank {stratum.rank}")
    else:
        notes.append(f"l={l} is not prime to the elementary divisors of the stratum matrix")

    rep = None
    if build_reps and coprime:
        rep = build_and_check(stratum, l)
        if rep.dimension != rep_dimension:
            consistent = False
            notes.append(f"built representation has dimension {rep.dimension}, expected {rep_dimension}")
        if rep.status == CheckStatus.FAIL or rep.commutant_dimension not in (None, 1):
            consistent = False

    return StratumRecord(
        label=stratum.label,
        source=stratum.source,
        mu=list(stratum.mu) if stratum.mu is not None else None,
        vanishing=list(stratum.vanishing),
        inverted=list(stratum.inverted),
        matrix=matrix,
        rank=stratum.rank,
        leaf_dimension=stratum.leaf_dimension,
        rep_dimension=rep_dimension,
        admissible=minors_ok and coprime,
        poisson_rank=poisson_rank,
        consistent=consistent,
        rep=rep,
        notes=notes,
    )


def collect_strata(spec: OreAlgebraSpec, declarations: Sequence[StratumDeclaration] = (),
                   algebra: Optional[OreAlgebra] = None) -> List[Stratum]:
    """
    Enumerated strata for q-commuting algebras, validated declarations otherwise.

    Raises:
        NotQCommutingError: For an algebra with derivations and no declared strata
        ValueError: If a declared stratum is invalid (the message lists the violations)
    """
    if not declarations:
        return enumerate_strata_qcommuting(spec)
    strata = []
    for declaration in declarations:
        validation = validate_user_stratum(spec, declaration, algebra=algebra)
        if not validation.valid:
            raise ValueError(f"Stratum {declaration.label}: {validation.report.summary()}")
        strata.append(validation.stratum)
    return strata


def stratum_report(spec: OreAlgebraSpec, l: int, strata: Optional[Sequence[Stratum]] = None,
                   build_reps: bool = False, progress=None) -> StrataResult:
    """
    Report every stratum of an algebra at l.

    Args:
        spec: Algebra specification
        l: Root order
        strata: Strata to report (enumerated when None)
        build_reps: Build, verify and attach a representation per stratum
        progress: Optional callable invoked after each stratum

    Returns:
        StrataResult with the algebra's admissibility verdict and one record per stratum
    """
    if strata is None:
        strata = enumerate_strata_qcommuting(spec)
    verdict = admissible(spec, l)
    records = []
    for stratum in strata:
        records.append(stratum_record(stratum, l, build_reps=build_reps))
        if progress is not None:
            progress()
    logger.info(f"Reported {len(records)} strata of {spec.name} at l={l}")
    return StrataResult(command="strata", algebra=spec.name, l=l,
                        admissibility=admissibility_record(verdict), strata=records)
