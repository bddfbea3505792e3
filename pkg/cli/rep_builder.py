#!/usr/bin/env python3
"""
Representation builder CLI.
Builds the irreducible representation of a stratum torus for a central character, or
checks user-supplied generator matrices against the algebra, and verifies it exactly.
"""

import logging
from typing import Optional

from tabulate import tabulate

from cli.reporting import EXIT_FAILED, EXIT_INVALID, EXIT_OK, exact_matrix, save_result
from ingestion.algebra_file import AlgebraFile, load_algebra_file
from ingestion.characters import load_character_file, load_matrices_file
from models.schemas import CheckStatus, RepResult
from qrep.irreps import CentralCharacter, Rep, build_torus_irrep
from qrep.verification import commutant_dimension, verify_rep
from strata.report import collect_strata, rep_record
from strata.stratification import Stratum
from utils.errors import BadParametersError, NotQCommutingError, TooLargeError

# Configure logging
logger = logging.getLogger(__name__)


def _select_stratum(loaded: AlgebraFile, label: Optional[str]) -> Optional[Stratum]:
    strata = collect_strata(loaded.spec, loaded.stratum_declarations(), algebra=loaded.algebra)
    if label is None:
        return strata[0]
    for stratum in strata:
        if stratum.label == label:
            return stratum
    logger.error(f"No stratum labelled '{label}'; available: {[s.label for s in strata]}")
    return None


def rep_workflow(path: str, l: int, char_path: Optional[str] = None, stratum_label: Optional[str] = None,
                 matrices_path: Optional[str] = None, out: Optional[str] = None) -> int:
    """
    Build or load a representation and verify it.

    Args:
        path: Algebra file
        l: Root order
        char_path: Character file (trivial character when None)
        stratum_label: Stratum to build on; the character file's stratum, then the
            first stratum, are used when None
        matrices_path: Generator matrices to verify instead of building a representation
        out: Optional JSON output path

    Returns:
        Exit code (1 if verification fails or the representation is not irreducible)
    """
    logger.info("=== Representation Builder ===")
    loaded = load_algebra_file(path)
    spec = loaded.spec

    if matrices_path:
        matrices = load_matrices_file(matrices_path, spec.names, l)
        rep = Rep(algebra=loaded.algebra, l=l, matrices=tuple(matrices), label=matrices_path)
        target = spec.name
    else:
        character: Optional[CentralCharacter] = None
        if char_path:
            character, declared = load_character_file(char_path, l)
            stratum_label = stratum_label or declared
        try:
            stratum = _select_stratum(loaded, stratum_label)
        except NotQCommutingError as e:
            logger.error(f"{e}; declare the strata with [[stratum]] tables")
            return EXIT_INVALID
        except ValueError as e:
            logger.error(str(e))
            return EXIT_FAILED
        if stratum is None:
            return EXIT_INVALID
        try:
            rep = build_torus_irrep(stratum.torus, l, character, label=stratum.label)
        except BadParametersError as e:
            logger.error(f"Cannot build a representation on stratum {stratum.label}: {e}")
            return EXIT_INVALID
        target = stratum.label

    verification = verify_rep(rep)
    try:
        commutant: Optional[int] = commutant_dimension(rep)
    except TooLargeError as e:
        logger.warning(f"Commutant skipped: {e}")
        commutant = None
    record = rep_record(rep, verification, commutant)

    print(f"\nRepresentation of {target} at l={l}: dimension {rep.dimension}")
    table_data = [
        ["relations and invertibility", "✅ pass" if verification.passed else "❌ FAIL", verification.checked],
        ["commutant dimension", commutant if commutant is not None else "skipped", "-"],
    ]
    print(tabulate(table_data, headers=["Check", "Result", "Checks"], tablefmt="grid"))
    for failure in verification.failures:
        print(f"  - {failure}")
    if commutant == 1:
        print("✅ Representation is irreducible.")
    elif commutant is not None:
        print(f"⚠️  Commutant has dimension {commutant}; the representation is reducible.")

    if out:
        names = rep.algebra.names
        result = RepResult(
            command="rep",
            algebra=spec.name,
            l=l,
            stratum=target,
            rep=record,
            matrices={names[k]: exact_matrix(m) for k, m in enumerate(rep.matrices)},
        )
        save_result(result, out)

    if record.status == CheckStatus.FAIL or commutant not in (None, 1):
        return EXIT_FAILED
    return EXIT_OK
