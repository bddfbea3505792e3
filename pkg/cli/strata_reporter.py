#!/usr/bin/env python3
"""
Stratum report CLI.
Enumerates (q-commuting algebras) or validates (declared strata) the strata of an
algebra and reports ranks, leaf and representation dimensions at a root order.
"""

import logging
from typing import Optional

from tabulate import tabulate
from tqdm import tqdm

from cli.reporting import EXIT_FAILED, EXIT_INVALID, EXIT_OK, save_result
from ingestion.algebra_file import load_algebra_file
from models.schemas import CheckStatus
from strata.report import stratum_report
from strata.stratification import enumerate_strata_qcommuting, validate_user_stratum
from utils.errors import NotQCommutingError

# Configure logging
logger = logging.getLogger(__name__)


def strata_workflow(path: str, l: int, build_reps: bool = False, out: Optional[str] = None) -> int:
    """
    Report every stratum of an algebra.

    Args:
        path: Algebra file
        l: Root order
        build_reps: Build and verify a representation per stratum
        out: Optional JSON output path

    Returns:
        Exit code (1 if a declaration is invalid, a record is inconsistent or a
        built representation fails verification)
    """
    logger.info("=== Stratum Reporter ===")
    loaded = load_algebra_file(path)
    spec = loaded.spec
    declarations = loaded.stratum_declarations()

    if declarations:
        strata = []
        invalid = 0
        for declaration in declarations:
            validation = validate_user_stratum(spec, declaration, algebra=loaded.algebra)
            if validation.valid:
                strata.append(validation.stratum)
                continue
            invalid += 1
            print(f"\n❌ Declared stratum '{declaration.label}' is invalid:")
            for violation in validation.report.violations:
                print(f"  - {violation}")
        if invalid:
            logger.error(f"{invalid} declared stratum/strata failed validation")
            return EXIT_FAILED
    else:
        try:
            strata = enumerate_strata_qcommuting(spec)
        except NotQCommutingError as e:
            logger.error(f"{e}; declare the strata with [[stratum]] tables")
            return EXIT_INVALID

    with tqdm(total=len(strata), desc="Strata", unit="stratum", disable=len(strata) < 2) as bar:
        result = stratum_report(spec, l, strata=strata, build_reps=build_reps, progress=lambda: bar.update(1))

    print(f"\nAlgebra: {spec.name}, l={l}: "
          f"{'admissible' if result.admissibility.admissible else 'not admissible'}")
    headers = ["Stratum", "mu", "Rank", "Leaf dim", "Rep dim", "Poisson rank", "Admissible", "Consistent"]
    if build_reps:
        headers += ["Rep check", "Commutant"]
    table_data = []
    for record in result.strata:
        row = [
            record.label,
            str(tuple(record.mu)) if record.mu is not None else "-",
            record.rank,
            record.leaf_dimension,
            record.rep_dimension if record.rep_dimension is not None else "-",
            record.poisson_rank if record.poisson_rank is not None else "-",
            "✅" if record.admissible else "❌",
            "✅" if record.consistent else "❌",
        ]
        if build_reps:
            row += [
                record.rep.status.value if record.rep else "-",
                record.rep.commutant_dimension if record.rep and record.rep.commutant_dimension else "-",
            ]
        table_data.append(row)
    print(tabulate(table_data, headers=headers, tablefmt="grid"))

    for record in result.strata:
        for note in record.notes:
            print(f"⚠️  {record.label}: {note}")

    if out:
        save_result(result, out)

    failed = [r.label for r in result.strata
              if not r.consistent or (r.rep is not None and r.rep.status == CheckStatus.FAIL)]
    if failed:
        logger.error(f"Inconsistent strata: {failed}")
        return EXIT_FAILED
    return EXIT_OK
