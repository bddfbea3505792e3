#!/usr/bin/env python3
"""
Admissibility CLI.
Decides for one root order or a range of them whether the algebra is admissible,
listing every clause.
"""

import logging
from typing import List, Optional

from tabulate import tabulate

from cli.reporting import EXIT_FAILED, EXIT_OK, save_result, status_mark
from ingestion.algebra_file import load_algebra_file
from models.schemas import AdmissibilityResult, CheckStatus
from strata.admissibility import AdmissibilityVerdict, admissible, admissible_range
from strata.report import admissibility_record

# Configure logging
logger = logging.getLogger(__name__)


def admissibility_workflow(path: str, l: Optional[int] = None, l_range: Optional[List[int]] = None,
                           out: Optional[str] = None) -> int:
    """
    Report admissibility verdicts.

    Args:
        path: Algebra file
        l: Single root order
        l_range: Inclusive [first, last] range, used when l is None
        out: Optional JSON output path

    Returns:
        Exit code (1 if some root order is not admissible)
    """
    logger.info("=== Admissibility Checker ===")
    loaded = load_algebra_file(path)
    spec = loaded.spec

    if l is not None:
        verdicts: List[AdmissibilityVerdict] = [admissible(spec, l, algebra=loaded.algebra)]
    else:
        verdicts = admissible_range(spec, l_range[0], l_range[1])

    records = [admissibility_record(v) for v in verdicts]
    print(f"\nAlgebra: {spec.name}")
    for record in records:
        mark = "✅" if record.admissible else "❌"
        print(f"\n{mark} l={record.l}: {'admissible' if record.admissible else 'not admissible'}")
        table_data = [[c.name, status_mark(c.status), c.detail] for c in record.clauses]
        print(tabulate(table_data, headers=["Clause", "Status", "Detail"], tablefmt="grid"))
        if record.witness_minor is not None:
            print(f"Witness minor: {record.witness_minor}")

    failed = [r.l for r in records if not r.admissible]
    if len(records) > 1:
        passed = [r.l for r in records if r.admissible]
        print(f"\nAdmissible: {passed or 'none'}")
        if failed:
            print(f"⚠️  Not admissible: {failed}")

    assumed = any(c.status == CheckStatus.ASSUMED for r in records for c in r.clauses)
    if assumed:
        logger.info("Good reduction is assumed, not checked")

    if out:
        save_result(AdmissibilityResult(command="admissible", algebra=spec.name, verdicts=records), out)

    return EXIT_FAILED if failed else EXIT_OK
