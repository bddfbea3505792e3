#!/usr/bin/env python3
"""
Algebra file validator CLI.
Loads an algebra file and reports every violated structural condition.
"""

import logging
from typing import Optional

from tabulate import tabulate

from cli.reporting import EXIT_FAILED, EXIT_OK, save_result
from ingestion.algebra_file import load_algebra_file
from models.schemas import ValidationResult, ViolationRecord
from orealg.spec import validate_spec

# Configure logging
logger = logging.getLogger(__name__)


def validate_workflow(path: str, out: Optional[str] = None) -> int:
    """
    Validate an algebra file.

    Args:
        path: Algebra file
        out: Optional JSON output path

    Returns:
        Exit code (0 if valid, 1 if any condition is violated)

    Raises:
        InvalidInputError: If the file cannot be parsed
    """
    logger.info("=== Algebra Validator ===")
    loaded = load_algebra_file(path)
    spec = loaded.spec
    report = validate_spec(spec)

    print(f"\nAlgebra: {spec.name} (n={spec.n}, m={spec.m})")
    print(f"Generators: {', '.join(spec.names)}")
    print(f"Checks run: {', '.join(report.checks_run)}")

    if report.valid:
        print("✅ All structural conditions hold.")
    else:
        table_data = [
            [v.code, spec.label(*v.relation) if v.relation is not None else "-", v.message]
            for v in report.violations
        ]
        print(f"\n⚠️  {len(report.violations)} violation(s):")
        print(tabulate(table_data, headers=["Check", "Relation", "Message"], tablefmt="grid"))

    if out:
        result = ValidationResult(
            command="validate",
            algebra=spec.name,
            valid=report.valid,
            checks_run=report.checks_run,
            violations=[
                ViolationRecord(code=v.code, message=v.message,
                                relation=[v.relation[0] + 1, v.relation[1] + 1] if v.relation else None)
                for v in report.violations
            ],
        )
        save_result(result, out)

    return EXIT_OK if report.valid else EXIT_FAILED
