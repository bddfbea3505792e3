#!/usr/bin/env python3
"""
Identity verification CLI.
Runs the seeded Ore-extension identity suite and the quantum-adjoint property suite
on random elements of an algebra, with exact arithmetic.
"""

import logging
from typing import Optional

from tabulate import tabulate
from tqdm import tqdm

from cli.reporting import EXIT_FAILED, EXIT_OK, identity_record, save_result, status_mark
from ingestion.algebra_file import load_algebra_file
from models.schemas import VerifyResult
from orealg.identities import identity_names, run_identity_suite
from orealg.spec import validate_spec
from qadjoint.properties import property_names, run_property_suite
from utils.config import settings

# Configure logging
logger = logging.getLogger(__name__)

SUITES = ("all", "ore", "adjoint")


def verify_workflow(path: str, l: int, seed: Optional[int] = None, degree: Optional[int] = None,
                    cases: Optional[int] = None, suite: str = "all", out: Optional[str] = None) -> int:
    """
    Run the identity suites on an algebra file.

    Args:
        path: Algebra file
        l: Root order
        seed: Random seed (settings.DEFAULT_SEED when None)
        degree: Maximal degree of random elements
        cases: Random cases per identity
        suite: "ore", "adjoint" or "all"
        out: Optional JSON output path

    Returns:
        Exit code (1 if the algebra is invalid or any identity fails)
    """
    logger.info("=== Identity Verifier ===")
    seed = settings.DEFAULT_SEED if seed is None else seed
    degree = settings.DEFAULT_DEGREE if degree is None else degree
    cases = settings.DEFAULT_CASES if cases is None else cases

    loaded = load_algebra_file(path)
    spec = loaded.spec
    report = validate_spec(spec)
    if not report.valid:
        print(f"\n❌ {spec.name} is not a valid algebra: {report.summary()}")
        return EXIT_FAILED

    algebra = loaded.algebra
    names = []
    if suite in ("all", "ore"):
        names += identity_names()
    if suite in ("all", "adjoint"):
        names += property_names()

    outcomes = []
    with tqdm(total=len(names), desc="Identities", unit="identity") as bar:
        if suite in ("all", "ore"):
            outcomes += run_identity_suite(algebra, l, seed=seed, degree=degree, cases=cases,
                                           progress=lambda: bar.update(1))
        if suite in ("all", "adjoint"):
            outcomes += run_property_suite(algebra, l, seed=seed, degree=degree, cases=cases,
                                           progress=lambda: bar.update(1))

    records = [identity_record(o) for o in outcomes]
    print(f"\nAlgebra: {spec.name}, l={l}, seed={seed}, degree={degree}, cases={cases}")
    table_data = [
        [r.name, status_mark(r.status), r.cases, r.counterexample or (r.details[0] if r.details else "")]
        for r in records
    ]
    print(tabulate(table_data, headers=["Identity", "Status", "Cases", "Detail"], tablefmt="grid"))

    result = VerifyResult(command="verify", algebra=spec.name, l=l, seed=seed, degree=degree,
                          cases=cases, suite=suite, outcomes=records)
    if result.passed:
        print(f"✅ All applicable identities hold ({result.checked} of {len(records)} checked).")
    elif not result.checked:
        print("⚠️  No identity applies to this algebra at this root order; nothing was checked.")
    else:
        print(f"⚠️  Failed: {[r.name for r in records if r.status.value == 'fail']}")

    if out:
        save_result(result, out)

    return EXIT_OK if result.passed else EXIT_FAILED
