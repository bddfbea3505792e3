"""
Shared output helpers for the CLI workflows.
Provides exit codes, JSON result writing and exact-scalar formatting for tables.
"""

import logging
import os
from typing import List, Sequence

import numpy as np
from pydantic import BaseModel

from models.schemas import CheckStatus, ExactScalar, IdentityRecord
from orealg.identities import IdentityOutcome

# Configure logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def save_result(result: BaseModel, path: str) -> None:
    """Write a report model as indented JSON."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(result.model_dump_json(indent=2))
    print(f"\nResults saved to: {path}")


def status_mark(status: CheckStatus) -> str:
    return {
        CheckStatus.PASS: "✅ pass",
        CheckStatus.FAIL: "❌ FAIL",
        CheckStatus.SKIPPED: "– skipped",
        CheckStatus.ASSUMED: "⚠️  assumed",
    }[status]


def identity_record(outcome: IdentityOutcome) -> IdentityRecord:
    if outcome.skipped:
        status = CheckStatus.SKIPPED
    else:
        status = CheckStatus.PASS if outcome.passed else CheckStatus.FAIL
    return IdentityRecord(name=outcome.name, status=status, cases=outcome.cases,
                          counterexample=outcome.counterexample, details=outcome.details)


def matrix_rows(matrix: np.ndarray) -> List[List[str]]:
    return [[str(v) for v in row] for row in matrix]


def exact_matrix(matrix: np.ndarray) -> List[List[ExactScalar]]:
    return [[ExactScalar.from_cyc(v) for v in row] for row in matrix]


def lattice_rows(basis: Sequence[Sequence[int]]) -> List[List[int]]:
    return [list(b) for b in basis]
