#!/usr/bin/env python3
"""
Center inspection CLI.
Reports the monomial center of the torus attached to an algebra's matrix S, at generic q
and at a primitive l-th root, cross-checked against the brute-force oracle.
"""

import logging
from typing import Optional

from tabulate import tabulate

from cli.reporting import EXIT_FAILED, EXIT_OK, lattice_rows, save_result, status_mark
from ingestion.algebra_file import load_algebra_file
from intlat.smith import coprime_to_elementary_divisors
from models.schemas import CenterResult, CheckStatus
from qtorus.center import brute_force_center, center_at_eps, center_generic, torus_decompose
from qtorus.torus import TorusAlgebra
from utils.errors import TooLargeError

# Configure logging
logger = logging.getLogger(__name__)


def center_workflow(path: str, l: int, out: Optional[str] = None) -> int:
    """
    Compute the center lattices of the associated quantum torus.

    Args:
        path: Algebra file
        l: Root order
        out: Optional JSON output path

    Returns:
        Exit code (1 if the oracle disagrees with center_at_eps)
    """
    logger.info("=== Center Inspector ===")
    spec = load_algebra_file(path).spec
    torus = TorusAlgebra(spec.S, names=spec.names)

    generic = center_generic(torus)
    at_eps = center_at_eps(torus, l)

    oracle = CheckStatus.SKIPPED
    try:
        expected = brute_force_center(torus, l)
        oracle = CheckStatus.PASS if expected.basis == at_eps.basis else CheckStatus.FAIL
        if oracle == CheckStatus.FAIL:
            logger.error(f"Oracle center {expected} differs from {at_eps}")
    except TooLargeError as e:
        logger.info(f"Brute-force oracle skipped: {e}")

    decomposition = torus_decompose(torus)
    rep_dimension = None
    if torus.M == 0 or coprime_to_elementary_divisors(torus.S.entries, l):
        rep_dimension = l ** decomposition.r

    print(f"\nAlgebra: {spec.name}, torus on {torus.M} generator(s), l={l}")
    table_data = [
        ["generic q", generic.rank, "; ".join(str(list(b)) for b in generic.basis) or "-"],
        [f"eps (l={l})", at_eps.rank, "; ".join(str(list(b)) for b in at_eps.basis) or "-"],
    ]
    print(tabulate(table_data, headers=["Center", "Rank", "Basis (exponent vectors)"], tablefmt="grid"))
    print(f"Alternating form: d={list(decomposition.d)}, t={decomposition.t}")
    print(f"Brute-force oracle: {status_mark(oracle)}")
    if rep_dimension is not None:
        print(f"Irreducible representations at eps have dimension {rep_dimension}")
    else:
        print(f"⚠️  l={l} is not prime to the elementary divisors of S; no dimension claim")

    if out:
        result = CenterResult(
            command="center",
            algebra=spec.name,
            l=l,
            generic=lattice_rows(generic.basis),
            at_eps=lattice_rows(at_eps.basis),
            oracle=oracle,
            d=list(decomposition.d),
            t=decomposition.t,
            rep_dimension=rep_dimension,
        )
        save_result(result, out)

    return EXIT_FAILED if oracle == CheckStatus.FAIL else EXIT_OK
