"""
Strata of quantum solvable algebras.
Provides the automatic stratification of q-commuting algebras by vanishing subsets and
the validation of user-declared strata (vanishing and inverted elements).
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from intlat.alternating import IntSkewMatrix
from intlat.smith import determinant
from orealg.algebra import OreAlgebra
from orealg.spec import OreAlgebraSpec, ValidationReport
from qrep.irreps import rep_dimension_formula
from qtorus.elements import AlgebraElement, Monomial
from qtorus.torus import TorusAlgebra
from utils.errors import NotQCommutingError

# Configure logging
logger = logging.getLogger(__name__)


def mu_tuple(n: int, vanishing: Sequence[int]) -> Tuple[int, ...]:
    """
    Run lengths (i_1, ..., i_(k+1)) of vanishing generators read from x_n down to x_1,
    separated by the k surviving polynomial generators.

    Args:
        n: Number of polynomial generators
        vanishing: 0-based indices of vanishing generators

    Returns:
        Tuple with k + sum(i_s) = n
    """
    gone = set(vanishing)
    runs = [0]
    for index in range(n - 1, -1, -1):
        if index in gone:
            runs[-1] += 1
        else:
            runs.append(0)
    return tuple(runs)


@dataclass
class Stratum:
    """
    One stratum: an ideal generated by the vanishing elements and a denominator set
    generated by the inverted elements, whose quotient-localization is `torus`.

    For enumerated strata `vanishing_indices` and `surviving` are 0-based generator
    indices; declared strata carry the elements themselves.
    """
    label: str
    vanishing: Tuple[str, ...]
    inverted: Tuple[str, ...]
    matrix: IntSkewMatrix
    torus: TorusAlgebra
    source: str = "enumerated"
    vanishing_indices: Tuple[int, ...] = ()
    surviving: Tuple[int, ...] = ()
    mu: Optional[Tuple[int, ...]] = None
    elements: Tuple[AlgebraElement, ...] = field(default=(), repr=False)

    @property
    def rank(self) -> int:
        return self.matrix.rank

    @property
    def leaf_dimension(self) -> int:
        return self.rank

    def rep_dimension(self, l: int) -> int:
        """
        Raises:
            BadParametersError: If l is not prime to the elementary divisors of the stratum matrix
        """
        return rep_dimension_formula(self, l)


def _subset_label(names: Sequence[str], indices: Sequence[int]) -> str:
    return "{" + ",".join(names[k] for k in indices) + "}"


def enumerate_strata_qcommuting(spec: OreAlgebraSpec) -> List[Stratum]:
    """
    All strata of a q-commuting algebra.

    One stratum per subset of the polynomial generators set to zero, every surviving
    generator inverted. Subsets are ordered by size, then lexicographically.

    Args:
        spec: Algebra with every r_ij = 0

    Returns:
        2^n strata labelled by their vanishing sets

    Raises:
        NotQCommutingError: If some relation polynomial is nonzero
    """
    if not spec.is_q_commuting():
        (i, j), _ = spec.relations[0]
        raise NotQCommutingError(f"Automatic stratification needs r_ij = 0, but {spec.label(i, j)} is nonzero")
    S = IntSkewMatrix.from_rows(spec.S)
    strata = []
    for size in range(spec.n + 1):
        for vanishing in combinations(range(spec.n), size):
            surviving = tuple(k for k in range(spec.N) if k not in vanishing)
            matrix = S.restrict(surviving)
            names = [spec.names[k] for k in surviving]
            strata.append(Stratum(
                label=_subset_label(spec.names, vanishing),
                vanishing=tuple(spec.names[k] for k in vanishing),
                inverted=tuple(names),
                matrix=matrix,
                torus=TorusAlgebra(matrix, names=names),
                source="enumerated",
                vanishing_indices=vanishing,
                surviving=surviving,
                mu=mu_tuple(spec.n, vanishing),
            ))
    logger.debug(f"Enumerated {len(strata)} strata of {spec.name}")
    return strata


@dataclass
class StratumDeclaration:
    """User-declared stratum: elements set to zero and elements inverted."""
    label: str
    vanish: Tuple[AlgebraElement, ...] = ()
    invert: Tuple[AlgebraElement, ...] = ()


@dataclass
class StratumValidation:
    report: ValidationReport
    stratum: Optional[Stratum] = None

    @property
    def valid(self) -> bool:
        return self.report.valid and self.stratum is not None


def leading_monomial(element: AlgebraElement) -> Monomial:
    """Largest monomial by total degree, ties broken lexicographically from x_(N)."""
    return max(element.support(), key=lambda mono: (sum(mono), tuple(reversed(mono))))


def _check_weight_and_normal(algebra: OreAlgebra, element: AlgebraElement, role: str,
                             report: ValidationReport) -> None:
    if not algebra.is_weight_vector(element):
        report.add("not-weight-vector", f"{role} element {element} is not an H-weight vector")
    for k, g in enumerate(algebra.generators()):
        if algebra.q_commutation_exponent(element, g) is None:
            report.add("not-normal", f"{role} element {element} does not q-commute with {algebra.names[k]}")
            return


def validate_user_stratum(spec: OreAlgebraSpec, declaration: StratumDeclaration,
                          algebra: Optional[OreAlgebra] = None) -> StratumValidation:
    """
    Validate a declared stratum and derive its torus.

    Vanishing elements must be normal H-weight vectors (q-commuting with every
    generator). Inverted elements must be nonzero H-weight vectors that pairwise
    q-commute; the invertible generators of the algebra are appended when missing.
    Together the declared elements must account for all N generators through
    independent leading exponents, which gives the quotient-localization a PBW basis
    of the inverted elements.

    Args:
        spec: Algebra specification
        declaration: Elements of the algebra built from `spec`
        algebra: The OreAlgebra the elements live in (built from spec when None)

    Returns:
        StratumValidation with the stratum when every check passed; violations otherwise
    """
    algebra = algebra or OreAlgebra(spec)
    report = ValidationReport()
    vanish = list(declaration.vanish)
    invert = list(declaration.invert)
    for k in range(spec.n, spec.N):
        g = algebra.generator(k)
        if all(g != e for e in invert):
            invert.append(g)

    report.checks_run.append("nonzero")
    for element in vanish + invert:
        if element.is_zero() or element.is_scalar():
            report.add("trivial-element", f"Declared element {element} is a scalar")
    if not report.valid:
        return StratumValidation(report)

    report.checks_run.append("vanishing")
    for element in vanish:
        _check_weight_and_normal(algebra, element, "vanishing", report)

    report.checks_run.append("inverted")
    for element in invert:
        if not algebra.is_weight_vector(element):
            report.add("not-weight-vector", f"inverted element {element} is not an H-weight vector")
    exponents = {}
    for a in range(len(invert)):
        for b in range(a + 1, len(invert)):
            c = algebra.q_commutation_exponent(invert[a], invert[b])
            if c is None:
                report.add("not-q-commuting", f"inverted elements {invert[a]} and {invert[b]} do not q-commute")
            else:
                exponents[(a, b)] = c

    report.checks_run.append("disjoint")
    for v in vanish:
        for u in invert:
            if leading_monomial(v) == leading_monomial(u):
                report.add("not-disjoint", f"{u} is both inverted and vanishing")

    report.checks_run.append("pbw")
    leads = [list(leading_monomial(e)) for e in vanish + invert]
    if len(leads) != spec.N or abs(determinant(leads)) != 1:
        report.add("not-pbw", f"Leading exponents {leads} do not form a basis of Z^{spec.N}")

    if not report.valid:
        logger.debug(f"Stratum {declaration.label} rejected: {report.summary()}")
        return StratumValidation(report)

    size = len(invert)
    rows = [[0] * size for _ in range(size)]
    for (a, b), c in exponents.items():
        rows[a][b] = c
        rows[b][a] = -c
    matrix = IntSkewMatrix.from_rows(rows)
    names = [f"u{k + 1}" for k in range(size)]
    stratum = Stratum(
        label=declaration.label,
        vanishing=tuple(str(e) for e in vanish),
        inverted=tuple(str(e) for e in invert),
        matrix=matrix,
        torus=TorusAlgebra(matrix, names=names),
        source="declared",
        elements=tuple(invert),
    )
    return StratumValidation(report, stratum)
