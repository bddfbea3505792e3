"""
Quantum solvable algebra specifications.
Provides OreAlgebraSpec and the validation report listing every violated condition.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from intlat.smith import IntMatrix, to_int_matrix
from scalar.laurent import QLaurent
from utils.errors import FuelExhaustedError

# Configure logging
logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
RelationTerms = Tuple[Tuple[Monomial, QLaurent], ...]


@dataclass(frozen=True)
class OreAlgebraSpec:
    """
    Iterated q-skew extension with relations x_i x_j = q^(s_ij) x_j x_i + r_ij.

    Generators x_1..x_n are polynomial, x_(n+1)..x_(n+m) invertible. Indices are
    0-based. W holds the diagonal weights tau_i(x_j) = q^(w_ij) x_j.
    """
    n: int
    m: int
    S: IntMatrix
    W: IntMatrix
    skew_constants: Tuple[int, ...]
    relations: Tuple[Tuple[Tuple[int, int], RelationTerms], ...] = ()
    names: Tuple[str, ...] = ()
    name: str = "algebra"

    @classmethod
    def build(cls, n: int, m: int, S: Sequence[Sequence[int]], skew_constants: Sequence[int] = (),
              relations: Optional[Mapping[Tuple[int, int], Mapping[Sequence[int], object]]] = None,
              W: Optional[Sequence[Sequence[int]]] = None, names: Optional[Sequence[str]] = None,
              name: str = "algebra") -> "OreAlgebraSpec":
        """
        Convenience constructor.

        Args:
            n: Number of polynomial generators
            m: Number of invertible generators
            S: Exponent matrix rows
            skew_constants: s_1..s_n (zeros when omitted)
            relations: {(i, j): {monomial: coefficient}} with 0-based i < j
            W: Weight matrix (defaults to S)
            names: Generator names (defaults to x1..x(n+m))
            name: Label of the algebra

        Returns:
            Spec (not yet validated)
        """
        N = n + m
        table = []
        for (i, j), terms in sorted((relations or {}).items()):
            clean = {}
            for mono, coeff in terms.items():
                coeff = QLaurent.coerce(coeff)
                if not coeff.is_zero:
                    clean[tuple(int(e) for e in mono)] = coeff
            if clean:
                table.append(((int(i), int(j)), tuple(sorted(clean.items()))))
        return cls(
            n=n,
            m=m,
            S=to_int_matrix(S),
            W=to_int_matrix(W if W is not None else S),
            skew_constants=tuple(int(s) for s in skew_constants) if skew_constants else (0,) * n,
            relations=tuple(table),
            names=tuple(names) if names else tuple(f"x{k + 1}" for k in range(N)),
            name=name,
        )

    @property
    def N(self) -> int:
        return self.n + self.m

    def relation(self, i: int, j: int) -> Dict[Monomial, QLaurent]:
        for key, terms in self.relations:
            if key == (i, j):
                return dict(terms)
        return {}

    def relation_table(self) -> Dict[Tuple[int, int], Dict[Monomial, QLaurent]]:
        return {key: dict(terms) for key, terms in self.relations}

    def is_q_commuting(self) -> bool:
        return not self.relations

    def label(self, i: int, j: int) -> str:
        return f"r_{i + 1}{j + 1} ({self.names[i]}, {self.names[j]})"


@dataclass(frozen=True)
class Violation:
    """One failed condition. `relation` is 0-based when set."""
    code: str
    message: str
    relation: Optional[Tuple[int, int]] = None

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)
    checks_run: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, relation: Optional[Tuple[int, int]] = None) -> None:
        self.violations.append(Violation(code, message, relation))

    def summary(self) -> str:
        if self.valid:
            return f"valid ({len(self.checks_run)} checks)"
        return f"{len(self.violations)} violation(s): " + "; ".join(str(v) for v in self.violations)


def _check_shapes(spec: OreAlgebraSpec, report: ValidationReport) -> bool:
    report.checks_run.append("shape")
    ok = True
    N = spec.N
    if spec.n < 0 or spec.m < 0:
        report.add("shape", f"n={spec.n} and m={spec.m} must be nonnegative")
        return False
    for label, matrix in (("S", spec.S), ("W", spec.W)):
        if len(matrix) != N:
            report.add("shape", f"{label} has {len(matrix)} rows, expected {N}")
            ok = False
            continue
        for i, row in enumerate(matrix):
            if len(row) != N:
                report.add("shape", f"Row {i + 1} of {label} has {len(row)} entries, expected {N}")
                ok = False
    if len(spec.skew_constants) != spec.n:
        report.add("shape", f"{len(spec.skew_constants)} skew constants given, expected {spec.n}")
        ok = False
    if len(spec.names) != N:
        report.add("shape", f"{len(spec.names)} generator names given, expected {N}")
        ok = False
    return ok


def _check_skew(spec: OreAlgebraSpec, report: ValidationReport) -> None:
    report.checks_run.append("skew-symmetry")
    for i in range(spec.N):
        if spec.S[i][i] != 0:
            report.add("skew", f"s_{i + 1}{i + 1} = {spec.S[i][i]} is not zero")
        for j in range(i + 1, spec.N):
            if spec.S[i][j] != -spec.S[j][i]:
                report.add("skew", f"s_{i + 1}{j + 1} = {spec.S[i][j]} but s_{j + 1}{i + 1} = {spec.S[j][i]}")


def _check_relation_support(spec: OreAlgebraSpec, report: ValidationReport) -> bool:
    report.checks_run.append("relation-support")
    ok = True
    seen = set()
    for (i, j), terms in spec.relations:
        key = (i, j)
        if key in seen:
            report.add("relation", f"Relation ({i + 1}, {j + 1}) is given twice", key)
            ok = False
        seen.add(key)
        if not (0 <= i < j < spec.n):
            report.add("relation", f"Relation index ({i + 1}, {j + 1}) must satisfy 1 <= i < j <= n={spec.n}", key)
            ok = False
            continue
        for mono, _ in terms:
            if len(mono) != spec.N:
                report.add("relation", f"{spec.label(i, j)} has a monomial with {len(mono)} exponents", key)
                ok = False
                continue
            if any(mono[k] != 0 for k in range(i + 1)):
                report.add("relation", f"{spec.label(i, j)} involves generators of index <= {i + 1}; "
                                       f"it must lie in the subalgebra on x_{i + 2}..x_{spec.N}", key)
                ok = False
            if any(mono[k] < 0 for k in range(spec.n)):
                report.add("relation", f"{spec.label(i, j)} has a negative power of a polynomial generator", key)
                ok = False
    return ok


def _pairing(row: Sequence[int], mono: Monomial) -> int:
    return sum(w * t for w, t in zip(row, mono))


def _check_weights(spec: OreAlgebraSpec, report: ValidationReport) -> None:
    report.checks_run.append("weights")
    for i in range(spec.n):
        for j in range(i + 1, spec.N):
            if spec.W[i][j] != spec.S[i][j]:
                report.add("weights", f"tau_{i + 1}(x_{j + 1}) must be q^s_{i + 1}{j + 1} = q^{spec.S[i][j]}, "
                                      f"but w_{i + 1}{j + 1} = {spec.W[i][j]}")
    rows_with_relations = {i for (i, _), _ in spec.relations}
    for i in sorted(rows_with_relations):
        if spec.W[i][i] != -spec.skew_constants[i]:
            report.add("weights", f"w_{i + 1}{i + 1} = {spec.W[i][i]} but the extension of tau_{i + 1} "
                                  f"requires -s_{i + 1} = {-spec.skew_constants[i]}")


def _check_homogeneity(spec: OreAlgebraSpec, report: ValidationReport) -> None:
    report.checks_run.append("homogeneity")
    for (i, j), terms in spec.relations:
        for k in range(spec.N):
            expected = spec.W[k][i] + spec.W[k][j]
            for mono, _ in terms:
                got = _pairing(spec.W[k], mono)
                if got != expected:
                    report.add("homogeneity", f"{spec.label(i, j)} is not homogeneous for tau_{k + 1}: "
                                              f"weight {got} != {expected}", (i, j))
                    break


def _check_skew_derivation(spec: OreAlgebraSpec, report: ValidationReport) -> None:
    """delta_i tau_i = q^(s_i) tau_i delta_i on generators: w_ij = s_i + <W_i, t>."""
    report.checks_run.append("skew-derivation")
    for (i, j), terms in spec.relations:
        for mono, _ in terms:
            if spec.W[i][j] != spec.skew_constants[i] + _pairing(spec.W[i], mono):
                report.add("skew-derivation", f"delta_{i + 1} tau_{i + 1} != q^{spec.skew_constants[i]} "
                                              f"tau_{i + 1} delta_{i + 1} on x_{j + 1}", (i, j))
                break


def _check_overlaps(spec: OreAlgebraSpec, report: ValidationReport) -> None:
    """
    delta_i must respect the relations among x_(i+1)..x_N: for j < k both
    delta_i(x_k x_j) and q^(s_kj) (delta_i(x_j x_k) - delta_i(r_jk)) must agree.
    """
    from orealg.algebra import OreAlgebra

    report.checks_run.append("overlaps")
    algebra = OreAlgebra(spec)
    try:
        for i in range(spec.n):
            for j in range(i + 1, spec.N):
                xj = algebra.generator(j)
                for k in range(j + 1, spec.N):
                    xk = algebra.generator(k)
                    left = (algebra.apply_delta(i, xk) * xj
                            + algebra.apply_tau(i, xk) * algebra.apply_delta(i, xj))
                    rjk = algebra.element(spec.relation(j, k)) if j < spec.n else algebra.zero()
                    right = (algebra.apply_delta(i, xj) * xk + algebra.apply_tau(i, xj) * algebra.apply_delta(i, xk)
                             - algebra.apply_delta(i, rjk)).scale(QLaurent.q_power(spec.S[k][j]))
                    if left != right:
                        report.add("overlap", f"delta_{i + 1} is not compatible with the relation between "
                                              f"x_{j + 1} and x_{k + 1}", (j, k) if not rjk.is_zero() else None)
    except FuelExhaustedError as e:
        report.add("fuel", f"Rewriting did not terminate: {e}")


def validate_spec(spec: OreAlgebraSpec) -> ValidationReport:
    """
    Check every structural condition of a quantum solvable algebra.

    Args:
        spec: Candidate specification

    Returns:
        ValidationReport; violations are returned, never raised
    """
    report = ValidationReport()
    if not _check_shapes(spec, report):
        return report
    _check_skew(spec, report)
    support_ok = _check_relation_support(spec, report)
    _check_weights(spec, report)
    if support_ok:
        _check_homogeneity(spec, report)
        _check_skew_derivation(spec, report)
    if report.valid:
        _check_overlaps(spec, report)
    logger.debug(f"Validated {spec.name}: {report.summary()}")
    return report
