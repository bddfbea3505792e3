"""
Pydantic schemas for algebra files, character files and JSON reports.
"""

from datetime import datetime
from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from scalar.cyclotomic import CycScalar
from utils.config import settings


class CheckStatus(str, Enum):
    """Possible outcomes of a reported check."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    ASSUMED = "assumed"


# Algebra files

class AlgebraSection(BaseModel):
    """The [algebra] table."""
    n: int = Field(ge=0)
    m: int = Field(default=0, ge=0)
    S: List[List[int]]
    skew_constants: List[int] = []
    name: str = "algebra"
    names: List[str] = []

    @model_validator(mode="after")
    def check_shapes(self) -> "AlgebraSection":
        N = self.n + self.m
        if len(self.S) != N or any(len(row) != N for row in self.S):
            raise ValueError(f"S must be a {N}x{N} matrix (n + m = {N})")
        if self.skew_constants and len(self.skew_constants) != self.n:
            raise ValueError(f"skew_constants needs {self.n} entries, got {len(self.skew_constants)}")
        if self.names and len(self.names) != N:
            raise ValueError(f"names needs {N} entries, got {len(self.names)}")
        return self


class WeightsSection(BaseModel):
    """The optional [weights] table."""
    W: List[List[int]]


class RelationEntry(BaseModel):
    """One [[relation]] table: x_i x_j = q^(s_ij) x_j x_i + r (1-based i < j)."""
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    r: str

    @model_validator(mode="after")
    def check_order(self) -> "RelationEntry":
        if self.i >= self.j:
            raise ValueError(f"relation indices must satisfy i < j, got i={self.i}, j={self.j}")
        return self


class StratumEntry(BaseModel):
    """One [[stratum]] table: expressions set to zero and expressions inverted."""
    label: str = ""
    vanish: List[str] = []
    invert: List[str] = []


class AlgebraDocument(BaseModel):
    """A parsed algebra file."""
    algebra: AlgebraSection
    weights: Optional[WeightsSection] = None
    relation: List[RelationEntry] = []
    stratum: List[StratumEntry] = []

    @model_validator(mode="after")
    def check_references(self) -> "AlgebraDocument":
        N = self.algebra.n + self.algebra.m
        if self.weights is not None:
            if len(self.weights.W) != N or any(len(row) != N for row in self.weights.W):
                raise ValueError(f"W must be a {N}x{N} matrix")
        seen = set()
        for entry in self.relation:
            if entry.j > N:
                raise ValueError(f"relation ({entry.i}, {entry.j}) refers to a generator beyond x{N}")
            if (entry.i, entry.j) in seen:
                raise ValueError(f"relation ({entry.i}, {entry.j}) is given twice")
            seen.add((entry.i, entry.j))
        return self


class CharacterSection(BaseModel):
    """The [character] table; values are polynomials in e (= eps) with rational coefficients."""
    nu: List[str]
    alpha: List[str] = []
    stratum: Optional[str] = None


class CharacterDocument(BaseModel):
    character: CharacterSection


class MatricesDocument(BaseModel):
    """A [matrices] table mapping generator names to square matrices of e-polynomials."""
    matrices: Dict[str, List[List[Union[int, str]]]]

    @model_validator(mode="after")
    def check_square(self) -> "MatricesDocument":
        sizes = set()
        for name, rows in self.matrices.items():
            if not rows or any(len(row) != len(rows) for row in rows):
                raise ValueError(f"matrix for {name} is not square")
            sizes.add(len(rows))
        if len(sizes) > 1:
            raise ValueError(f"matrices have different sizes {sorted(sizes)}")
        return self


# Reports

class ExactScalar(BaseModel):
    """Element of Q(eps) in the power basis."""
    l: int
    coeffs: List[str]

    @classmethod
    def from_cyc(cls, value: CycScalar) -> "ExactScalar":
        return cls(**value.to_serializable())


class ReportBase(BaseModel):
    schema_version: str = Field(default_factory=lambda: settings.REPORT_SCHEMA_VERSION)
    timestamp: str = Field(default_factory=lambda: datetime.now().isoformat())
    command: str
    algebra: str


class ViolationRecord(BaseModel):
    code: str
    message: str
    relation: Optional[List[int]] = None


class ValidationResult(ReportBase):
    valid: bool
    checks_run: List[str]
    violations: List[ViolationRecord] = []


class CenterResult(ReportBase):
    l: int
    generic: List[List[int]]
    at_eps: List[List[int]]
    oracle: CheckStatus = CheckStatus.SKIPPED
    d: List[int] = []
    t: int = 0
    rep_dimension: Optional[int] = None


class ClauseRecord(BaseModel):
    name: str
    status: CheckStatus
    detail: str = ""


class AdmissibilityRecord(BaseModel):
    l: int
    admissible: bool
    clauses: List[ClauseRecord]
    witness_minor: Optional[int] = None


class AdmissibilityResult(ReportBase):
    verdicts: List[AdmissibilityRecord]


class RepRecord(BaseModel):
    dimension: int
    status: CheckStatus
    failures: List[str] = []
    checks: int = 0
    commutant_dimension: Optional[int] = None
    nu: List[ExactScalar] = []
    alpha: List[ExactScalar] = []


class StratumRecord(BaseModel):
    label: str
    source: str
    mu: Optional[List[int]] = None
    vanishing: List[str]
    inverted: List[str]
    matrix: List[List[int]]
    rank: int
    leaf_dimension: int
    rep_dimension: Optional[int] = None
    admissible: bool
    poisson_rank: Optional[int] = None
    consistent: bool
    rep: Optional[RepRecord] = None
    notes: List[str] = []

    @field_validator("rank")
    @classmethod
    def rank_is_even(cls, value: int) -> int:
        if value % 2:
            raise ValueError(f"rank of a skew-symmetric matrix is even, got {value}")
        return value


class StrataResult(ReportBase):
    l: int
    admissibility: AdmissibilityRecord
    strata: List[StratumRecord]


class IdentityRecord(BaseModel):
    name: str
    status: CheckStatus
    cases: int
    counterexample: Optional[str] = None
    details: List[str] = []


class VerifyResult(ReportBase):
    l: int
    seed: int
    degree: int
    cases: int
    suite: str
    outcomes: List[IdentityRecord]

    @property
    def checked(self) -> int:
        return sum(1 for o in self.outcomes if o.status != CheckStatus.SKIPPED)

    @property
    def passed(self) -> bool:
        """No identity failed and at least one actually ran."""
        return self.checked > 0 and all(o.status != CheckStatus.FAIL for o in self.outcomes)


class RepResult(ReportBase):
    l: int
    stratum: str
    rep: RepRecord
    matrices: Dict[str, List[List[ExactScalar]]] = {}
