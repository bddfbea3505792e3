"""
Algebra file reader and writer.
Provides loading of TOML algebra definitions into OreAlgebraSpec (with declared strata),
and serialization of a spec back to the same format.
"""

import logging
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import tomli_w
from pydantic import ValidationError

from ingestion.expressions import format_terms, parse_element, parse_normal_ordered
from models.schemas import (AlgebraDocument, AlgebraSection, RelationEntry, StratumEntry,
                            WeightsSection)
from orealg.algebra import OreAlgebra
from orealg.spec import OreAlgebraSpec
from strata.stratification import StratumDeclaration
from utils.errors import InvalidInputError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass
class AlgebraFile:
    """A loaded algebra file: the spec and the raw stratum declarations."""
    spec: OreAlgebraSpec
    document: AlgebraDocument
    path: Optional[str] = None
    _algebra: Optional[OreAlgebra] = field(default=None, repr=False)

    @property
    def algebra(self) -> OreAlgebra:
        if self._algebra is None:
            self._algebra = OreAlgebra(self.spec)
        return self._algebra

    def stratum_declarations(self) -> List[StratumDeclaration]:
        """
        Parse the declared strata into elements of the algebra.

        Raises:
            InvalidInputError: If an expression cannot be parsed
        """
        declarations = []
        for k, entry in enumerate(self.document.stratum):
            location = f"{self.path or '<string>'}: stratum {k + 1}"
            declarations.append(StratumDeclaration(
                label=entry.label or f"stratum{k + 1}",
                vanish=tuple(parse_element(text, self.algebra, location) for text in entry.vanish),
                invert=tuple(parse_element(text, self.algebra, location) for text in entry.invert),
            ))
        return declarations


def _format_validation_error(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        where = ".".join(str(p) for p in item.get("loc", ()))
        parts.append(f"{where}: {item.get('msg')}" if where else str(item.get("msg")))
    return "; ".join(parts)


def parse_document(data: Dict[str, Any], location: Optional[str] = None) -> AlgebraDocument:
    try:
        return AlgebraDocument.model_validate(data)
    except ValidationError as e:
        raise InvalidInputError(_format_validation_error(e), location) from e


def document_to_spec(document: AlgebraDocument, location: Optional[str] = None) -> OreAlgebraSpec:
    """
    Convert a validated document into a spec (1-based file indices become 0-based).

    Raises:
        InvalidInputError: If a relation expression cannot be parsed or is not normal-ordered
    """
    section = document.algebra
    N = section.n + section.m
    names = section.names or [f"x{k + 1}" for k in range(N)]
    relations = {}
    for entry in document.relation:
        where = f"{location or '<string>'}: relation ({entry.i}, {entry.j})"
        relations[(entry.i - 1, entry.j - 1)] = parse_normal_ordered(entry.r, names, invertible_from=section.n,
                                                                     location=where)
    return OreAlgebraSpec.build(
        n=section.n,
        m=section.m,
        S=section.S,
        skew_constants=section.skew_constants or [0] * section.n,
        relations=relations,
        W=document.weights.W if document.weights is not None else None,
        names=names,
        name=section.name,
    )


def parse_algebra_text(text: str, location: Optional[str] = None) -> AlgebraFile:
    """
    Parse algebra file contents.

    Raises:
        InvalidInputError: On TOML syntax errors, schema violations or bad expressions
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise InvalidInputError(f"Invalid TOML: {e}", location) from e
    document = parse_document(data, location)
    spec = document_to_spec(document, location)
    return AlgebraFile(spec=spec, document=document, path=location)


def load_algebra_file(path: str) -> AlgebraFile:
    """
    Load an algebra file from disk.

    Args:
        path: Path to a UTF-8 TOML file

    Returns:
        AlgebraFile with the (not yet validated) spec

    Raises:
        InvalidInputError: If the file is missing or malformed
    """
    if not os.path.isfile(path):
        raise InvalidInputError("File not found", path)
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    loaded = parse_algebra_text(text, location=path)
    logger.info(f"Loaded algebra '{loaded.spec.name}' (n={loaded.spec.n}, m={loaded.spec.m}) from {path}")
    return loaded


def spec_to_document(spec: OreAlgebraSpec, strata: Optional[List[StratumEntry]] = None) -> AlgebraDocument:
    return AlgebraDocument(
        algebra=AlgebraSection(
            n=spec.n,
            m=spec.m,
            S=[list(row) for row in spec.S],
            skew_constants=list(spec.skew_constants),
            name=spec.name,
            names=list(spec.names),
        ),
        weights=WeightsSection(W=[list(row) for row in spec.W]),
        relation=[RelationEntry(i=i + 1, j=j + 1, r=format_terms(dict(terms), spec.names))
                  for (i, j), terms in spec.relations],
        stratum=list(strata or []),
    )


def dumps_algebra(spec: OreAlgebraSpec, strata: Optional[List[StratumEntry]] = None) -> str:
    """TOML text for a spec; relation coefficients must be rational."""
    document = spec_to_document(spec, strata)
    data = document.model_dump(exclude_none=True)
    if not data["relation"]:
        data.pop("relation")
    if not data["stratum"]:
        data.pop("stratum")
    return tomli_w.dumps(data)


def save_algebra_file(spec: OreAlgebraSpec, path: str, strata: Optional[List[StratumEntry]] = None) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_algebra(spec, strata))
    logger.info(f"Saved algebra '{spec.name}' to {path}")
