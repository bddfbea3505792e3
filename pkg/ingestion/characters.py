"""
Character file reader.
Provides loading of central characters (nu and alpha values as polynomials in e = eps)
and of explicit generator matrices for representation checks.
"""

import logging
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from ingestion.expressions import parse_scalar
from models.schemas import CharacterDocument, MatricesDocument
from qrep.irreps import CentralCharacter
from scalar.linalg import to_field_matrix
from utils.errors import BadParametersError, InvalidInputError

# Configure logging
logger = logging.getLogger(__name__)


def parse_character_text(text: str, l: int, location: Optional[str] = None) -> Tuple[CentralCharacter, Optional[str]]:
    """
    Parse character file contents.

    Args:
        text: TOML with a [character] table
        l: Root order the values live at
        location: Used in error messages

    Returns:
        (CentralCharacter, stratum label or None)

    Raises:
        InvalidInputError: On malformed input or zero values
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise InvalidInputError(f"Invalid TOML: {e}", location) from e
    try:
        document = CharacterDocument.model_validate(data)
    except ValidationError as e:
        raise InvalidInputError(str(e), location) from e
    section = document.character
    nu = [parse_scalar(v, l, location) for v in section.nu]
    alpha = [parse_scalar(v, l, location) for v in section.alpha]
    try:
        character = CentralCharacter.build(l, nu, alpha)
    except BadParametersError as e:
        raise InvalidInputError(str(e), location) from e
    return character, section.stratum


def load_character_file(path: str, l: int) -> Tuple[CentralCharacter, Optional[str]]:
    """
    Raises:
        InvalidInputError: If the file is missing or malformed
    """
    if not os.path.isfile(path):
        raise InvalidInputError("File not found", path)
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    character, stratum = parse_character_text(text, l, location=path)
    logger.info(f"Loaded character with {len(character.nu)} nu and {len(character.alpha)} alpha values from {path}")
    return character, stratum


def parse_matrices_text(text: str, names: Sequence[str], l: int, location: Optional[str] = None) -> List[np.ndarray]:
    """
    Parse a [matrices] table into one matrix per generator, in generator order.

    Raises:
        InvalidInputError: On malformed input, or if a generator has no matrix or an
            unknown name is given
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise InvalidInputError(f"Invalid TOML: {e}", location) from e
    try:
        document = MatricesDocument.model_validate(data)
    except ValidationError as e:
        raise InvalidInputError(str(e), location) from e
    unknown = sorted(set(document.matrices) - set(names))
    missing = [name for name in names if name not in document.matrices]
    if unknown or missing:
        raise InvalidInputError(f"Matrices must be given for exactly {list(names)} "
                                f"(unknown {unknown}, missing {missing})", location)
    return [
        to_field_matrix([[parse_scalar(str(v), l, location) for v in row] for row in document.matrices[name]], l)
        for name in names
    ]


def load_matrices_file(path: str, names: Sequence[str], l: int) -> List[np.ndarray]:
    if not os.path.isfile(path):
        raise InvalidInputError("File not found", path)
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    return parse_matrices_text(text, names, l, location=path)
