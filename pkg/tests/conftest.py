"""
Shared fixtures: the quantum Weyl algebra, the quantum plane, a full-rank 4x4 torus
and an isolated run log.
"""

import os

import pytest

from orealg.algebra import OreAlgebra
from orealg.spec import OreAlgebraSpec
from qtorus.torus import TorusAlgebra, quantum_plane
from utils.config import settings

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")

CYCLIC4_S = [
    [0, 1, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, -1, 0],
]

MIXED4_S = [
    [0, 2, 0, 1],
    [-2, 0, 0, 0],
    [0, 0, 0, 3],
    [-1, 0, -3, 0],
]


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@pytest.fixture
def weyl_spec() -> OreAlgebraSpec:
    """x1*x2 = q*x2*x1 + 1."""
    return OreAlgebraSpec.build(
        n=2,
        m=0,
        S=[[0, 1], [-1, 0]],
        skew_constants=[1, 0],
        relations={(0, 1): {(0, 0): 1}},
        W=[[-1, 1], [0, 0]],
        name="quantum-weyl",
    )


@pytest.fixture
def weyl(weyl_spec) -> OreAlgebra:
    return OreAlgebra(weyl_spec)


@pytest.fixture
def plane_spec() -> OreAlgebraSpec:
    return OreAlgebraSpec.build(n=2, m=0, S=[[0, 1], [-1, 0]], name="quantum-plane")


@pytest.fixture
def plane_algebra(plane_spec) -> OreAlgebra:
    return OreAlgebra(plane_spec)


@pytest.fixture
def commutative_spec() -> OreAlgebraSpec:
    return OreAlgebraSpec.build(n=2, m=0, S=[[0, 0], [0, 0]], name="commutative")


@pytest.fixture
def plane() -> TorusAlgebra:
    return quantum_plane()


@pytest.fixture
def cyclic4() -> TorusAlgebra:
    return TorusAlgebra(CYCLIC4_S)


@pytest.fixture
def zero_torus() -> TorusAlgebra:
    return TorusAlgebra([[0, 0], [0, 0]])


@pytest.fixture(autouse=True)
def isolated_run_log(tmp_path, monkeypatch):
    """Keep CLI run events out of the working tree."""
    path = tmp_path / "logs" / "runs.log"
    monkeypatch.setattr(settings, "RUN_LOG_PATH", str(path))
    return path
