import pytest

from orealg.algebra import OreAlgebra
from orealg.identities import identity_check, identity_names, root_assumptions, run_identity_suite
from orealg.spec import OreAlgebraSpec
from utils.errors import InvalidInputError, UnsupportedInputError


@pytest.fixture
def corrupted():
    """x1*x2 = q*x2*x1 + x2: breaks delta tau = q^s tau delta."""
    spec = OreAlgebraSpec.build(n=2, m=0, S=[[0, 1], [-1, 0]], skew_constants=[1, 0],
                                relations={(0, 1): {(0, 1): 1}}, W=[[-1, 1], [0, 0]], name="corrupted")
    return OreAlgebra(spec)


@pytest.fixture
def classical_weyl():
    spec = OreAlgebraSpec.build(n=2, m=0, S=[[0, 0], [0, 0]], relations={(0, 1): {(0, 0): 1}})
    return OreAlgebra(spec)


def test_registry():
    names = identity_names()
    assert names == sorted(names)
    assert "pbw-associativity" in names
    assert "condition3.2" in names


@pytest.mark.parametrize("l", [2, 3])
@pytest.mark.parametrize("seed", [0, 7])
def test_weyl_suite_passes(weyl, l, seed):
    outcomes = run_identity_suite(weyl, l, seed=seed, degree=2, cases=3)
    assert [o.name for o in outcomes] == identity_names()
    failures = [str(o) for o in outcomes if not o.passed]
    assert not failures
    assert [o.name for o in outcomes if o.skipped] == []
    assert all(o.cases > 0 for o in outcomes)


@pytest.mark.parametrize("l", [2, 5])
def test_plane_suite_passes(plane_algebra, l):
    outcomes = run_identity_suite(plane_algebra, l, seed=3, degree=2, cases=3)
    assert all(o.passed for o in outcomes), [str(o) for o in outcomes if not o.passed]
    assert [o.name for o in outcomes if o.skipped] == []


def test_commutation_failure_is_reported(corrupted):
    x2 = corrupted.generator(1)
    outcome = identity_check("condition3.2", corrupted, index=0, inputs=[x2])
    assert not outcome.passed
    assert outcome.cases == 1
    assert outcome.counterexample.endswith("at x1")


def test_explicit_inputs(weyl):
    x2 = weyl.generator(1)
    outcome = identity_check("eq2.2", weyl, l=3, index=0, inputs=[x2 ** 2])
    assert outcome.passed
    assert outcome.cases == 1


def test_unknown_identity(weyl):
    with pytest.raises(InvalidInputError):
        identity_check("no-such-identity", weyl, l=2)


def test_missing_root_order(weyl):
    with pytest.raises(UnsupportedInputError):
        identity_check("eq2.2", weyl)


def test_root_assumptions(weyl, classical_weyl):
    assert root_assumptions(weyl, 0, 3) is None
    assert "not central" in root_assumptions(classical_weyl, 0, 3)


def test_unsupported_identity_is_skipped_in_suite(classical_weyl):
    with pytest.raises(UnsupportedInputError):
        identity_check("lemma2.7", classical_weyl, l=3, index=0)
    outcomes = {o.name: o for o in run_identity_suite(classical_weyl, 3, names=["lemma2.7"], cases=2)}
    skipped = outcomes["lemma2.7"]
    assert skipped.passed
    assert skipped.skipped
    assert skipped.cases == 0
    assert str(skipped) == "lemma2.7: skipped"
    assert skipped.details[0].startswith("not applicable")


def test_progress_callback(weyl):
    calls = []
    run_identity_suite(weyl, 2, names=["condition3.2", "pbw-associativity"], cases=1,
                       progress=lambda: calls.append(1))
    assert len(calls) == 2
