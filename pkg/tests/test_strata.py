import pytest

from orealg.spec import OreAlgebraSpec
from qrep.irreps import CentralCharacter, rep_dimension_formula
from scalar.laurent import QLaurent
from strata.admissibility import ClauseStatus, admissible, admissible_range
from strata.report import collect_strata, stratum_report
from strata.stratification import (StratumDeclaration, enumerate_strata_qcommuting, leading_monomial, mu_tuple,
                                   validate_user_stratum)
from utils.errors import BadParametersError, NotQCommutingError

Q = QLaurent.q_power(1)


@pytest.fixture
def q2_torus_spec():
    return OreAlgebraSpec.build(n=0, m=2, S=[[0, 2], [-2, 0]], name="q2-torus")


@pytest.fixture
def half_spec():
    """Polynomial x1, invertible x2."""
    return OreAlgebraSpec.build(n=1, m=1, S=[[0, 1], [-1, 0]], name="half")


def weyl_u(weyl):
    """(q - 1) x2 x1 + 1, normal with x2 u = q^-1 u x2."""
    x1, x2 = weyl.generators()
    return (x2 * x1).scale(Q - 1) + weyl.one()


class TestMu:
    def test_nothing_vanishes(self):
        assert mu_tuple(2, ()) == (0, 0, 0)

    def test_everything_vanishes(self):
        assert mu_tuple(2, (0, 1)) == (2,)

    def test_runs_are_read_from_the_top(self):
        assert mu_tuple(2, (1,)) == (1, 0)
        assert mu_tuple(3, (0, 2)) == (1, 1)

    def test_sum(self):
        for vanishing in [(), (0,), (1, 3), (0, 1, 2, 3)]:
            mu = mu_tuple(4, vanishing)
            assert len(mu) - 1 + sum(mu) == 4


class TestEnumeration:
    def test_plane(self, plane_spec):
        strata = enumerate_strata_qcommuting(plane_spec)
        assert [s.label for s in strata] == ["{}", "{x1}", "{x2}", "{x1,x2}"]
        assert [s.rank for s in strata] == [2, 0, 0, 0]
        assert strata[1].surviving == (1,)
        assert strata[3].torus.M == 0

    def test_torus_has_one_stratum(self, q2_torus_spec):
        strata = enumerate_strata_qcommuting(q2_torus_spec)
        assert len(strata) == 1
        assert strata[0].rank == 2

    def test_invertible_generators_always_survive(self, half_spec):
        strata = enumerate_strata_qcommuting(half_spec)
        assert len(strata) == 2
        assert strata[1].inverted == ("x2",)

    def test_weyl_needs_declarations(self, weyl_spec):
        with pytest.raises(NotQCommutingError):
            enumerate_strata_qcommuting(weyl_spec)
        with pytest.raises(NotQCommutingError):
            collect_strata(weyl_spec)


class TestDeclaredStrata:
    def test_invert_y(self, weyl_spec, weyl):
        declaration = StratumDeclaration("invert-y", invert=(weyl.generator(1), weyl_u(weyl)))
        validation = validate_user_stratum(weyl_spec, declaration, algebra=weyl)
        assert validation.valid, validation.report.summary()
        stratum = validation.stratum
        assert [list(r) for r in stratum.matrix.entries] == [[0, -1], [1, 0]]
        assert stratum.rep_dimension(2) == 2
        assert rep_dimension_formula(stratum, 2, CentralCharacter.build(2, [1, 2])) == 2
        assert stratum.source == "declared"

    def test_vanish_u(self, weyl_spec, weyl):
        declaration = StratumDeclaration("vanish-u", vanish=(weyl_u(weyl),), invert=(weyl.generator(1),))
        validation = validate_user_stratum(weyl_spec, declaration, algebra=weyl)
        assert validation.valid, validation.report.summary()
        assert validation.stratum.torus.M == 1
        assert validation.stratum.rep_dimension(3) == 1

    def test_non_commuting_inverted_elements(self, weyl_spec, weyl):
        declaration = StratumDeclaration("both", invert=tuple(weyl.generators()))
        validation = validate_user_stratum(weyl_spec, declaration, algebra=weyl)
        assert not validation.valid
        assert "not-q-commuting" in {v.code for v in validation.report.violations}

    def test_vanishing_element_must_be_a_weight_vector(self, weyl_spec, weyl):
        x1, x2 = weyl.generators()
        declaration = StratumDeclaration("shifted", vanish=(x1 + weyl.one(),), invert=(x2,))
        validation = validate_user_stratum(weyl_spec, declaration, algebra=weyl)
        assert not validation.valid
        assert validation.stratum is None

    def test_scalar_is_rejected(self, weyl_spec, weyl):
        declaration = StratumDeclaration("scalar", invert=(weyl.scalar(2), weyl.generator(1)))
        validation = validate_user_stratum(weyl_spec, declaration, algebra=weyl)
        assert [v.code for v in validation.report.violations] == ["trivial-element"]

    def test_leading_exponents_must_span(self, weyl_spec, weyl):
        declaration = StratumDeclaration("short", invert=(weyl.generator(1),))
        validation = validate_user_stratum(weyl_spec, declaration, algebra=weyl)
        assert "not-pbw" in {v.code for v in validation.report.violations}

    def test_leading_exponents_must_be_unimodular(self, plane_spec, plane_algebra):
        x1, x2 = plane_algebra.generators()
        declaration = StratumDeclaration("index-two", invert=(x1 * x1, x2))
        validation = validate_user_stratum(plane_spec, declaration, algebra=plane_algebra)
        assert not validation.valid
        assert [v.code for v in validation.report.violations] == ["not-pbw"]

        declaration = StratumDeclaration("both", invert=(x1, x2))
        assert validate_user_stratum(plane_spec, declaration, algebra=plane_algebra).valid

    def test_leading_monomial(self, weyl):
        assert leading_monomial(weyl_u(weyl)) == (1, 1)

    def test_collect_rejects_invalid_declarations(self, weyl_spec, weyl):
        declaration = StratumDeclaration("both", invert=tuple(weyl.generators()))
        with pytest.raises(ValueError):
            collect_strata(weyl_spec, [declaration], algebra=weyl)


class TestAdmissibility:
    def test_plane(self, plane_spec):
        verdict = admissible(plane_spec, 3)
        assert verdict.admissible
        assert [c.name for c in verdict.clauses] == ["lambda", "minors", "skew-constants", "good-reduction"]
        assert verdict.clauses[-1].status == ClauseStatus.ASSUMED

    def test_even_minor(self, q2_torus_spec):
        verdict = admissible(q2_torus_spec, 2)
        assert not verdict.admissible
        assert [c.name for c in verdict.failing()] == ["minors"]
        assert verdict.witness_minor.value == 2
        assert "not admissible" in str(verdict)

    def test_odd_root(self, q2_torus_spec):
        assert admissible(q2_torus_spec, 3).admissible

    def test_weyl(self, weyl_spec):
        assert admissible(weyl_spec, 2).admissible

    def test_lambda_failure(self):
        spec = OreAlgebraSpec.build(n=2, m=0, S=[[0, 0], [0, 0]], relations={(0, 1): {(0, 0): 1}})
        verdict = admissible(spec, 3)
        assert [c.name for c in verdict.failing()] == ["lambda"]

    def test_skew_constant(self):
        spec = OreAlgebraSpec.build(n=2, m=0, S=[[0, 1], [-1, 0]], skew_constants=[2, 0])
        assert [c.name for c in admissible(spec, 4).failing()] == ["skew-constants"]
        assert admissible(spec, 3).admissible

    def test_range(self, q2_torus_spec):
        verdicts = admissible_range(q2_torus_spec, 2, 6)
        assert [v.l for v in verdicts] == [2, 3, 4, 5, 6]
        assert [v.admissible for v in verdicts] == [False, True, False, True, False]

    def test_bad_parameters(self, plane_spec):
        with pytest.raises(BadParametersError):
            admissible(plane_spec, 1)
        with pytest.raises(BadParametersError):
            admissible_range(plane_spec, 5, 3)


class TestReport:
    def test_plane(self, plane_spec):
        result = stratum_report(plane_spec, 3)
        assert [s.rep_dimension for s in result.strata] == [3, 1, 1, 1]
        assert [s.poisson_rank for s in result.strata] == [2, 0, 0, 0]
        assert all(s.consistent and s.admissible for s in result.strata)
        assert result.admissibility.admissible
        assert result.strata[0].mu == [0, 0, 0]

    def test_plane_with_reps(self, plane_spec):
        calls = []
        result = stratum_report(plane_spec, 3, build_reps=True, progress=lambda: calls.append(1))
        assert len(calls) == 4
        assert [s.rep.dimension for s in result.strata] == [3, 1, 1, 1]
        assert all(s.rep.commutant_dimension == 1 for s in result.strata)

    def test_weyl_declared(self, weyl_spec, weyl):
        x2 = weyl.generator(1)
        declarations = [
            StratumDeclaration("invert-y", invert=(x2, weyl_u(weyl))),
            StratumDeclaration("vanish-u", vanish=(weyl_u(weyl),), invert=(x2,)),
        ]
        strata = collect_strata(weyl_spec, declarations, algebra=weyl)
        result = stratum_report(weyl_spec, 2, strata=strata, build_reps=True)
        assert [s.rep_dimension for s in result.strata] == [2, 1]
        assert all(s.consistent for s in result.strata)
        assert result.strata[0].mu is None

    def test_divisor_shared_with_l(self, q2_torus_spec):
        result = stratum_report(q2_torus_spec, 2)
        record = result.strata[0]
        assert record.rep_dimension is None
        assert not record.admissible
        assert record.notes
