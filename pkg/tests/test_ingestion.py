from fractions import Fraction

import pytest

from conftest import fixture_path
from ingestion.algebra_file import dumps_algebra, load_algebra_file, parse_algebra_text, save_algebra_file
from ingestion.characters import load_character_file, parse_character_text, parse_matrices_text
from ingestion.expressions import format_terms, parse_element, parse_normal_ordered, parse_scalar
from models.schemas import StratumEntry
from orealg.spec import validate_spec
from scalar.cyclotomic import CycScalar
from scalar.laurent import QLaurent
from utils.errors import InvalidInputError

Q = QLaurent.q_power(1)


class TestExpressions:
    def test_products_are_multiplied_out(self, weyl):
        x1, x2 = weyl.generators()
        assert parse_element("x1*x2", weyl) == x1 * x2
        assert parse_element("x2*x1", weyl) == x2 * x1
        assert parse_element("(q - 1)*x2*x1 + 1", weyl) == (x2 * x1).scale(Q - 1) + weyl.one()

    def test_laurent_coefficients(self, plane):
        u1 = plane.generator(0)
        assert parse_element("q^-2*u1/3", plane) == u1.scale(QLaurent.q_power(-2, Fraction(1, 3)))

    def test_negative_powers(self, plane):
        u1 = plane.generator(0)
        assert parse_element("u1^-1", plane) * u1 == plane.one()

    def test_negative_power_of_polynomial_generator(self, weyl):
        with pytest.raises(InvalidInputError):
            parse_element("x1^-1", weyl)

    def test_unknown_symbol(self, weyl):
        with pytest.raises(InvalidInputError) as info:
            parse_element("x3 + 1", weyl, location="here")
        assert str(info.value).startswith("here:")

    def test_syntax_error(self, weyl):
        with pytest.raises(InvalidInputError):
            parse_element("x1 *", weyl)
        with pytest.raises(InvalidInputError):
            parse_element("", weyl)

    def test_normal_ordered(self):
        terms = parse_normal_ordered("q*x1*x3^2 + 2", ["x1", "x2", "x3"])
        assert terms == {(1, 0, 2): Q, (0, 0, 0): QLaurent.constant(2)}

    def test_normal_order_is_enforced(self):
        with pytest.raises(InvalidInputError):
            parse_normal_ordered("x2*x1", ["x1", "x2"])

    def test_cancelling_terms(self):
        assert parse_normal_ordered("x1 - x1", ["x1"]) == {}

    def test_format_terms_reads_back(self):
        names = ["x1", "x2", "x3"]
        terms = {(1, 0, 2): QLaurent({-1: Fraction(1, 2), 1: 3}), (0, 0, 0): QLaurent.constant(-4)}
        assert parse_normal_ordered(format_terms(terms, names), names) == terms

    def test_scalar(self):
        eps = CycScalar.epsilon(5)
        assert parse_scalar("1 - e^2/2", 5) == 1 - Fraction(1, 2) * eps * eps
        assert parse_scalar("3", 7) == 3
        assert parse_scalar("e^-1", 5) == eps ** -1

    def test_scalar_rejects_other_symbols(self):
        with pytest.raises(InvalidInputError):
            parse_scalar("q", 3)
        with pytest.raises(InvalidInputError):
            parse_scalar("sqrt(2)", 3)


class TestAlgebraFiles:
    def test_weyl(self, weyl_spec):
        loaded = load_algebra_file(fixture_path("weyl.toml"))
        assert loaded.spec == weyl_spec
        assert validate_spec(loaded.spec).valid

    def test_stratum_declarations(self):
        loaded = load_algebra_file(fixture_path("weyl.toml"))
        declarations = loaded.stratum_declarations()
        assert [d.label for d in declarations] == ["invert-y", "vanish-u"]
        x2 = loaded.algebra.generator(1)
        assert declarations[0].invert[0] == x2
        assert declarations[1].vanish[0] == declarations[0].invert[1]

    def test_weights_default_to_exponents(self):
        loaded = load_algebra_file(fixture_path("quantum_plane.toml"))
        assert loaded.spec.W == loaded.spec.S
        assert loaded.spec.is_q_commuting()

    def test_corrupted_loads_but_fails_validation(self):
        loaded = load_algebra_file(fixture_path("weyl_corrupted.toml"))
        report = validate_spec(loaded.spec)
        assert "homogeneity" in {v.code for v in report.violations}

    def test_malformed(self):
        with pytest.raises(InvalidInputError) as info:
            load_algebra_file(fixture_path("malformed.toml"))
        assert "malformed.toml" in str(info.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidInputError):
            load_algebra_file(str(tmp_path / "absent.toml"))

    def test_invalid_toml(self):
        with pytest.raises(InvalidInputError):
            parse_algebra_text("[algebra\nn = 1")

    def test_relation_index_order(self):
        text = """
[algebra]
n = 2
S = [[0, 0], [0, 0]]

[[relation]]
i = 2
j = 1
r = "1"
"""
        with pytest.raises(InvalidInputError):
            parse_algebra_text(text)

    def test_round_trip(self, weyl_spec):
        assert parse_algebra_text(dumps_algebra(weyl_spec)).spec == weyl_spec

    def test_save_with_strata(self, weyl_spec, tmp_path):
        path = tmp_path / "out" / "weyl.toml"
        save_algebra_file(weyl_spec, str(path), strata=[StratumEntry(label="invert-y", invert=["x2"])])
        loaded = load_algebra_file(str(path))
        assert loaded.spec == weyl_spec
        assert loaded.document.stratum[0].invert == ["x2"]


class TestCharacterFiles:
    def test_weyl_character(self):
        character, stratum = load_character_file(fixture_path("weyl_character.toml"), 2)
        assert stratum == "invert-y"
        assert character.nu == (1, 2)
        assert character.alpha == ()

    def test_cyclotomic_values(self):
        character, stratum = load_character_file(fixture_path("cyclic4_character.toml"), 5)
        eps = CycScalar.epsilon(5)
        assert stratum is None
        assert character.nu == (eps, 1, 1 + eps, 2)

    def test_zero_value(self):
        with pytest.raises(InvalidInputError):
            parse_character_text('[character]\nnu = ["0", "1"]', 3)

    def test_weyl_matrices(self):
        with open(fixture_path("weyl_matrices.toml"), encoding="utf-8") as f:
            matrices = parse_matrices_text(f.read(), ["x1", "x2"], 2)
        assert [m.shape for m in matrices] == [(2, 2), (2, 2)]
        assert matrices[0][1, 0] == 1

    def test_matrices_with_cyclotomic_entries(self):
        matrices = parse_matrices_text('[matrices]\nu1 = [["e"]]\nu2 = [[2]]', ["u1", "u2"], 3)
        assert matrices[0][0, 0] == CycScalar.epsilon(3)

    def test_missing_generator(self):
        with pytest.raises(InvalidInputError):
            parse_matrices_text("[matrices]\nx1 = [[1]]", ["x1", "x2"], 2)

    def test_unknown_generator(self):
        with pytest.raises(InvalidInputError):
            parse_matrices_text("[matrices]\nx1 = [[1]]\nx2 = [[1]]\ny = [[1]]", ["x1", "x2"], 2)

    def test_non_square(self):
        with pytest.raises(InvalidInputError):
            parse_matrices_text("[matrices]\nx1 = [[1, 0]]\nx2 = [[1, 0]]", ["x1", "x2"], 2)
