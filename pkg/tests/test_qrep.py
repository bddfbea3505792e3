import pytest

from conftest import fixture_path
from ingestion.characters import load_matrices_file
from qrep.clock_shift import clock_shift_block, embed, kron
from qrep.irreps import CentralCharacter, Rep, build_torus_irrep, direct_sum, rep_dimension_formula
from qrep.verification import are_isomorphic, central_scalar, commutant_dimension, intertwiner_space, verify_rep
from qtorus.torus import TorusAlgebra
from scalar.cyclotomic import CycScalar
from scalar.linalg import identity, matrices_equal, matrix_power, to_field_matrix
from utils.config import settings
from utils.errors import BadParametersError, TooLargeError

X_MATRIX = [[0, 0], [1, 0]]
Y_MATRIX = [[0, 1], [0, 0]]


def negated(m):
    return [[-v for v in row] for row in m]


def weyl_rep(weyl, x, y, l=2):
    return Rep(algebra=weyl, l=l, matrices=(to_field_matrix(x, l), to_field_matrix(y, l)))


class TestClockShift:
    def test_l_two(self):
        clock, shift = clock_shift_block(2, 1)
        assert matrices_equal(clock, to_field_matrix([[1, 0], [0, -1]], 2))
        assert matrices_equal(shift, to_field_matrix([[0, 1], [1, 0]], 2))

    @pytest.mark.parametrize("l, d", [(3, 1), (5, 2), (7, 3)])
    def test_commutation_and_powers(self, l, d):
        nu1, nu2 = CycScalar.epsilon(l) + 1, 2
        clock, shift = clock_shift_block(l, d, nu1, nu2)
        eps_d = CycScalar.root_power(l, d)
        assert matrices_equal(clock @ shift, (shift @ clock) * eps_d)
        assert matrices_equal(matrix_power(clock, l, l), identity(l, l) * nu1 ** l)
        assert matrices_equal(matrix_power(shift, l, l), identity(l, l) * nu2 ** l)

    def test_rejects_common_factor(self):
        with pytest.raises(BadParametersError):
            clock_shift_block(4, 2)

    def test_embed(self):
        clock, _ = clock_shift_block(3, 1)
        big = embed(clock, 1, [3, 3], 3)
        assert big.shape == (9, 9)
        assert matrices_equal(big, kron(identity(3, 3), clock))


class TestTorusIrreps:
    @pytest.mark.parametrize("l", [3, 5, 7])
    def test_plane(self, plane, l):
        rep = build_torus_irrep(plane, l)
        assert rep.dimension == l
        assert verify_rep(rep).passed
        assert rep.verified
        assert commutant_dimension(rep) == 1

    def test_cyclic4(self, cyclic4):
        rep = build_torus_irrep(cyclic4, 3)
        assert rep.dimension == 9
        assert verify_rep(rep).passed
        assert commutant_dimension(rep) == 1

    def test_cyclic4_dimension_at_five(self, cyclic4):
        assert rep_dimension_formula(cyclic4, 5) == 25
        rep = build_torus_irrep(cyclic4, 5)
        assert rep.dimension == 25
        assert verify_rep(rep).passed

    def test_nontrivial_character(self, cyclic4):
        l = 5
        eps = CycScalar.epsilon(l)
        character = CentralCharacter.build(l, [eps, 1, 1 + eps, 2])
        rep = build_torus_irrep(cyclic4, l, character)
        assert verify_rep(rep).passed
        y1 = cyclic4.monomial(rep.decomposition.y_exponents[0])
        assert central_scalar(rep, y1 ** l) == eps ** l

    def test_central_generators(self):
        torus = TorusAlgebra([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
        character = CentralCharacter.build(3, [1, 1], [7])
        rep = build_torus_irrep(torus, 3, character)
        assert rep.dimension == 3
        assert verify_rep(rep).passed
        z = torus.monomial(rep.decomposition.z_exponents[0])
        assert central_scalar(rep, z) == 7

    def test_zero_torus(self, zero_torus):
        rep = build_torus_irrep(zero_torus, 4, CentralCharacter.build(4, [], [2, 3]))
        assert rep.dimension == 1
        assert verify_rep(rep).passed

    def test_character_size(self, plane):
        with pytest.raises(BadParametersError):
            build_torus_irrep(plane, 3, CentralCharacter.build(3, [1]))

    def test_zero_character_value(self):
        with pytest.raises(BadParametersError):
            CentralCharacter.build(3, [0, 1])

    def test_not_prime_to_divisors(self):
        torus = TorusAlgebra([[0, 2], [-2, 0]])
        with pytest.raises(BadParametersError):
            build_torus_irrep(torus, 2)
        assert build_torus_irrep(torus, 3).dimension == 3

    def test_dimension_formula(self, plane, zero_torus):
        assert rep_dimension_formula(plane, 7) == 7
        assert rep_dimension_formula(zero_torus, 7) == 1

    def test_dimension_formula_checks_the_character(self, plane, zero_torus):
        assert rep_dimension_formula(plane, 3, CentralCharacter.build(3, [2, 1])) == 3
        assert rep_dimension_formula(zero_torus, 5, CentralCharacter.build(5, [], [2, 3])) == 1
        with pytest.raises(BadParametersError):
            rep_dimension_formula(plane, 3, CentralCharacter.build(3, [2]))


class TestUserMatrices:
    def test_weyl_matrices(self, weyl):
        rep = weyl_rep(weyl, X_MATRIX, Y_MATRIX)
        assert verify_rep(rep).passed
        assert commutant_dimension(rep) == 1

    def test_negating_both_generators(self, weyl):
        assert verify_rep(weyl_rep(weyl, negated(X_MATRIX), negated(Y_MATRIX))).passed

    def test_transposed_x_fails(self, weyl):
        result = verify_rep(weyl_rep(weyl, Y_MATRIX, Y_MATRIX))
        assert not result.passed
        assert result.failures[0].startswith("relation")

    def test_loaded_from_file(self, weyl):
        matrices = load_matrices_file(fixture_path("weyl_matrices.toml"), weyl.names, 2)
        rep = Rep(algebra=weyl, l=2, matrices=tuple(matrices))
        assert verify_rep(rep).passed

    def test_singular_invertible_generator(self, plane):
        rep = Rep(algebra=plane, l=2, matrices=(to_field_matrix([[0]], 2), to_field_matrix([[0]], 2)))
        result = verify_rep(rep)
        assert not result.passed
        assert any("singular" in f for f in result.failures)

    def test_shape_mismatch(self, weyl):
        with pytest.raises(BadParametersError):
            Rep(algebra=weyl, l=2, matrices=(to_field_matrix(X_MATRIX, 2),))
        with pytest.raises(BadParametersError):
            Rep(algebra=weyl, l=2, matrices=(to_field_matrix(X_MATRIX, 2), to_field_matrix([[1]], 2)))


class TestIntertwiners:
    def test_direct_sum(self, plane):
        rep = build_torus_irrep(plane, 3)
        total = direct_sum(rep, rep)
        assert total.dimension == 6
        assert verify_rep(total).passed
        assert commutant_dimension(total) == 4

    def test_same_character_is_isomorphic(self, plane):
        first = build_torus_irrep(plane, 3, CentralCharacter.build(3, [2, 1]))
        second = build_torus_irrep(plane, 3, CentralCharacter.build(3, [2, 1]))
        assert are_isomorphic(first, second)
        assert len(intertwiner_space(first, second)) == 1

    def test_different_characters(self, plane):
        first = build_torus_irrep(plane, 3, CentralCharacter.build(3, [1, 1]))
        second = build_torus_irrep(plane, 3, CentralCharacter.build(3, [2, 1]))
        assert not are_isomorphic(first, second)
        assert commutant_dimension(direct_sum(first, second)) == 2

    def test_commutant_bound(self, plane, monkeypatch):
        monkeypatch.setattr(settings, "COMMUTANT_MAX_UNKNOWNS", 4)
        with pytest.raises(TooLargeError):
            commutant_dimension(build_torus_irrep(plane, 3))
