from fractions import Fraction

import pytest

from scalar.cyclotomic import CycScalar, as_cyc, cyclotomic_modulus
from scalar.laurent import QLaurent, eval_at_eps, exact_div_q_minus_eps, q_adic_valuation
from scalar.linalg import identity, inverse, matrices_equal, matrix_power, matrix_rank, nullspace, to_field_matrix
from scalar.qnumbers import q_binomial, q_binomial_from_factorials, q_factorial, q_int
from utils.errors import FieldMismatchError, NotDivisibleError

Q = QLaurent.q_power(1)


@pytest.mark.parametrize("l, expected", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
])
def test_cyclotomic_modulus(l, expected):
    assert cyclotomic_modulus(l) == expected


def test_cyclotomic_modulus_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_modulus(0)


class TestCycScalar:
    def test_epsilon_has_order_l(self):
        for l in (2, 3, 5, 6, 7):
            eps = CycScalar.epsilon(l)
            assert eps ** l == 1
            assert all(eps ** k != 1 for k in range(1, l))

    def test_sum_of_roots_vanishes(self):
        for l in (3, 5, 7):
            total = sum((CycScalar.root_power(l, k) for k in range(l)), CycScalar.zero(l))
            assert total.is_zero()

    def test_inverse(self):
        x = CycScalar(5, [1, 2, 0, 3])
        assert x * x.inverse() == 1
        assert x / x == 1
        assert (1 / x) * x == 1

    def test_inverse_values(self):
        eps = CycScalar.epsilon(3)
        # 1 + eps = -eps^2 when l = 3
        assert (1 + eps).inverse() == -eps
        y = CycScalar(7, [Fraction(1, 2), 0, Fraction(-3, 4), 1, 0, 2])
        assert y * y.inverse() == 1

    def test_negative_powers(self):
        eps = CycScalar.epsilon(7)
        assert eps ** -1 == CycScalar.root_power(7, 6)
        assert eps ** -3 * eps ** 3 == 1

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            CycScalar.zero(3).inverse()

    def test_epsilon_is_minus_one_for_l_two(self):
        assert CycScalar.epsilon(2) == -1
        assert CycScalar.epsilon(2).is_rational()

    def test_rational_coercion(self):
        eps = CycScalar.epsilon(3)
        assert (eps + 1) - eps == 1
        assert Fraction(1, 2) * (2 * eps) == eps
        assert (eps * eps + eps + 1).is_zero()

    def test_rationals_move_between_fields(self):
        assert CycScalar.one(3) + CycScalar.epsilon(5) == 1 + CycScalar.epsilon(5)
        assert as_cyc(CycScalar.from_rational(3, 2), 5) == 2

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            CycScalar.epsilon(3) + CycScalar.epsilon(5)
        with pytest.raises(FieldMismatchError):
            as_cyc(CycScalar.epsilon(3), 5)

    def test_serializable_form(self):
        x = CycScalar(5, [Fraction(1, 2), 0, -3])
        data = x.to_serializable()
        assert data == {"l": 5, "coeffs": ["1/2", "0", "-3", "0"]}
        assert CycScalar.from_serializable(data) == x

    def test_rational_value(self):
        assert CycScalar.from_rational(4, Fraction(3, 4)).rational_value() == Fraction(3, 4)
        with pytest.raises(ValueError):
            CycScalar.epsilon(4).rational_value()


class TestQInt:
    def test_s_zero_is_plain_integer(self):
        assert q_int(5, 0) == 5

    def test_three(self):
        assert q_int(3, 1) == QLaurent({0: 1, 1: 1, 2: 1})

    def test_vanishes_at_eps(self):
        for l in (2, 3, 5, 6):
            assert eval_at_eps(q_int(l, 1), l).is_zero()

    def test_negative_n(self):
        # (-2)_q = -(q^-1 + q^-2)
        assert q_int(-2, 1) == QLaurent({-2: -1, -1: -1})


class TestQBinomial:
    def test_k_zero(self):
        assert q_binomial(4, 0, 1) == 1

    def test_two_one(self):
        assert q_binomial(2, 1, 1) == QLaurent({0: 1, 1: 1})

    def test_four_two(self):
        expected = QLaurent({0: 1, 2: 1}) * QLaurent({0: 1, 1: 1, 2: 1})
        assert q_binomial(4, 2, 1) == expected

    @pytest.mark.parametrize("n", range(0, 7))
    @pytest.mark.parametrize("s", [1, 2, -1])
    def test_pascal_matches_factorial_ratio(self, n, s):
        for k in range(n + 1):
            assert q_binomial(n, k, s) == q_binomial_from_factorials(n, k, s)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            q_binomial(2, 3, 1)

    def test_factorial(self):
        assert q_factorial(3, 1) == QLaurent({0: 1, 1: 1}) * QLaurent({0: 1, 1: 1, 2: 1})
        assert q_factorial(0, 1) == 1


class TestLaurent:
    def test_eval_constant(self):
        assert eval_at_eps(QLaurent.constant(7), 5) == 7

    def test_eval_q(self):
        assert eval_at_eps(Q, 5) == CycScalar.epsilon(5)

    def test_eval_q_to_the_l(self):
        assert eval_at_eps(QLaurent.q_power(5), 5) == 1
        assert eval_at_eps(QLaurent.q_power(-5), 5) == 1

    def test_divide_q_minus_eps(self):
        eps = CycScalar.epsilon(3)
        p = QLaurent({1: 1, 0: -eps})
        assert exact_div_q_minus_eps(p, 3) == 1

    def test_divide_q_squared_minus_one(self):
        assert exact_div_q_minus_eps(QLaurent({2: 1, 0: -1}), 2) == QLaurent({1: 1, 0: -1})

    def test_not_divisible(self):
        with pytest.raises(NotDivisibleError):
            exact_div_q_minus_eps(QLaurent({1: 1, 0: 1}), 3)
        with pytest.raises(NotDivisibleError):
            exact_div_q_minus_eps(QLaurent.constant(2), 3)

    def test_division_round_trip(self):
        l = 5
        eps = CycScalar.epsilon(l)
        factor = QLaurent({1: 1, 0: -eps})
        p = QLaurent({-1: 2, 0: 1, 3: Fraction(1, 3)})
        assert exact_div_q_minus_eps(p * factor, l) == p

    def test_valuation(self):
        # (q^3 - 1)^2 has a double root at each primitive cube root
        p = QLaurent({3: 1, 0: -1}) ** 2
        assert q_adic_valuation(p, 3) == 2
        assert q_adic_valuation(p, 2) == 0

    def test_exact_divide(self):
        a = QLaurent({0: 1, 1: 1})
        b = QLaurent({-1: 2, 2: 1})
        assert (a * b).exact_divide(a) == b
        with pytest.raises(NotDivisibleError):
            QLaurent({0: 1, 2: 1}).exact_divide(a)

    def test_units(self):
        u = QLaurent.q_power(-3, Fraction(2, 5))
        assert u * u.inverse() == 1
        with pytest.raises(ValueError):
            QLaurent({0: 1, 1: 1}).inverse()


class TestLinalg:
    def test_inverse(self):
        l = 3
        eps = CycScalar.epsilon(l)
        m = to_field_matrix([[1, eps], [eps, 2]], l)
        assert matrices_equal(m @ inverse(m, l), identity(2, l))

    def test_singular(self):
        m = to_field_matrix([[1, 2], [2, 4]], 3)
        with pytest.raises(ValueError):
            inverse(m, 3)
        assert matrix_rank(m, 3) == 1

    def test_nullspace(self):
        l = 5
        eps = CycScalar.epsilon(l)
        m = to_field_matrix([[1, eps, 0], [0, 0, 1]], l)
        basis = nullspace(m, l)
        assert len(basis) == 1
        v = basis[0]
        assert all((m[i, 0] * v[0] + m[i, 1] * v[1] + m[i, 2] * v[2]).is_zero() for i in range(2))

    def test_matrix_power(self):
        l = 4
        shift = to_field_matrix([[0, 1], [1, 0]], l)
        assert matrices_equal(matrix_power(shift, 2, l), identity(2, l))
        assert matrices_equal(matrix_power(shift, -1, l), shift)
