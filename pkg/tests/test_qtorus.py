import random

import pytest

from conftest import MIXED4_S
from intlat.minors import minor_coprimality
from qtorus.center import brute_force_center, center_at_eps, center_generic, torus_decompose
from qtorus.torus import TorusAlgebra, quantum_plane
from scalar.laurent import QLaurent
from utils.config import settings
from utils.errors import TooLargeError

THIRD_CENTRAL = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]


def random_skew(rng, m, bound=3):
    s = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            s[i][j] = rng.randint(-bound, bound)
            s[j][i] = -s[i][j]
    return s


class TestMultiplication:
    def test_unit(self, plane):
        a = plane.random_element(seed=1, maxdeg=3)
        assert plane.one() * a == a
        assert a * plane.one() == a

    def test_reordering(self, plane):
        u1, u2 = plane.generators()
        assert u2 * u1 == (u1 * u2).scale(QLaurent.q_power(-1))
        assert u1 * u2 == plane.monomial((1, 1))

    def test_inverse_monomial(self, cyclic4):
        a = (2, -1, 0, 3)
        product = cyclic4.monomial(a) * cyclic4.monomial_inverse(a)
        assert product == cyclic4.one()
        neg = tuple(-x for x in a)
        raw = cyclic4.monomial(a) * cyclic4.monomial(neg)
        assert raw == cyclic4.scalar(QLaurent.q_power(cyclic4.cocycle(a, neg)))

    def test_negative_powers(self, plane):
        u1 = plane.generator(0)
        assert u1 ** -2 * u1 ** 2 == plane.one()

    def test_associativity(self, cyclic4):
        for seed in range(15):
            a = cyclic4.random_element(seed=seed, maxdeg=3)
            b = cyclic4.random_element(seed=seed + 100, maxdeg=3)
            c = cyclic4.random_element(seed=seed + 200, maxdeg=3)
            assert (a * b) * c == a * (b * c)

    def test_commutation_pairing(self):
        rng = random.Random(2)
        for _ in range(20):
            torus = TorusAlgebra(random_skew(rng, 3))
            a = tuple(rng.randint(-2, 2) for _ in range(3))
            b = tuple(rng.randint(-2, 2) for _ in range(3))
            left = torus.monomial(a) * torus.monomial(b)
            right = torus.monomial(b) * torus.monomial(a)
            assert left == right.scale(QLaurent.q_power(torus.commutation_exponent(a, b)))

    def test_q_commutation_exponent(self, plane):
        u1, u2 = plane.generators()
        assert plane.q_commutation_exponent(u1, u2) == 1
        assert plane.q_commutation_exponent(u1 + plane.one(), u2) is None

    def test_defining_relations_hold(self, cyclic4):
        for relation in cyclic4.defining_relations():
            total = cyclic4.zero()
            for coeff, word in relation.terms:
                total = total + cyclic4.evaluate_word(word).scale(coeff)
            assert total.is_zero(), relation.label

    def test_random_element_is_deterministic(self, plane):
        assert plane.random_element(seed=4, maxdeg=3) == plane.random_element(seed=4, maxdeg=3)
        assert plane.random_element(seed=4, maxdeg=0).is_scalar()
        assert plane.random_element(seed=9, maxdeg=3).degree() <= 3

    def test_random_element_is_never_zero(self, plane, weyl):
        # two scalar terms from the pool cancel when they are 1 and -1
        for seed in range(200):
            assert not plane.random_element(seed=seed, maxdeg=0, max_terms=2).is_zero()
            assert not plane.random_element(seed=seed, maxdeg=2, support=[]).is_zero()
            assert not weyl.random_element(seed=seed, maxdeg=1, max_terms=2).is_zero()

    def test_quantum_plane_is_cached(self):
        assert quantum_plane(1) is quantum_plane(1)
        assert quantum_plane(2).S.entries == ((0, 2), (-2, 0))


class TestCenter:
    def test_generic_plane(self, plane):
        assert center_generic(plane).basis == ()

    def test_generic_zero(self, zero_torus):
        assert [list(b) for b in center_generic(zero_torus).basis] == [[1, 0], [0, 1]]

    def test_generic_third_central(self):
        assert [list(b) for b in center_generic(TorusAlgebra(THIRD_CENTRAL)).basis] == [[0, 0, 1]]

    def test_at_eps_plane(self, plane):
        lattice = center_at_eps(plane, 3)
        assert [list(b) for b in lattice.basis] == [[3, 0], [0, 3]]
        assert lattice.contains((6, -3))
        assert not lattice.contains((1, 0))

    def test_at_eps_zero(self, zero_torus):
        assert [list(b) for b in center_at_eps(zero_torus, 4).basis] == [[1, 0], [0, 1]]

    def test_at_eps_large_entries(self):
        torus = TorusAlgebra([[0, 6], [-6, 0]])
        assert [list(b) for b in center_at_eps(torus, 5).basis] == [[5, 0], [0, 5]]
        # l = 3 divides 6: everything is central
        assert [list(b) for b in center_at_eps(torus, 3).basis] == [[1, 0], [0, 1]]

    def test_oracle_examples(self, plane, zero_torus):
        assert [list(b) for b in brute_force_center(plane, 3).basis] == [[3, 0], [0, 3]]
        assert [list(b) for b in brute_force_center(zero_torus, 2).basis] == [[1, 0], [0, 1]]
        third = TorusAlgebra(THIRD_CENTRAL)
        assert [list(b) for b in brute_force_center(third, 5).basis] == [[5, 0, 0], [0, 5, 0], [0, 0, 1]]

    def test_oracle_agrees_on_random_matrices(self):
        rng = random.Random(20)
        compared = 0
        for _ in range(20):
            torus = TorusAlgebra(random_skew(rng, rng.randint(1, 3)))
            for l in range(2, 8):
                if not minor_coprimality(torus.S.entries, l):
                    continue
                assert center_at_eps(torus, l).basis == brute_force_center(torus, l).basis
                compared += 1
        assert compared > 0

    def test_oracle_bounds(self, plane, monkeypatch):
        monkeypatch.setattr(settings, "BRUTE_FORCE_MAX_L", 5)
        with pytest.raises(TooLargeError):
            brute_force_center(plane, 7)


class TestDecomposition:
    def test_plane(self, plane):
        decomposition = torus_decompose(plane)
        assert decomposition.d == (1,)
        assert decomposition.t == 0
        y1, y2 = decomposition.y_generators()
        assert plane.q_commutation_exponent(y1, y2) == 1

    def test_zero(self, zero_torus):
        decomposition = torus_decompose(zero_torus)
        assert decomposition.r == 0
        assert len(decomposition.z_generators()) == 2

    @pytest.mark.parametrize("rows", [MIXED4_S, THIRD_CENTRAL])
    def test_hyperbolic_pairs_and_center(self, rows):
        torus = TorusAlgebra(rows)
        decomposition = torus_decompose(torus)
        ys = decomposition.y_generators()
        for k, d in enumerate(decomposition.d):
            assert torus.q_commutation_exponent(ys[2 * k], ys[2 * k + 1]) == d
        for a in range(len(ys)):
            for b in range(len(ys)):
                if a // 2 != b // 2:
                    assert torus.q_commutation_exponent(ys[a], ys[b]) == 0
        for z in decomposition.z_generators():
            assert all(torus.q_commutation_exponent(z, g) == 0 for g in torus.generators())
        assert 2 * decomposition.r + decomposition.t == torus.M

    def test_y_coordinates(self, cyclic4):
        decomposition = torus_decompose(cyclic4)
        for k, exponent in enumerate(decomposition.y_exponents):
            expected = tuple(1 if j == k else 0 for j in range(cyclic4.M))
            assert decomposition.to_y_coordinates(exponent) == expected
