import random

import pytest

from conftest import CYCLIC4_S, MIXED4_S
from intlat.alternating import IntSkewMatrix, alternating_normal_form, congruence_transform
from intlat.congruence import NotLiftable, kernel_basis, solve_and_lift_congruence, suffix_submatrix
from intlat.minors import iter_minors, minor_coprimality
from intlat.smith import (coprime_to_elementary_divisors, determinant, elementary_divisors, hermite_normal_form,
                          int_matmul, mat_vec, smith_normal_form, solve_integer_system, unimodular_inverse)
from utils.config import settings
from utils.errors import BadParametersError, TooLargeError


def random_skew(rng: random.Random, m: int, bound: int = 3):
    s = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            s[i][j] = rng.randint(-bound, bound)
            s[j][i] = -s[i][j]
    return s


def assert_smith(a):
    U, D, V = smith_normal_form(a)
    assert [list(r) for r in int_matmul(int_matmul(U, a), V)] == [list(r) for r in D]
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    diagonal = [D[i][i] for i in range(min(len(D), len(D[0])))]
    nonzero = [d for d in diagonal if d]
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    for i, row in enumerate(D):
        for j, v in enumerate(row):
            if i != j:
                assert v == 0


class TestSmith:
    def test_identity(self):
        form = smith_normal_form([[1, 0], [0, 1]])
        assert [list(r) for r in form.D] == [[1, 0], [0, 1]]

    def test_already_diagonal(self):
        assert smith_normal_form([[2, 0], [0, 4]]).elementary_divisors == (2, 4)

    def test_plane(self):
        form = smith_normal_form([[0, 1], [-1, 0]])
        assert form.elementary_divisors == (1, 1)
        assert_smith([[0, 1], [-1, 0]])

    def test_reconstruction_on_random_matrices(self):
        rng = random.Random(11)
        for _ in range(30):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            a = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
            assert_smith(a)

    def test_cyclic4_divisors(self):
        assert elementary_divisors(CYCLIC4_S) == (1, 1, 2, 2)
        assert coprime_to_elementary_divisors(CYCLIC4_S, 3)
        assert not coprime_to_elementary_divisors(CYCLIC4_S, 2)


class TestLattices:
    def test_hermite_normal_form_is_canonical(self):
        first = hermite_normal_form([[2, 0], [0, 3]])
        second = hermite_normal_form([[2, 3], [4, 3], [0, 3]])
        assert first == second

    def test_hermite_drops_zero_vectors(self):
        assert hermite_normal_form([[0, 0]]) == ()

    def test_solve_integer_system(self):
        a = [[2, 4], [0, 3]]
        x = solve_integer_system(a, [6, 3])
        assert mat_vec(a, x) == (6, 3)
        assert solve_integer_system([[2]], [3]) is None

    def test_unimodular_inverse(self):
        w = [[2, 1], [1, 1]]
        w_inverse = unimodular_inverse(w)
        assert [list(r) for r in int_matmul(w, w_inverse)] == [[1, 0], [0, 1]]
        with pytest.raises(ValueError):
            unimodular_inverse([[2, 0], [0, 1]])

    def test_kernel_of_nonsingular(self):
        assert kernel_basis([[0, 1], [-1, 0]]) == ()

    def test_kernel_of_zero(self):
        assert [list(b) for b in kernel_basis([[0, 0], [0, 0]])] == [[1, 0], [0, 1]]

    def test_kernel_with_central_generator(self):
        assert [list(b) for b in kernel_basis([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])] == [[0, 0, 1]]

    def test_suffix_submatrix(self):
        assert [list(r) for r in suffix_submatrix(CYCLIC4_S, 2)] == [[0, 1], [1, 0], [0, 1], [-1, 0]]


class TestCongruenceLifting:
    def test_trivial_residue(self):
        assert solve_and_lift_congruence([[0, 1], [-1, 0]], 5, (0, 0)) == (0, 0)

    def test_not_liftable(self):
        result = solve_and_lift_congruence([[0, 2], [-2, 0]], 2, (1, 0))
        assert isinstance(result, NotLiftable)
        assert result.l == 2

    def test_zero_matrix_lifts_residue(self):
        assert solve_and_lift_congruence([[0, 0], [0, 0]], 3, (1, 2)) == (1, 2)

    def test_rejects_non_solution(self):
        with pytest.raises(BadParametersError):
            solve_and_lift_congruence([[0, 1], [-1, 0]], 5, (1, 0))

    def test_every_residue_solution_lifts_when_admissible(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(20):
            m = rng.randint(1, 3)
            s = random_skew(rng, m)
            for l in range(2, 8):
                if not minor_coprimality(s, l):
                    continue
                for j in range(m):
                    s_j = suffix_submatrix(s, j)
                    for n in _residues(m - j, l):
                        if any(v % l for v in mat_vec(s_j, n)):
                            continue
                        lifted = solve_and_lift_congruence(s_j, l, n)
                        assert not isinstance(lifted, NotLiftable), (s, l, j, n)
                        assert not any(mat_vec(s_j, lifted))
                        assert all((a - b) % l == 0 for a, b in zip(lifted, n))
                        checked += 1
        assert checked > 0


def _residues(size: int, l: int):
    if size == 0:
        yield ()
        return
    for head in range(l):
        for tail in _residues(size - 1, l):
            yield (head,) + tail


class TestAlternatingForm:
    def test_plane(self):
        form = alternating_normal_form(IntSkewMatrix.from_rows([[0, 1], [-1, 0]]))
        assert form.d == (1,)
        assert form.t == 0

    def test_zero(self):
        form = alternating_normal_form(IntSkewMatrix.zero(3))
        assert form.r == 0
        assert form.t == 3

    @pytest.mark.parametrize("rows", [MIXED4_S, CYCLIC4_S, [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]])
    def test_block_shape(self, rows):
        s = IntSkewMatrix.from_rows(rows)
        form = alternating_normal_form(s)
        assert congruence_transform(s, form.W) == form.block_matrix()
        assert abs(determinant(form.W)) == 1
        expected = sorted(abs(d) for d in elementary_divisors(rows))
        assert sorted(abs(d) for dk in form.d for d in (dk, dk)) == expected

    def test_random_reconstruction(self):
        rng = random.Random(5)
        for _ in range(25):
            s = IntSkewMatrix.from_rows(random_skew(rng, rng.randint(1, 5)))
            form = alternating_normal_form(s)
            assert congruence_transform(s, form.W) == form.block_matrix()
            assert 2 * form.r == s.rank
            for x, y in zip(form.d, form.d[1:]):
                assert y % x == 0

    def test_rejects_non_skew(self):
        with pytest.raises(ValueError):
            IntSkewMatrix.from_rows([[0, 1], [1, 0]])
        with pytest.raises(ValueError):
            IntSkewMatrix.from_rows([[1, 0], [0, 0]])

    def test_pairing_and_restrict(self):
        s = IntSkewMatrix.from_rows(CYCLIC4_S)
        assert s.pairing((1, 0, 0, 0), (0, 1, 0, 0)) == 1
        assert s.restrict([0, 2]).is_zero()
        assert s.rank == 4


class TestMinors:
    def test_unimodular(self):
        for l in (2, 3, 10):
            assert minor_coprimality([[0, 1], [-1, 0]], l)

    def test_witness(self):
        check = minor_coprimality([[0, 2], [-2, 0]], 2)
        assert not check
        assert check.witness.value == 2

    def test_large_entries_coprime(self):
        assert minor_coprimality([[0, 6], [-6, 0]], 5)

    def test_full_minor(self):
        # rows (1, 3), columns (2, 4) give the minor 2
        check = minor_coprimality(CYCLIC4_S, 2)
        assert not check
        assert check.witness.value % 2 == 0

    def test_minor_values(self):
        rows = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
        minors = list(iter_minors(rows))
        assert len(minors) == 9 + 9 + 1
        assert minors[-1].value == 18
        first_two = next(m for m in minors if m.rows == (0, 1) and m.cols == (0, 1))
        assert first_two.value == 5

    def test_limit(self, monkeypatch):
        monkeypatch.setattr(settings, "MINOR_ENUMERATION_LIMIT", 2)
        with pytest.raises(TooLargeError):
            minor_coprimality(CYCLIC4_S, 3)
