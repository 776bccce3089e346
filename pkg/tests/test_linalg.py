import random
from itertools import permutations

import pytest

from cnat.core import PermutationMatrix, compose, decompose
from cnat.enumeration import iter_cnats
from cnat.linalg import Sign, cnat_det, cnat_matrix, count_inversions, det_int, interleave_sign, perm_sign
from util import SIZE_FOUR, SIZE_TWO, cnat, random_permutation


class TestSign:
    def test_of_parity(self):
        assert Sign.of_parity(0) is Sign.POSITIVE
        assert Sign.of_parity(7) is Sign.NEGATIVE
        assert Sign.of_parity(-2) is Sign.POSITIVE

    def test_arithmetic(self):
        assert Sign.NEGATIVE * Sign.NEGATIVE is Sign.POSITIVE
        assert -Sign.POSITIVE is Sign.NEGATIVE
        assert Sign.NEGATIVE * 5 == -5
        assert 3 * Sign.NEGATIVE == -3


def test_perm_sign_examples():
    assert perm_sign(PermutationMatrix.identity(5)) is Sign.POSITIVE
    assert perm_sign(PermutationMatrix(2, (2, 1))) is Sign.NEGATIVE
    assert perm_sign(PermutationMatrix(3, (2, 3, 1))) is Sign.POSITIVE
    assert perm_sign(PermutationMatrix(4, (4, 3, 2, 1))) is Sign.POSITIVE


def test_merge_count_matches_naive():
    """Long inputs go through merge sort and must agree with pair counting."""
    rng = random.Random(7)
    for n in (65, 100, 257):
        values = list(range(n))
        rng.shuffle(values)
        naive = sum(1 for i in range(n) for j in range(i + 1, n) if values[i] > values[j])
        assert count_inversions(values) == naive


class TestDetInt:
    def test_examples(self):
        assert det_int([]) == 1
        assert det_int([[5]]) == 5
        assert det_int([[1, 2], [3, 4]]) == -2
        assert det_int([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 0
        assert det_int([[0, 1], [1, 0]]) == -1

    def test_pivot_swap(self):
        assert det_int([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
        assert det_int([[0, 2, 1], [3, 0, 0], [0, 0, 4]]) == -24

    def test_singular(self):
        assert det_int([[1, 1, 0], [1, 1, 0], [0, 0, 1]]) == 0
        assert det_int([[0, 0], [1, 1]]) == 0

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            det_int([[1, 2, 3], [4, 5, 6]])

    def test_permutation_matrices(self):
        """Determinant of every permutation matrix up to size 7 is its sign."""
        for n in range(1, 8):
            for mapping in permutations(range(1, n + 1)):
                p = PermutationMatrix(n, mapping)
                assert det_int(p.to_matrix()) == perm_sign(p)

    def test_multiplicative(self):
        rng = random.Random(2024)
        for _ in range(200):
            n = rng.randint(1, 12)
            p, q = random_permutation(n, rng), random_permutation(n, rng)
            assert perm_sign(p.compose(q)) == perm_sign(p) * perm_sign(q)

    def test_big_entries(self):
        m = [[10 ** 20, 1], [1, 10 ** 20]]
        assert det_int(m) == 10 ** 40 - 1


class TestCnatDet:
    def test_size_two(self):
        assert cnat_det(cnat(SIZE_TWO)) is Sign.NEGATIVE
        assert cnat_matrix(cnat(SIZE_TWO)) == [[1, 1], [1, 0]]

    def test_hand_built_size_four(self):
        assert cnat_det(cnat(SIZE_FOUR)) is Sign.POSITIVE
        assert det_int(cnat_matrix(cnat(SIZE_FOUR))) == 1

    def test_size_three_signs(self):
        signs = [int(cnat_det(c)) for c in iter_cnats(3)]
        assert signs == [1, -1, -1, 1]

    def test_leaf_matrix_matches_full_determinant(self):
        """The 0/1 determinant of every CNAT up to size 6 equals its leaf-matrix sign."""
        for n in range(1, 7):
            for c in iter_cnats(n):
                assert det_int(cnat_matrix(c)) == cnat_det(c)


def test_interleave_sign_property():
    """Composing multiplies the parts' determinants by the interleaving sign."""
    for n in range(2, 6):
        for c in iter_cnats(n):
            d = decompose(c)
            expected = cnat_det(d.top_part) * cnat_det(d.left_part) * interleave_sign(d.row_set, d.col_set)
            assert cnat_det(compose(d)) == expected


def test_interleave_sign_examples():
    assert interleave_sign((1,), (2,)) is Sign.NEGATIVE
    assert interleave_sign((1, 3), (2, 4)) is Sign.POSITIVE
    assert interleave_sign((1, 2), (2, 3)) is Sign.POSITIVE
