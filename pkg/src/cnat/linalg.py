from enum import IntEnum
from typing import Sequence

from .core import Cnat, PermutationMatrix, leaf_matrix

# Above this size inversions are counted by merge sort.
_NAIVE_INVERSIONS_MAX = 64


class Sign(IntEnum):
    NEGATIVE = -1
    POSITIVE = 1

    @classmethod
    def of_parity(cls, value: int) -> "Sign":
        """(-1) ** value."""
        return cls.NEGATIVE if value % 2 else cls.POSITIVE

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return int(self) * other

    __rmul__ = __mul__

    def __neg__(self) -> "Sign":
        return Sign(-int(self))


def _merge_count(values: list[int]) -> tuple[list[int], int]:
    if len(values) <= 1:
        return values, 0
    mid = len(values) // 2
    left, a = _merge_count(values[:mid])
    right, b = _merge_count(values[mid:])

    merged = []
    count = a + b
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            count += len(left) - i
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, count


def count_inversions(values: Sequence[int]) -> int:
    """Number of pairs i < j with values[i] > values[j]."""
    n = len(values)
    if n > _NAIVE_INVERSIONS_MAX:
        return _merge_count(list(values))[1]
    return sum(1 for i in range(n) for j in range(i + 1, n) if values[i] > values[j])


def perm_sign(p: PermutationMatrix) -> Sign:
    return Sign.of_parity(count_inversions(p.mapping))


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """
    Exact determinant of a square integer matrix by fraction-free
    (Bareiss) elimination. Every division is exact, so no rationals appear.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("Matrix must be square")
    if n == 0:
        return 1

    sign = 1
    previous_pivot = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0

        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // previous_pivot
        previous_pivot = pivot

    return sign * m[n - 1][n - 1]


def cnat_matrix(cnat: Cnat) -> list[list[int]]:
    """0/1 matrix of a CNAT, dotted cells set to 1."""
    n = cnat.n
    return [[int((r, c) in cnat.dots) for c in range(1, n + 1)] for r in range(1, n + 1)]


def cnat_det(cnat: Cnat) -> Sign:
    """Determinant of a CNAT, read off its leaf matrix."""
    return perm_sign(leaf_matrix(cnat))


def interleave_sign(row_set: Sequence[int], col_set: Sequence[int]) -> Sign:
    """
    Sign picked up when a sub-CNAT is placed into row_set x col_set and its
    partner into the complementary rows and columns: moving both blocks back
    to block-diagonal position takes sum(row_set) + sum(col_set) - k(k+1)
    adjacent swaps, and k(k+1) is even.
    """
    return Sign.of_parity(sum(row_set) + sum(col_set))
