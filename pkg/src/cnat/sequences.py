"""
Exact evaluation of the CNAT counting sequences.

All arrays returned here are indexed by n, with index 0 left as a 0
placeholder, so ``t_seq(8)[8]`` is T_8. Values are Python integers and never
overflow.
"""
from dataclasses import dataclass
from functools import cache
from math import comb


@dataclass(frozen=True)
class ParityCount:
    """Number of k-subsets of {1..n} with even and with odd element sum."""
    n: int
    k: int
    even: int
    odd: int

    def __post_init__(self):
        if self.even + self.odd != comb(self.n, self.k):
            raise ValueError(f"Parity counts for ({self.n}, {self.k}) do not add up to C(n, k)")

    @property
    def diff(self) -> int:
        return self.even - self.odd


@dataclass(frozen=True)
class SeqTable:
    max_n: int
    t: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        for name in ("t", "a", "b", "d"):
            if len(getattr(self, name)) != self.max_n + 1:
                raise ValueError(f"Column {name} must hold entries 0..{self.max_n}")
        for n in range(1, self.max_n + 1):
            if self.a[n] < 0 or self.b[n] < 0:
                raise ValueError(f"Negative count at n={n}")
            if self.t[n] != self.a[n] + self.b[n]:
                raise ValueError(f"T_{n} != A_{n} + B_{n}")
            if self.d[n] != self.a[n] - self.b[n]:
                raise ValueError(f"D_{n} != A_{n} - B_{n}")


def binomial(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"binomial({n}, {k}) needs 0 <= k <= n")
    return comb(n, k)


@cache
def eo_row(n: int) -> tuple[ParityCount, ...]:
    """Parity counts of {1..n} for every k = 0..n, from one DP pass over the items."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")

    # table[j] = [even, odd] counts of j-subsets of the items seen so far
    table = [[0, 0] for _ in range(n + 1)]
    table[0][0] = 1
    for item in range(1, n + 1):
        flips = item % 2
        for j in range(item, 0, -1):
            even, odd = table[j - 1]
            if flips:
                even, odd = odd, even
            table[j][0] += even
            table[j][1] += odd

    return tuple(ParityCount(n, k, even, odd) for k, (even, odd) in enumerate(table))


def eo_counts(n: int, k: int) -> ParityCount:
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"eo_counts({n}, {k}) needs 0 <= k <= n")
    return eo_row(n)[k]


def eo_diff_closed(m: int, j: int) -> int:
    """
    Closed form of e - o for j-subsets of {1..m}, m = 2n - 1 odd.
    Pairing 1<->2, 3<->4, ... cancels every subset that splits a pair; the
    survivors take whole pairs and all have the same sum parity.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and positive, got {m}")
    if not 0 <= j <= m:
        raise ValueError(f"j must lie in 0..{m}, got {j}")

    n = (m + 1) // 2
    k = j // 2
    sign = -1 if (k + j % 2) % 2 else 1
    return sign * comb(n - 1, k)


# T_n at index n, extended bottom-up on demand
_T_TABLE = [0, 1]


def _t_values(max_n: int) -> list[int]:
    t = _T_TABLE
    for n in range(len(t), max_n + 1):
        t.append(sum(comb(n - 1, k - 1) * comb(n - 1, k) * t[k] * t[n - k] for k in range(1, n)))
    return t[:max_n + 1]


def t_seq(max_n: int) -> list[int]:
    """Total number of CNATs of each size."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    return _t_values(max_n)


def ab_seq(max_n: int) -> tuple[list[int], list[int]]:
    """Numbers of CNATs with determinant +1 (A) and -1 (B)."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")

    a, b = [0, 1], [0, 0]
    for n in range(2, max_n + 1):
        row = eo_row(n - 1)
        a_n = b_n = 0
        for k in range(1, n):
            e1, o1 = row[k - 1].even, row[k - 1].odd
            e2, o2 = row[k].even, row[k].odd
            # interleavings that keep / flip the product of the two determinants
            keep = e1 * e2 + o1 * o2
            flip = e1 * o2 + o1 * e2
            positive = a[k] * a[n - k] + b[k] * b[n - k]
            negative = a[k] * b[n - k] + b[k] * a[n - k]
            a_n += positive * keep + negative * flip
            b_n += negative * keep + positive * flip
        a.append(a_n)
        b.append(b_n)
    return a[:max_n + 1], b[:max_n + 1]


def d_rec(max_n: int) -> list[int]:
    """Defect D_n = A_n - B_n from its own factorised recurrence."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")

    d = [0, 1]
    for n in range(2, max_n + 1):
        row = eo_row(n - 1)
        d.append(sum(d[k] * d[n - k] * row[k - 1].diff * row[k].diff for k in range(1, n)))
    return d[:max_n + 1]


def d_rec_reduced(max_n: int) -> list[int]:
    """
    The defect recurrence with the inductive step's cancellations applied.
    Sizes 1..3 are the base cases. From n = 4 on, odd n keeps only the k = 1
    and k = n - 1 terms; even n keeps only even k and takes the parity
    differences from their closed form.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")

    d = d_rec(min(max_n, 3))
    for n in range(4, max_n + 1):
        if n % 2:
            row = eo_row(n - 1)
            d.append(sum(d[k] * d[n - k] * row[k - 1].diff * row[k].diff for k in (1, n - 1)))
        else:
            d.append(sum(
                d[k] * d[n - k] * eo_diff_closed(n - 1, k - 1) * eo_diff_closed(n - 1, k)
                for k in range(2, n - 1, 2)
            ))
    return d[:max_n + 1]


def d_closed(n: int) -> int:
    """1 for n = 1, 0 for odd n > 1, (-1)^(n/2) T_(n/2) for even n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n == 1:
        return 1
    if n % 2:
        return 0
    half = n // 2
    return (-1) ** half * _t_values(half)[half]


def seq_table(max_n: int) -> SeqTable:
    t = t_seq(max_n)
    a, b = ab_seq(max_n)
    d = d_rec(max_n)
    return SeqTable(max_n, tuple(t), tuple(a), tuple(b), tuple(d))
