import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .core import (ROOT, CellCoord, Cnat, Decomposition, DecompositionError, DotGrid,
                   ValidationError, assemble, complement, decompose, validate)
from .linalg import Sign, cnat_det

# C(24, 8) candidate subsets at n = 5; n = 6 would need C(35, 10).
NAIVE_MAX_N = 5
ENUMERATION_MAX_N = 9
DEFAULT_CACHE_CEILING = 6


class EnumerationLimitError(ValueError):
    pass


@dataclass(frozen=True)
class CountByDet:
    n: int
    a: int = 0
    b: int = 0

    @property
    def t(self) -> int:
        return self.a + self.b

    @property
    def d(self) -> int:
        return self.a - self.b

    def __add__(self, other: "CountByDet") -> "CountByDet":
        if self.n != other.n:
            raise ValueError(f"Cannot add counts of sizes {self.n} and {other.n}")
        return CountByDet(self.n, self.a + other.a, self.b + other.b)


_SINGLE = validate(DotGrid(1, frozenset({ROOT})))


def _check_range(n: int, limit: int) -> None:
    if not 1 <= n <= limit:
        raise EnumerationLimitError(f"n={n} is outside the supported range 1..{limit}")


def enumerate_naive(n: int, consumer: Callable[[Cnat], None]) -> int:
    """
    Brute-force oracle: try every (2n - 1)-subset of the grid that contains
    the root and keep those that validate. Subsets are visited in
    lexicographic order.
    """
    _check_range(n, NAIVE_MAX_N)

    cells = [CellCoord(r, c) for r in range(1, n + 1) for c in range(1, n + 1)][1:]
    count = 0
    for chosen in combinations(cells, 2 * n - 2):
        try:
            cnat = validate(DotGrid(n, frozenset((ROOT, *chosen))))
        except ValidationError:
            continue
        consumer(cnat)
        count += 1

    logging.debug(f"Naive enumeration of size {n} found {count} CNATs")
    return count


def _index_sets(n: int, k: int) -> tuple[list[tuple], list[tuple]]:
    """
    Row sets (1 plus k - 1 of 2..n) and column sets (k of 2..n) for the top
    part, each paired with its complement, in lexicographic order.
    """
    rest = range(2, n + 1)
    row_sets = [(1, *rows) for rows in combinations(rest, k - 1)]
    col_sets = list(combinations(rest, k))
    return ([(rows, complement(rows, n)) for rows in row_sets],
            [(cols, complement(cols, n)) for cols in col_sets])


@cache
def _cached_cnats(n: int) -> tuple[Cnat, ...]:
    return tuple(_generate(n, n))


def _sub_cnats(size: int, cache_ceiling: int) -> Iterable[Cnat]:
    if size <= cache_ceiling:
        return _cached_cnats(size)
    return _generate(size, cache_ceiling)


def _generate(n: int, cache_ceiling: int) -> Iterator[Cnat]:
    if n == 1:
        yield _SINGLE
        return

    for k in range(1, n):
        row_pairs, col_pairs = _index_sets(n, k)
        for top in _sub_cnats(k, cache_ceiling):
            for left in _sub_cnats(n - k, cache_ceiling):
                for rows, rest_rows in row_pairs:
                    for cols, rest_cols in col_pairs:
                        yield assemble(top, left, rows, cols, rest_rows, rest_cols)


def iter_cnats(n: int, cache_ceiling: int = DEFAULT_CACHE_CEILING) -> Iterator[Cnat]:
    """
    Stream every CNAT of size n, built from all pairs of smaller CNATs and
    all interleavings. Order: k, then top part, then left part, then row
    set, then column set. Sizes up to cache_ceiling are kept in memory.
    """
    _check_range(n, ENUMERATION_MAX_N)
    if n <= cache_ceiling:
        return iter(_cached_cnats(n))
    return _generate(n, cache_ceiling)


def iter_decompositions(n: int, cache_ceiling: int = DEFAULT_CACHE_CEILING) -> Iterator[Decomposition]:
    """Every valid Decomposition of total size n, in the order of iter_cnats()."""
    _check_range(n, ENUMERATION_MAX_N)
    if n < 2:
        raise DecompositionError("Decompositions need a total size of at least 2")

    for k in range(1, n):
        row_pairs, col_pairs = _index_sets(n, k)
        for top in _sub_cnats(k, cache_ceiling):
            for left in _sub_cnats(n - k, cache_ceiling):
                for rows, _ in row_pairs:
                    for cols, _ in col_pairs:
                        yield Decomposition(top, left, rows, cols)


def enumerate_cnats(n: int, consumer: Callable[[Cnat], None],
                    cache_ceiling: int = DEFAULT_CACHE_CEILING) -> int:
    """Call consumer once per CNAT of size n and return how many were emitted."""
    logging.debug(f"Enumerating CNATs of size {n}")
    count = 0
    for cnat in iter_cnats(n, cache_ceiling):
        consumer(cnat)
        count += 1
    logging.debug(f"Emitted {count} CNATs of size {n}")
    return count


def _tally(n: int, cnats: Iterable[Cnat]) -> CountByDet:
    a = b = 0
    for cnat in cnats:
        if cnat_det(cnat) is Sign.POSITIVE:
            a += 1
        else:
            b += 1
    return CountByDet(n, a, b)


def _count_block(args: tuple[int, int, tuple[int, ...], int]) -> CountByDet:
    """Count one (k, row_set) slice of the size-n enumeration."""
    n, k, rows, cache_ceiling = args
    rest_rows = complement(rows, n)
    _, col_pairs = _index_sets(n, k)
    block = (
        assemble(top, left, rows, cols, rest_rows, rest_cols)
        for top in _sub_cnats(k, cache_ceiling)
        for left in _sub_cnats(n - k, cache_ceiling)
        for cols, rest_cols in col_pairs
    )
    return _tally(n, block)


def _with_progress(items: Iterable, total_count: int | None, desc: str) -> Iterable:
    if total_count:
        try:
            from tqdm import tqdm
            return tqdm(items, total=total_count, desc=desc)
        except ImportError:
            pass
    return items


def count_by_det(n: int, jobs: int = 1, total_count: int | None = None,
                 cache_ceiling: int = DEFAULT_CACHE_CEILING) -> CountByDet:
    """
    Enumerate all CNATs of size n and split them by determinant.
    With jobs > 1 the (k, row_set) slices are counted in a process pool.
    A tqdm progress bar is shown when total_count is given and tqdm is installed.
    """
    _check_range(n, ENUMERATION_MAX_N)
    logging.info(f"Counting CNATs of size {n} by determinant")

    if jobs > 1 and n > 1:
        blocks = [(n, k, rows, cache_ceiling)
                  for k in range(1, n) for rows, _ in _index_sets(n, k)[0]]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            tallies = _with_progress(pool.map(_count_block, blocks), len(blocks) if total_count else None,
                                     f"Counting n={n}")
            result = sum(tallies, CountByDet(n))
    else:
        cnats = _with_progress(iter_cnats(n, cache_ceiling), total_count, f"Counting n={n}")
        result = _tally(n, cnats)

    logging.info(f"n={n}: {result.t} CNATs, {result.a} with det +1, {result.b} with det -1")
    return result


def count_by_split(n: int) -> Counter:
    """
    Number of emitted CNATs per (k, row_set, col_set) cell, read back by
    decomposing each emitted tree.
    """
    tally = Counter()
    for cnat in iter_cnats(n):
        d = decompose(cnat)
        tally[(d.k, d.row_set, d.col_set)] += 1
    return tally
