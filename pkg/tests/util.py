import random

from cnat.core import Cnat, DotGrid, PermutationMatrix, parse_grid, validate

# Small CNATs worked out by hand; leaves listed row by row.
SIZE_TWO = "XX\nX."
SIZE_FOUR = "XX.X\nX.X.\n.X..\nX..."
SIZE_FOUR_LEAF_COLS = (4, 3, 2, 1)

TABLE_A = [None, 1, 0, 2, 17, 228, 4728, 137400, 5321889]
TABLE_B = [None, 0, 1, 2, 16, 228, 4732, 137400, 5321856]
TABLE_T = [None, 1, 1, 4, 33, 456, 9460, 274800, 10643745]
TABLE_D = [None, 1, -1, 0, 1, 0, -4, 0, 33]


def grid(text: str) -> DotGrid:
    return parse_grid(text)


def cnat(text: str) -> Cnat:
    return validate(parse_grid(text))


def random_permutation(n: int, rng: random.Random) -> PermutationMatrix:
    """A uniformly random permutation of 1..n."""
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return PermutationMatrix(n, tuple(values))
