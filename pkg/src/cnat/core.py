from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple


class CellCoord(NamedTuple):
    """1-based grid cell, row 1 at the top and column 1 at the left."""
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


ROOT = CellCoord(1, 1)

_DOT = "X"
_EMPTY = "."


class VertexRole(Enum):
    LEAF = "leaf"
    INTERNAL = "internal"


class Axiom(Enum):
    ROOT = "Root"
    AMBIGUITY = "Ambiguity"
    NO_PRECURSOR = "NoPrecursor"
    MINIMALITY = "Minimality"
    NOT_COMPLETE = "NotComplete"
    WRONG_DOT_COUNT = "WrongDotCount"


class GridFormatError(ValueError):
    pass


class DecompositionError(ValueError):
    pass


class ValidationError(ValueError):
    def __init__(self, axiom: Axiom, cell: CellCoord | None, detail: str):
        self.axiom = axiom
        self.cell = cell
        self.detail = detail
        where = f" at {cell}" if cell is not None else ""
        super().__init__(f"{axiom.value}{where}: {detail}")


@dataclass(frozen=True)
class DotGrid:
    n: int
    dots: frozenset[CellCoord]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Grid size must be positive, got {self.n}")

        if not isinstance(self.dots, frozenset) or not all(type(cell) is CellCoord for cell in self.dots):
            cells = [CellCoord(*cell) for cell in self.dots]
            if len(set(cells)) != len(cells):
                raise ValueError("Duplicate dot coordinates")
            object.__setattr__(self, "dots", frozenset(cells))

        n = self.n
        for row, col in self.dots:
            if not (1 <= row <= n and 1 <= col <= n):
                raise ValueError(f"Dot ({row},{col}) is outside the {n}x{n} grid")

    def __contains__(self, cell) -> bool:
        return cell in self.dots

    def __len__(self) -> int:
        return len(self.dots)

    @property
    def sorted_dots(self) -> list[CellCoord]:
        """Dots in row-major order."""
        return sorted(self.dots)


def _lines(dots: Iterable[CellCoord]) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    """Index dots by row (sorted columns) and by column (sorted rows)."""
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for row, col in sorted(dots):
        by_row.setdefault(row, []).append(col)
        by_col.setdefault(col, []).append(row)
    return by_row, by_col


def _parents(dots: Iterable[CellCoord]) -> dict[CellCoord, CellCoord]:
    """
    Map every non-root dot to its nearest precursor.
    A dot with a dot to its left takes the nearest one on the left,
    otherwise the nearest one above. Dots with neither are skipped.
    """
    by_row, by_col = _lines(dots)
    parent = {}
    for row, cols in by_row.items():
        for i, col in enumerate(cols):
            if i > 0:
                parent[CellCoord(row, col)] = CellCoord(row, cols[i - 1])
                continue
            rows = by_col[col]
            j = bisect_left(rows, row)
            if j > 0:
                parent[CellCoord(row, col)] = CellCoord(rows[j - 1], col)
    return parent


def _children(parent: dict[CellCoord, CellCoord]) -> dict[CellCoord, tuple[CellCoord, ...]]:
    """Invert a parent map; each value lists the right child before the down child."""
    right: dict[CellCoord, CellCoord] = {}
    down: dict[CellCoord, CellCoord] = {}
    for child, par in parent.items():
        if child.row == par.row:
            right[par] = child
        else:
            down[par] = child

    children = {}
    for par in right.keys() | down.keys():
        children[par] = tuple(c for c in (right.get(par), down.get(par)) if c is not None)
    return children


@dataclass(frozen=True)
class PermutationMatrix:
    n: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.n or sorted(self.mapping) != list(range(1, self.n + 1)):
            raise ValueError(f"Not a bijection of 1..{self.n}: {self.mapping}")

    def __getitem__(self, row: int) -> int:
        return self.mapping[row - 1]

    @classmethod
    def identity(cls, n: int) -> "PermutationMatrix":
        return cls(n, tuple(range(1, n + 1)))

    def compose(self, other: "PermutationMatrix") -> "PermutationMatrix":
        """Composition (self ∘ other): row r goes to self[other[r]]."""
        if self.n != other.n:
            raise ValueError("Permutations must have the same size")
        return PermutationMatrix(self.n, tuple(self.mapping[c - 1] for c in other.mapping))

    def to_matrix(self) -> list[list[int]]:
        return [[int(self.mapping[r] == c + 1) for c in range(self.n)] for r in range(self.n)]


@dataclass(frozen=True)
class Cnat:
    """
    A validated complete non-ambiguous tree.
    Build instances through validate() or compose(); leaf_cols[r - 1] is the
    column of the leaf in row r.
    """
    grid: DotGrid
    leaf_cols: tuple[int, ...] = field(compare=False, repr=False)

    def __str__(self) -> str:
        return serialize_grid(self.grid)

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def dots(self) -> frozenset[CellCoord]:
        return self.grid.dots

    @cached_property
    def parent(self) -> dict[CellCoord, CellCoord]:
        return _parents(self.grid.dots)

    @cached_property
    def children(self) -> dict[CellCoord, tuple[CellCoord, ...]]:
        return _children(self.parent)

    @cached_property
    def roles(self) -> dict[CellCoord, VertexRole]:
        return {
            cell: VertexRole.INTERNAL if self.children.get(cell) else VertexRole.LEAF
            for cell in self.grid.dots
        }

    @property
    def leaves(self) -> list[CellCoord]:
        """Leaf coordinates in row order."""
        return [CellCoord(row, col) for row, col in enumerate(self.leaf_cols, 1)]

    @property
    def root_children(self) -> tuple[CellCoord, ...]:
        """Right child then down child of the root; empty for n = 1."""
        return self.children.get(ROOT, ())

    def subtree(self, top: CellCoord) -> set[CellCoord]:
        """All dots of the subtree hanging from the given dot, itself included."""
        found = set()
        stack = [top]
        while stack:
            cell = stack.pop()
            found.add(cell)
            stack.extend(self.children.get(cell, ()))
        return found


def validate(grid: DotGrid) -> Cnat:
    """
    Check a grid against the CNAT axioms and return the validated tree.
    Raises ValidationError naming the first failed check, in the order
    Root, Ambiguity, NoPrecursor, Minimality, NotComplete, WrongDotCount.
    """
    n, dots = grid.n, grid.dots

    if ROOT not in dots:
        raise ValidationError(Axiom.ROOT, ROOT, "the top-left cell is empty")

    by_row, by_col = _lines(dots)
    others = sorted(dots - {ROOT})
    precursors = {}
    for cell in others:
        has_left = by_row[cell.row][0] < cell.col
        has_above = by_col[cell.col][0] < cell.row
        if has_left and has_above:
            raise ValidationError(Axiom.AMBIGUITY, cell, "vertex has precursors both above and to the left")
        precursors[cell] = has_left or has_above

    for cell in others:
        if not precursors[cell]:
            raise ValidationError(Axiom.NO_PRECURSOR, cell, "vertex has no precursor above or to the left")

    for row in range(1, n + 1):
        if row not in by_row:
            raise ValidationError(Axiom.MINIMALITY, None, f"row {row} contains no vertex")
    for col in range(1, n + 1):
        if col not in by_col:
            raise ValidationError(Axiom.MINIMALITY, None, f"column {col} contains no vertex")

    children = _children(_parents(dots))
    for cell in sorted(dots):
        if len(children.get(cell, ())) == 1:
            raise ValidationError(Axiom.NOT_COMPLETE, cell, "vertex has exactly one child")

    if len(dots) != 2 * n - 1:
        raise ValidationError(Axiom.WRONG_DOT_COUNT, None, f"expected {2 * n - 1} dots, found {len(dots)}")

    leaf_cols = [0] * n
    for cell in dots:
        if cell not in children:
            leaf_cols[cell.row - 1] = cell.col
    return Cnat(grid, tuple(leaf_cols))


def is_cnat(grid: DotGrid) -> bool:
    """Literal reading of the definition, kept independent of validate()."""
    n = grid.n
    dotted = [[(r, c) in grid.dots for c in range(1, n + 1)] for r in range(1, n + 1)]

    if not dotted[0][0]:
        return False

    tree_parent = {}
    for r in range(n):
        for c in range(n):
            if not dotted[r][c] or (r, c) == (0, 0):
                continue
            above = [i for i in range(r) if dotted[i][c]]
            left = [j for j in range(c) if dotted[r][j]]
            if bool(above) == bool(left):
                return False
            tree_parent[(r, c)] = (above[-1], c) if above else (r, left[-1])

    if not all(any(line) for line in dotted):
        return False
    if not all(any(dotted[r][c] for r in range(n)) for c in range(n)):
        return False

    child_count = {(r, c): 0 for r in range(n) for c in range(n) if dotted[r][c]}
    for par in tree_parent.values():
        child_count[par] += 1
    return all(count in (0, 2) for count in child_count.values())


def leaf_matrix(cnat: Cnat) -> PermutationMatrix:
    return PermutationMatrix(cnat.n, cnat.leaf_cols)


@dataclass(frozen=True)
class Decomposition:
    """
    Root-removal split of a CNAT of size n = k + (n - k).
    top_part holds the remaining top-row vertices and occupies row_set x col_set;
    left_part holds the remaining leftmost-column vertices and fills the
    complementary rows and columns.
    """
    top_part: Cnat
    left_part: Cnat
    row_set: tuple[int, ...]
    col_set: tuple[int, ...]

    def __post_init__(self):
        k, n = self.k, self.n
        rows, cols = tuple(self.row_set), tuple(self.col_set)
        object.__setattr__(self, "row_set", rows)
        object.__setattr__(self, "col_set", cols)

        if 1 not in rows:
            raise DecompositionError(f"row_set must contain row 1: {rows}")
        if 1 in cols:
            raise DecompositionError(f"col_set must not contain column 1: {cols}")
        if len(rows) != k or len(cols) != k:
            raise DecompositionError(f"row_set and col_set must both have {k} entries")
        if list(rows) != sorted(set(rows)) or list(cols) != sorted(set(cols)):
            raise DecompositionError("row_set and col_set must be strictly increasing")
        if rows[-1] > n or cols[-1] > n:
            raise DecompositionError(f"row_set and col_set must be drawn from 1..{n}")

    @property
    def k(self) -> int:
        return self.top_part.n

    @property
    def n(self) -> int:
        return self.top_part.n + self.left_part.n


def _flatten(cells: set[CellCoord], rows: tuple[int, ...], cols: tuple[int, ...]) -> DotGrid:
    row_index = {row: i for i, row in enumerate(rows, 1)}
    col_index = {col: i for i, col in enumerate(cols, 1)}
    return DotGrid(len(rows), frozenset(CellCoord(row_index[r], col_index[c]) for r, c in cells))


def decompose(cnat: Cnat) -> Decomposition:
    """Remove the root and flatten the two subtrees it leaves behind."""
    if cnat.n == 1:
        raise DecompositionError("A CNAT of size 1 has no decomposition")

    right, down = cnat.root_children
    top_cells = cnat.subtree(right)
    left_cells = cnat.subtree(down)

    row_set = tuple(sorted({cell.row for cell in top_cells}))
    col_set = tuple(sorted({cell.col for cell in top_cells}))
    rest_rows = tuple(sorted({cell.row for cell in left_cells}))
    rest_cols = tuple(sorted({cell.col for cell in left_cells}))

    top = validate(_flatten(top_cells, row_set, col_set))
    left = validate(_flatten(left_cells, rest_rows, rest_cols))
    return Decomposition(top, left, row_set, col_set)


def assemble(top: Cnat, left: Cnat, row_set: tuple[int, ...], col_set: tuple[int, ...],
              rest_rows: tuple[int, ...], rest_cols: tuple[int, ...]) -> Cnat:
    """Interleave two CNATs under a new root; the index sets are assumed consistent."""
    n = top.n + left.n
    dots = [ROOT]
    dots += [CellCoord(row_set[r - 1], col_set[c - 1]) for r, c in top.grid.dots]
    dots += [CellCoord(rest_rows[r - 1], rest_cols[c - 1]) for r, c in left.grid.dots]

    leaf_cols = [0] * n
    for r, c in enumerate(top.leaf_cols):
        leaf_cols[row_set[r] - 1] = col_set[c - 1]
    for r, c in enumerate(left.leaf_cols):
        leaf_cols[rest_rows[r] - 1] = rest_cols[c - 1]

    return Cnat(DotGrid(n, frozenset(dots)), tuple(leaf_cols))


def complement(index_set: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Indices of 1..n not in index_set, ascending."""
    taken = set(index_set)
    return tuple(i for i in range(1, n + 1) if i not in taken)


def compose(decomposition: Decomposition) -> Cnat:
    """Inverse of decompose()."""
    d = decomposition
    n = d.n
    return assemble(d.top_part, d.left_part, d.row_set, d.col_set,
                     complement(d.row_set, n), complement(d.col_set, n))


def parse_grid(text: str) -> DotGrid:
    """Parse the n-lines-of-n-characters grid format ('X' dotted, '.' empty)."""
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise GridFormatError("Empty grid")

    lines = text.split("\n")
    n = len(lines)
    dots = []
    for r, line in enumerate(lines, 1):
        if len(line) != n:
            raise GridFormatError(f"Line {r} has {len(line)} characters, expected {n}")
        for c, char in enumerate(line, 1):
            if char == _DOT:
                dots.append(CellCoord(r, c))
            elif char != _EMPTY:
                raise GridFormatError(f"Illegal character {char!r} at line {r}, column {c}")
    return DotGrid(n, frozenset(dots))


def serialize_grid(grid: DotGrid) -> str:
    """Canonical text form, without a trailing newline."""
    n = grid.n
    return "\n".join(
        "".join(_DOT if (r, c) in grid.dots else _EMPTY for c in range(1, n + 1))
        for r in range(1, n + 1)
    )
