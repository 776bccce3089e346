from itertools import chain, combinations

import pytest

from cnat.core import (ROOT, Axiom, CellCoord, Decomposition, DecompositionError, DotGrid, GridFormatError,
                       PermutationMatrix, ValidationError, VertexRole, compose, decompose, is_cnat,
                       leaf_matrix, parse_grid, serialize_grid, validate)
from cnat.enumeration import iter_cnats, iter_decompositions
from util import SIZE_FOUR, SIZE_FOUR_LEAF_COLS, SIZE_TWO, cnat, grid


def dots(*cells):
    return frozenset(CellCoord(r, c) for r, c in cells)


def _accepts(g: DotGrid) -> bool:
    try:
        validate(g)
    except ValidationError:
        return False
    return True


class TestValidate:
    def test_size_two(self):
        """The only size-2 CNAT validates and has its leaves off the root."""
        c = validate(DotGrid(2, dots((1, 1), (1, 2), (2, 1))))
        assert c.leaves == [CellCoord(1, 2), CellCoord(2, 1)]
        assert c.roles[ROOT] is VertexRole.INTERNAL
        assert c.parent == {CellCoord(1, 2): ROOT, CellCoord(2, 1): ROOT}

    def test_single_vertex(self):
        """A single dot is a CNAT whose root is a leaf."""
        c = validate(DotGrid(1, dots((1, 1))))
        assert c.roles == {ROOT: VertexRole.LEAF}
        assert c.leaf_cols == (1,)
        assert c.root_children == ()

    def test_not_complete(self):
        """A chain of three dots leaves the root with one child."""
        with pytest.raises(ValidationError) as info:
            validate(DotGrid(2, dots((1, 1), (1, 2), (2, 2))))
        assert info.value.axiom is Axiom.NOT_COMPLETE
        assert info.value.cell == ROOT
        assert str(info.value).startswith("NotComplete")

    def test_ambiguity(self):
        """A full 2x2 grid is ambiguous at the bottom-right cell."""
        with pytest.raises(ValidationError) as info:
            validate(DotGrid(2, dots((1, 1), (1, 2), (2, 1), (2, 2))))
        assert info.value.axiom is Axiom.AMBIGUITY
        assert info.value.cell == CellCoord(2, 2)

    def test_missing_root(self):
        with pytest.raises(ValidationError) as info:
            validate(DotGrid(2, dots((1, 2), (2, 1), (2, 2))))
        assert info.value.axiom is Axiom.ROOT

    def test_no_precursor(self):
        with pytest.raises(ValidationError) as info:
            validate(DotGrid(2, dots((1, 1), (2, 2))))
        assert info.value.axiom is Axiom.NO_PRECURSOR
        assert info.value.cell == CellCoord(2, 2)

    def test_minimality(self):
        """An empty row is reported before completeness is looked at."""
        with pytest.raises(ValidationError) as info:
            validate(DotGrid(3, dots((1, 1), (1, 2), (2, 1))))
        assert info.value.axiom is Axiom.MINIMALITY
        assert info.value.cell is None
        assert "row 3" in str(info.value)

    def test_hand_built_size_four(self):
        c = cnat(SIZE_FOUR)
        assert c.n == 4
        assert c.leaf_cols == SIZE_FOUR_LEAF_COLS
        assert c.root_children == (CellCoord(1, 2), CellCoord(2, 1))

    def test_agrees_with_definition_on_small_grids(self):
        """validate() and the literal definition accept exactly the same grids."""
        for n in (1, 2, 3):
            cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
            subsets = chain.from_iterable(combinations(cells, size) for size in range(len(cells) + 1))
            for subset in subsets:
                g = DotGrid(n, dots(*subset))
                assert is_cnat(g) == _accepts(g), serialize_grid(g)

    def test_agrees_with_definition_on_size_four(self):
        cells = [(r, c) for r in range(1, 5) for c in range(1, 5)][1:]
        accepted = 0
        for subset in combinations(cells, 6):
            g = DotGrid(4, dots((1, 1), *subset))
            assert is_cnat(g) == _accepts(g), serialize_grid(g)
            accepted += is_cnat(g)
        assert accepted == 33


class TestDotGrid:
    def test_rejects_out_of_bounds(self):
        with pytest.raises(ValueError):
            DotGrid(2, dots((1, 1), (3, 1)))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            DotGrid(2, [(1, 1), (1, 1)])

    def test_rejects_zero_size(self):
        with pytest.raises(ValueError):
            DotGrid(0, frozenset())

    def test_plain_tuples_become_coordinates(self):
        g = DotGrid(2, frozenset({(1, 1), (1, 2), (2, 1)}))
        assert all(type(cell) is CellCoord for cell in g.dots)
        assert validate(g) == cnat(SIZE_TWO)
        assert validate(g).leaves == [CellCoord(1, 2), CellCoord(2, 1)]


def test_vertex_roles_count():
    """n leaves and n - 1 internal vertices, one leaf per row and column."""
    for n in range(1, 6):
        for c in iter_cnats(n):
            roles = list(c.roles.values())
            assert len(c.dots) == 2 * n - 1
            assert roles.count(VertexRole.LEAF) == n
            assert roles.count(VertexRole.INTERNAL) == n - 1
            leaves = [cell for cell, role in c.roles.items() if role is VertexRole.LEAF]
            assert sorted(leaves) == c.leaves


class TestLeafMatrix:
    def test_single_vertex(self):
        assert leaf_matrix(cnat("X")) == PermutationMatrix.identity(1)

    def test_size_two_is_antidiagonal(self):
        assert leaf_matrix(cnat(SIZE_TWO)).mapping == (2, 1)

    def test_size_four_is_bijection(self):
        for c in iter_cnats(4):
            p = leaf_matrix(c)
            assert sorted(p.mapping) == [1, 2, 3, 4]
            assert all(c.roles[CellCoord(r, p[r])] is VertexRole.LEAF for r in range(1, 5))

    def test_permutation_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            PermutationMatrix(3, (1, 1, 2))


class TestDecomposition:
    def test_size_two(self):
        single = cnat("X")
        d = decompose(cnat(SIZE_TWO))
        assert (d.k, d.row_set, d.col_set) == (1, (1,), (2,))
        assert d.top_part == single
        assert d.left_part == single

    def test_hand_built_size_four(self):
        d = decompose(cnat(SIZE_FOUR))
        assert (d.k, d.row_set, d.col_set) == (2, (1, 3), (2, 4))
        assert d.top_part == cnat(SIZE_TWO)
        assert d.left_part == cnat(SIZE_TWO)

    def test_rejects_size_one(self):
        with pytest.raises(DecompositionError):
            decompose(cnat("X"))

    def test_compose_size_two(self):
        single = cnat("X")
        assert compose(Decomposition(single, single, (1,), (2,))) == cnat(SIZE_TWO)

    def test_compose_rejects_row_set_without_top_row(self):
        single = cnat("X")
        with pytest.raises(DecompositionError):
            compose(Decomposition(single, single, (2,), (2,)))

    def test_compose_rejects_first_column(self):
        single = cnat("X")
        with pytest.raises(DecompositionError):
            compose(Decomposition(single, single, (1,), (1,)))

    def test_compose_rejects_wrong_set_size(self):
        single = cnat("X")
        with pytest.raises(DecompositionError):
            compose(Decomposition(single, single, (1, 2), (2,)))

    def test_compose_size_three_gives_four_cnats(self):
        built = {compose(d) for d in iter_decompositions(3)}
        assert len(built) == 4

    def test_round_trip(self):
        """compose and decompose are inverse on every object up to size 5."""
        for n in range(2, 6):
            for c in iter_cnats(n):
                assert compose(decompose(c)) == c
            for d in iter_decompositions(n):
                assert decompose(compose(d)) == d

    def test_composed_trees_are_valid(self):
        for d in iter_decompositions(4):
            c = compose(d)
            assert validate(c.grid) == c
            assert validate(c.grid).leaf_cols == c.leaf_cols

    def test_top_part_holds_top_row(self):
        """The right subtree of the root takes every other top-row dot, the down subtree the first column."""
        for c in iter_cnats(5):
            right, down = c.root_children
            top_row = {cell for cell in c.dots if cell.row == 1} - {ROOT}
            first_col = {cell for cell in c.dots if cell.col == 1} - {ROOT}
            assert top_row <= c.subtree(right)
            assert first_col <= c.subtree(down)


class TestGridText:
    def test_parse(self):
        assert parse_grid("XX\nX.") == DotGrid(2, dots((1, 1), (1, 2), (2, 1)))

    def test_parse_single(self):
        assert parse_grid("X") == DotGrid(1, dots((1, 1)))

    def test_trailing_newline(self):
        assert parse_grid("XX\nX.\n") == parse_grid("XX\nX.")

    def test_round_trip(self):
        for text in ("X", SIZE_TWO, SIZE_FOUR, "..\n.."):
            assert serialize_grid(parse_grid(text)) == text

    @pytest.mark.parametrize("text", ["", "\n", "XX\nX", "XXX\nX.", "XY\nX.", "X \nX."])
    def test_malformed(self, text):
        with pytest.raises(GridFormatError):
            parse_grid(text)

    def test_cnat_str(self):
        assert str(cnat(SIZE_FOUR)) == serialize_grid(grid(SIZE_FOUR)) == SIZE_FOUR
