import itertools

import numpy as np
import pytest

from deplin.exceptions import (
    CycleError,
    DuplicateEdgeError,
    HeadVectorError,
    MultipleRootsError,
    NoRootError,
    NotATreeError,
    OutOfRangeError,
    SelfHeadError,
    SelfLoopError,
    SizeMismatchError,
    VertexOutOfRangeError,
)
from deplin.generate import TreeKind, exhaustive_trees, random_tree
from deplin.graphs import (
    Arrangement,
    HeadVector,
    InvalidArrangementError,
    RootedTree,
    check_sizes,
    from_edge_list,
    from_head_vector,
    parse_head_vector_line,
    path_tree,
    root_at,
    star_tree,
    to_free,
    to_head_vector,
)

CROSSED = "2 3 0 3 2 7 5 4 3"
NESTED = "3 3 0 5 3 7 5 10 10 7"


class TestHeadVector:
    def test_parse_sample_lines(self) -> None:
        first = from_head_vector(HeadVector.parse("0 1 2 6 4 1 6 6 6"))
        assert first.n == 9
        assert first.root == 1
        assert set(first.children(6)) == {4, 7, 8, 9}

        second = from_head_vector(HeadVector.parse("0 1 2 5 1 7 1 7 10 7 10"))
        assert second.n == 11

        third = from_head_vector(HeadVector.parse("2 0 2 2 4 4 8 4 8 9"))
        assert third.n == 10
        assert third.root == 2

    def test_tabs_and_crlf(self) -> None:
        assert parse_head_vector_line("0\t1  1\r\n") == (0, 1, 1)

    def test_non_integer_token(self) -> None:
        with pytest.raises(HeadVectorError) as info:
            parse_head_vector_line("0 1 x")
        assert info.value.column == 5

    def test_multiple_roots(self) -> None:
        with pytest.raises(MultipleRootsError):
            HeadVector.parse("0 0 1")

    def test_no_root(self) -> None:
        with pytest.raises(NoRootError):
            HeadVector.parse("2 1")
        with pytest.raises(NoRootError):
            HeadVector.parse("")

    def test_self_head(self) -> None:
        with pytest.raises(SelfHeadError):
            HeadVector.parse("0 2")

    def test_out_of_range(self) -> None:
        with pytest.raises(OutOfRangeError):
            HeadVector.parse("0 3")

    def test_cycle(self) -> None:
        with pytest.raises(CycleError):
            HeadVector.parse("0 3 2")

    def test_single_word(self) -> None:
        tree = from_head_vector(HeadVector.parse("0"))
        assert tree.n == 1
        assert tree.edges == ()

    def test_figure_round_trips(self) -> None:
        for text in (CROSSED, NESTED, "0 1 1"):
            assert str(to_head_vector(RootedTree.from_head_vector(text))) == text

    def test_round_trip_every_rooted_tree(self) -> None:
        for n in range(1, 8):
            seen = set()
            for tree in exhaustive_trees(TreeKind.LABELED_ROOTED, n):
                assert isinstance(tree, RootedTree)
                hv = to_head_vector(tree)
                assert to_head_vector(from_head_vector(hv)) == hv
                seen.add(hv)
            assert len(seen) == n ** (n - 1)

    def test_round_trip_random_trees(self) -> None:
        rng = np.random.default_rng(17)
        for _ in range(1000):
            tree = random_tree(TreeKind.LABELED_ROOTED, int(rng.integers(1, 51)), rng)
            assert isinstance(tree, RootedTree)
            hv = HeadVector.parse(str(to_head_vector(tree)))
            assert from_head_vector(hv) == tree

    def test_only_trees_pass_validation(self) -> None:
        for n in range(1, 6):
            valid = 0
            for heads in itertools.product(range(n + 1), repeat=n):
                try:
                    hv = HeadVector(heads)
                except HeadVectorError:
                    continue
                assert to_head_vector(from_head_vector(hv)) == hv
                valid += 1
            assert valid == n ** (n - 1)


class TestEdgeList:
    def test_path(self) -> None:
        tree = from_edge_list(3, [(1, 2), (2, 3)])
        assert tree.edges == ((1, 2), (2, 3))
        assert tree.degree(2) == 2

    def test_star(self) -> None:
        tree = from_edge_list(4, [(1, 2), (1, 3), (1, 4)])
        assert tree.degree(1) == 3
        assert tree.num_leaves() == 3

    def test_cycle(self) -> None:
        with pytest.raises(NotATreeError):
            from_edge_list(4, [(1, 2), (2, 3), (1, 3)])

    def test_wrong_count(self) -> None:
        with pytest.raises(NotATreeError):
            from_edge_list(4, [(1, 2), (2, 3)])

    def test_duplicate(self) -> None:
        with pytest.raises(DuplicateEdgeError):
            from_edge_list(3, [(1, 2), (2, 1)])

    def test_self_loop(self) -> None:
        with pytest.raises(SelfLoopError):
            from_edge_list(2, [(1, 1)])

    def test_vertex_range(self) -> None:
        with pytest.raises(VertexOutOfRangeError):
            from_edge_list(2, [(1, 3)])

    def test_str(self) -> None:
        assert str(path_tree(3)) == "1-2 2-3"


class TestRooting:
    def test_root_in_middle(self) -> None:
        tree = root_at(path_tree(3), 2)
        assert set(tree.children(2)) == {1, 3}
        assert tree.in_degree(2) == 0

    def test_root_at_end(self) -> None:
        tree = root_at(path_tree(3), 1)
        assert tree.children(1) == (2,)
        assert tree.children(2) == (3,)
        assert str(tree) == "0 1 2"

    def test_to_free(self) -> None:
        assert to_free(from_head_vector([0, 1, 2])) == path_tree(3)

    def test_root_at_to_free_identity(self) -> None:
        tree = RootedTree.from_head_vector(CROSSED)
        assert root_at(to_free(tree), tree.root) == tree

    def test_out_of_range_root(self) -> None:
        with pytest.raises(VertexOutOfRangeError):
            root_at(path_tree(3), 4)

    def test_degree_sums(self) -> None:
        tree = RootedTree.from_head_vector(NESTED)
        assert sum(tree.out_degree(v) for v in tree.vertices) == tree.n - 1
        assert [tree.in_degree(v) for v in tree.vertices].count(0) == 1

    def test_depths_and_sizes(self) -> None:
        tree = root_at(star_tree(4), 1)
        assert tree.depths[1:] == (0, 1, 1, 1)
        assert tree.subtree_sizes[1] == 4


class TestArrangement:
    def test_from_positions_and_order_agree(self) -> None:
        a = Arrangement.from_positions([1, 3, 2, 4])
        b = Arrangement.from_order([1, 3, 2, 4])
        assert a == b
        assert a[2] == 3
        assert a.vertex_at(3) == 2

    def test_identity(self) -> None:
        arrangement = Arrangement.identity(3)
        assert arrangement.as_positions() == [1, 2, 3]
        assert arrangement.order() == (1, 2, 3)

    def test_not_a_permutation(self) -> None:
        with pytest.raises(InvalidArrangementError):
            Arrangement.from_positions([1, 1, 2])

    def test_size_mismatch(self) -> None:
        with pytest.raises(SizeMismatchError):
            check_sizes(path_tree(3), Arrangement.identity(4))
