from fractions import Fraction

import numpy as np
import pytest

from deplin.exceptions import NoEdgesError, SizeMismatchError
from deplin.generate import (
    Constraint,
    TreeKind,
    exhaustive_arrangements,
    exhaustive_trees,
    random_arrangement,
    random_tree,
)
from deplin.graphs import Arrangement, RootedTree, path_tree, root_at
from deplin.linarr import (
    CrossingsAlgorithm,
    classify_arrangement,
    flux,
    head_initial_ratio,
    is_one_endpoint_crossing,
    is_planar,
    is_root_covered,
    mean_dependency_distance,
    num_crossings,
    sum_edge_lengths,
)

CROSSED = RootedTree.from_head_vector("2 3 0 3 2 7 5 4 3")
NESTED = RootedTree.from_head_vector("3 3 0 5 3 7 5 10 10 7")


def identity(tree: RootedTree) -> Arrangement:
    return Arrangement.identity(tree.n)


class TestSumEdgeLengths:
    def test_two_sentences(self) -> None:
        assert sum_edge_lengths(NESTED, identity(NESTED)) == 15
        assert sum_edge_lengths(CROSSED, identity(CROSSED)) == 19

    def test_path(self) -> None:
        assert sum_edge_lengths(path_tree(3), Arrangement.identity(3)) == 2

    def test_size_mismatch(self) -> None:
        with pytest.raises(SizeMismatchError):
            sum_edge_lengths(path_tree(3), Arrangement.identity(2))

    def test_mean_dependency_distance(self) -> None:
        assert mean_dependency_distance(NESTED, identity(NESTED)) == Fraction(15, 9)
        with pytest.raises(NoEdgesError):
            mean_dependency_distance(path_tree(1), Arrangement.identity(1))


class TestCrossings:
    def test_two_sentences(self) -> None:
        for algorithm in CrossingsAlgorithm:
            assert num_crossings(CROSSED, identity(CROSSED), algorithm) == 2
            assert num_crossings(NESTED, identity(NESTED), algorithm) == 0

    def test_path_with_swap(self) -> None:
        arrangement = Arrangement.from_positions([1, 3, 2, 4])
        for algorithm in CrossingsAlgorithm:
            assert num_crossings(path_tree(4), arrangement, algorithm) == 1

    def test_algorithms_agree_on_random_pairs(self) -> None:
        rng = np.random.default_rng(7)
        for _ in range(1000):
            n = int(rng.integers(1, 51))
            tree = random_tree(TreeKind.LABELED_FREE, n, rng)
            arrangement = random_arrangement(tree, Constraint.UNCONSTRAINED, rng)
            brute = num_crossings(tree, arrangement, CrossingsAlgorithm.BRUTE_PAIRS)
            assert num_crossings(tree, arrangement, CrossingsAlgorithm.SWEEP) == brute
            assert sum_edge_lengths(tree, arrangement) >= n - 1


class TestClassification:
    def test_nested_sentence_is_projective(self) -> None:
        flags = classify_arrangement(NESTED, identity(NESTED))
        assert flags.projective and flags.planar and flags.one_endpoint_crossing

    def test_crossed_sentence_is_not_one_endpoint_crossing(self) -> None:
        flags = classify_arrangement(CROSSED, identity(CROSSED))
        assert not flags.projective
        assert not flags.planar
        assert not flags.one_endpoint_crossing

    def test_root_first_is_projective(self) -> None:
        tree = root_at(path_tree(3), 2)
        arrangement = Arrangement.from_order([2, 1, 3])
        assert classify_arrangement(tree, arrangement).projective

    def test_covered_root(self) -> None:
        tree = root_at(path_tree(3), 3)
        arrangement = Arrangement.from_order([1, 3, 2])
        assert is_root_covered(tree, arrangement)
        flags = classify_arrangement(tree, arrangement)
        assert flags.planar and not flags.projective

    def test_implications_over_all_small_trees(self) -> None:
        for n in range(1, 7):
            for tree in exhaustive_trees(TreeKind.UNLABELED_ROOTED, n):
                assert isinstance(tree, RootedTree)
                for arrangement in exhaustive_arrangements(tree):
                    flags = classify_arrangement(tree, arrangement)
                    assert flags.planar == (num_crossings(tree, arrangement) == 0)
                    assert flags.planar == is_planar(tree, arrangement)
                    one_ec = is_one_endpoint_crossing(tree, arrangement)
                    assert flags.one_endpoint_crossing == one_ec
                    if flags.projective:
                        assert flags.planar
                    if flags.planar:
                        assert flags.one_endpoint_crossing


class TestHeadInitialRatio:
    def test_crossed_sentence(self) -> None:
        assert head_initial_ratio(CROSSED, identity(CROSSED)) == Fraction(5, 8)

    def test_chains(self) -> None:
        forward = RootedTree.from_head_vector("0 1 2")
        backward = RootedTree.from_head_vector("2 3 0")
        assert head_initial_ratio(forward, Arrangement.identity(3)) == 1
        assert head_initial_ratio(backward, Arrangement.identity(3)) == 0

    def test_single_word(self) -> None:
        with pytest.raises(NoEdgesError):
            head_initial_ratio(RootedTree.from_head_vector("0"), Arrangement.identity(1))


class TestFlux:
    def test_crossed_sentence_gap2(self) -> None:
        profile = flux(CROSSED, identity(CROSSED))
        gap = profile[2]
        assert gap.size == 2
        assert gap.weight == 1
        assert set(gap.dependencies) == {(2, 3), (2, 5)}
        assert (gap.left_span, gap.right_span) == (1, 2)

    def test_path(self) -> None:
        profile = flux(path_tree(3), Arrangement.identity(3))
        assert profile[1].size == 1
        assert profile[1].weight == 1

    def test_sizes_sum_to_D(self) -> None:
        rng = np.random.default_rng(11)
        for _ in range(1000):
            n = int(rng.integers(2, 51))
            tree = random_tree(TreeKind.LABELED_FREE, n, rng)
            arrangement = random_arrangement(tree, Constraint.UNCONSTRAINED, rng)
            profile = flux(tree, arrangement)
            assert sum(profile.sizes) == sum_edge_lengths(tree, arrangement)
            for gap in profile.gaps:
                assert 1 <= gap.weight <= gap.size

    def test_summaries(self) -> None:
        profile = flux(NESTED, identity(NESTED))
        assert profile.mean_size() == Fraction(15, 9)
        assert profile.max_size() == max(profile.sizes)

    def test_single_word(self) -> None:
        with pytest.raises(NoEdgesError):
            flux(path_tree(1), Arrangement.identity(1))
